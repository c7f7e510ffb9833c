#pragma once

#include <string>
#include <vector>

#include "dstar/matrix.hpp"

namespace dstar {

// Companion data of the polynomial x^m - a_1 x^{m-1} - ... - a_m. Primality
// of the polynomial is not validated; only x^m is exercised downstream.
struct CompanionData {
    int m = 1;
    std::vector<Rat> a;  // a_1 ... a_m, empty means all zero (x^m)

    static CompanionData x_power(int m) { return CompanionData{m, {}}; }
    Rat coeff(int i) const {  // a_i, 1-based
        return (i >= 1 && i <= static_cast<int>(a.size())) ? a[i - 1] : Rat(0);
    }
};

// Ordered bases for the D* lattice: S = (x_1..x_m, y_1..y_m, e, f) and
// C = (x_1, y_m, x_2, y_{m-1}, ..., x_m, y_1, f, e).
enum class DBasis { S, C };

// A Z-Lie lattice given by structure constants: table[i][j] is the
// coordinate vector of [b_i, b_j]. Class 2 throughout, so Jacobi is
// automatic once the brackets land in the centre.
struct LieLattice {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<Rat>>> table;

    std::vector<Rat> bracket(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
    std::vector<Rat> basis_bracket(int i, int j) const { return table[i][j]; }
};

// K(a_1,...,a_m): zeros with a 1-superdiagonal and last row (a_m,...,a_1).
QMat companion_matrix(const CompanionData& data);

// The m x m reversal permutation (longest Weyl element of S_m). It
// conjugates K(x^m) to its transpose and is its own transpose and inverse.
QMat reversal_matrix(int m);

// Change-of-coordinates matrix P with v_C = v_S * P, composed literally from
// the V (reverse the y's, swap e and f) and U (interleave) factors.
QMat basis_change_matrix(int m);

// Structure constants of the D* lattice of Hirsch length 2m+2 in the given
// basis: [x_i, y_j] = delta_ij e + K_ij f, everything else central.
LieLattice build_dstar(const CompanionData& data, DBasis basis);

// [u,v] xi = [u xi, v] + [u, v xi] on all basis pairs.
bool is_derivation(const LieLattice& L, const QMat& xi);

// [b_i g, b_j g] = [b_i, b_j] g on all basis pairs; g must be invertible.
bool is_automorphism(const LieLattice& L, const QMat& g);

// The four block conditions characterizing the derivation algebra:
// B = B^t, C = C^t, D^t = aI + cK - A and KA - AK = cK^2 + (a-d)K - bI.
bool g_condition_check(const QMat& K, const QMat& A, const QMat& B, const QMat& C,
                       const QMat& D, const QMat& Y);

// Assembles the (2m+2)-square block matrix [[A,B,*],[C,D,*],[0,0,Y]] in
// basis S (stars zero).
QMat assemble_endo(const QMat& A, const QMat& B, const QMat& C, const QMat& D,
                   const QMat& Y);

// Exact dimension of the solution space of the derivation conditions.
int aut_lie_dimension(const LieLattice& L);

// The three lifts spanning the section of the restriction-to-centre map,
// for the polynomial x^m. xi_1 = diag(1/2 I_2m, I_2) in basis C; xi_2 is
// diagonal with step-2 entries; xi_3 is the nilpotent lift.
QMat make_xi(int m, int i, DBasis basis = DBasis::C);

// Reductive-part element diag(mu^{m-1} A, ..., mu A, A, mu^m det A,
// mu^{m-1} det A) in basis C.
QMat h_element(int m, const QMat& A, const Rat& mu);

// Unipotent-radical element in basis C for m in {2,3}. xblocks holds the
// traceless 2x2 parameters (one for m=2, two for m=3), stars is the
// arbitrary 2m x 2 block into the centre.
QMat n_element(int m, const std::vector<QMat>& xblocks, const Rat& lambda,
               const QMat& stars);

// Element of the derivation subalgebra annihilating the centre, in basis S:
// block form (a(K), b(K) w; w c(K), -w a(K) w^{-1}) plus an arbitrary star
// block, for polynomials a, b, c given by coefficient lists.
QMat g0_element(int m, const std::vector<Rat>& a, const std::vector<Rat>& b,
                const std::vector<Rat>& c, const QMat& stars);

}  // namespace dstar
