#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dstar/series.hpp"
#include "dstar/theta.hpp"

namespace dstar {

using LatticePoint = std::array<int, 3>;

// A generator with its closed/open flag: R^>= v or R^> v.
struct ConeGen {
    LatticePoint v;
    bool open = false;
};

// A linear condition a.e >= 0 (or > 0 when strict).
struct LinIneq {
    std::array<int, 3> a;
    bool strict = false;
};

// A rational cone in Z^3 described both by generators (with open/closed
// flags) and by linear inequalities. The two descriptions are checked
// against each other by enumeration.
struct ConeSpec {
    std::string name;
    std::vector<ConeGen> gens;
    std::vector<LinIneq> ineqs;

    bool contains(const LatticePoint& e) const;
};

// The six generator vectors and the named cones of the x^3 decomposition.
extern const LatticePoint kV1, kV2, kV3, kV4, kV5, kV6;

const ConeSpec& cone_C134();   // Case 1
const ConeSpec& cone_C145p();  // Case 2a
const ConeSpec& cone_C456p();  // Case 2b
const ConeSpec& cone_C462p();  // Case 3
const ConeSpec& cone_C123();   // the full integrality cone (simplicial, not simple)
const ConeSpec& cone_Csigma(); // C123 with e1 > 0
const ConeSpec& cone_C23();
const ConeSpec& cone_C34();
const ConeSpec& cone_C42p();

// All lattice points of the cone (via inequalities) with coordinates in
// [0, bound].
std::set<LatticePoint> members_up_to(const ConeSpec& cone, int bound);

// Lattice points reachable as integer combinations of the generators,
// subject to the open flags, with coordinates in [0, bound].
std::set<LatticePoint> members_via_generators(const ConeSpec& cone, int bound);

// Lattice points of the half-open parallelotope [0,1) g_1 + ... + [0,1) g_k
// for 1 <= k <= 3 linearly independent generators.
std::set<LatticePoint> fundamental_domain_points(const std::vector<ConeGen>& gens);

// True iff the parts' lattice points partition the whole's, up to bound.
bool verify_partition(const std::vector<const ConeSpec*>& parts, const ConeSpec& whole,
                      int bound);

// Generating function of monomial weights over a simple cone: product of
// 1/(1-w) over closed generators and w/(1-w) over open ones.
FactoredRational cone_gf(const ConeSpec& cone, const std::vector<Monomial>& weights);

// Generator coordinates of a lattice point of a simple cone.
std::optional<std::vector<int>> generator_coordinates(const ConeSpec& cone,
                                                      const LatticePoint& e);

// Direct weighted enumeration of the cone's lattice points through the
// given graded order; the independent cross-check of cone_gf.
TruncatedSeries weighted_enumeration(const ConeSpec& cone,
                                     const std::vector<Monomial>& weights, int order,
                                     const Grading& grading = default_grading());

// Which theta-case cone the point belongs to, decided by cone membership.
CaseTag case_of(const LatticePoint& e);

// The section-5 weight monomials attached to each cone's generators.
std::vector<Monomial> builtin_weights(const ConeSpec& cone);

}  // namespace dstar
