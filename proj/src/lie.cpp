#include "dstar/lie.hpp"

#include "dstar/errors.hpp"

namespace dstar {

std::vector<Rat> LieLattice::bracket(const std::vector<Rat>& u,
                                     const std::vector<Rat>& v) const {
    std::vector<Rat> out(dim, Rat(0));
    for (int i = 0; i < dim; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (v[j] == 0) continue;
            Rat c = u[i] * v[j];
            const auto& w = table[i][j];
            for (int k = 0; k < dim; ++k)
                if (w[k] != 0) out[k] += c * w[k];
        }
    }
    return out;
}

QMat companion_matrix(const CompanionData& data) {
    const int m = data.m;
    if (m < 1) throw InvalidArgs("companion matrix needs m >= 1");
    QMat K(m, m);
    for (int i = 0; i + 1 < m; ++i) K.at(i, i + 1) = 1;
    for (int j = 0; j < m; ++j) K.at(m - 1, j) = data.coeff(m - j);
    return K;
}

QMat reversal_matrix(int m) {
    QMat w(m, m);
    for (int i = 0; i < m; ++i) w.at(i, m - 1 - i) = 1;
    return w;
}

QMat basis_change_matrix(int m) {
    const int d = 2 * m + 2;
    // V reverses the order of the y_i and swaps e and f, fixing the x_i.
    QMat V(d, d);
    for (int i = 0; i < m; ++i) V.at(i, i) = 1;
    for (int i = 0; i < m; ++i) V.at(m + i, 2 * m - 1 - i) = 1;
    V.at(2 * m, 2 * m + 1) = 1;
    V.at(2 * m + 1, 2 * m) = 1;
    // U interleaves: row i -> column 2i-1 for the x's, row m+i -> column 2i
    // for the (already reversed) y's, identity on the centre. 1-based in the
    // formulas, 0-based here.
    QMat U(d, d);
    for (int i = 1; i <= m; ++i) U.at(i - 1, 2 * i - 2) = 1;
    for (int i = m + 1; i <= 2 * m; ++i) U.at(i - 1, 2 * (i - m) - 1) = 1;
    U.at(2 * m, 2 * m) = 1;
    U.at(2 * m + 1, 2 * m + 1) = 1;
    return V * U;
}

LieLattice build_dstar(const CompanionData& data, DBasis basis) {
    const int m = data.m;
    const int d = 2 * m + 2;
    QMat K = companion_matrix(data);

    LieLattice S;
    S.dim = d;
    S.labels.resize(d);
    for (int i = 0; i < m; ++i) S.labels[i] = "x" + std::to_string(i + 1);
    for (int i = 0; i < m; ++i) S.labels[m + i] = "y" + std::to_string(i + 1);
    S.labels[2 * m] = "e";
    S.labels[2 * m + 1] = "f";
    S.table.assign(d, std::vector<std::vector<Rat>>(d, std::vector<Rat>(d, Rat(0))));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            // [x_{i+1}, y_{j+1}] = delta_ij e + K_ij f
            if (i == j) S.table[i][m + j][2 * m] = 1;
            if (K.at(i, j) != 0) S.table[i][m + j][2 * m + 1] = K.at(i, j);
            if (i == j) S.table[m + j][i][2 * m] = -1;
            if (K.at(i, j) != 0) S.table[m + j][i][2 * m + 1] = -K.at(i, j);
        }
    }
    if (basis == DBasis::S) return S;

    // v_C = v_S P; a bracket value computed in S coordinates moves to C by a
    // right multiplication with P, and the C basis vectors are the rows of
    // P^{-1} = P^t.
    QMat P = basis_change_matrix(m);
    QMat Pt = P.transpose();
    LieLattice C;
    C.dim = d;
    C.labels.resize(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (P.at(i, j) == 1) C.labels[j] = S.labels[i];
    C.table.assign(d, std::vector<std::vector<Rat>>(d, std::vector<Rat>(d, Rat(0))));
    for (int a = 0; a < d; ++a) {
        std::vector<Rat> ua(d);
        for (int k = 0; k < d; ++k) ua[k] = Pt.at(a, k);
        for (int b = 0; b < d; ++b) {
            std::vector<Rat> ub(d);
            for (int k = 0; k < d; ++k) ub[k] = Pt.at(b, k);
            std::vector<Rat> w = S.bracket(ua, ub);
            for (int k = 0; k < d; ++k) {
                Rat acc(0);
                for (int r = 0; r < d; ++r)
                    if (w[r] != 0) acc += w[r] * P.at(r, k);
                C.table[a][b][k] = acc;
            }
        }
    }
    return C;
}

namespace {

std::vector<Rat> row_of(const QMat& m, int i) {
    std::vector<Rat> r(m.cols());
    for (int j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
    return r;
}

std::vector<Rat> apply_right(const std::vector<Rat>& v, const QMat& m) {
    std::vector<Rat> r(m.cols(), Rat(0));
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

std::vector<Rat> unit_vector(int dim, int i) {
    std::vector<Rat> v(dim, Rat(0));
    v[i] = 1;
    return v;
}

}  // namespace

bool is_derivation(const LieLattice& L, const QMat& xi) {
    if (xi.rows() != L.dim || xi.cols() != L.dim)
        throw InvalidArgs("endomorphism dimension mismatch");
    for (int i = 0; i < L.dim; ++i) {
        for (int j = i + 1; j < L.dim; ++j) {
            std::vector<Rat> lhs = apply_right(L.basis_bracket(i, j), xi);
            std::vector<Rat> rhs =
                L.bracket(row_of(xi, i), unit_vector(L.dim, j));
            std::vector<Rat> rhs2 =
                L.bracket(unit_vector(L.dim, i), row_of(xi, j));
            for (int k = 0; k < L.dim; ++k)
                if (lhs[k] != rhs[k] + rhs2[k]) return false;
        }
    }
    return true;
}

bool is_automorphism(const LieLattice& L, const QMat& g) {
    if (g.rows() != L.dim || g.cols() != L.dim)
        throw InvalidArgs("endomorphism dimension mismatch");
    if (!g.invertible()) throw SingularMatrix("is_automorphism: matrix not invertible");
    for (int i = 0; i < L.dim; ++i) {
        for (int j = i + 1; j < L.dim; ++j) {
            std::vector<Rat> lhs = L.bracket(row_of(g, i), row_of(g, j));
            std::vector<Rat> rhs = apply_right(L.basis_bracket(i, j), g);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool g_condition_check(const QMat& K, const QMat& A, const QMat& B, const QMat& C,
                       const QMat& D, const QMat& Y) {
    const int m = K.rows();
    if (K.cols() != m || A.rows() != m || B.rows() != m || C.rows() != m || D.rows() != m)
        throw InvalidArgs("g_condition_check: block shape mismatch");
    if (Y.rows() != 2 || Y.cols() != 2) throw InvalidArgs("Y must be 2x2");
    const Rat a = Y.at(0, 0), b = Y.at(0, 1), c = Y.at(1, 0), d = Y.at(1, 1);
    if (!(B == B.transpose())) return false;
    if (!(C == C.transpose())) return false;
    QMat I = QMat::identity(m);
    if (!(D.transpose() == I.scaled(a) + K.scaled(c) - A)) return false;
    QMat lhs = K * A - A * K;
    QMat rhs = (K * K).scaled(c) + K.scaled(a - d) - I.scaled(b);
    return lhs == rhs;
}

QMat assemble_endo(const QMat& A, const QMat& B, const QMat& C, const QMat& D,
                   const QMat& Y) {
    const int m = A.rows();
    QMat xi(2 * m + 2, 2 * m + 2);
    xi.set_block(0, 0, A);
    xi.set_block(0, m, B);
    xi.set_block(m, 0, C);
    xi.set_block(m, m, D);
    xi.set_block(2 * m, 2 * m, Y);
    return xi;
}

int aut_lie_dimension(const LieLattice& L) {
    const int d = L.dim;
    const int unknowns = d * d;
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            for (int comp = 0; comp < d; ++comp) {
                std::vector<Rat> row(unknowns, Rat(0));
                bool nonzero = false;
                // [e_i, e_j] xi contributes table[i][j][r] * xi_{r,comp}.
                for (int r = 0; r < d; ++r) {
                    const Rat& c = L.table[i][j][r];
                    if (c != 0) {
                        row[r * d + comp] += c;
                        nonzero = true;
                    }
                }
                // -[e_i xi, e_j] contributes -table[r][j][comp] * xi_{i,r}.
                for (int r = 0; r < d; ++r) {
                    const Rat& c = L.table[r][j][comp];
                    if (c != 0) {
                        row[i * d + r] -= c;
                        nonzero = true;
                    }
                }
                // -[e_i, e_r] ... xi_{j,r} part.
                for (int r = 0; r < d; ++r) {
                    const Rat& c = L.table[i][r][comp];
                    if (c != 0) {
                        row[j * d + r] -= c;
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    QMat M(static_cast<int>(rows.size()), unknowns);
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < unknowns; ++j) M.at(i, j) = rows[i][j];
    return unknowns - M.rank();
}

QMat make_xi(int m, int i, DBasis basis) {
    if (m < 1) throw InvalidArgs("make_xi: m >= 1 required");
    if (i < 1 || i > 3) throw InvalidArgs("make_xi: i in {1,2,3}");
    QMat K = companion_matrix(CompanionData::x_power(m));
    QMat I = QMat::identity(m);
    QMat A(m, m), Y(2, 2);
    switch (i) {
        case 1:
            A = I.scaled(Rat(1, 2));
            Y = QMat::identity(2);
            break;
        case 2:
            // Diagonal with step 2, pinned by D^t = I - A = w A w^{-1}:
            // entries (4i - 1 - 2m)/2, matching the C-basis display
            // diag((3-2m)/2 I_2, (7-2m)/2 I_2, ..., (2m-1)/2 I_2).
            for (int k = 1; k <= m; ++k) A.at(k - 1, k - 1) = ratio(4 * k - 1 - 2 * m, 2);
            Y.at(0, 0) = 1;
            Y.at(1, 1) = -1;
            break;
        case 3:
            // Superdiagonal c_k = (2k+1-m)/2; the centre block acts by
            // f -> e, i.e. the c-parameter of the section at lambda = 0.
            for (int k = 1; k < m; ++k) A.at(k - 1, k) = ratio(2 * k + 1 - m, 2);
            Y.at(1, 0) = 1;
            break;
    }
    // D^t = aI + cK - A with (a,b,c,d) read off Y.
    QMat Dt = I.scaled(Y.at(0, 0)) + K.scaled(Y.at(1, 0)) - A;
    QMat xi = assemble_endo(A, QMat(m, m), QMat(m, m), Dt.transpose(), Y);
    if (basis == DBasis::S) return xi;
    QMat P = basis_change_matrix(m);
    return P.inverse() * xi * P;
}

QMat h_element(int m, const QMat& A, const Rat& mu) {
    if (A.rows() != 2 || A.cols() != 2) throw InvalidArgs("h_element: A must be 2x2");
    Rat det = A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
    QMat h(2 * m + 2, 2 * m + 2);
    std::vector<Rat> powers(m + 1);
    powers[0] = 1;
    for (int k = 1; k <= m; ++k) powers[k] = powers[k - 1] * mu;
    for (int b = 0; b < m; ++b) h.set_block(2 * b, 2 * b, A.scaled(powers[m - 1 - b]));
    h.at(2 * m, 2 * m) = powers[m] * det;
    h.at(2 * m + 1, 2 * m + 1) = powers[m - 1] * det;
    return h;
}

QMat n_element(int m, const std::vector<QMat>& xblocks, const Rat& lambda,
               const QMat& stars) {
    if (m != 2 && m != 3) throw InvalidArgs("n_element: m must be 2 or 3");
    if (static_cast<int>(xblocks.size()) != m - 1)
        throw InvalidArgs("n_element: expected " + std::to_string(m - 1) + " X blocks");
    for (const QMat& X : xblocks) {
        if (X.rows() != 2 || X.cols() != 2) throw InvalidArgs("X blocks must be 2x2");
        if (X.trace() != 0) throw NonTraceless("n_element: X block has nonzero trace");
    }
    const int d = 2 * m + 2;
    if (stars.rows() != 2 * m || stars.cols() != 2)
        throw InvalidArgs("stars must be 2m x 2");
    QMat n = QMat::identity(d);
    QMat I2 = QMat::identity(2);
    if (m == 2) {
        const QMat& X = xblocks[0];
        n.set_block(0, 2, X + I2.scaled(lambda / 2));
    } else {
        const QMat& X1 = xblocks[0];
        const QMat& X2 = xblocks[1];
        n.set_block(0, 2, X1);
        n.set_block(0, 4, X2 + (X1.scaled(lambda) + X1 * X1).scaled(Rat(1, 2)));
        n.set_block(2, 4, X1 + I2.scaled(lambda));
    }
    n.set_block(0, 2 * m, stars);
    n.at(2 * m, 2 * m + 1) = lambda;
    return n;
}

QMat g0_element(int m, const std::vector<Rat>& a, const std::vector<Rat>& b,
                const std::vector<Rat>& c, const QMat& stars) {
    QMat K = companion_matrix(CompanionData::x_power(m));
    QMat w = reversal_matrix(m);
    auto poly_of_K = [&](const std::vector<Rat>& coeffs) {
        QMat r(m, m);
        QMat power = QMat::identity(m);
        for (const Rat& ck : coeffs) {
            r = r + power.scaled(ck);
            power = power * K;
        }
        return r;
    };
    QMat A = poly_of_K(a);
    QMat Bblk = poly_of_K(b) * w;
    QMat Cblk = w * poly_of_K(c);
    QMat D = (w * A * w).scaled(Rat(-1));
    QMat xi = assemble_endo(A, Bblk, Cblk, D, QMat(2, 2));
    if (stars.rows() == 2 * m && stars.cols() == 2) xi.set_block(0, 2 * m, stars);
    return xi;
}

}  // namespace dstar
