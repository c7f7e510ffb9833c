#pragma once

#include <initializer_list>
#include <vector>

#include "dstar/rational.hpp"

namespace dstar {

// Dense matrix over the exact rationals. Row vectors act from the right
// throughout the library, matching the convention for the automorphism
// representations.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
    QMat(int rows, int cols, std::initializer_list<Rat> entries);

    static QMat identity(int n);
    static QMat zero(int rows, int cols) { return QMat(rows, cols); }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const QMat& o) const;
    QMat scaled(const Rat& c) const;
    QMat transpose() const;
    bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    bool is_zero() const;
    Rat trace() const;

    // Copies src into this matrix with top-left corner at (i, j).
    void set_block(int i, int j, const QMat& src);
    QMat block(int i, int j, int rows, int cols) const;

    // Exact Gaussian elimination.
    int rank() const;
    bool invertible() const;
    QMat inverse() const;  // throws SingularMatrix

    // Solves x * nothing... solves A x = b for column vector b (A square or
    // tall, exact); empty result when inconsistent or underdetermined.
    static std::vector<Rat> solve_unique(const QMat& A, const std::vector<Rat>& b,
                                         bool* ok);

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

}  // namespace dstar
