#include "dstar/matrix.hpp"

#include "dstar/errors.hpp"

namespace dstar {

QMat::QMat(int rows, int cols, std::initializer_list<Rat> entries) : QMat(rows, cols) {
    if (static_cast<int>(entries.size()) != rows * cols)
        throw InvalidArgs("matrix initializer size mismatch");
    int k = 0;
    for (const Rat& v : entries) a_[k++] = v;
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator+(const QMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InvalidArgs("matrix shape mismatch in +");
    QMat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
}

QMat QMat::operator-(const QMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InvalidArgs("matrix shape mismatch in -");
    QMat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (c_ != o.r_) throw InvalidArgs("matrix shape mismatch in *");
    QMat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Rat& bkj = o.at(k, j);
                if (bkj != 0) m.at(i, j) += aik * bkj;
            }
        }
    return m;
}

QMat QMat::scaled(const Rat& c) const {
    QMat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * c;
    return m;
}

QMat QMat::transpose() const {
    QMat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool QMat::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0) return false;
    return true;
}

Rat QMat::trace() const {
    Rat t(0);
    for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
    return t;
}

void QMat::set_block(int i, int j, const QMat& src) {
    for (int a = 0; a < src.rows(); ++a)
        for (int b = 0; b < src.cols(); ++b) at(i + a, j + b) = src.at(a, b);
}

QMat QMat::block(int i, int j, int rows, int cols) const {
    QMat m(rows, cols);
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) m.at(a, b) = at(i + a, j + b);
    return m;
}

int QMat::rank() const {
    QMat m = *this;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int pivot = -1;
        for (int i = rank; i < r_; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < c_; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        Rat inv = Rat(1) / m.at(rank, col);
        for (int j = col; j < c_; ++j) m.at(rank, j) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

bool QMat::invertible() const { return r_ == c_ && rank() == r_; }

QMat QMat::inverse() const {
    if (r_ != c_) throw SingularMatrix("inverse of non-square matrix");
    QMat m = *this;
    QMat inv = QMat::identity(r_);
    for (int col = 0; col < c_; ++col) {
        int pivot = -1;
        for (int i = col; i < r_; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularMatrix("matrix is singular");
        for (int j = 0; j < c_; ++j) {
            std::swap(m.at(col, j), m.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        Rat d = Rat(1) / m.at(col, col);
        for (int j = 0; j < c_; ++j) {
            m.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int i = 0; i < r_; ++i) {
            if (i == col || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < c_; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rat> QMat::solve_unique(const QMat& A, const std::vector<Rat>& b, bool* ok) {
    if (static_cast<int>(b.size()) != A.rows()) throw InvalidArgs("solve: size mismatch");
    QMat m(A.rows(), A.cols() + 1);
    m.set_block(0, 0, A);
    for (int i = 0; i < A.rows(); ++i) m.at(i, A.cols()) = b[i];

    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < A.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j <= A.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        Rat inv = Rat(1) / m.at(rank, col);
        for (int j = col; j <= A.cols(); ++j) m.at(rank, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = col; j <= A.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // Inconsistent or underdetermined systems have no unique solution.
    for (int i = rank; i < m.rows(); ++i)
        if (m.at(i, A.cols()) != 0) {
            *ok = false;
            return {};
        }
    if (rank < A.cols()) {
        *ok = false;
        return {};
    }
    std::vector<Rat> x(A.cols());
    for (int i = 0; i < rank; ++i) x[pivot_col[i]] = m.at(i, A.cols());
    *ok = true;
    return x;
}

}  // namespace dstar
