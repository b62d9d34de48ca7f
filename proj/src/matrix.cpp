#include "flagsolve/matrix.hpp"

#include <stdexcept>

namespace flagsolve {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: dimension mismatch in product");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("QMatrix: dimension mismatch in sum");
    QMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("QMatrix: dimension mismatch in difference");
    QMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

QMatrix QMatrix::operator*(const Rat& s) const {
    QMatrix r = *this;
    for (Rat& x : r.a_) x *= s;
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMatrix QMatrix::rref(std::size_t* rank_out) const {
    QMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        Rat inv = 1 / m.at(rank, col);
        for (std::size_t j = col; j < cols_; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    if (rank_out) *rank_out = rank;
    return m;
}

std::size_t QMatrix::rank() const {
    std::size_t r = 0;
    rref(&r);
    return r;
}

Rat QMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return Rat(1);

    // Scale each row to integers, tracking the combined factor.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Rat scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int lcm(1);
        for (std::size_t j = 0; j < n; ++j) {
            Int den = at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        scale *= Rat(lcm);
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = at(i, j) * Rat(lcm);
            m[i][j] = v.get_num();  // exact integer by construction
        }
    }

    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return Rat(sign * m[n - 1][n - 1]) / scale;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: inverse of non-square matrix");
    std::size_t n = rows_;
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    QMatrix red = aug.rref();
    // Invertible iff the left block reduced to the identity (the rank of the
    // augmented matrix is always n, so it cannot be used as the test).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (red.at(i, j) != Rat(i == j ? 1 : 0)) return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("QMatrix: rhs size mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i];
    }
    std::size_t rank = 0;
    QMatrix red = aug.rref(&rank);

    // Locate pivot columns; a pivot in the augmented column means the system
    // is inconsistent.
    std::vector<long> pivot_of_row(rank, -1);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t j = 0;
        while (j <= cols_ && red.at(i, j) == 0) ++j;
        if (j == cols_) return std::nullopt;
        pivot_of_row[i] = static_cast<long>(j);
    }
    std::vector<Rat> x(cols_, Rat(0));
    for (std::size_t i = 0; i < rank; ++i) x[pivot_of_row[i]] = red.at(i, cols_);
    return x;
}

std::vector<std::vector<Rat>> QMatrix::kernel_basis() const {
    std::size_t rank = 0;
    QMatrix red = rref(&rank);
    std::vector<bool> is_pivot(cols_, false);
    std::vector<std::size_t> pivot_row(cols_, 0);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t j = 0;
        while (j < cols_ && red.at(i, j) == 0) ++j;
        is_pivot[j] = true;
        pivot_row[j] = i;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (std::size_t j = 0; j < cols_; ++j)
            if (is_pivot[j]) v[j] = -red.at(pivot_row[j], free);
        basis.push_back(std::move(v));
    }
    return basis;
}

UniPoly QMatrix::char_poly() const {
    if (rows_ != cols_)
        throw std::invalid_argument("QMatrix: characteristic polynomial of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return UniPoly(Rat(1));
    QMatrix h = *this;

    // Similarity reduction to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t pivot = j + 1;
        while (pivot < n && h.at(pivot, j) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(h.at(pivot, k), h.at(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(h.at(k, pivot), h.at(k, j + 1));
        }
        for (std::size_t i = j + 2; i < n; ++i) {
            if (h.at(i, j) == 0) continue;
            Rat f = h.at(i, j) / h.at(j + 1, j);
            for (std::size_t k = 0; k < n; ++k) h.at(i, k) -= f * h.at(j + 1, k);
            for (std::size_t k = 0; k < n; ++k) h.at(k, j + 1) += f * h.at(k, i);
        }
    }

    // Leading-principal-minor recurrence for Hessenberg matrices.
    std::vector<UniPoly> p(n + 1);
    p[0] = UniPoly(Rat(1));
    for (std::size_t k = 1; k <= n; ++k) {
        UniPoly xm = UniPoly::variable() - UniPoly(h.at(k - 1, k - 1));
        p[k] = xm * p[k - 1];
        Rat prod(1);
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod *= h.at(i, i - 1);
            if (prod == 0) break;
            p[k] -= p[i - 1] * (h.at(i - 1, k - 1) * prod);
        }
    }
    return p[n];
}

}  // namespace flagsolve
