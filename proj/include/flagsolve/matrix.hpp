#pragma once

/*
 * Exact dense linear algebra.
 *
 * QMatrix holds rational entries; determinants go through fraction-free
 * Bareiss elimination on an integer-scaled copy, everything else (rref, rank,
 * solve, kernel, inverse) through rational Gauss-Jordan, and characteristic
 * polynomials through an exact Hessenberg reduction.  field_rref_rank is a
 * small generic elimination for entries in any exact field type exposing
 * is_zero() and inverse() (number field elements, in practice).
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "flagsolve/rational.hpp"
#include "flagsolve/unipoly.hpp"

namespace flagsolve {

class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const Rat& s) const;
    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    QMatrix transpose() const;

    /// Reduced row echelon form; the rank lands in *rank if given.
    QMatrix rref(std::size_t* rank = nullptr) const;
    std::size_t rank() const;

    /// Determinant by fraction-free Bareiss elimination (square only).
    Rat det() const;

    std::optional<QMatrix> inverse() const;

    /// One solution of A x = rhs with free variables set to zero, or nullopt
    /// if the system is inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;

    /// Basis of the right null space.
    std::vector<std::vector<Rat>> kernel_basis() const;

    /// Monic characteristic polynomial det(Y I - A), exact (square only).
    UniPoly char_poly() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// In-place Gauss-Jordan over any exact field; returns the rank.  F must
/// provide is_zero(), inverse(), operator*, operator-, and copying.
template <typename F>
std::size_t field_rref_rank(std::vector<std::vector<F>>& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        F inv = m[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            F f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace flagsolve
