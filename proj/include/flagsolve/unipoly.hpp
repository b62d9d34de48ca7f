#pragma once

/*
 * Dense univariate polynomials over the rationals.
 *
 * Coefficients are stored low-to-high and kept trimmed (no trailing zeros),
 * so degree() is just size()-1.  The zero polynomial has degree -1.
 *
 * Heavier algorithms (gcd via primitive pseudo-remainder sequences, Yun's
 * squarefree decomposition, resultants, expression parsing) live in
 * unipoly.cpp.
 */

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "flagsolve/rational.hpp"

namespace flagsolve {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rat& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The polynomial Y.
    static UniPoly variable() { return monomial(1); }

    /// c * Y^k.
    static UniPoly monomial(std::size_t k, const Rat& c = Rat(1)) {
        UniPoly p;
        if (c != 0) {
            p.c_.assign(k + 1, Rat(0));
            p.c_[k] = c;
        }
        return p;
    }

    /// Convenience for literals written high-to-low, e.g. {1,-1,1} = Y^2-Y+1.
    static UniPoly from_desc(std::initializer_list<long> hi_to_lo) {
        std::vector<Rat> c;
        c.reserve(hi_to_lo.size());
        for (auto it = std::rbegin(hi_to_lo); it != std::rend(hi_to_lo); ++it)
            c.emplace_back(*it);
        return UniPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of Y^k (zero beyond the degree).
    const Rat& operator[](std::size_t k) const {
        static const Rat kZero(0);
        return k < c_.size() ? c_[k] : kZero;
    }

    const Rat& lc() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    UniPoly compose(const UniPoly& inner) const;

    /// Divide every coefficient by lc() (no-op on zero).
    UniPoly monic() const;

    /// p(Y) -> p(-Y).
    UniPoly negate_variable() const;

    /// Reverse coefficients: Y^deg * p(1/Y).
    UniPoly reversed() const;

    UniPoly pow(unsigned e) const;

    std::string str(const std::string& var = "Y") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

/// Euclidean division over Q; requires b != 0.  Returns {quotient, remainder}.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Exact division; throws std::domain_error if the remainder is nonzero.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Monic gcd over Q (primitive pseudo-remainder sequence underneath).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// Largest squarefree divisor with the same roots, monic.
UniPoly squarefree_part(const UniPoly& p);

/// Yun's algorithm: p = lc * prod f_i^{m_i} with f_i monic squarefree,
/// pairwise coprime, m_i strictly increasing.  Returns {(f_i, m_i)}.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Resultant of a and b with respect to their variable.
Rat resultant(const UniPoly& a, const UniPoly& b);

/// Discriminant: (-1)^(d(d-1)/2) * resultant(p, p') / lc(p).
Rat discriminant(const UniPoly& p);

/// Clear denominators and content: returns (c, q) with p = c*q, q having
/// coprime integer coefficients and positive leading coefficient.
std::pair<Rat, UniPoly> integer_primitive(const UniPoly& p);

/// Parse an expression in one variable: rationals, +, -, *, ^, parentheses.
UniPoly parse_unipoly(const std::string& text, const std::string& var = "Y");

}  // namespace flagsolve
