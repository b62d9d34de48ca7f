#pragma once

/*
 * Sparse multivariate polynomials over the rationals.
 *
 * A Ring fixes the variable names and the monomial order: plain
 * degree-reverse-lexicographic, or a two-block elimination order whose first
 * k variables dominate (a Groebner basis in that order intersected with the
 * second block generates the elimination ideal).  Terms are kept sorted in
 * strictly decreasing monomial order with nonzero coefficients, so leading
 * data is O(1) and addition is a merge.
 */

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "flagsolve/rational.hpp"

namespace flagsolve {

struct Monomial {
    std::vector<unsigned> e;

    explicit Monomial(std::size_t nvars = 0) : e(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        return d;
    }
    bool is_one() const { return degree() == 0; }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    Monomial operator*(const Monomial& o) const;
    /// Requires o | *this.
    Monomial operator/(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;
};

class Ring {
public:
    Ring() = default;

    static Ring degrevlex(std::vector<std::string> names);
    /// Elimination order: the first `block` variables dominate; ties within a
    /// block are degrevlex.
    static Ring block(std::vector<std::string> names, std::size_t block);

    std::size_t nvars() const { return data_->names.size(); }
    const std::string& name(std::size_t i) const { return data_->names[i]; }
    const std::vector<std::string>& names() const { return data_->names; }
    /// Index of a variable name, or npos.
    std::size_t index_of(const std::string& name) const;
    std::size_t block_size() const { return data_->block; }

    /// Strict "less" in the ring's monomial order.
    bool mono_less(const Monomial& a, const Monomial& b) const;

    bool same_ring(const Ring& o) const { return data_ == o.data_ || *data_ == *o.data_; }
    bool initialised() const { return data_ != nullptr; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    struct Data {
        std::vector<std::string> names;
        std::size_t block;  // 0 = plain degrevlex
        bool operator==(const Data& o) const { return names == o.names && block == o.block; }
    };
    std::shared_ptr<const Data> data_;
};

class MultiPoly {
public:
    using Term = std::pair<Monomial, Rat>;

    MultiPoly() = default;
    explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

    static MultiPoly constant(const Ring& ring, const Rat& c);
    static MultiPoly variable(const Ring& ring, std::size_t i, unsigned power = 1);
    /// From arbitrary (monomial, coeff) pairs; sorts and combines.
    static MultiPoly from_terms(const Ring& ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].first.degree() == 0; }
    Rat constant_value() const;
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;
    unsigned total_degree() const;
    /// Highest exponent of variable i across all terms.
    unsigned degree_in(std::size_t i) const;
    bool uses_variable(std::size_t i) const { return degree_in(i) > 0; }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& s) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const;

    /// *this - c * m * g, the inner loop of polynomial reduction (merge, no
    /// intermediate normalisation).
    MultiPoly submul(const Rat& c, const Monomial& m, const MultiPoly& g) const;

    MultiPoly monic() const;
    /// Positive-leading-coefficient integer-primitive scaling.
    MultiPoly primitive() const;

    /// Replace variable i by a polynomial (Horner in that variable).
    MultiPoly substitute(std::size_t i, const MultiPoly& value) const;

    Rat eval_rat(const std::vector<Rat>& point) const;

    /// Re-express in another ring, matching variables by name; throws if a
    /// used variable is missing from the target.
    MultiPoly transport(const Ring& target) const;

    std::string str() const;

private:
    void normalise();  // sort + combine + drop zeros

    Ring ring_;
    std::vector<Term> terms_;  // strictly decreasing monomials
};

inline MultiPoly operator*(const Rat& s, const MultiPoly& p) { return p * s; }

}  // namespace flagsolve
