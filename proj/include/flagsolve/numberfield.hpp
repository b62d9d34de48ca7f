#pragma once

/*
 * Arithmetic in Q[Y]/(f) for a monic modulus f.
 *
 * The modulus is not required to be irreducible up front: inversion runs the
 * extended Euclidean algorithm, and when that surfaces a zero divisor it
 * throws ReducibleModulusError carrying a proper factor of f.  Callers split
 * their computation along the factor and retry on each piece, so reducibility
 * is discovered exactly where it matters and never silently ignored.
 */

#include <memory>
#include <string>

#include "flagsolve/unipoly.hpp"

namespace flagsolve {

class NumberFieldElem;

class NumberField {
public:
    /// Placeholder only (no modulus); usable just as a target of assignment.
    NumberField() = default;

    /// Q[Y]/(modulus); the modulus is made monic, degree >= 1 required.
    explicit NumberField(const UniPoly& modulus);

    int degree() const { return modulus_->degree(); }
    const UniPoly& modulus() const { return *modulus_; }

    NumberFieldElem element(const UniPoly& value) const;
    NumberFieldElem from_rational(const Rat& value) const;
    NumberFieldElem generator() const;
    NumberFieldElem zero() const;
    NumberFieldElem one() const;

    bool same_field(const NumberField& o) const {
        return modulus_ == o.modulus_ || *modulus_ == *o.modulus_;
    }

private:
    friend class NumberFieldElem;
    std::shared_ptr<const UniPoly> modulus_;
};

class NumberFieldElem {
public:
    NumberFieldElem() = default;

    const UniPoly& value() const { return v_; }
    const NumberField& field() const { return field_; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_rational() const { return v_.is_constant(); }
    /// Requires is_rational().
    Rat rational_value() const;

    NumberFieldElem operator+(const NumberFieldElem& o) const;
    NumberFieldElem operator-(const NumberFieldElem& o) const;
    NumberFieldElem operator*(const NumberFieldElem& o) const;
    NumberFieldElem operator/(const NumberFieldElem& o) const;
    NumberFieldElem operator-() const;
    NumberFieldElem operator+(const Rat& s) const;
    NumberFieldElem operator-(const Rat& s) const;
    NumberFieldElem operator*(const Rat& s) const;
    bool operator==(const NumberFieldElem& o) const;
    bool operator!=(const NumberFieldElem& o) const { return !(*this == o); }

    /// Throws ReducibleModulusError when a zero divisor reveals a factor of
    /// the modulus, std::domain_error on division by zero.
    NumberFieldElem inverse() const;

    NumberFieldElem pow(long e) const;

    std::string str(const std::string& var = "y") const { return v_.str(var); }

private:
    friend class NumberField;
    NumberFieldElem(NumberField f, UniPoly v) : field_(std::move(f)), v_(std::move(v)) {}
    void check_same(const NumberFieldElem& o) const;

    NumberField field_;
    UniPoly v_;
};

/// Monic minimal polynomial of a over Q (first linear dependency among the
/// powers of a).
UniPoly minimal_polynomial(const NumberFieldElem& a);

}  // namespace flagsolve
