#include "flagsolve/numberfield.hpp"

#include <stdexcept>

#include "flagsolve/errors.hpp"
#include "flagsolve/matrix.hpp"

namespace flagsolve {

NumberField::NumberField(const UniPoly& modulus) {
    if (modulus.degree() < 1)
        throw std::invalid_argument("NumberField: modulus must have degree >= 1");
    modulus_ = std::make_shared<const UniPoly>(modulus.monic());
}

NumberFieldElem NumberField::element(const UniPoly& value) const {
    if (!modulus_) throw std::invalid_argument("NumberField: uninitialised field");
    return NumberFieldElem(*this, divmod(value, *modulus_).second);
}

NumberFieldElem NumberField::from_rational(const Rat& value) const {
    return element(UniPoly(value));
}

NumberFieldElem NumberField::generator() const { return element(UniPoly::variable()); }
NumberFieldElem NumberField::zero() const { return element(UniPoly()); }
NumberFieldElem NumberField::one() const { return element(UniPoly(Rat(1))); }

void NumberFieldElem::check_same(const NumberFieldElem& o) const {
    if (!field_.modulus_ || !o.field_.modulus_ || !field_.same_field(o.field_))
        throw std::invalid_argument("NumberFieldElem: elements of different fields");
}

Rat NumberFieldElem::rational_value() const {
    if (!is_rational())
        throw std::domain_error("NumberFieldElem: rational_value of a non-rational element");
    return v_.is_zero() ? Rat(0) : v_[0];
}

NumberFieldElem NumberFieldElem::operator+(const NumberFieldElem& o) const {
    check_same(o);
    return NumberFieldElem(field_, v_ + o.v_);
}

NumberFieldElem NumberFieldElem::operator-(const NumberFieldElem& o) const {
    check_same(o);
    return NumberFieldElem(field_, v_ - o.v_);
}

NumberFieldElem NumberFieldElem::operator*(const NumberFieldElem& o) const {
    check_same(o);
    return field_.element(v_ * o.v_);
}

NumberFieldElem NumberFieldElem::operator/(const NumberFieldElem& o) const {
    return *this * o.inverse();
}

NumberFieldElem NumberFieldElem::operator-() const { return NumberFieldElem(field_, -v_); }

NumberFieldElem NumberFieldElem::operator+(const Rat& s) const {
    return NumberFieldElem(field_, v_ + UniPoly(s));
}

NumberFieldElem NumberFieldElem::operator-(const Rat& s) const {
    return NumberFieldElem(field_, v_ - UniPoly(s));
}

NumberFieldElem NumberFieldElem::operator*(const Rat& s) const {
    return NumberFieldElem(field_, v_ * s);
}

bool NumberFieldElem::operator==(const NumberFieldElem& o) const {
    check_same(o);
    return v_ == o.v_;
}

NumberFieldElem NumberFieldElem::inverse() const {
    if (!field_.modulus_) throw std::invalid_argument("NumberFieldElem: uninitialised field");
    if (v_.is_zero()) throw std::domain_error("NumberFieldElem: division by zero");
    // Extended Euclid: maintain t with t * v == r (mod modulus).
    UniPoly r0 = *field_.modulus_, r1 = v_;
    UniPoly t0, t1(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() == 0) return field_.element(t0 * (1 / r0[0]));
    // gcd(modulus, v) is a proper factor of the modulus: report it so the
    // caller can split the quotient ring.
    UniPoly factor = r0.monic();
    std::vector<std::string> coeffs;
    for (int k = 0; k <= factor.degree(); ++k) coeffs.push_back(rat_str(factor[k]));
    throw ReducibleModulusError(
        "zero divisor modulo " + field_.modulus_->str() + ": gcd with " + v_.str() + " is " +
            factor.str(),
        std::move(coeffs));
}

NumberFieldElem NumberFieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NumberFieldElem base = *this;
    NumberFieldElem acc = field_.one();
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1) acc = acc * base;
        base = base * base;
        u >>= 1;
    }
    return acc;
}

UniPoly minimal_polynomial(const NumberFieldElem& a) {
    int d = a.field().degree();
    // Column k holds the coefficient vector of a^k.
    std::vector<std::vector<Rat>> powers;
    NumberFieldElem p = a.field().one();
    for (int k = 0; k <= d; ++k) {
        std::vector<Rat> col(d, Rat(0));
        for (int i = 0; i <= p.value().degree(); ++i) col[i] = p.value()[i];
        powers.push_back(std::move(col));
        if (k < d) p = p * a;
    }
    for (int k = 1; k <= d; ++k) {
        QMatrix m(d, k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < k; ++j) m.at(i, j) = powers[j][i];
        auto sol = m.solve(powers[k]);
        if (!sol) continue;
        std::vector<Rat> coeffs(k + 1);
        for (int j = 0; j < k; ++j) coeffs[j] = -(*sol)[j];
        coeffs[k] = 1;
        return UniPoly(std::move(coeffs));
    }
    throw std::logic_error("minimal_polynomial: no dependency found (impossible)");
}

}  // namespace flagsolve
