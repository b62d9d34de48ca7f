#include "flagsolve/interval.hpp"

#include <sstream>
#include <stdexcept>

namespace flagsolve {

RatInterval::RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("RatInterval: lo > hi");
}

Rat RatInterval::mig() const {
    if (contains_zero()) return Rat(0);
    return std::min(rat_abs(lo_), rat_abs(hi_));
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat a = lo_ * o.lo_;
    Rat b = lo_ * o.hi_;
    Rat c = hi_ * o.lo_;
    Rat d = hi_ * o.hi_;
    Rat lo = std::min(std::min(a, b), std::min(c, d));
    Rat hi = std::max(std::max(a, b), std::max(c, d));
    return RatInterval(std::move(lo), std::move(hi));
}

RatInterval RatInterval::operator*(const Rat& s) const {
    if (sgn(s) >= 0) return RatInterval(lo_ * s, hi_ * s);
    return RatInterval(hi_ * s, lo_ * s);
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
    if (o.sign() == 0) throw std::domain_error("RatInterval: division by interval containing 0");
    Rat a = lo_ / o.lo_;
    Rat b = lo_ / o.hi_;
    Rat c = hi_ / o.lo_;
    Rat d = hi_ / o.hi_;
    Rat lo = std::min(std::min(a, b), std::min(c, d));
    Rat hi = std::max(std::max(a, b), std::max(c, d));
    return RatInterval(std::move(lo), std::move(hi));
}

RatInterval RatInterval::square() const {
    if (lo_ >= 0) return RatInterval(lo_ * lo_, hi_ * hi_);
    if (hi_ <= 0) return RatInterval(hi_ * hi_, lo_ * lo_);
    Rat m = std::max(lo_ * lo_, hi_ * hi_);
    return RatInterval(Rat(0), std::move(m));
}

RatInterval RatInterval::round_out(unsigned prec) const {
    return RatInterval(dyadic_floor(lo_, prec), dyadic_ceil(hi_, prec));
}

RatInterval RatInterval::hull(const RatInterval& a, const RatInterval& b) {
    return RatInterval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

std::optional<RatInterval> RatInterval::intersect(const RatInterval& o) const {
    Rat lo = std::max(lo_, o.lo_);
    Rat hi = std::min(hi_, o.hi_);
    if (lo > hi) return std::nullopt;
    return RatInterval(std::move(lo), std::move(hi));
}

namespace {

// Decimal rendering of x, rounded in the given direction (dir=-1 down, +1 up),
// with `digits` digits after the point.
std::string decimal_str(const Rat& x, int digits, int dir) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat scaled = x * Rat(scale);
    Int n;
    if (dir < 0) {
        mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    } else {
        mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    }
    bool neg = n < 0;
    Int a = neg ? Int(-n) : n;
    Int ip = a / scale;
    Int fp = a % scale;
    std::string frac = fp.get_str();
    while ((int)frac.size() < digits) frac = "0" + frac;
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (digits > 0) out += "." + frac;
    return out;
}

}  // namespace

std::string RatInterval::str() const {
    // Pick enough digits that the printed endpoints differ by at most ~1 ulp
    // more than the true width.
    int digits = 6;
    Rat w = width();
    while (digits < 40 && w * int_pow(Int(10), digits) < 1) digits += 3;
    if (is_point()) return decimal_str(lo_, digits, -1) + " (exact endpoint rounded)";
    return "[" + decimal_str(lo_, digits, -1) + ", " + decimal_str(hi_, digits, +1) + "]";
}

ComplexBox ComplexBox::operator/(const ComplexBox& o) const {
    RatInterval n = o.abs2();
    if (n.sign() <= 0) throw std::domain_error("ComplexBox: division by box not excluding 0");
    ComplexBox num = (*this) * o.conj();
    return ComplexBox(num.re() / n, num.im() / n);
}

std::string ComplexBox::str() const {
    return re_.str() + " + " + im_.str() + " i";
}

}  // namespace flagsolve
