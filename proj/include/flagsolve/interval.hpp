#pragma once

/*
 * Interval arithmetic with exact rational endpoints.
 *
 * Operations are exact; round_out() optionally compresses endpoints to
 * dyadics of bounded size (outward, so enclosures remain valid).  ComplexBox
 * is an axis-aligned rectangle [re] x [im].  These are the carriers for every
 * certified numeric statement the library makes: a value is only ever
 * reported together with an interval that provably contains it.
 */

#include <optional>
#include <string>

#include "flagsolve/rational.hpp"

namespace flagsolve {

class RatInterval {
public:
    RatInterval() : lo_(0), hi_(0) {}
    RatInterval(Rat lo, Rat hi);
    static RatInterval point(const Rat& x) { return RatInterval(x, x); }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat mid() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }

    /// +1 if provably positive, -1 if provably negative, 0 otherwise.
    int sign() const { return lo_ > 0 ? 1 : (hi_ < 0 ? -1 : 0); }

    Rat mag() const { return std::max(rat_abs(lo_), rat_abs(hi_)); }
    /// Smallest |x| over the interval (0 if it straddles zero).
    Rat mig() const;

    RatInterval operator-() const { return RatInterval(-hi_, -lo_); }
    RatInterval operator+(const RatInterval& o) const { return RatInterval(lo_ + o.lo_, hi_ + o.hi_); }
    RatInterval operator-(const RatInterval& o) const { return RatInterval(lo_ - o.hi_, hi_ - o.lo_); }
    RatInterval operator*(const RatInterval& o) const;
    /// Requires o provably nonzero.
    RatInterval operator/(const RatInterval& o) const;
    RatInterval operator+(const Rat& s) const { return RatInterval(lo_ + s, hi_ + s); }
    RatInterval operator-(const Rat& s) const { return RatInterval(lo_ - s, hi_ - s); }
    RatInterval operator*(const Rat& s) const;

    RatInterval square() const;

    /// Outward dyadic rounding to denominator 2^prec.
    RatInterval round_out(unsigned prec) const;

    static RatInterval hull(const RatInterval& a, const RatInterval& b);
    std::optional<RatInterval> intersect(const RatInterval& o) const;

    bool operator==(const RatInterval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

    /// Decimal rendering "lo..hi" with enough digits to tell them apart.
    std::string str() const;

private:
    Rat lo_, hi_;
};

inline RatInterval operator*(const Rat& s, const RatInterval& x) { return x * s; }

class ComplexBox {
public:
    ComplexBox() = default;
    ComplexBox(RatInterval re, RatInterval im) : re_(std::move(re)), im_(std::move(im)) {}
    static ComplexBox point(const Rat& re, const Rat& im) {
        return ComplexBox(RatInterval::point(re), RatInterval::point(im));
    }
    static ComplexBox real_point(const Rat& re) { return point(re, Rat(0)); }

    const RatInterval& re() const { return re_; }
    const RatInterval& im() const { return im_; }

    ComplexBox operator-() const { return ComplexBox(-re_, -im_); }
    ComplexBox conj() const { return ComplexBox(re_, -im_); }
    ComplexBox operator+(const ComplexBox& o) const { return ComplexBox(re_ + o.re_, im_ + o.im_); }
    ComplexBox operator-(const ComplexBox& o) const { return ComplexBox(re_ - o.re_, im_ - o.im_); }
    ComplexBox operator*(const ComplexBox& o) const {
        return ComplexBox(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    ComplexBox operator*(const Rat& s) const { return ComplexBox(re_ * s, im_ * s); }
    /// Requires |o|^2 provably positive.
    ComplexBox operator/(const ComplexBox& o) const;

    /// Enclosure of |z|^2.
    RatInterval abs2() const { return re_.square() + im_.square(); }

    /// True if the box is exactly the real segment [re, re] x {0}.
    bool is_exactly_real() const { return im_.is_point() && im_.lo() == 0; }

    Rat max_width() const { return std::max(re_.width(), im_.width()); }
    ComplexBox round_out(unsigned prec) const {
        return ComplexBox(re_.round_out(prec), im_.round_out(prec));
    }
    bool contains(const ComplexBox& o) const {
        return re_.contains(o.re()) && im_.contains(o.im());
    }
    bool disjoint(const ComplexBox& o) const {
        return re_.hi() < o.re().lo() || o.re().hi() < re_.lo() || im_.hi() < o.im().lo() ||
               o.im().hi() < im_.lo();
    }

    std::string str() const;

private:
    RatInterval re_, im_;
};

}  // namespace flagsolve
