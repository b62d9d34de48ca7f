#include "flagsolve/realfun.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace flagsolve {

namespace {

constexpr unsigned kGuardBits = 16;

// sum_{k>=0} e_k t^{2k+1} / (2k+1) with e_k = (-1)^k when `alternating`
// (arctan) and e_k = 1 otherwise (artanh).  Requires t.mag() <= 1/2.  The
// truncation error is bounded by mag^{2N+1} / ((2N+1)(1 - mag^2)) and is
// absorbed into the returned interval.
RatInterval odd_series(const RatInterval& t, bool alternating, unsigned prec) {
    Rat mag = t.mag();
    if (sgn(mag) == 0) return RatInterval::point(Rat(0));
    assert(mag <= Rat(1, 2));
    long L = floor_log2_abs(1 / mag);  // mag <= 2^-L, L >= 1
    assert(L >= 1);
    unsigned wp = prec + kGuardBits;
    unsigned long N = (wp + 6) / (2 * (unsigned long)L) + 1;

    RatInterval s = t.square().round_out(wp);
    RatInterval acc = RatInterval::point(Rat(0));
    for (unsigned long k = N; k-- > 0;) {
        Rat c(1, 2 * (long)k + 1);
        if (alternating && k % 2 == 1) c = -c;
        acc = (acc * s + c).round_out(wp);
    }
    // mag^{2N+1} <= 2^{-L(2N+1)} and (4/3)/(2N+1) <= 1, so 2^{-L(2N+1)}
    // bounds the tail outright.
    Rat r = pow2(-(long)(L * (2 * N + 1)));
    return t * acc + RatInterval(-r, r);
}

Rat isqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return Rat(r);
}

// Lower bound for sqrt(a), a >= 0.
Rat sqrt_lower(const Rat& a, unsigned prec) {
    if (sgn(a) == 0) return Rat(0);
    Rat scaled = a * pow2(2 * (long)prec);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return isqrt_floor(fl) * pow2(-(long)prec);
}

// Upper bound for sqrt(b), b >= 0.
Rat sqrt_upper(const Rat& b, unsigned prec) {
    if (sgn(b) == 0) return Rat(0);
    Rat scaled = b * pow2(2 * (long)prec);
    Int cl;
    mpz_cdiv_q(cl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return (isqrt_floor(cl) + 1) * pow2(-(long)prec);
}

// log of a single positive rational point.
RatInterval log_point(const Rat& a, unsigned prec) {
    unsigned wp = prec + kGuardBits;
    long e = floor_log2_abs(a);  // 2^e <= a < 2^{e+1}
    Rat m = a * pow2(-e);        // in [1, 2)
    if (3 * m > 4) {             // shift to (2/3, 4/3]
        m /= 2;
        e += 1;
    }
    Rat t = (m - 1) / (m + 1);  // |t| <= 1/5
    RatInterval tiv = RatInterval::point(t).round_out(wp);
    RatInterval res = odd_series(tiv, /*alternating=*/false, wp) * Rat(2);
    if (e != 0) res = res + log2_enclosure(wp) * Rat(e);
    return res.round_out(prec);
}

// arctan of a single rational point, via argument reduction to |t| <= 1/2.
RatInterval atan_point(const Rat& x, unsigned prec) {
    unsigned wp = prec + kGuardBits;
    Rat ax = rat_abs(x);
    if (2 * ax <= 1) {
        return odd_series(RatInterval::point(x).round_out(wp), true, wp).round_out(prec);
    }
    if (ax <= 1) {
        // atan(x) = 2 atan(x / (1 + sqrt(1 + x^2))); the new argument has
        // magnitude <= 1/(1+sqrt 2) < 1/2.
        RatInterval s = sqrt_enclosure(RatInterval::point(1 + x * x), wp);
        RatInterval t = RatInterval::point(x) / (s + Rat(1));
        return (odd_series(t, true, wp) * Rat(2)).round_out(prec);
    }
    // atan(x) = sign(x) pi/2 - atan(1/x)
    RatInterval half_pi = pi_enclosure(wp) * Rat(1, 2);
    RatInterval inner = atan_point(1 / x, wp);
    RatInterval res = (sgn(x) > 0 ? half_pi : -half_pi) - inner;
    return res.round_out(prec);
}

}  // namespace

RatInterval pi_enclosure(unsigned prec) {
    static std::map<unsigned, RatInterval> cache;
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
    unsigned wp = prec + kGuardBits;
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    RatInterval a = odd_series(RatInterval::point(Rat(1, 5)), true, wp);
    RatInterval b = odd_series(RatInterval::point(Rat(1, 239)), true, wp);
    RatInterval res = (a * Rat(16) - b * Rat(4)).round_out(prec);
    cache.emplace(prec, res);
    return res;
}

RatInterval log2_enclosure(unsigned prec) {
    static std::map<unsigned, RatInterval> cache;
    auto it = cache.find(prec);
    if (it != cache.end()) return it->second;
    unsigned wp = prec + kGuardBits;
    // log 2 = 2 artanh(1/3)
    RatInterval res =
        (odd_series(RatInterval::point(Rat(1, 3)), false, wp) * Rat(2)).round_out(prec);
    cache.emplace(prec, res);
    return res;
}

RatInterval sqrt_enclosure(const RatInterval& x, unsigned prec) {
    if (sgn(x.lo()) < 0) throw std::domain_error("sqrt_enclosure: negative interval endpoint");
    return RatInterval(sqrt_lower(x.lo(), prec), sqrt_upper(x.hi(), prec));
}

RatInterval log_enclosure(const RatInterval& x, unsigned prec) {
    if (sgn(x.lo()) <= 0) throw std::domain_error("log_enclosure: interval not strictly positive");
    if (x.is_point()) return log_point(x.lo(), prec);
    // log is increasing: endpoint enclosures hull to an enclosure.
    return RatInterval::hull(log_point(x.lo(), prec), log_point(x.hi(), prec));
}

RatInterval atan_enclosure(const RatInterval& x, unsigned prec) {
    if (x.is_point()) return atan_point(x.lo(), prec);
    return RatInterval::hull(atan_point(x.lo(), prec), atan_point(x.hi(), prec));
}

RatInterval atan2_enclosure(const RatInterval& y, const RatInterval& x, unsigned prec) {
    unsigned wp = prec + 8;
    if (y.is_point() && sgn(y.lo()) == 0) {
        if (x.sign() > 0) return RatInterval::point(Rat(0));
        if (x.sign() < 0) return pi_enclosure(prec);
        throw std::domain_error("atan2_enclosure: box contains the origin");
    }
    if (x.sign() > 0) return atan_enclosure(y / x, prec);
    if (x.sign() < 0) {
        int ys = y.sign();
        if (ys == 0)
            throw std::domain_error("atan2_enclosure: box straddles the branch cut");
        RatInterval base = atan_enclosure(y / x, wp);
        RatInterval pi = pi_enclosure(wp);
        return ((ys > 0 ? base + pi : base - pi)).round_out(prec);
    }
    // x straddles 0: usable only when y is sign-definite.
    int ys = y.sign();
    if (ys == 0) throw std::domain_error("atan2_enclosure: box contains the origin");
    RatInterval half_pi = pi_enclosure(wp) * Rat(1, 2);
    RatInterval base = atan_enclosure(x / y, wp);
    RatInterval res = (ys > 0 ? half_pi - base : -half_pi - base);
    return res.round_out(prec);
}

ComplexBox complex_log_enclosure(const ComplexBox& z, unsigned prec) {
    RatInterval n = z.abs2();
    if (n.sign() <= 0) throw std::domain_error("complex_log_enclosure: box not excluding 0");
    unsigned wp = prec + 8;
    RatInterval re = (log_enclosure(n, wp) * Rat(1, 2)).round_out(prec);
    RatInterval im = atan2_enclosure(z.im(), z.re(), prec);
    return ComplexBox(re, im);
}

}  // namespace flagsolve
