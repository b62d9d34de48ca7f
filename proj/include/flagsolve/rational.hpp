#pragma once

/*
 * Thin helpers around GMP's mpz_class / mpq_class.
 *
 * Everything downstream (polynomials, intervals, number fields) works with
 * exact rationals.  The only "lossy" operation in this file is directed
 * rounding of a rational to a dyadic of bounded denominator, which interval
 * arithmetic uses to keep endpoint sizes under control; rounding is always
 * outward, so enclosures stay valid.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagsolve {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(num.get_den_mpz_t(), base.get_den_mpz_t(), e);
    num.canonicalize();
    return num;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow2(long e) {
    Rat r(1);
    if (e >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
    return r;
}

/// Number of bits in |n| (0 for n == 0).
inline std::size_t bit_size(const Int& n) {
    return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline std::size_t bit_size(const Rat& q) {
    return bit_size(Int(q.get_num())) + bit_size(Int(q.get_den()));
}

/// Largest dyadic k/2^prec that is <= q.
inline Rat dyadic_floor(const Rat& q, unsigned prec) {
    Int k;
    Rat scaled = q * pow2(static_cast<long>(prec));
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return Rat(k) * pow2(-static_cast<long>(prec));
}

/// Smallest dyadic k/2^prec that is >= q.
inline Rat dyadic_ceil(const Rat& q, unsigned prec) {
    Int k;
    Rat scaled = q * pow2(static_cast<long>(prec));
    mpz_cdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return Rat(k) * pow2(-static_cast<long>(prec));
}

/// floor(log2 |q|); requires q != 0.  Exact.
inline long floor_log2_abs(const Rat& q) {
    if (q == 0) throw std::invalid_argument("floor_log2_abs: zero argument");
    long nb = static_cast<long>(bit_size(Int(q.get_num())));
    long db = static_cast<long>(bit_size(Int(q.get_den())));
    // 2^(nb-1) <= |num| < 2^nb, so the true value is nb-db-1 or nb-db.
    long guess = nb - db - 1;
    return rat_abs(q) >= pow2(guess + 1) ? guess + 1 : guess;
}

/// Parse "p/q" or "p" (optional sign) into a canonical rational.
inline Rat rat_parse(const std::string& text) {
    Rat q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace flagsolve
