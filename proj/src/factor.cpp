#include "flagsolve/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "flagsolve/errors.hpp"

namespace flagsolve {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[Y] with a machine-word prime.
// ---------------------------------------------------------------------------

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using MPoly = std::vector<u64>;  // low-to-high, trimmed

u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1u) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1u;
    }
    return r;
}
u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

void mp_trim(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int mp_deg(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

MPoly mp_mul(const MPoly& a, const MPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    MPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
    }
    mp_trim(c);
    return c;
}

MPoly mp_sub(const MPoly& a, const MPoly& b, u64 p) {
    MPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = subm(c[i], b[i], p);
    mp_trim(c);
    return c;
}

MPoly mp_scale(const MPoly& a, u64 s, u64 p) {
    MPoly c(a);
    for (auto& x : c) x = mulm(x, s, p);
    mp_trim(c);
    return c;
}

void mp_rem_inplace(MPoly& a, const MPoly& b, u64 p) {
    const int db = mp_deg(b);
    const u64 inv = invm(b.back(), p);
    while (mp_deg(a) >= db) {
        int k = mp_deg(a);
        u64 q = mulm(a.back(), inv, p);
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(k - db + j)] =
                subm(a[static_cast<std::size_t>(k - db + j)], mulm(q, b[static_cast<std::size_t>(j)], p), p);
        mp_trim(a);
    }
}

MPoly mp_rem(MPoly a, const MPoly& b, u64 p) {
    mp_rem_inplace(a, b, p);
    return a;
}

MPoly mp_monic(const MPoly& a, u64 p) {
    if (a.empty()) return a;
    return mp_scale(a, invm(a.back(), p), p);
}

MPoly mp_gcd(MPoly a, MPoly b, u64 p) {
    while (!b.empty()) {
        mp_rem_inplace(a, b, p);
        std::swap(a, b);
    }
    return mp_monic(a, p);
}

MPoly mp_deriv(const MPoly& a, u64 p) {
    if (a.size() <= 1) return {};
    MPoly c(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) c[i - 1] = mulm(a[i], i % p, p);
    mp_trim(c);
    return c;
}

MPoly mp_mulmod(const MPoly& a, const MPoly& b, const MPoly& f, u64 p) {
    return mp_rem(mp_mul(a, b, p), f, p);
}

MPoly mp_powmod(MPoly base, const Int& e, const MPoly& f, u64 p) {
    MPoly r{1};
    base = mp_rem(std::move(base), f, p);
    const std::size_t bits = bit_size(e);
    for (std::size_t i = bits; i-- > 0;) {
        r = mp_mulmod(r, r, f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_mulmod(r, base, f, p);
    }
    return r;
}

// Extended Euclid: returns (g, s, t) monic g with s*a + t*b = g.
void mp_extgcd(const MPoly& a, const MPoly& b, u64 p, MPoly& g, MPoly& s, MPoly& t) {
    MPoly r0 = a, r1 = b;
    MPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // Compute quotient of r0 by r1.
        MPoly q;
        {
            MPoly rem = r0;
            const int db = mp_deg(r1);
            const u64 inv = invm(r1.back(), p);
            q.assign(rem.size() > r1.size() - 1 ? rem.size() - r1.size() + 1 : 1, 0);
            while (mp_deg(rem) >= db) {
                int k = mp_deg(rem);
                u64 qc = mulm(rem.back(), inv, p);
                q[static_cast<std::size_t>(k - db)] = qc;
                for (int j = 0; j <= db; ++j)
                    rem[static_cast<std::size_t>(k - db + j)] = subm(
                        rem[static_cast<std::size_t>(k - db + j)],
                        mulm(qc, r1[static_cast<std::size_t>(j)], p), p);
                mp_trim(rem);
            }
            mp_trim(q);
            r0 = std::move(r1);
            r1 = std::move(rem);
        }
        MPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        MPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 inv = invm(r0.back(), p);
    g = mp_scale(r0, inv, p);
    s = mp_scale(s0, inv, p);
    t = mp_scale(t0, inv, p);
}

// Deterministic xorshift for the equal-degree split.
struct SplitRng {
    u64 state = 0x106689d45497fdb5ULL;
    u64 next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
};

// Equal-degree factorization: f monic squarefree, all irreducible factors of
// degree d.  Appends the factors to out.
void mp_edf(const MPoly& f, int d, u64 p, SplitRng& rng, std::vector<MPoly>& out) {
    if (mp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    const Int exponent = (int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        MPoly a(static_cast<std::size_t>(mp_deg(f)), 0);
        for (auto& x : a) x = rng.next() % p;
        mp_trim(a);
        if (mp_deg(a) < 1) continue;
        MPoly b = mp_powmod(a, exponent, f, p);
        if (b.empty()) continue;
        b[0] = subm(b[0], 1, p);
        mp_trim(b);
        MPoly g = mp_gcd(b, f, p);
        if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
            mp_edf(g, d, p, rng, out);
            MPoly h = f;
            // h = f / g exactly; compute via repeated subtraction style division.
            {
                MPoly quo;
                MPoly rem = f;
                const int db = mp_deg(g);
                const u64 inv = invm(g.back(), p);
                quo.assign(rem.size() - g.size() + 1, 0);
                while (mp_deg(rem) >= db) {
                    int k = mp_deg(rem);
                    u64 qc = mulm(rem.back(), inv, p);
                    quo[static_cast<std::size_t>(k - db)] = qc;
                    for (int j = 0; j <= db; ++j)
                        rem[static_cast<std::size_t>(k - db + j)] = subm(
                            rem[static_cast<std::size_t>(k - db + j)],
                            mulm(qc, g[static_cast<std::size_t>(j)], p), p);
                    mp_trim(rem);
                }
                h = std::move(quo);
            }
            mp_edf(h, d, p, rng, out);
            return;
        }
    }
}

// Full factorization of a monic squarefree polynomial mod p.
std::vector<MPoly> mp_factor_squarefree(MPoly f, u64 p) {
    std::vector<MPoly> out;
    SplitRng rng;
    MPoly x{0, 1};
    MPoly h = x;  // X^(p^d) mod f as d advances
    for (int d = 1; 2 * d <= mp_deg(f); ++d) {
        h = mp_powmod(std::move(h), Int(static_cast<unsigned long>(p)), f, p);
        MPoly hx = mp_sub(h, x, p);
        MPoly g = mp_gcd(hx, f, p);
        if (mp_deg(g) > 0) {
            mp_edf(g, d, p, rng, out);
            // f /= g
            MPoly rem = f;
            MPoly quo(rem.size() - g.size() + 1, 0);
            const int db = mp_deg(g);
            while (mp_deg(rem) >= db) {
                int k = mp_deg(rem);
                u64 qc = rem.back();  // g is monic
                quo[static_cast<std::size_t>(k - db)] = qc;
                for (int j = 0; j <= db; ++j)
                    rem[static_cast<std::size_t>(k - db + j)] = subm(
                        rem[static_cast<std::size_t>(k - db + j)],
                        mulm(qc, g[static_cast<std::size_t>(j)], p), p);
                mp_trim(rem);
            }
            f = std::move(quo);
            h = mp_rem(std::move(h), f, p);
        }
    }
    if (mp_deg(f) > 0) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting in (Z/m)[Y] with arbitrary-precision m.
// ---------------------------------------------------------------------------

using ZP = std::vector<Int>;  // low-to-high, trimmed, coefficients in [0, m)

void zp_trim(ZP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int zp_deg(const ZP& f) { return static_cast<int>(f.size()) - 1; }

ZP zp_reduce(const ZP& f, const Int& m) {
    ZP c(f);
    for (auto& x : c) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    zp_trim(c);
    return c;
}

ZP zp_mul(const ZP& a, const ZP& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZP c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return zp_reduce(c, m);
}

ZP zp_add(const ZP& a, const ZP& b, const Int& m) {
    ZP c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return zp_reduce(c, m);
}

ZP zp_sub(const ZP& a, const ZP& b, const Int& m) {
    ZP c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return zp_reduce(c, m);
}

/// Division by a monic divisor: returns {quotient, remainder}.
std::pair<ZP, ZP> zp_divmod_monic(const ZP& a, const ZP& b, const Int& m) {
    ZP rem = a;
    const int db = zp_deg(b);
    if (zp_deg(rem) < db) return {{}, rem};
    ZP quo(static_cast<std::size_t>(zp_deg(rem) - db) + 1, Int(0));
    while (zp_deg(rem) >= db) {
        int k = zp_deg(rem);
        Int qc = rem.back();
        quo[static_cast<std::size_t>(k - db)] = qc;
        for (int j = 0; j <= db; ++j) {
            std::size_t idx = static_cast<std::size_t>(k - db + j);
            rem[idx] -= qc * b[static_cast<std::size_t>(j)];
            mpz_fdiv_r(rem[idx].get_mpz_t(), rem[idx].get_mpz_t(), m.get_mpz_t());
        }
        zp_trim(rem);
    }
    return {zp_reduce(quo, m), rem};
}

/// One quadratic Hensel step: given F = g*h (mod m), s*g + t*h = 1 (mod m)
/// with h monic, updates g, h, s, t to the same congruences mod m^2.
void hensel_step(const ZP& F, ZP& g, ZP& h, ZP& s, ZP& t, const Int& m) {
    const Int m2 = m * m;
    ZP e = zp_sub(zp_reduce(F, m2), zp_mul(g, h, m2), m2);
    auto [q, r] = zp_divmod_monic(zp_mul(s, e, m2), h, m2);
    ZP gs = zp_add(zp_add(g, zp_mul(t, e, m2), m2), zp_mul(q, g, m2), m2);
    ZP hs = zp_add(h, r, m2);
    ZP b = zp_sub(zp_add(zp_mul(s, gs, m2), zp_mul(t, hs, m2), m2), ZP{Int(1)}, m2);
    auto [c, d] = zp_divmod_monic(zp_mul(s, b, m2), hs, m2);
    ZP ss = zp_sub(s, d, m2);
    ZP ts = zp_sub(zp_sub(t, zp_mul(t, b, m2), m2), zp_mul(c, gs, m2), m2);
    g = std::move(gs);
    h = std::move(hs);
    s = std::move(ss);
    t = std::move(ts);
}

ZP zp_from_mp(const MPoly& f) {
    ZP c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = Int(static_cast<unsigned long>(f[i]));
    return c;
}

/// Multifactor Hensel lifting: F over Z with F = lc(F) * prod(modular) mod p;
/// returns lifts of the modular factors mod target (the first carries the
/// leading coefficient, the rest are monic).
std::vector<ZP> hensel_tree(const ZP& F, const std::vector<MPoly>& modular, u64 p, const Int& target) {
    if (modular.size() == 1) return {zp_reduce(F, target)};
    const std::size_t half = modular.size() / 2;
    const Int pz(static_cast<unsigned long>(p));

    MPoly left{1}, right{1};
    for (std::size_t i = 0; i < half; ++i) left = mp_mul(left, modular[i], p);
    for (std::size_t i = half; i < modular.size(); ++i) right = mp_mul(right, modular[i], p);

    // G carries lc(F) mod p, H is monic.
    u64 lcp = static_cast<u64>(mpz_fdiv_ui(F.back().get_mpz_t(), p));
    MPoly g0 = mp_scale(left, lcp, p);
    MPoly h0 = right;
    MPoly gg, s0, t0;
    mp_extgcd(g0, h0, p, gg, s0, t0);
    // gg must be 1: the two halves are coprime mod p.

    ZP g = zp_from_mp(g0), h = zp_from_mp(h0), s = zp_from_mp(s0), t = zp_from_mp(t0);
    Int m = pz;
    while (m < target) {
        hensel_step(F, g, h, s, t, m);
        m *= m;
    }
    g = zp_reduce(g, target);
    h = zp_reduce(h, target);

    std::vector<ZP> out = hensel_tree(g, {modular.begin(), modular.begin() + static_cast<long>(half)}, p, target);
    std::vector<ZP> rhs = hensel_tree(h, {modular.begin() + static_cast<long>(half), modular.end()}, p, target);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus recombination.
// ---------------------------------------------------------------------------

Int symmetric_rep(const Int& c, const Int& m) {
    Int r = c;
    if (2 * r > m) r -= m;
    return r;
}

UniPoly unipoly_from_symmetric(const ZP& f, const Int& m) {
    std::vector<Rat> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rat(symmetric_rep(f[i], m));
    return UniPoly(std::move(c));
}

constexpr u64 kPrimes[] = {1048583, 1048589, 1048601, 1048609, 1048613, 1048627,
                           1048633, 1048661, 1048681, 1048703, 1048709, 1048717,
                           1048721, 1048759, 1048783, 1048793, 1048799, 1048807};

MPoly mp_from_unipoly(const UniPoly& f, u64 p) {
    MPoly c(static_cast<std::size_t>(f.degree()) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int num = f[i].get_num();
        // f is integer-primitive, so denominators are 1.
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), p);
        c[i] = static_cast<u64>(r.get_ui());
    }
    mp_trim(c);
    return c;
}

/// Factor an integer-primitive squarefree polynomial with positive leading
/// coefficient; returns primitive irreducible factors with positive lc.
std::vector<UniPoly> factor_squarefree_primitive(UniPoly F) {
    std::vector<UniPoly> out;
    if (F.degree() <= 1) {
        out.push_back(F);
        return out;
    }

    // Pick a prime where F stays squarefree, preferring few modular factors.
    u64 best_p = 0;
    std::vector<MPoly> best_factors;
    int tried = 0;
    for (u64 p : kPrimes) {
        Int lc = F.lc().get_num();
        if (mpz_fdiv_ui(lc.get_mpz_t(), p) == 0) continue;
        MPoly fp = mp_monic(mp_from_unipoly(F, p), p);
        if (mp_deg(fp) != F.degree()) continue;
        MPoly g = mp_gcd(fp, mp_deriv(fp, p), p);
        if (mp_deg(g) != 0) continue;  // not squarefree mod p
        std::vector<MPoly> factors = mp_factor_squarefree(fp, p);
        if (factors.size() == 1) {
            out.push_back(F);  // irreducible over Z, hence over Q
            return out;
        }
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (++tried >= 4) break;
    }
    if (best_p == 0) throw ResourceError("factor_rational: no usable prime in the fixed list");

    // Landau-Mignotte style bound on factor coefficients (of lc(F)*monic factor).
    Int norm2_sq(0);
    for (const auto& c : F.coeffs()) norm2_sq += c.get_num() * c.get_num();
    Int norm2;
    mpz_sqrt(norm2.get_mpz_t(), norm2_sq.get_mpz_t());
    norm2 += 1;
    Int lcF = F.lc().get_num();
    Int bound = (norm2 + abs(lcF)) * abs(lcF);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(F.degree() + 1));
    Int target(static_cast<unsigned long>(best_p));
    while (target < 2 * bound + 1) target *= static_cast<unsigned long>(best_p);

    // Lift, then normalize every lifted factor to monic mod target.
    ZP Fz(F.coeffs().size());
    for (std::size_t i = 0; i < Fz.size(); ++i) {
        Fz[i] = F[i].get_num();
        mpz_fdiv_r(Fz[i].get_mpz_t(), Fz[i].get_mpz_t(), target.get_mpz_t());
    }
    std::vector<ZP> lifted = hensel_tree(Fz, best_factors, best_p, target);
    for (auto& f : lifted) {
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), target.get_mpz_t()) == 0)
            throw ResourceError("factor_rational: non-invertible leading coefficient in lift");
        for (auto& c : f) {
            c *= inv;
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), target.get_mpz_t());
        }
    }

    // Try subsets of the modular factors, small cardinality first.
    std::vector<int> live(lifted.size());
    std::iota(live.begin(), live.end(), 0);
    long candidates = 0;
    const long kBudget = 1L << 22;

    auto product_candidate = [&](const std::vector<int>& subset) {
        ZP acc{F.lc().get_num()};
        mpz_fdiv_r(acc[0].get_mpz_t(), acc[0].get_mpz_t(), target.get_mpz_t());
        for (int idx : subset) acc = zp_mul(acc, lifted[static_cast<std::size_t>(idx)], target);
        return integer_primitive(unipoly_from_symmetric(acc, target)).second;
    };

    // Advance pick to the next size-s combination out of n indices.
    auto next_combination = [](std::vector<std::size_t>& pick, std::size_t n) {
        const std::size_t s = pick.size();
        for (std::size_t i = s; i-- > 0;) {
            if (pick[i] != i + n - s) {
                ++pick[i];
                for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    std::size_t s = 1;
    while (2 * s <= live.size()) {
        std::vector<std::size_t> pick(s);
        std::iota(pick.begin(), pick.end(), 0);
        bool extracted = false;
        do {
            if (++candidates > kBudget)
                throw ResourceError("factor_rational: recombination budget exceeded");
            std::vector<int> subset(s);
            for (std::size_t i = 0; i < s; ++i) subset[i] = live[pick[i]];
            UniPoly g = product_candidate(subset);
            if (g.degree() < 1) continue;
            auto [q, r] = divmod(F, g);
            if (!r.is_zero()) continue;
            out.push_back(g);
            F = integer_primitive(q).second;
            std::vector<int> remaining;
            for (std::size_t i = 0, j = 0; i < live.size(); ++i) {
                if (j < s && pick[j] == i) {
                    ++j;
                    continue;
                }
                remaining.push_back(live[i]);
            }
            live = std::move(remaining);
            extracted = true;
            break;
        } while (next_combination(pick, live.size()));
        if (!extracted) ++s;
    }
    if (F.degree() >= 1) out.push_back(F);
    return out;
}

bool poly_order_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        const Rat& ca = a[static_cast<std::size_t>(k)];
        const Rat& cb = b[static_cast<std::size_t>(k)];
        if (ca != cb) return ca < cb;
    }
    return false;
}

}  // namespace

RatFactorization factor_rational(const UniPoly& p) {
    RatFactorization out;
    if (p.is_zero()) {
        out.unit = Rat(0);
        return out;
    }
    out.unit = p.lc();
    if (p.degree() == 0) return out;

    for (const auto& [piece, mult] : squarefree_decomposition(p)) {
        auto [content, primitive] = integer_primitive(piece);
        out.unit *= rat_pow(content, static_cast<unsigned long>(mult));
        for (auto& irred : factor_squarefree_primitive(primitive))
            out.factors.emplace_back(std::move(irred), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_order_less(a.first, b.first); });
    return out;
}

bool is_irreducible(const UniPoly& p) {
    if (p.degree() < 1) return false;
    RatFactorization f = factor_rational(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

bool is_cyclotomic(const UniPoly& p, unsigned* order) {
    if (p.degree() < 1) return false;
    auto [content, prim] = integer_primitive(p);
    (void)content;
    const unsigned d = static_cast<unsigned>(p.degree());
    // phi(n) >= sqrt(n/2), so phi(n) = d forces n <= 2*d^2.
    for (unsigned n = 1; n <= 2 * d * d + 1; ++n) {
        unsigned phi = n, m = n;
        for (unsigned q = 2; q * q <= m; ++q) {
            if (m % q == 0) {
                phi -= phi / q;
                while (m % q == 0) m /= q;
            }
        }
        if (m > 1) phi -= phi / m;
        if (phi != d) continue;
        // Build the n-th cyclotomic polynomial: prod over d|n of (Y^d-1)^mu(n/d).
        UniPoly num{Rat(1)}, den{Rat(1)};
        for (unsigned dv = 1; dv <= n; ++dv) {
            if (n % dv != 0) continue;
            unsigned r = n / dv, mu_m = r;
            int mu = 1;
            bool squarefull = false;
            for (unsigned q = 2; q * q <= mu_m; ++q) {
                if (mu_m % q == 0) {
                    mu_m /= q;
                    if (mu_m % q == 0) {
                        squarefull = true;
                        break;
                    }
                    mu = -mu;
                }
            }
            if (squarefull) continue;
            if (mu_m > 1) mu = -mu;
            UniPoly cyc = UniPoly::monomial(dv) - UniPoly(Rat(1));
            if (mu == 1)
                num *= cyc;
            else if (mu == -1)
                den *= cyc;
        }
        if (exact_div(num, den) == prim) {
            if (order) *order = n;
            return true;
        }
    }
    return false;
}

}  // namespace flagsolve
