#include "flagsolve/classify.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "flagsolve/errors.hpp"
#include "flagsolve/realfun.hpp"
#include "flagsolve/rur.hpp"

namespace flagsolve {

namespace {

constexpr int kPairs[12][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4},
                               {3, 1}, {3, 2}, {3, 4}, {4, 1}, {4, 2}, {4, 3}};

// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2), extended on demand.
const std::vector<Rat>& bernoulli_upto(std::size_t n) {
    static std::vector<Rat> cache{Rat(1)};
    while (cache.size() <= n) {
        std::size_t m = cache.size();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rat binom(1);  // C(m+1, 0)
        Rat acc(0);
        for (std::size_t j = 0; j < m; ++j) {
            acc += binom * cache[j];
            binom = binom * Rat(long(m + 1 - j)) / Rat(long(j + 1));
        }
        cache.push_back(-acc / binom);  // binom == C(m+1, m) == m+1
    }
    return cache;
}

ComplexBox tail_box(const Rat& t) {
    return ComplexBox(RatInterval(-t, t), RatInterval(-t, t));
}

// Rational upper bound for sqrt(x), x >= 0.
Rat sqrt_upper(const Rat& x, unsigned prec) {
    if (x < Rat(0)) throw std::logic_error("sqrt_upper of a negative number");
    if (x == Rat(0)) return Rat(0);
    return sqrt_enclosure(RatInterval(x, x), prec).hi();
}

// Li_2 by the defining power series; requires |z| bounded away from 1.
ComplexBox dilog_small(const ComplexBox& z, const Rat& eps, unsigned prec) {
    Rat r = sqrt_upper(z.abs2().hi(), prec);
    if (r >= Rat(3, 4)) throw std::domain_error("power series needs |z| < 3/4");
    ComplexBox sum;
    ComplexBox pw = z;
    for (long k = 1; k <= 20000; ++k) {
        sum = (sum + pw * Rat(1, k * k)).round_out(prec);
        pw = (pw * z).round_out(prec);
        // | sum_{j>k} z^j / j^2 | <= |z^{k+1}| / ((k+1)^2 (1 - r))
        Rat pw_abs = sqrt_upper(pw.abs2().hi(), prec);
        Rat tail = pw_abs / (Rat((k + 1) * (k + 1)) * (Rat(1) - r));
        if (tail <= eps) return sum + tail_box(tail);
    }
    throw std::domain_error("power series for the dilogarithm did not converge");
}

// Li_2 via the Bernoulli series sum_n B_n u^{n+1} / (n+1)! with
// u = -log(1 - z); converges for |u| < 2 pi.
ComplexBox dilog_bernoulli(const ComplexBox& u, const Rat& eps, unsigned prec) {
    Rat u2 = u.abs2().hi();
    Rat twopi_lo = pi_enclosure(prec).lo() * Rat(2);
    Rat q = u2 / (twopi_lo * twopi_lo);
    if (q >= Rat(9, 10)) throw std::domain_error("Bernoulli series needs |u| well below 2 pi");
    Rat u_up = sqrt_upper(u2, prec);
    ComplexBox sum;
    ComplexBox upow = u;  // u^{n+1}
    Rat fact(1);          // (n+1)!
    for (long n = 0; n <= 4000; ++n) {
        fact *= Rat(n + 1);
        const Rat& b = bernoulli_upto(std::size_t(n))[std::size_t(n)];
        if (b != Rat(0)) sum = (sum + upow * (b / fact)).round_out(prec);
        upow = (upow * u).round_out(prec);
        if (n >= 2 && n % 2 == 0) {
            // |B_{2k}| <= 4 (2k)! / (2 pi)^{2k} gives a geometric tail in q
            long K = n / 2;
            Rat qpow = q;
            for (long i = 0; i < K; ++i) qpow *= q;  // q^{K+1}
            Rat tail = Rat(4) * u_up * qpow / (Rat(1) - q);
            if (tail <= eps) return sum + tail_box(tail);
        }
    }
    throw std::domain_error("Bernoulli series for the dilogarithm did not converge");
}

RatInterval bw_eval(const ComplexBox& z, const Rat& eps, unsigned prec) {
    if (z.is_exactly_real()) return RatInterval();
    ComplexBox w = ComplexBox::real_point(Rat(1)) - z;  // 1 - z
    if ((z.re().contains(Rat(0)) && z.im().contains(Rat(0))) ||
        (w.re().contains(Rat(0)) && w.im().contains(Rat(0))))
        throw std::domain_error("dilogarithm box touches a branch point; refine");
    RatInterval a2 = z.abs2();
    RatInterval w2 = w.abs2();
    RatInterval log_abs_z = log_enclosure(a2, prec) * Rat(1, 2);
    if (a2.hi() <= Rat(1, 4)) {
        ComplexBox li = dilog_small(z, eps, prec);
        RatInterval arg_w = atan2_enclosure(w.im(), w.re(), prec);
        return (li.im() + arg_w * log_abs_z).round_out(prec / 2);
    }
    if (w2.hi() <= Rat(1, 4)) return -bw_eval(w, eps, prec);
    if (a2.lo() >= Rat(4)) return -bw_eval(ComplexBox::real_point(Rat(1)) / z, eps, prec);
    if (a2.lo() >= Rat(1, 16) && w2.lo() >= Rat(1, 16) && a2.hi() <= Rat(25, 4)) {
        ComplexBox u = -complex_log_enclosure(w, prec);
        ComplexBox li = dilog_bernoulli(u, eps, prec);
        RatInterval arg_w = -u.im();  // arg(1 - z) = Im log(1 - z)
        return (li.im() + arg_w * log_abs_z).round_out(prec / 2);
    }
    throw std::domain_error("dilogarithm box straddles a reduction boundary; refine");
}

std::pair<MultiPoly, MultiPoly> complex_split(const UniPoly& p, const Ring& rxy) {
    MultiPoly x = MultiPoly::variable(rxy, 0);
    MultiPoly y = MultiPoly::variable(rxy, 1);
    MultiPoly re(rxy), im(rxy);
    MultiPoly rk = MultiPoly::constant(rxy, Rat(1));  // Re (x+iy)^k
    MultiPoly ik(rxy);                                // Im (x+iy)^k
    const std::vector<Rat>& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != Rat(0)) {
            re = re + rk * c[k];
            im = im + ik * c[k];
        }
        MultiPoly rn = rk * x - ik * y;
        ik = rk * y + ik * x;
        rk = rn;
    }
    return {re, im};
}

// Match one real subsystem solution (x(eta), y(eta)) to the unique isolated
// root of the component eliminant it equals.
std::size_t match_root(AlgebraicRoot& gr, const UniPoly& xp, const UniPoly& yp,
                       const std::vector<AlgebraicRoot>& roots) {
    Rat bound(1, 16);
    for (int iter = 0; iter < 64; ++iter) {
        ComplexBox xb = gr.evaluate(xp, bound);
        ComplexBox yb = gr.evaluate(yp, bound);
        ComplexBox gamma(xb.re(), yb.re());
        std::size_t hit = std::size_t(-1);
        int count = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (!roots[i].box().disjoint(gamma)) {
                hit = i;
                ++count;
            }
        }
        if (count == 1) return hit;
        if (count == 0)
            throw std::logic_error("a CR subsystem solution matched no root of the eliminant");
        bound = bound / Rat(64);
    }
    throw std::logic_error("could not separate a CR subsystem solution among the roots");
}

}  // namespace

std::size_t component_tets(const ComponentSolutions& comp) {
    if (comp.coords.size() % 12 != 0)
        throw std::invalid_argument("component coordinate vector is not 12 values per tetrahedron");
    return comp.coords.size() / 12;
}

std::size_t coord_index(int tet, int i, int j) {
    for (std::size_t k = 0; k < 12; ++k)
        if (kPairs[k][0] == i && kPairs[k][1] == j) return 12 * std::size_t(tet) + k;
    throw std::invalid_argument("coordinate pair out of range");
}

std::vector<bool> classify_real(const UniPoly& eliminant,
                                const std::vector<AlgebraicRoot>& roots) {
    std::vector<bool> flags;
    long found = 0;
    for (const AlgebraicRoot& r : roots) {
        flags.push_back(r.is_real());
        if (r.is_real()) ++found;
    }
    if (found != count_real_roots(eliminant))
        throw std::logic_error("real-root count mismatch between isolation and the Sturm count");
    return flags;
}

bool classify_hyperbolic(const ComponentSolutions& comp) {
    std::size_t n = component_tets(comp);
    for (std::size_t t = 0; t < n; ++t) {
        const NumberFieldElem& a = comp.coords[coord_index(int(t), 1, 2)];
        if (comp.coords[coord_index(int(t), 2, 1)] != a) return false;
        if (comp.coords[coord_index(int(t), 3, 4)] != a) return false;
        if (comp.coords[coord_index(int(t), 4, 3)] != a) return false;
    }
    return true;
}

CrResult classify_cr(const ComponentSolutions& comp, std::vector<AlgebraicRoot>& roots,
                     const GroebnerBudget& budget) {
    std::size_t n = component_tets(comp);
    CrResult res;
    res.ring = Ring::degrevlex({"x", "y"});
    res.cr_root.assign(roots.size(), false);
    NumberField field(comp.eliminant);

    // A face whose triple ratio is -1 degenerates the whole component: the
    // eliminant is irreducible, so a field element either vanishes at every
    // root or at none.
    for (std::size_t t = 0; t < n && !res.degenerate; ++t) {
        for (int d = 1; d <= 4; ++d) {
            NumberFieldElem prod = field.one();
            for (int a = 1; a <= 4; ++a)
                if (a != d) prod = prod * comp.coords[coord_index(int(t), a, d)];
            if (prod == field.one()) {
                res.degenerate = true;
                break;
            }
        }
    }

    auto split = [&](const UniPoly& p) { return complex_split(p, res.ring); };
    auto [fre, fim] = split(comp.eliminant);
    res.equations.push_back(fre);
    res.equations.push_back(fim);
    static constexpr int kOpposite[3][4] = {{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}};
    for (std::size_t t = 0; t < n; ++t) {
        for (const auto& e : kOpposite) {
            int i = e[0], j = e[1], k = e[2], l = e[3];
            const NumberFieldElem p1 =
                comp.coords[coord_index(int(t), i, j)] * comp.coords[coord_index(int(t), j, i)];
            const NumberFieldElem p2 =
                comp.coords[coord_index(int(t), k, l)] * comp.coords[coord_index(int(t), l, k)];
            auto [re1, im1] = split(p1.value());
            auto [re2, im2] = split(p2.value());
            res.equations.push_back(re1 - re2);
            res.equations.push_back(im1 + im2);
        }
    }
    if (res.degenerate) return res;

    std::vector<MultiPoly> gb = groebner_basis(res.equations, budget);
    if (gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero()) return res;
    RurResult rur = rational_univariate_representation(gb, budget);
    std::size_t yi = 0;
    std::size_t xi = 0;
    for (std::size_t i = 0; i < rur.variables.size(); ++i) {
        if (rur.variables[i] == "x") xi = i;
        if (rur.variables[i] == "y") yi = i;
    }
    for (const RurComponent& c : rur.components) {
        // y == 0 mod an irreducible eliminant forces y == 0 at every root of
        // the subsystem component: those are the real solutions, not CR.
        if (c.coordinates[yi].is_zero()) continue;
        std::vector<AlgebraicRoot> groots = isolate_roots(c.eliminant);
        for (AlgebraicRoot& gr : groots) {
            if (!gr.is_real()) continue;
            res.cr_root[match_root(gr, c.coordinates[xi], c.coordinates[yi], roots)] = true;
        }
    }
    return res;
}

RatInterval bloch_wigner(const ComplexBox& z, const Rat& target_width) {
    if (target_width <= Rat(0)) throw std::invalid_argument("target width must be positive");
    if (z.is_exactly_real()) return RatInterval();
    Rat eps = target_width * Rat(1, 8);
    std::string last;
    for (unsigned prec = 96; prec <= 12288; prec *= 2) {
        try {
            RatInterval r = bw_eval(z, eps, prec);
            if (r.width() <= target_width) return r;
        } catch (const std::domain_error& e) {
            last = e.what();
        }
    }
    if (last.empty()) last = "dilogarithm enclosure is wider than requested; refine the box";
    throw std::domain_error(last);
}

RatInterval solution_volume(const ComponentSolutions& comp, AlgebraicRoot& root,
                            const Rat& target_width) {
    std::size_t n = component_tets(comp);
    if (n == 0) return RatInterval();
    if (target_width <= Rat(0)) throw std::invalid_argument("target width must be positive");
    static constexpr int kSurvivors[4][2] = {{1, 2}, {2, 1}, {3, 4}, {4, 3}};
    Rat per = target_width / Rat(long(8 * n));
    Rat bound = per / Rat(8);
    for (int attempt = 0; attempt < 12; ++attempt) {
        try {
            RatInterval total;
            for (std::size_t t = 0; t < n; ++t) {
                for (const auto& s : kSurvivors) {
                    const UniPoly& vp = comp.coords[coord_index(int(t), s[0], s[1])].value();
                    ComplexBox zb = root.evaluate(vp, bound);
                    total = total + bloch_wigner(zb, per);
                }
            }
            return total * Rat(1, 4);
        } catch (const std::domain_error&) {
            bound = bound / Rat(64);
        }
    }
    throw ResourceError("volume certification did not converge while refining the root");
}

bool certify_form_preservation(const std::vector<FieldMatrix3>& generators,
                               const FieldMatrix3& form, AlgebraicRoot& root,
                               const Rat& tolerance) {
    if (tolerance <= Rat(0)) throw std::invalid_argument("tolerance must be positive");
    Rat bound = tolerance / Rat(1024);
    using BoxMat = std::array<std::array<ComplexBox, 3>, 3>;
    auto eval = [&](const FieldMatrix3& m) {
        BoxMat r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = root.evaluate(m.at(i, j).value(), bound);
        return r;
    };
    BoxMat J = eval(form);
    int ra = -1, rb = -1;
    Rat best(0);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Rat lo = J[i][j].abs2().lo();
            if (lo > best) {
                best = lo;
                ra = i;
                rb = j;
            }
        }
    }
    if (ra < 0) return false;  // no provably nonzero reference entry
    auto within = [&](const RatInterval& iv) {
        return iv.lo() >= -tolerance && iv.hi() <= tolerance;
    };
    for (const FieldMatrix3& g : generators) {
        BoxMat G = eval(g);
        BoxMat H;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                ComplexBox acc;
                for (int p = 0; p < 3; ++p)
                    for (int q = 0; q < 3; ++q) acc = acc + G[p][i].conj() * J[p][q] * G[q][j];
                H[i][j] = acc;
            }
        }
        ComplexBox mu = H[ra][rb] / J[ra][rb];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                ComplexBox defect = H[i][j] - mu * J[i][j];
                if (!within(defect.re()) || !within(defect.im())) return false;
            }
        }
    }
    return true;
}

ComponentClassification classify_component(const ComponentSolutions& comp,
                                           const Rat& volume_width,
                                           const GroebnerBudget& budget) {
    ComponentClassification out;
    out.roots = isolate_roots(comp.eliminant);
    if (long(out.roots.size()) != long(comp.eliminant.degree()))
        throw std::logic_error("eliminant is not squarefree: root count disagrees with degree");
    std::vector<bool> real_flags = classify_real(comp.eliminant, out.roots);
    bool hyperbolic = classify_hyperbolic(comp);
    CrResult cr = classify_cr(comp, out.roots, budget);
    out.flags.resize(out.roots.size());
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
        out.flags[i].is_real = real_flags[i];
        out.flags[i].is_hyperbolic = hyperbolic;
        out.flags[i].is_cr = cr.cr_root[i];
    }
    for (AlgebraicRoot& r : out.roots) out.volumes.push_back(solution_volume(comp, r, volume_width));
    return out;
}

}  // namespace flagsolve
