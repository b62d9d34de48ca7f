#include "flagsolve/roots.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>

#include "flagsolve/errors.hpp"

namespace flagsolve {

namespace {

// Rescale to primitive integer coefficients by a positive rational, so the
// sign pattern on the real line is unchanged (integer_primitive alone would
// flip the sign when the leading coefficient is negative).
UniPoly positive_primitive(const UniPoly& p) {
    if (p.is_zero()) return p;
    auto [c, q] = integer_primitive(p);
    return sgn(c) < 0 ? -q : q;
}

UniPoly squarefree_int(const UniPoly& p) { return positive_primitive(squarefree_part(p)); }

// Exact evaluation of p at x + iy.
std::pair<Rat, Rat> complex_eval(const UniPoly& p, const Rat& x, const Rat& y) {
    Rat re(0), im(0);
    for (int k = p.degree(); k >= 0; --k) {
        Rat nre = re * x - im * y + p[k];
        Rat nim = re * y + im * x;
        re = std::move(nre);
        im = std::move(nim);
    }
    return {re, im};
}

struct EdgePolys {
    UniPoly A, B;  // p(alpha t + beta) = A(t) + i B(t)
};

// Real and imaginary parts of p(alpha t + beta) for alpha, beta in Q(i).
EdgePolys compose_affine(const UniPoly& p, const Rat& are, const Rat& aim, const Rat& bre,
                         const Rat& bim) {
    UniPoly lre = UniPoly::monomial(1, are) + UniPoly(bre);
    UniPoly lim = UniPoly::monomial(1, aim) + UniPoly(bim);
    UniPoly re, im;
    for (int k = p.degree(); k >= 0; --k) {
        UniPoly nre = re * lre - im * lim + UniPoly(p[k]);
        UniPoly nim = re * lim + im * lre;
        re = std::move(nre);
        im = std::move(nim);
    }
    return {re, im};
}

// Cauchy index of B/A over [t0, t1] via the generalized Sturm chain;
// requires A(t0) != 0 and A(t1) != 0 (the caller checks corners).
int cauchy_index(const UniPoly& A, const UniPoly& B, const Rat& t0, const Rat& t1) {
    std::vector<UniPoly> chain = sturm_chain(A, B);
    return sign_variations(chain, t0) - sign_variations(chain, t1);
}

// Exact number of roots of q strictly inside [a,b] x [c,d], via the winding
// number of q(boundary) around 0.  Returns nullopt when the boundary is
// unusable: a root lies on it, a corner value is purely imaginary, or an edge
// image degenerates onto the imaginary axis.
std::optional<int> winding_count(const UniPoly& q, const Rat& a, const Rat& b, const Rat& c,
                                 const Rat& d) {
    const std::pair<Rat, Rat> corners[4] = {{a, c}, {b, c}, {b, d}, {a, d}};
    for (const auto& [x, y] : corners) {
        auto [re, im] = complex_eval(q, x, y);
        if (re == 0) return std::nullopt;  // covers corner roots too
    }

    struct Edge {
        EdgePolys e;
        Rat t0, t1;
        int orient;  // +1 with the ccw boundary, -1 against
    };
    Edge edges[4] = {
        {compose_affine(q, Rat(1), Rat(0), Rat(0), c), a, b, +1},  // bottom
        {compose_affine(q, Rat(0), Rat(1), b, Rat(0)), c, d, +1},  // right
        {compose_affine(q, Rat(1), Rat(0), Rat(0), d), a, b, -1},  // top
        {compose_affine(q, Rat(0), Rat(1), a, Rat(0)), c, d, -1},  // left
    };

    long sum = 0;
    for (const Edge& e : edges) {
        if (e.e.A.is_zero()) return std::nullopt;
        // Roots of q on the edge are common real zeros of A and B.
        if (!e.e.B.is_zero()) {
            UniPoly g = poly_gcd(e.e.A, e.e.B);
            if (g.degree() >= 1 && count_real_roots_in(g, RatInterval(e.t0, e.t1)) > 0)
                return std::nullopt;
        } else {
            if (count_real_roots_in(e.e.A, RatInterval(e.t0, e.t1)) > 0) return std::nullopt;
        }
        sum += e.orient * cauchy_index(e.e.A, e.e.B, e.t0, e.t1);
    }
    if (sum % 2 != 0) return std::nullopt;
    long n = -sum / 2;
    assert(n >= 0);
    return static_cast<int>(n);
}

// Split-point candidates for (lo, hi), center-first, guaranteed to exceed the
// number of bad lines (roots on the line or degenerate corner values).
std::vector<Rat> split_candidates(const Rat& lo, const Rat& hi, int degree) {
    int den = 4 * degree + 17;
    std::vector<int> js;
    for (int j = 1; j < den; ++j) js.push_back(j);
    std::sort(js.begin(), js.end(), [den](int x, int y) {
        return rat_abs(Rat(x, den) - Rat(1, 2)) < rat_abs(Rat(y, den) - Rat(1, 2));
    });
    std::vector<Rat> out;
    out.reserve(js.size());
    for (int j : js) out.push_back(lo + (hi - lo) * Rat(j, den));
    return out;
}

// Bisect a real sign-change interval once; collapses to a point if the
// midpoint is an exact root.
RatInterval real_bisect_once(const UniPoly& q, const RatInterval& iv) {
    if (iv.is_point()) return iv;
    Rat m = iv.mid();
    int sm = sgn(q.eval(m));
    if (sm == 0) return RatInterval::point(m);
    int slo = sgn(q.eval(iv.lo()));
    assert(slo != 0);
    return sm == slo ? RatInterval(m, iv.hi()) : RatInterval(iv.lo(), m);
}

RatInterval real_refine(const UniPoly& q, RatInterval iv, const Rat& bound) {
    while (!iv.is_point() && iv.width() > bound) iv = real_bisect_once(q, iv);
    return iv;
}

// ----- upper-half-plane isolation driver ---------------------------------

struct Region {
    Rat a, b, c, d;  // c == 0 means "roots with 0 < im <= d"; boundary clean
    int count;
};

class UpperIsolator {
public:
    UpperIsolator(UniPoly q, std::vector<RatInterval> reals)
        : q_(std::move(q)), deg_(q_.degree()), reals_(std::move(reals)) {}

    // Isolating boxes (positive area, strictly above the axis) for the roots
    // with positive imaginary part.
    std::vector<ComplexBox> run(int upper_count) {
        std::vector<ComplexBox> out;
        if (upper_count == 0) return out;
        Rat B(root_modulus_bound(q_));
        std::vector<Region> stack{{-B, B, Rat(0), B, upper_count}};
        long steps = 0;
        while (!stack.empty()) {
            if (++steps > 20000L * (deg_ + 1))
                throw ResourceError("complex root isolation: subdivision budget exhausted");
            Region r = stack.back();
            stack.pop_back();
            if (r.count == 0) continue;
            if (r.count == 1) {
                out.push_back(separate_from_axis(r));
                continue;
            }
            if (r.b - r.a >= r.d - r.c)
                split_vertical(r, stack);
            else
                split_horizontal(r, stack);
        }
        return out;
    }

private:
    // Count of nonreal upper roots in an axis-touching region, via the
    // conjugate-symmetric double minus the enclosed real roots.
    std::optional<int> axis_count(const Rat& a, const Rat& b, const Rat& d) {
        auto w = winding_count(q_, a, b, -d, d);
        if (!w) return std::nullopt;
        int all = *w - count_reals_inside(a, b);
        assert(all % 2 == 0 && all >= 0);
        return all / 2;
    }

    int count_reals_inside(const Rat& a, const Rat& b) {
        int n = 0;
        for (const RatInterval& iv : reals_) {
            if (iv.hi() <= a || iv.lo() >= b) continue;
            // Split points are chosen outside every isolating interval, so
            // straddling is impossible.
            assert(a <= iv.lo() && iv.hi() <= b);
            ++n;
        }
        return n;
    }

    // Make x = m usable as a vertical split: not an exact root, and not
    // interior to any real isolating interval (such intervals are bisected
    // at m, after which m is an endpoint and the root lies strictly aside).
    bool clear_real_line(const Rat& m) {
        if (sgn(q_.eval(m)) == 0) return false;
        for (RatInterval& iv : reals_) {
            while (!iv.is_point() && iv.lo() < m && m < iv.hi()) {
                int sm = sgn(q_.eval(m));
                int slo = sgn(q_.eval(iv.lo()));
                iv = (sm == slo) ? RatInterval(m, iv.hi()) : RatInterval(iv.lo(), m);
            }
        }
        return true;
    }

    void split_vertical(const Region& r, std::vector<Region>& stack) {
        for (const Rat& m : split_candidates(r.a, r.b, deg_)) {
            std::optional<int> left;
            if (r.c == 0) {
                if (!clear_real_line(m)) continue;
                left = axis_count(r.a, m, r.d);
            } else {
                left = winding_count(q_, r.a, m, r.c, r.d);
            }
            if (!left) continue;
            int right = r.count - *left;
            assert(right >= 0);
            stack.push_back({r.a, m, r.c, r.d, *left});
            stack.push_back({m, r.b, r.c, r.d, right});
            return;
        }
        throw ResourceError("complex root isolation: no usable vertical split line");
    }

    void split_horizontal(const Region& r, std::vector<Region>& stack) {
        for (const Rat& m : split_candidates(r.c, r.d, deg_)) {
            auto upper = winding_count(q_, r.a, r.b, m, r.d);
            if (!upper) continue;
            int lower = r.count - *upper;
            assert(lower >= 0);
            stack.push_back({r.a, r.b, r.c, m, lower});
            stack.push_back({r.a, r.b, m, r.d, *upper});
            return;
        }
        throw ResourceError("complex root isolation: no usable horizontal split line");
    }

    // Push the lower edge of a count-1 region strictly above the real axis.
    ComplexBox separate_from_axis(Region r) {
        while (r.c == 0) {
            bool moved = false;
            for (const Rat& m : split_candidates(r.c, r.d, deg_)) {
                auto upper = winding_count(q_, r.a, r.b, m, r.d);
                if (!upper) continue;
                if (*upper == 1) {
                    r.c = m;
                } else {
                    assert(*upper == 0);
                    r.d = m;
                }
                moved = true;
                break;
            }
            if (!moved)
                throw ResourceError("complex root isolation: cannot separate box from axis");
        }
        return ComplexBox(RatInterval(r.a, r.b), RatInterval(r.c, r.d));
    }

    UniPoly q_;
    int deg_;
    std::vector<RatInterval> reals_;
};

// ----- refinement of an isolated nonreal box -----------------------------

// One interval-Newton contraction attempt.  The box must isolate a root and
// have a root-free boundary; both invariants are preserved.
bool newton_shrink(const UniPoly& q, ComplexBox& box) {
    long wb = floor_log2_abs(std::max(box.max_width(), pow2(-4096)));
    unsigned wp = static_cast<unsigned>(std::max(64L, -wb + 48));
    ComplexBox der = poly_eval_box(q.derivative(), box, wp);
    if (der.abs2().sign() <= 0) return false;
    Rat mre = box.re().mid(), mim = box.im().mid();
    auto [vre, vim] = complex_eval(q, mre, mim);
    ComplexBox mid = ComplexBox::point(mre, mim);
    ComplexBox val(RatInterval::point(vre).round_out(wp), RatInterval::point(vim).round_out(wp));
    ComplexBox n = mid - val / der;
    auto ire = n.re().intersect(box.re());
    auto iim = n.im().intersect(box.im());
    if (!ire || !iim) return false;  // numerically degenerate; fall back
    ComplexBox shrunk(*ire, *iim);
    if (4 * shrunk.max_width() > 3 * box.max_width()) return false;
    // Pad so the root cannot sit on the new boundary, keeping it inside the
    // old (root-free-boundary) box.
    Rat pad = shrunk.max_width() / 16 + pow2(-static_cast<long>(wp));
    RatInterval pre(shrunk.re().lo() - pad, shrunk.re().hi() + pad);
    RatInterval pim(shrunk.im().lo() - pad, shrunk.im().hi() + pad);
    box = ComplexBox(*pre.intersect(box.re()), *pim.intersect(box.im()));
    return true;
}

void winding_bisect_once(const UniPoly& q, ComplexBox& box) {
    int deg = q.degree();
    bool vertical = box.re().width() >= box.im().width();
    const RatInterval& dim = vertical ? box.re() : box.im();
    for (const Rat& m : split_candidates(dim.lo(), dim.hi(), deg)) {
        std::optional<int> first =
            vertical ? winding_count(q, box.re().lo(), m, box.im().lo(), box.im().hi())
                     : winding_count(q, box.re().lo(), box.re().hi(), box.im().lo(), m);
        if (!first) continue;
        RatInterval head(dim.lo(), m), tail(m, dim.hi());
        const RatInterval& keep = (*first == 1) ? head : tail;
        box = vertical ? ComplexBox(keep, box.im()) : ComplexBox(box.re(), keep);
        return;
    }
    throw ResourceError("root refinement: no usable split line");
}

void nonreal_refine(const UniPoly& q, ComplexBox& box, const Rat& bound) {
    long guard = 0;
    while (box.max_width() > bound) {
        if (++guard > 100000) throw ResourceError("root refinement: budget exhausted");
        if (!newton_shrink(q, box)) winding_bisect_once(q, box);
    }
}

}  // namespace

// ----- public Sturm interface --------------------------------------------

std::vector<UniPoly> sturm_chain(const UniPoly& a, const UniPoly& b) {
    std::vector<UniPoly> chain;
    chain.push_back(positive_primitive(a));
    if (chain.back().is_zero()) return chain;
    UniPoly g = positive_primitive(b);
    if (!g.is_zero()) chain.push_back(std::move(g));
    while (chain.size() >= 2) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rat& x) {
    int last = 0, var = 0;
    for (const UniPoly& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int sign_variations_at_infinity(const std::vector<UniPoly>& chain, int dir) {
    int last = 0, var = 0;
    for (const UniPoly& p : chain) {
        if (p.is_zero()) continue;
        int s = sgn(p.lc());
        if (dir < 0 && p.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int count_real_roots(const UniPoly& p) {
    UniPoly q = squarefree_int(p);
    if (q.degree() <= 0) return 0;
    auto chain = sturm_chain(q, q.derivative());
    return sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, +1);
}

int count_real_roots_in(const UniPoly& p, const RatInterval& iv) {
    UniPoly q = squarefree_int(p);
    if (q.degree() <= 0) return 0;
    auto chain = sturm_chain(q, q.derivative());
    int half_open = sign_variations(chain, iv.lo()) - sign_variations(chain, iv.hi());
    return half_open + (sgn(q.eval(iv.lo())) == 0 ? 1 : 0);
}

// ----- real isolation ----------------------------------------------------

std::vector<RatInterval> isolate_real_roots(const UniPoly& p) {
    std::vector<RatInterval> out;
    UniPoly q = squarefree_int(p);
    if (q.degree() <= 0) return out;
    if (q.degree() == 1) {
        out.push_back(RatInterval::point(-q[0] / q[1]));
        return out;
    }
    auto chain = sturm_chain(q, q.derivative());
    auto vars = [&chain](const Rat& x) { return sign_variations(chain, x); };

    Rat B(root_modulus_bound(q));
    struct Piece {
        Rat a, b;
        int va, vb;
    };
    std::vector<Piece> stack{{-B, B, vars(-B), vars(B)}};
    while (!stack.empty()) {
        Piece s = stack.back();
        stack.pop_back();
        int k = s.va - s.vb;
        if (k == 0) continue;
        if (k == 1) {
            assert(sgn(q.eval(s.a)) * sgn(q.eval(s.b)) < 0);
            out.push_back(RatInterval(s.a, s.b));
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        if (sgn(q.eval(m)) != 0) {
            int vm = vars(m);
            stack.push_back({s.a, m, s.va, vm});
            stack.push_back({m, s.b, vm, s.vb});
            continue;
        }
        // Exact root at the midpoint: report it and trim root-free margins
        // around it so the recursion cannot rediscover it.
        out.push_back(RatInterval::point(m));
        int vm = vars(m);
        Rat delta = (s.b - s.a) / 8;
        for (;;) {
            Rat a2 = m - delta;
            if (sgn(q.eval(a2)) != 0) {
                int va2 = vars(a2);
                if (va2 - vm == 1) {  // only the root m in (a2, m]
                    stack.push_back({s.a, a2, s.va, va2});
                    break;
                }
            }
            delta /= 2;
        }
        delta = (s.b - s.a) / 8;
        for (;;) {
            Rat b2 = m + delta;
            if (sgn(q.eval(b2)) != 0) {
                int vb2 = vars(b2);
                if (vm - vb2 == 0) {  // nothing in (m, b2]
                    stack.push_back({b2, s.b, vb2, s.vb});
                    break;
                }
            }
            delta /= 2;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RatInterval& x, const RatInterval& y) { return x.lo() < y.lo(); });
    return out;
}

// ----- complex counting and isolation ------------------------------------

int count_roots_in_box(const UniPoly& p, const ComplexBox& box) {
    if (p.degree() < 1) throw std::invalid_argument("count_roots_in_box: constant polynomial");
    if (sgn(box.re().width()) <= 0 || sgn(box.im().width()) <= 0)
        throw std::invalid_argument("count_roots_in_box: rectangle must have positive area");
    UniPoly q = squarefree_int(p);
    auto n = winding_count(q, box.re().lo(), box.re().hi(), box.im().lo(), box.im().hi());
    if (!n)
        throw std::domain_error(
            "count_roots_in_box: root on boundary or degenerate corner; perturb the rectangle");
    return *n;
}

Int root_modulus_bound(const UniPoly& p) {
    if (p.degree() < 1) return 2;
    Rat maxratio(0);
    for (int i = 0; i < p.degree(); ++i)
        maxratio = std::max(maxratio, rat_abs(p[i] / p.lc()));
    Rat bound = maxratio + 1;
    Int b;
    mpz_cdiv_q(b.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    Int out = b + 1;
    return out < 2 ? Int(2) : out;
}

std::vector<AlgebraicRoot> isolate_roots(const UniPoly& p) {
    std::vector<AlgebraicRoot> out;
    UniPoly q = squarefree_int(p);
    int d = q.degree();
    if (d <= 0) return out;

    std::vector<RatInterval> reals = isolate_real_roots(q);
    int n_upper = (d - static_cast<int>(reals.size())) / 2;
    assert(d - static_cast<int>(reals.size()) == 2 * n_upper);

    UpperIsolator iso(q, reals);
    std::vector<ComplexBox> uppers = iso.run(n_upper);

    // Shrink until the closed upper boxes are pairwise disjoint (subdivision
    // can leave siblings sharing an edge).
    bool touching = true;
    while (touching) {
        touching = false;
        for (std::size_t i = 0; i < uppers.size(); ++i)
            for (std::size_t j = i + 1; j < uppers.size(); ++j)
                if (!uppers[i].disjoint(uppers[j])) {
                    touching = true;
                    Rat target = std::max(uppers[i].max_width(), uppers[j].max_width()) / 4;
                    nonreal_refine(q, uppers[i], target);
                    nonreal_refine(q, uppers[j], target);
                }
    }

    for (const RatInterval& iv : reals)
        out.emplace_back(q, ComplexBox(iv, RatInterval::point(Rat(0))));
    for (const ComplexBox& b : uppers) {
        out.emplace_back(q, b);
        out.emplace_back(q, ComplexBox(b.re(), -b.im()));
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicRoot& x, const AlgebraicRoot& y) {
        if (x.box().re().lo() != y.box().re().lo()) return x.box().re().lo() < y.box().re().lo();
        return x.box().im().lo() < y.box().im().lo();
    });
    return out;
}

std::vector<ComplexBox> isolate_complex_roots(const UniPoly& p) {
    std::vector<ComplexBox> out;
    for (const AlgebraicRoot& r : isolate_roots(p)) out.push_back(r.box());
    return out;
}

// ----- interval evaluation -----------------------------------------------

RatInterval poly_eval_interval(const UniPoly& p, const RatInterval& x, unsigned prec) {
    RatInterval acc = RatInterval::point(Rat(0));
    for (int k = p.degree(); k >= 0; --k) acc = (acc * x + p[k]).round_out(prec);
    return acc;
}

ComplexBox poly_eval_box(const UniPoly& p, const ComplexBox& z, unsigned prec) {
    ComplexBox acc = ComplexBox::point(Rat(0), Rat(0));
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * z + ComplexBox::real_point(p[k]);
        acc = acc.round_out(prec);
    }
    return acc;
}

// ----- AlgebraicRoot -----------------------------------------------------

AlgebraicRoot::AlgebraicRoot(const UniPoly& p, ComplexBox box)
    : p_(squarefree_int(p)), box_(std::move(box)), real_(box_.is_exactly_real()) {
    if (p_.degree() < 1) throw std::invalid_argument("AlgebraicRoot: constant polynomial");
    if (real_) {
        const RatInterval& iv = box_.re();
        if (iv.is_point()) {
            if (sgn(p_.eval(iv.lo())) != 0)
                throw std::invalid_argument("AlgebraicRoot: point is not a root");
        } else if (sgn(p_.eval(iv.lo())) * sgn(p_.eval(iv.hi())) >= 0) {
            throw std::invalid_argument("AlgebraicRoot: no sign change over real interval");
        }
    } else {
        if (box_.im().contains_zero() || sgn(box_.re().width()) <= 0 ||
            sgn(box_.im().width()) <= 0)
            throw std::invalid_argument("AlgebraicRoot: nonreal box must avoid the axis");
    }
}

void AlgebraicRoot::refine(const Rat& bound) {
    if (real_) {
        box_ = ComplexBox(real_refine(p_, box_.re(), bound), RatInterval::point(Rat(0)));
    } else {
        nonreal_refine(p_, box_, bound);
    }
}

ComplexBox AlgebraicRoot::evaluate(const UniPoly& g, const Rat& bound) {
    long tb = floor_log2_abs(std::min(bound, Rat(1, 2)));
    unsigned wp = static_cast<unsigned>(std::max(64L, -tb + 32));
    for (int iter = 0; iter < 400; ++iter) {
        ComplexBox e = real_ ? ComplexBox(poly_eval_interval(g, box_.re(), wp),
                                          RatInterval::point(Rat(0)))
                             : poly_eval_box(g, box_, wp);
        if (e.max_width() <= bound) return e;
        Rat w = box_.max_width();
        refine(sgn(w) > 0 ? w / 4 : bound);
    }
    throw ResourceError("AlgebraicRoot::evaluate: refinement budget exhausted");
}

}  // namespace flagsolve
