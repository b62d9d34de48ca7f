#include "flagsolve/groebner.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "flagsolve/errors.hpp"

namespace flagsolve {

namespace {

// c * X^m * p, built directly; multiplying by a monomial preserves term order.
MultiPoly term_mul(const MultiPoly& p, const Monomial& m, const Rat& c) {
    std::vector<MultiPoly::Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) out.emplace_back(t.first * m, t.second * c);
    return MultiPoly::from_terms(p.ring(), std::move(out));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const Monomial& lcm) {
    const Monomial mf = lcm / f.leading_monomial();
    const Monomial mg = lcm / g.leading_monomial();
    return term_mul(f, mf, Rat(1) / f.leading_coeff()) -
           term_mul(g, mg, Rat(1) / g.leading_coeff());
}

struct PairRec {
    std::size_t i, j;  // i < j, indices into the working basis
    Monomial lcm;
    unsigned sugar;
};

unsigned mono_degree(const Monomial& m) { return m.degree(); }

// Selection order: sugar first, then smaller lcm in the ring order, then
// lexicographically smaller index pair.  Deterministic.
bool pair_before(const Ring& ring, const PairRec& a, const PairRec& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (!(a.lcm == b.lcm)) return ring.mono_less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

class Buchberger {
public:
    Buchberger(const Ring& ring, const GroebnerBudget& budget) : ring_(ring), budget_(budget) {}

    void add_generator(const MultiPoly& f0, unsigned sugar) {
        MultiPoly f = f0.primitive();
        if (f.is_zero()) return;
        if (f.is_constant()) {
            unit_ = true;
            return;
        }
        if (static_cast<long>(basis_.size()) >= budget_.max_basis)
            throw ResourceError("groebner basis size budget exceeded");
        const std::size_t t = basis_.size();
        basis_.push_back(f);
        sugars_.push_back(sugar);
        update_pairs(t);
    }

    void run() {
        while (!unit_ && !pairs_.empty()) {
            if (++steps_ > budget_.max_pair_steps)
                throw ResourceError("groebner pair step budget exceeded");
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k)
                if (pair_before(ring_, pairs_[k], pairs_[best])) best = k;
            const PairRec pr = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            const MultiPoly s = s_polynomial(basis_[pr.i], basis_[pr.j], pr.lcm);
            const MultiPoly h = normal_form(s, basis_);
            if (h.is_zero()) continue;
            add_generator(h, pr.sugar);
        }
    }

    std::vector<MultiPoly> reduced() const {
        if (unit_) return {MultiPoly::constant(ring_, Rat(1))};
        // Minimalize: drop any element whose leading monomial is divisible by
        // another kept element's leading monomial.
        std::vector<std::size_t> order(basis_.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return ring_.mono_less(basis_[a].leading_monomial(), basis_[b].leading_monomial());
        });
        std::vector<std::size_t> kept;
        for (std::size_t idx : order) {
            const Monomial& lm = basis_[idx].leading_monomial();
            bool redundant = false;
            for (std::size_t prev : kept)
                if (lm.divisible_by(basis_[prev].leading_monomial())) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(idx);
        }
        // Inter-reduce: replace each element by its normal form against the
        // others; minimality guarantees the leading term survives.
        std::vector<MultiPoly> result;
        for (std::size_t pos = 0; pos < kept.size(); ++pos) {
            std::vector<MultiPoly> others;
            for (std::size_t q = 0; q < kept.size(); ++q)
                if (q != pos) others.push_back(basis_[kept[q]]);
            result.push_back(normal_form(basis_[kept[pos]], others).monic());
        }
        std::sort(result.begin(), result.end(), [&](const MultiPoly& a, const MultiPoly& b) {
            return ring_.mono_less(a.leading_monomial(), b.leading_monomial());
        });
        return result;
    }

    bool unit() const { return unit_; }

private:
    // Gebauer-Moeller update for the freshly appended element t.
    void update_pairs(std::size_t t) {
        const Monomial& lmt = basis_[t].leading_monomial();
        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool keep = true;
        };
        std::vector<Cand> cand;
        cand.reserve(t);
        for (std::size_t i = 0; i < t; ++i)
            cand.push_back({i, Monomial::lcm(basis_[i].leading_monomial(), lmt), true});
        // Criterion M: discard (i,t) when some other (j,t) has an lcm that
        // properly divides lcm(i,t).
        for (auto& a : cand) {
            for (const auto& b : cand) {
                if (a.i == b.i || !b.keep) continue;
                if (!(b.lcm == a.lcm) && a.lcm.divisible_by(b.lcm)) {
                    a.keep = false;
                    break;
                }
            }
        }
        // Criterion F: among surviving pairs with the same lcm keep only the
        // smallest index.
        for (auto& a : cand) {
            if (!a.keep) continue;
            for (auto& b : cand) {
                if (b.i <= a.i || !b.keep) continue;
                if (a.lcm == b.lcm) b.keep = false;
            }
        }
        // Buchberger's coprimality criterion.
        for (auto& a : cand) {
            if (!a.keep) continue;
            if (basis_[a.i].leading_monomial().coprime(lmt)) a.keep = false;
        }
        // Prune old pairs made redundant by the newcomer.
        std::vector<PairRec> survivors;
        survivors.reserve(pairs_.size());
        for (const auto& pr : pairs_) {
            const bool drop =
                pr.lcm.divisible_by(lmt) &&
                !(Monomial::lcm(basis_[pr.i].leading_monomial(), lmt) == pr.lcm) &&
                !(Monomial::lcm(basis_[pr.j].leading_monomial(), lmt) == pr.lcm);
            if (!drop) survivors.push_back(pr);
        }
        pairs_ = std::move(survivors);
        for (const auto& a : cand) {
            if (!a.keep) continue;
            const unsigned si =
                sugars_[a.i] + mono_degree(a.lcm / basis_[a.i].leading_monomial());
            const unsigned st = sugars_[t] + mono_degree(a.lcm / lmt);
            pairs_.push_back({a.i, t, a.lcm, std::max(si, st)});
        }
    }

    Ring ring_;
    GroebnerBudget budget_;
    std::vector<MultiPoly> basis_;
    std::vector<unsigned> sugars_;
    std::vector<PairRec> pairs_;
    long steps_ = 0;
    bool unit_ = false;
};

Ring common_ring(const std::vector<MultiPoly>& gens) {
    for (const auto& g : gens) {
        if (!g.ring().initialised()) continue;
        for (const auto& h : gens)
            if (h.ring().initialised() && !g.ring().same_ring(h.ring()))
                throw std::invalid_argument("generators live in different rings");
        return g.ring();
    }
    throw std::invalid_argument("no ring available from generator list");
}

std::string fresh_name(const Ring& ring, const std::string& stem) {
    std::string name = stem;
    while (ring.index_of(name) != Ring::npos) name += "_";
    return name;
}

// Keep only the polynomials free of the first k variables and move them to
// the degrevlex ring on the remaining names.
std::vector<MultiPoly> project_tail(const std::vector<MultiPoly>& gb, std::size_t k,
                                    const Ring& big) {
    std::vector<std::string> tail_names(big.names().begin() + static_cast<std::ptrdiff_t>(k),
                                        big.names().end());
    Ring small = Ring::degrevlex(tail_names);
    std::vector<MultiPoly> out;
    for (const auto& g : gb) {
        bool clean = true;
        for (std::size_t v = 0; v < k && clean; ++v)
            if (g.uses_variable(v)) clean = false;
        if (clean) out.push_back(g.transport(small));
    }
    return out;
}

// Minimum number of variables needed to meet every leading-term support set;
// branch and bound on the first unhit support.
void min_hitting(const std::vector<unsigned long>& supports, unsigned long hit_mask,
                 int used, int& best, unsigned nvars) {
    if (used >= best) return;
    std::size_t pending = supports.size();
    for (std::size_t s = 0; s < supports.size(); ++s)
        if ((supports[s] & hit_mask) == 0) {
            pending = s;
            break;
        }
    if (pending == supports.size()) {
        best = used;
        return;
    }
    for (unsigned v = 0; v < nvars; ++v)
        if (supports[pending] & (1ul << v))
            min_hitting(supports, hit_mask | (1ul << v), used + 1, best, nvars);
}

void enumerate_standard(const std::vector<Monomial>& lms, std::vector<unsigned>& expo,
                        std::size_t var, const std::vector<unsigned>& bounds,
                        std::vector<Monomial>& out, long limit) {
    if (var == expo.size()) {
        Monomial m{expo};
        for (const auto& lm : lms)
            if (m.divisible_by(lm)) return;
        if (static_cast<long>(out.size()) >= limit)
            throw ResourceError("quotient basis size budget exceeded");
        out.push_back(m);
        return;
    }
    for (unsigned e = 0; e < bounds[var]; ++e) {
        expo[var] = e;
        enumerate_standard(lms, expo, var + 1, bounds, out, limit);
    }
    expo[var] = 0;
}

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    if (p.is_zero()) return p;
    const Ring ring = p.ring();
    MultiPoly h = p;
    std::vector<MultiPoly::Term> remainder;
    while (!h.is_zero()) {
        const Monomial lm = h.leading_monomial();
        const Rat lc = h.leading_coeff();
        const MultiPoly* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (lm.divisible_by(g.leading_monomial())) {
                reducer = &g;
                break;
            }
        }
        if (reducer != nullptr) {
            h = h.submul(lc / reducer->leading_coeff(), lm / reducer->leading_monomial(),
                         *reducer);
        } else {
            remainder.emplace_back(lm, lc);
            h = h - MultiPoly::from_terms(ring, {{lm, lc}});
        }
    }
    return MultiPoly::from_terms(ring, std::move(remainder));
}

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens,
                                      const GroebnerBudget& budget) {
    std::vector<MultiPoly> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return {};
    Buchberger engine(common_ring(nonzero), budget);
    for (const auto& g : nonzero) engine.add_generator(g, static_cast<unsigned>(g.total_degree()));
    engine.run();
    return engine.reduced();
}

std::vector<MultiPoly> eliminate_first(const std::vector<MultiPoly>& gens, std::size_t k,
                                       const GroebnerBudget& budget) {
    const Ring ring = common_ring(gens);
    if (k == 0) return groebner_basis(gens, budget);
    if (k >= ring.nvars()) throw std::invalid_argument("cannot eliminate every variable");
    Ring block = Ring::block(ring.names(), k);
    std::vector<MultiPoly> moved;
    moved.reserve(gens.size());
    for (const auto& g : gens) moved.push_back(g.transport(block));
    return project_tail(groebner_basis(moved, budget), k, block);
}

std::vector<MultiPoly> saturate(const std::vector<MultiPoly>& gens, const MultiPoly& f,
                                const GroebnerBudget& budget) {
    const Ring ring = common_ring(gens);
    if (f.is_zero()) throw std::invalid_argument("cannot saturate by zero");
    std::vector<std::string> names;
    names.push_back(fresh_name(ring, "Tsat"));
    for (const auto& n : ring.names()) names.push_back(n);
    Ring block = Ring::block(names, 1);
    std::vector<MultiPoly> moved;
    for (const auto& g : gens) moved.push_back(g.transport(block));
    moved.push_back(MultiPoly::variable(block, 0) * f.transport(block) -
                    MultiPoly::constant(block, Rat(1)));
    std::vector<MultiPoly> tail = project_tail(groebner_basis(moved, budget), 1, block);
    std::vector<MultiPoly> back;
    for (const auto& g : tail) back.push_back(g.transport(ring));
    if (ring.block_size() == 0) {
        std::sort(back.begin(), back.end(), [&](const MultiPoly& a, const MultiPoly& b) {
            return ring.mono_less(a.leading_monomial(), b.leading_monomial());
        });
        return back;
    }
    // The induced order on the tail block was plain degrevlex; re-reduce so
    // the result is canonical for the caller's own (block) order.
    return groebner_basis(back, budget);
}

DimensionInfo dimension_degree(const std::vector<MultiPoly>& gb) {
    if (gb.empty()) throw std::invalid_argument("dimension of an empty basis is undefined");
    const Ring ring = gb.front().ring();
    const unsigned n = static_cast<unsigned>(ring.nvars());
    for (const auto& g : gb)
        if (!g.is_zero() && g.is_constant()) return {-1, 0};
    std::vector<unsigned long> supports;
    for (const auto& g : gb) {
        if (g.is_zero()) continue;
        unsigned long mask = 0;
        const Monomial& lm = g.leading_monomial();
        for (unsigned v = 0; v < n; ++v)
            if (lm.e[v] > 0) mask |= 1ul << v;
        supports.push_back(mask);
    }
    if (supports.empty()) return {static_cast<int>(n), -1};
    if (n > 60) throw ResourceError("dimension computation limited to 60 variables");
    int best = static_cast<int>(n);
    min_hitting(supports, 0, 0, best, n);
    const int dim = static_cast<int>(n) - best;
    if (dim != 0) return {dim, -1};
    return {0, static_cast<long>(quotient_monomial_basis(gb).size())};
}

bool is_zero_dimensional(const std::vector<MultiPoly>& gb) {
    if (gb.empty()) return false;
    const Ring ring = gb.front().ring();
    const std::size_t n = ring.nvars();
    for (const auto& g : gb)
        if (!g.is_zero() && g.is_constant()) return true;  // empty variety counts
    std::vector<bool> pure(n, false);
    for (const auto& g : gb) {
        if (g.is_zero()) continue;
        const Monomial& lm = g.leading_monomial();
        std::size_t support_var = n;
        bool single = true;
        for (std::size_t v = 0; v < n; ++v)
            if (lm.e[v] > 0) {
                if (support_var != n) single = false;
                support_var = v;
            }
        if (single && support_var != n) pure[support_var] = true;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!pure[v]) return false;
    return true;
}

std::vector<Monomial> quotient_monomial_basis(const std::vector<MultiPoly>& gb) {
    if (gb.empty()) throw std::invalid_argument("quotient basis needs a nonempty basis");
    const Ring ring = gb.front().ring();
    const std::size_t n = ring.nvars();
    for (const auto& g : gb)
        if (!g.is_zero() && g.is_constant()) return {};
    std::vector<unsigned> bounds(n, 0);
    std::vector<Monomial> lms;
    for (const auto& g : gb) {
        if (g.is_zero()) continue;
        lms.push_back(g.leading_monomial());
        const Monomial& lm = lms.back();
        std::size_t support_var = n;
        bool single = true;
        for (std::size_t v = 0; v < n; ++v)
            if (lm.e[v] > 0) {
                if (support_var != n) single = false;
                support_var = v;
            }
        if (single && support_var != n) {
            const unsigned e = lm.e[support_var];
            if (bounds[support_var] == 0 || e < bounds[support_var]) bounds[support_var] = e;
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (bounds[v] == 0)
            throw std::invalid_argument("quotient basis requires a zero-dimensional ideal");
    Int product = 1;
    for (std::size_t v = 0; v < n; ++v) product *= bounds[v];
    if (product > 2000000) throw ResourceError("quotient basis too large to enumerate");
    std::vector<unsigned> expo(n, 0);
    std::vector<Monomial> out;
    enumerate_standard(lms, expo, 0, bounds, out, 2000000);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ring.mono_less(a, b); });
    return out;
}

}  // namespace flagsolve
