#include "flagsolve/equations.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "flagsolve/errors.hpp"
#include "flagsolve/holonomy.hpp"

namespace flagsolve {

namespace {

// Even permutations of (1,2,3,4) beginning with each vertex, in the
// convention used for the per-vertex cross-ratio relations: the second entry
// is the default surviving coordinate.
constexpr int kVertexPerm[4][4] = {
    {1, 2, 3, 4},
    {2, 1, 4, 3},
    {3, 4, 1, 2},
    {4, 3, 2, 1},
};

MultiPoly var_poly(const Ring& ring, const Triangulation&, int tet, int i, int j) {
    return MultiPoly::variable(ring, cross_ratio_index(ring, tet, i, j));
}

// The product of the three cross-ratios z_{ad} z_{bd} z_{cd} for the ordered
// face (a,b,c) of one tetrahedron with opposite vertex d.  The triple ratio
// of the face is -P when (a,b,c,d) is an even permutation and -1/P when odd;
// either way TR_1 * TR_2 = 1 reduces to P_1 * P_2 = 1.
MultiPoly face_product(const Ring& ring, const Triangulation& t, int tet,
                       const std::array<int, 3>& face) {
    int d = 10 - face[0] - face[1] - face[2];
    MultiPoly p = var_poly(ring, t, tet, face[0], d);
    p = p * var_poly(ring, t, tet, face[1], d);
    p = p * var_poly(ring, t, tet, face[2], d);
    return p;
}

// Split p = A * x_var + B with neither part containing x_var; requires
// degree_in(var) == 1.
std::pair<MultiPoly, MultiPoly> split_linear(const MultiPoly& p, std::size_t var) {
    std::vector<MultiPoly::Term> with, without;
    for (const auto& t : p.terms()) {
        if (t.first.e[var] == 1) {
            Monomial m = t.first;
            m.e[var] = 0;
            with.emplace_back(m, t.second);
        } else {
            without.push_back(t);
        }
    }
    return {MultiPoly::from_terms(p.ring(), std::move(with)),
            MultiPoly::from_terms(p.ring(), std::move(without))};
}

// Divide out the largest monomial in the first `limit` variables dividing
// every term.
MultiPoly strip_monomial_content(const MultiPoly& p, std::size_t limit) {
    if (p.is_zero() || p.is_constant()) return p;
    const std::size_t n = std::min(limit, p.ring().nvars());
    std::vector<unsigned> mins(n, std::numeric_limits<unsigned>::max());
    for (const auto& t : p.terms())
        for (std::size_t v = 0; v < n; ++v) mins[v] = std::min(mins[v], t.first.e[v]);
    bool trivial = true;
    for (unsigned m : mins) trivial = trivial && m == 0;
    if (trivial) return p;
    std::vector<MultiPoly::Term> out;
    for (const auto& t : p.terms()) {
        Monomial m = t.first;
        for (std::size_t v = 0; v < n; ++v) m.e[v] -= mins[v];
        out.emplace_back(m, t.second);
    }
    return MultiPoly::from_terms(p.ring(), std::move(out));
}

// Exact division of p by (1 - x_var), or nullopt if the remainder p|_{x=1}
// is nonzero.
std::optional<MultiPoly> divide_one_minus(const MultiPoly& p, std::size_t var) {
    const unsigned d = p.degree_in(var);
    if (d == 0) return std::nullopt;
    std::vector<MultiPoly> bucket(d + 1, MultiPoly(p.ring()));
    for (const auto& t : p.terms()) {
        Monomial m = t.first;
        const unsigned k = m.e[var];
        m.e[var] = 0;
        bucket[k] = bucket[k] + MultiPoly::from_terms(p.ring(), {{m, t.second}});
    }
    MultiPoly rem(p.ring());
    for (const auto& b : bucket) rem = rem + b;
    if (!rem.is_zero()) return std::nullopt;
    // p = (1 - x) * q with q_k = sum_{m <= k} bucket_m.
    MultiPoly q(p.ring());
    MultiPoly partial(p.ring());
    for (unsigned k = 0; k + 1 <= d; ++k) {
        partial = partial + bucket[k];
        if (partial.is_zero()) continue;
        MultiPoly xk = k == 0 ? MultiPoly::constant(p.ring(), Rat(1))
                              : MultiPoly::variable(p.ring(), var, k);
        q = q + partial * xk;
    }
    return q;
}

// True when p equals a nonzero rational times a product of powers of x and
// (1 - x) over the first `ncoord` (cross-ratio) variables; such a factor is
// invertible everywhere on the admissible solution set.
bool is_unit_coefficient(MultiPoly p, std::size_t ncoord) {
    p = strip_monomial_content(p, ncoord);
    while (!p.is_constant()) {
        bool divided = false;
        for (std::size_t v = 0; v < ncoord && !divided; ++v) {
            if (!p.uses_variable(v)) continue;
            if (auto q = divide_one_minus(p, v)) {
                p = strip_monomial_content(*q, ncoord);
                divided = true;
            }
        }
        if (!divided) return false;
    }
    return !p.is_zero();
}

}  // namespace

std::string cross_ratio_name(int tet, int i, int j) {
    std::ostringstream os;
    os << 'z' << tet << '_' << i << j;
    return os.str();
}

Ring system_ring(const Triangulation& t, const std::vector<std::string>& extra) {
    std::vector<std::string> names;
    for (int tet = 0; tet < t.num_tets; ++tet)
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                if (i != j) names.push_back(cross_ratio_name(tet, i, j));
    for (const auto& e : extra) names.push_back(e);
    return Ring::degrevlex(names);
}

std::size_t cross_ratio_index(const Ring& ring, int tet, int i, int j) {
    const std::size_t idx = ring.index_of(cross_ratio_name(tet, i, j));
    if (idx == Ring::npos) throw std::logic_error("cross-ratio variable missing from ring");
    return idx;
}

GluingSystem build_gluing_system(const Triangulation& t, const Ring& ring) {
    GluingSystem sys;
    sys.ring = ring;
    const MultiPoly one = MultiPoly::constant(ring, Rat(1));

    // Cross-ratio relations: for the even permutation (i,j,k,l),
    //   z_ik * (1 - z_ij) = 1   and   z_il * z_ij = z_ij - 1.
    for (int tet = 0; tet < t.num_tets; ++tet) {
        for (const auto& perm : kVertexPerm) {
            const int i = perm[0], j = perm[1], k = perm[2], l = perm[3];
            MultiPoly zij = var_poly(ring, t, tet, i, j);
            MultiPoly zik = var_poly(ring, t, tet, i, k);
            MultiPoly zil = var_poly(ring, t, tet, i, l);
            sys.cross_ratio.push_back(zik * (one - zij) - one);
            sys.cross_ratio.push_back(zil * zij - zij + one);
        }
    }

    // Edge equations: product of the met coordinates equals 1.
    sys.cycles = edge_classes(t);
    for (const auto& ec : sys.cycles) {
        MultiPoly prod = one;
        for (const auto& e : ec.cycle) prod = prod * var_poly(ring, t, e.tet, e.from, e.to);
        sys.edge.push_back(prod - one);
    }

    // Face equations: for the pairing (a,b,c) -> (a',b',c') the convention
    // pairs the face (a,b,c) with the reordered image (a',c',b'); both triple
    // ratios have the same parity type, so the equation is always
    // P_face * P_image = 1.
    for (const auto& p : t.pairings) {
        const std::array<int, 3> image = {p.face_b[0], p.face_b[2], p.face_b[1]};
        MultiPoly lhs = face_product(ring, t, p.tet_a, p.face_a) *
                        face_product(ring, t, p.tet_b, image);
        sys.face.push_back(lhs - one);
    }
    return sys;
}

HolonomyRows holonomy_equations(const Triangulation& t, const Ring& ring,
                                const HolonomyCondition& cond) {
    const bool fixed = cond.kind == HolonomyCondition::Kind::FixedValues;
    std::size_t const_idx = Ring::npos;
    if (fixed) {
        if (cond.constant_name.empty())
            throw std::invalid_argument("fixed-value holonomy condition needs a constant name");
        const_idx = ring.index_of(cond.constant_name);
        if (const_idx == Ring::npos)
            throw std::invalid_argument("ring does not contain the holonomy constant " +
                                        cond.constant_name);
        if (cond.constant_minpoly.degree() < 1)
            throw std::invalid_argument(
                "the holonomy constant needs a nonconstant minimal polynomial");
        if (cond.targets.size() != t.cusps.size())
            throw std::invalid_argument("holonomy condition needs one target set per cusp");
    }
    // A univariate polynomial in the adjoined constant, as a ring element.
    auto in_constant = [&](const UniPoly& u) {
        MultiPoly out(ring);
        const auto& cs = u.coeffs();
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (cs[k] == 0) continue;
            out = out + (k == 0 ? MultiPoly::constant(ring, cs[k])
                                : MultiPoly::variable(ring, const_idx, static_cast<unsigned>(k)) *
                                      cs[k]);
        }
        return out;
    };

    HolonomyRows rows;
    for (std::size_t cusp = 0; cusp < t.cusps.size(); ++cusp) {
        const BoundaryEigenvalues ev = boundary_eigenvalues(t, ring, cusp);
        const PolyFraction* value[4] = {&ev.A, &ev.Astar, &ev.B, &ev.Bstar};
        if (!fixed) {
            for (const PolyFraction* v : value) {
                rows.equations.push_back(v->num() - v->den());
                rows.cleared.push_back(v->den());
            }
            continue;
        }
        const HolonomyCondition::CuspTargets& tg = cond.targets[cusp];
        const std::optional<UniPoly>* want[4] = {&tg.A, &tg.Astar, &tg.B, &tg.Bstar};
        for (int k = 0; k < 4; ++k) {
            if (!want[k]->has_value()) continue;
            rows.equations.push_back(value[k]->num() - in_constant(**want[k]) * value[k]->den());
            rows.cleared.push_back(value[k]->den());
        }
    }
    if (fixed) rows.equations.push_back(in_constant(cond.constant_minpoly));
    return rows;
}

SystemSpec build_system(const Triangulation& t, const HolonomyCondition& cond) {
    if (t.num_tets == 0) throw std::invalid_argument("triangulation has no tetrahedra");
    std::vector<std::string> extra;
    if (cond.kind == HolonomyCondition::Kind::FixedValues) extra.push_back(cond.constant_name);
    SystemSpec spec;
    spec.ring = system_ring(t, extra);
    spec.glue = build_gluing_system(t, spec.ring);
    spec.holonomy = holonomy_equations(t, spec.ring, cond);
    return spec;
}

MultiPoly rational_substitute(const MultiPoly& p, std::size_t var, const MultiPoly& num,
                              const MultiPoly& den) {
    const unsigned d = p.degree_in(var);
    if (d == 0) return p;
    // Bucket by the exponent of var, with that variable removed.
    std::vector<MultiPoly> buckets(d + 1, MultiPoly(p.ring()));
    for (const auto& t : p.terms()) {
        Monomial m = t.first;
        const unsigned k = m.e[var];
        m.e[var] = 0;
        buckets[k] = buckets[k] + MultiPoly::from_terms(p.ring(), {{m, t.second}});
    }
    // sum_k bucket_k * num^k * den^(d-k)
    std::vector<MultiPoly> num_pow(d + 1), den_pow(d + 1);
    num_pow[0] = MultiPoly::constant(p.ring(), Rat(1));
    den_pow[0] = num_pow[0];
    for (unsigned k = 1; k <= d; ++k) {
        num_pow[k] = num_pow[k - 1] * num;
        den_pow[k] = den_pow[k - 1] * den;
    }
    MultiPoly out(p.ring());
    for (unsigned k = 0; k <= d; ++k) {
        if (buckets[k].is_zero()) continue;
        out = out + buckets[k] * num_pow[k] * den_pow[d - k];
    }
    return out;
}

ReducedSystem reduce_system(const Triangulation& t, const Ring& big,
                            const std::vector<MultiPoly>& boundary_rows,
                            const std::vector<std::string>& protect,
                            const ReduceOptions& options) {
    GluingSystem glue = build_gluing_system(t, big);
    ReducedSystem rs;
    rs.big = big;
    const std::size_t ncoord = static_cast<std::size_t>(12) * t.num_tets;

    if (!options.survivors.empty() &&
        options.survivors.size() != static_cast<std::size_t>(t.num_tets))
        throw std::invalid_argument("survivor table needs one row per tetrahedron");
    // The surviving coordinate z_{i,chosen} for a vertex row (i,j,k,l).
    auto survivor_of = [&](int tet, const int* perm) {
        if (options.survivors.empty()) return perm[1];
        const int chosen = options.survivors[static_cast<std::size_t>(tet)][perm[0] - 1];
        if (chosen != perm[1] && chosen != perm[2] && chosen != perm[3])
            throw std::invalid_argument("survivor for tetrahedron " + std::to_string(tet) +
                                        " vertex " + std::to_string(perm[0]) +
                                        " must name one of the other three vertices");
        return chosen;
    };

    std::vector<MultiPoly> eqs;
    for (const auto& e : glue.edge) eqs.push_back(e);
    for (const auto& e : glue.face) eqs.push_back(e);
    for (const auto& e : boundary_rows) eqs.push_back(e.transport(big));

    unsigned baseline = 1;
    for (const auto& e : eqs) baseline = std::max(baseline, e.total_degree());
    const unsigned degree_cap = baseline * std::max(1u, options.degree_growth);

    const MultiPoly one = MultiPoly::constant(big, Rat(1));
    std::vector<bool> eliminated(big.nvars(), false);

    // Stage 1: per vertex row (i,p,q,r) -- the even permutation rotated so
    // the surviving coordinate sits second -- record z_iq = 1/(1-z_ip) and
    // z_ir = (z_ip - 1)/z_ip and substitute them away.
    for (int tet = 0; tet < t.num_tets; ++tet) {
        for (const auto& perm : kVertexPerm) {
            const int i = perm[0];
            const int chosen = survivor_of(tet, perm);
            int p = perm[1], q = perm[2], r = perm[3];
            if (chosen == perm[2]) {
                p = perm[2];
                q = perm[3];
                r = perm[1];
            } else if (chosen == perm[3]) {
                p = perm[3];
                q = perm[1];
                r = perm[2];
            }
            const MultiPoly zip = var_poly(big, t, tet, i, p);
            const std::size_t iq = cross_ratio_index(big, tet, i, q);
            const std::size_t ir = cross_ratio_index(big, tet, i, r);
            rs.ledger.push_back({iq, one, one - zip});
            rs.ledger.push_back({ir, zip - one, zip});
            eliminated[iq] = true;
            eliminated[ir] = true;
        }
    }
    for (auto& e : eqs) {
        for (const auto& entry : rs.ledger)
            e = rational_substitute(e, entry.var, entry.num, entry.den);
        e = e.primitive();
        if (e.total_degree() > degree_cap)
            throw ResourceError("eliminating the per-vertex dependents pushed an equation to "
                                "total degree " +
                                std::to_string(e.total_degree()) + " (cap " +
                                std::to_string(degree_cap) + ")");
    }

    // Stage 2: repeatedly harvest a variable appearing linearly whose
    // coefficient is a monomial times a product of factors (1 - z) in the
    // coordinates -- a unit wherever all coordinates avoid 0 and 1, so the
    // division is exact on the admissible locus.  Among the candidates the
    // one minimising the degree profile of the substituted system wins, with
    // the variable name as the final deterministic tie-break.
    std::set<std::string> protected_names(protect.begin(), protect.end());
    while (!rs.empty_system) {
        std::vector<MultiPoly> live;
        for (const auto& e : eqs) {
            if (e.is_zero()) continue;
            if (e.is_constant()) {
                rs.empty_system = true;
                rs.contradiction = "an equation reduced to the nonzero constant " +
                                   e.constant_value().get_str();
                break;
            }
            live.push_back(e);
        }
        if (rs.empty_system) break;
        eqs = std::move(live);

        struct Candidate {
            std::size_t var = 0;
            MultiPoly num, den;
            std::vector<MultiPoly> substituted;
            unsigned max_deg = 0;
            unsigned long long deg_sum = 0;
        };
        std::optional<Candidate> best;
        for (std::size_t ei = 0; ei < eqs.size() && !rs.empty_system; ++ei) {
            const MultiPoly& e = eqs[ei];
            for (std::size_t v = 0; v < big.nvars(); ++v) {
                if (eliminated[v] || protected_names.count(big.name(v))) continue;
                if (e.degree_in(v) != 1) continue;
                auto [a, b] = split_linear(e, v);
                if (!is_unit_coefficient(a, ncoord)) continue;
                if (v < ncoord) {
                    // A coordinate pinned to 0 or 1 contradicts admissibility.
                    if (b.is_zero()) {
                        rs.empty_system = true;
                        rs.contradiction = big.name(v) + " is forced to 0";
                        break;
                    }
                    if ((a + b).is_zero()) {
                        rs.empty_system = true;
                        rs.contradiction = big.name(v) + " is forced to 1";
                        break;
                    }
                }
                Candidate c;
                c.var = v;
                c.num = -b;
                c.den = a;
                for (std::size_t ej = 0; ej < eqs.size(); ++ej) {
                    if (ej == ei) continue;
                    MultiPoly s = rational_substitute(eqs[ej], v, c.num, c.den).primitive();
                    c.max_deg = std::max(c.max_deg, s.total_degree());
                    c.deg_sum += s.total_degree();
                    c.substituted.push_back(std::move(s));
                }
                const bool wins =
                    !best || c.max_deg < best->max_deg ||
                    (c.max_deg == best->max_deg &&
                     (c.deg_sum < best->deg_sum ||
                      (c.deg_sum == best->deg_sum && big.name(c.var) < big.name(best->var))));
                if (wins) best = std::move(c);
            }
        }
        if (rs.empty_system || !best) break;
        if (best->max_deg > degree_cap)
            throw ResourceError("eliminating " + big.name(best->var) +
                                " would push an equation to total degree " +
                                std::to_string(best->max_deg) + " (cap " +
                                std::to_string(degree_cap) + ")");
        rs.ledger.push_back({best->var, best->num, best->den});
        eliminated[best->var] = true;
        eqs = std::move(best->substituted);
    }

    // Assemble the small ring and transport the surviving equations.
    for (std::size_t v = 0; v < big.nvars(); ++v)
        if (!eliminated[v]) rs.kept.push_back(big.name(v));
    rs.small = Ring::degrevlex(rs.kept);
    if (rs.empty_system) {
        rs.equations.push_back(MultiPoly::constant(rs.small, Rat(1)));
        return rs;
    }
    std::set<std::string> seen_eq;
    for (const auto& e : eqs) {
        if (e.is_zero()) continue;
        const MultiPoly moved = e.transport(rs.small).primitive();
        if (seen_eq.insert(moved.str()).second) rs.equations.push_back(moved);
    }

    // Forbidden factors: z and z-1 for every coordinate that survived stage 1
    // (the stage-1 dependents' conditions reduce to these), pushed through the
    // stage-2 ledger.
    const std::size_t stage1 = static_cast<std::size_t>(8) * t.num_tets;
    std::vector<MultiPoly> raw;
    for (int tet = 0; tet < t.num_tets; ++tet) {
        for (const auto& perm : kVertexPerm) {
            const MultiPoly zs = var_poly(big, t, tet, perm[0], survivor_of(tet, perm));
            raw.push_back(zs);
            raw.push_back(zs - one);
        }
    }
    std::set<std::string> seen;
    for (MultiPoly f : raw) {
        for (std::size_t k = stage1; k < rs.ledger.size(); ++k)
            f = rational_substitute(f, rs.ledger[k].var, rs.ledger[k].num, rs.ledger[k].den);
        f = f.primitive();
        if (f.is_zero()) throw std::logic_error("nonvanishing factor collapsed to zero");
        if (f.is_constant()) continue;
        const MultiPoly moved = f.transport(rs.small);
        if (seen.insert(moved.str()).second) rs.forbidden.push_back(moved);
    }
    return rs;
}

NumberFieldElem evaluate_big(const MultiPoly& p, const std::vector<NumberFieldElem>& values,
                             const NumberField& field) {
    NumberFieldElem acc = field.from_rational(Rat(0));
    for (const auto& t : p.terms()) {
        NumberFieldElem term = field.from_rational(t.second);
        for (std::size_t v = 0; v < t.first.e.size(); ++v) {
            if (t.first.e[v] == 0) continue;
            term = term * values[v].pow(static_cast<long>(t.first.e[v]));
        }
        acc = acc + term;
    }
    return acc;
}

std::vector<NumberFieldElem> evaluate_ledger(const ReducedSystem& rs,
                                             const std::vector<NumberFieldElem>& kept_values,
                                             const NumberField& field) {
    if (kept_values.size() != rs.kept.size())
        throw std::invalid_argument("wrong number of kept values");
    std::vector<NumberFieldElem> values(rs.big.nvars(), field.from_rational(Rat(0)));
    std::vector<bool> have(rs.big.nvars(), false);
    for (std::size_t k = 0; k < rs.kept.size(); ++k) {
        const std::size_t idx = rs.big.index_of(rs.kept[k]);
        values[idx] = kept_values[k];
        have[idx] = true;
    }
    auto eval_checked = [&](const MultiPoly& p) {
        for (const auto& t : p.terms())
            for (std::size_t v = 0; v < t.first.e.size(); ++v)
                if (t.first.e[v] != 0 && !have[v])
                    throw std::logic_error("ledger replay reads unassigned variable " +
                                           rs.big.name(v));
        return evaluate_big(p, values, field);
    };
    for (std::size_t k = rs.ledger.size(); k-- > 0;) {
        const LedgerEntry& entry = rs.ledger[k];
        const NumberFieldElem num = eval_checked(entry.num);
        const NumberFieldElem den = eval_checked(entry.den);
        if (den.is_zero())
            throw std::domain_error("ledger denominator vanished during reconstruction");
        values[entry.var] = num * den.inverse();
        have[entry.var] = true;
    }
    for (std::size_t v = 0; v < rs.big.nvars(); ++v)
        if (!have[v]) throw std::logic_error("variable left unassigned by ledger replay");
    return values;
}

}  // namespace flagsolve
