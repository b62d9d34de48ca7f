#include "flagsolve/rur.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "flagsolve/errors.hpp"
#include "flagsolve/factor.hpp"
#include "flagsolve/matrix.hpp"

namespace flagsolve {

namespace {

// A zero-dimensional quotient algebra Q[x]/I with its monomial basis and
// multiplication matrices.
class Quotient {
public:
    explicit Quotient(std::vector<MultiPoly> gb) : gb_(std::move(gb)) {
        if (gb_.empty()) throw std::invalid_argument("quotient needs a nonempty basis");
        ring_ = gb_.front().ring();
        basis_ = quotient_monomial_basis(gb_);
        for (std::size_t k = 0; k < basis_.size(); ++k) index_[basis_[k].e] = k;
    }

    const Ring& ring() const { return ring_; }
    const std::vector<MultiPoly>& gb() const { return gb_; }
    std::size_t dim() const { return basis_.size(); }

    std::vector<Rat> coords(const MultiPoly& p) const {
        const MultiPoly nf = normal_form(p, gb_);
        std::vector<Rat> v(dim());
        for (const auto& t : nf.terms()) {
            auto it = index_.find(t.first.e);
            if (it == index_.end())
                throw std::logic_error("normal form left the quotient basis");
            v[it->second] = t.second;
        }
        return v;
    }

    // Matrix of multiplication by x_var: column k holds coords(x_var * b_k).
    QMatrix mult_matrix(std::size_t var) const {
        QMatrix m(dim(), dim());
        for (std::size_t k = 0; k < dim(); ++k) {
            const MultiPoly prod =
                MultiPoly::from_terms(ring_, {{basis_[k], Rat(1)}}) *
                MultiPoly::variable(ring_, var);
            const std::vector<Rat> col = coords(prod);
            for (std::size_t i = 0; i < dim(); ++i) m.at(i, k) = col[i];
        }
        return m;
    }

    bool starts_with_one() const { return !basis_.empty() && basis_[0].is_one(); }

private:
    std::vector<MultiPoly> gb_;
    Ring ring_;
    std::vector<Monomial> basis_;
    std::map<std::vector<unsigned>, std::size_t> index_;
};

QMatrix combination(const std::vector<QMatrix>& mats, const std::vector<Rat>& weights) {
    QMatrix m(mats.front().rows(), mats.front().cols());
    for (std::size_t v = 0; v < mats.size(); ++v) {
        if (weights[v] == 0) continue;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) += weights[v] * mats[v].at(i, j);
    }
    return m;
}

// x_var as a univariate polynomial image: p(x_var) transplanted into the ring.
MultiPoly univariate_in(const Ring& ring, std::size_t var, const UniPoly& p) {
    std::vector<MultiPoly::Term> terms;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k] == 0) continue;
        std::vector<unsigned> e(ring.nvars(), 0);
        e[var] = static_cast<unsigned>(k);
        terms.emplace_back(Monomial{std::move(e)}, p.coeffs()[k]);
    }
    return MultiPoly::from_terms(ring, std::move(terms));
}

UniPoly remainder_mod(const UniPoly& p, const UniPoly& modulus) {
    return divmod(p, modulus).second;
}

}  // namespace

RurResult rational_univariate_representation(const std::vector<MultiPoly>& gb,
                                             const GroebnerBudget& budget) {
    RurResult result;
    if (gb.empty()) throw std::invalid_argument("zero ideal is not zero-dimensional");
    const Ring ring = gb.front().ring();
    result.variables = ring.names();
    for (const auto& g : gb)
        if (!g.is_zero() && g.is_constant()) return result;  // empty variety
    if (!is_zero_dimensional(gb))
        throw std::invalid_argument("ideal is not zero-dimensional");

    Quotient full(gb);
    if (!full.starts_with_one()) throw std::logic_error("quotient basis must contain 1");
    result.quotient_dimension = static_cast<long>(full.dim());
    const std::size_t n = ring.nvars();

    std::vector<QMatrix> full_mats;
    for (std::size_t v = 0; v < n; ++v) full_mats.push_back(full.mult_matrix(v));

    // Radical: adjoin the squarefree part of each coordinate's characteristic
    // polynomial.  If every one already reduces to zero the ideal is radical.
    std::vector<MultiPoly> extra;
    for (std::size_t v = 0; v < n; ++v) {
        const UniPoly sf = squarefree_part(full_mats[v].char_poly());
        const MultiPoly image = univariate_in(ring, v, sf);
        if (!normal_form(image, gb).is_zero()) extra.push_back(image);
    }
    Quotient radical = extra.empty() ? full : [&] {
        std::vector<MultiPoly> gens = gb;
        for (const auto& g : extra) gens.push_back(g);
        return Quotient(groebner_basis(gens, budget));
    }();
    const std::size_t d_rad = radical.dim();
    result.solution_count = static_cast<long>(d_rad);

    std::vector<QMatrix> rad_mats;
    if (extra.empty()) {
        rad_mats = full_mats;
    } else {
        for (std::size_t v = 0; v < n; ++v) rad_mats.push_back(radical.mult_matrix(v));
    }

    // Separating form search: single coordinates, then the weighted sum
    // 1*x_0 + 2*x_1 + ..., then seeded random combinations.
    std::vector<std::vector<Rat>> candidates;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Rat> w(n, Rat(0));
        w[v] = 1;
        candidates.push_back(std::move(w));
    }
    {
        std::vector<Rat> w(n);
        for (std::size_t v = 0; v < n; ++v) w[v] = Rat(static_cast<long>(v) + 1);
        candidates.push_back(std::move(w));
    }
    std::mt19937 rng(0x5eed);
    const long span = 4 * static_cast<long>(d_rad) + 7;
    std::uniform_int_distribution<long> dist(-span, span);
    for (int extra_try = 0; extra_try < 200; ++extra_try) {
        std::vector<Rat> w(n);
        for (std::size_t v = 0; v < n; ++v) w[v] = Rat(dist(rng));
        candidates.push_back(std::move(w));
    }

    std::vector<Rat> lambda;
    UniPoly f_rad;
    QMatrix m_lambda_rad;
    bool found = false;
    for (const auto& w : candidates) {
        bool all_zero = true;
        for (const auto& x : w)
            if (x != 0) all_zero = false;
        if (all_zero) continue;
        QMatrix m = combination(rad_mats, w);
        UniPoly cp = m.char_poly();
        if (squarefree_part(cp).degree() == static_cast<int>(d_rad)) {
            lambda = w;
            f_rad = cp;
            m_lambda_rad = std::move(m);
            found = true;
            break;
        }
    }
    if (!found) throw ResourceError("no separating linear form found");
    result.separating = lambda;

    // Coordinates: solve  [1 | v | v^2 | ...] c = coords(x_j)  on the radical
    // quotient, where v = coords(lambda) and powers advance by M_lambda.
    QMatrix vander(d_rad, d_rad);
    {
        std::vector<Rat> power(d_rad, Rat(0));
        power[0] = 1;  // coords of the constant 1
        for (std::size_t k = 0; k < d_rad; ++k) {
            for (std::size_t i = 0; i < d_rad; ++i) vander.at(i, k) = power[i];
            if (k + 1 < d_rad) {
                std::vector<Rat> next(d_rad, Rat(0));
                for (std::size_t i = 0; i < d_rad; ++i)
                    for (std::size_t j = 0; j < d_rad; ++j)
                        next[i] += m_lambda_rad.at(i, j) * power[j];
                power = std::move(next);
            }
        }
    }
    std::vector<UniPoly> coordinate_polys;
    for (std::size_t v = 0; v < n; ++v) {
        const std::vector<Rat> rhs = radical.coords(MultiPoly::variable(ring, v));
        auto sol = vander.solve(rhs);
        if (!sol) throw std::logic_error("separating form failed to generate the quotient");
        coordinate_polys.push_back(UniPoly(std::move(*sol)));
    }

    // Multiplicities come from the characteristic polynomial on the full
    // quotient; its irreducible factors are exactly those of the radical
    // eliminant.
    const UniPoly f_full =
        extra.empty() ? f_rad : combination(full_mats, lambda).char_poly();
    RatFactorization fact = factor_rational(f_full);

    for (const auto& [factor, mult] : fact.factors) {
        RurComponent comp;
        comp.eliminant = factor;
        comp.multiplicity = mult;
        const UniPoly modulus = factor.monic();
        for (const auto& c : coordinate_polys)
            comp.coordinates.push_back(remainder_mod(c, modulus));
        result.components.push_back(std::move(comp));
    }
    std::sort(result.components.begin(), result.components.end(),
              [](const RurComponent& a, const RurComponent& b) {
                  if (a.eliminant.degree() != b.eliminant.degree())
                      return a.eliminant.degree() < b.eliminant.degree();
                  const auto& ca = a.eliminant.coeffs();
                  const auto& cb = b.eliminant.coeffs();
                  for (std::size_t k = ca.size(); k-- > 0;) {
                      if (ca[k] != cb[k]) return ca[k] < cb[k];
                  }
                  return false;
              });
    return result;
}

NumberField component_field(const RurComponent& c) { return NumberField(c.eliminant); }

std::vector<NumberFieldElem> component_point(const RurComponent& c,
                                             const NumberField& field) {
    std::vector<NumberFieldElem> point;
    point.reserve(c.coordinates.size());
    for (const auto& poly : c.coordinates) point.push_back(field.element(poly));
    return point;
}

NumberFieldElem evaluate_at_point(const MultiPoly& p,
                                  const std::vector<NumberFieldElem>& point,
                                  const NumberField& field) {
    NumberFieldElem acc = field.from_rational(Rat(0));
    for (const auto& t : p.terms()) {
        NumberFieldElem term = field.from_rational(t.second);
        for (std::size_t v = 0; v < t.first.e.size(); ++v) {
            if (t.first.e[v] == 0) continue;
            term = term * point[v].pow(static_cast<long>(t.first.e[v]));
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace flagsolve
