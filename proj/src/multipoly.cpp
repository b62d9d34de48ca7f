#include "flagsolve/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flagsolve {

// ----- Monomial ----------------------------------------------------------

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (r.e[i] < o.e[i]) throw std::domain_error("Monomial: division not exact");
        r.e[i] -= o.e[i];
    }
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < o.e[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
}

// ----- Ring --------------------------------------------------------------

Ring Ring::degrevlex(std::vector<std::string> names) {
    Ring r;
    r.data_ = std::make_shared<const Data>(Data{std::move(names), 0});
    return r;
}

Ring Ring::block(std::vector<std::string> names, std::size_t block) {
    if (block == 0 || block >= names.size())
        throw std::invalid_argument("Ring::block: block size must be in [1, nvars)");
    Ring r;
    r.data_ = std::make_shared<const Data>(Data{std::move(names), block});
    return r;
}

std::size_t Ring::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < data_->names.size(); ++i)
        if (data_->names[i] == name) return i;
    return npos;
}

namespace {

// Strict degrevlex comparison on a sub-range of exponents.
bool drl_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b, std::size_t lo,
              std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db;
    // Equal degree: the monomial with the larger exponent on the latest
    // differing variable is the smaller one.
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

bool Ring::mono_less(const Monomial& a, const Monomial& b) const {
    std::size_t n = nvars();
    std::size_t k = data_->block;
    if (k == 0) return drl_less(a.e, b.e, 0, n);
    if (drl_less(a.e, b.e, 0, k)) return true;
    if (drl_less(b.e, a.e, 0, k)) return false;
    return drl_less(a.e, b.e, k, n);
}

// ----- MultiPoly ---------------------------------------------------------

MultiPoly MultiPoly::constant(const Ring& ring, const Rat& c) {
    MultiPoly p(ring);
    if (c != 0) p.terms_.emplace_back(Monomial(ring.nvars()), c);
    return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, std::size_t i, unsigned power) {
    if (i >= ring.nvars()) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(ring);
    if (power == 0) return constant(ring, Rat(1));
    Monomial m(ring.nvars());
    m.e[i] = power;
    p.terms_.emplace_back(std::move(m), Rat(1));
    return p;
}

MultiPoly MultiPoly::from_terms(const Ring& ring, std::vector<Term> terms) {
    MultiPoly p(ring);
    p.terms_ = std::move(terms);
    p.normalise();
    return p;
}

void MultiPoly::normalise() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return ring_.mono_less(b.first, a.first);  // descending
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Rat MultiPoly::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw std::domain_error("MultiPoly: constant_value of non-constant");
    return terms_[0].second;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (is_zero()) throw std::domain_error("MultiPoly: leading term of zero");
    return terms_[0].first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (is_zero()) throw std::domain_error("MultiPoly: leading term of zero");
    return terms_[0].second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

unsigned MultiPoly::degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.first.e[i]);
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (Term& t : r.terms_) t.second = -t.second;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (!ring_.initialised()) return o;
    if (!o.ring_.initialised()) return *this;
    if (!ring_.same_ring(o.ring_)) throw std::invalid_argument("MultiPoly: ring mismatch");
    MultiPoly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (i == terms_.size()) {
            r.terms_.push_back(o.terms_[j++]);
        } else if (j == o.terms_.size()) {
            r.terms_.push_back(terms_[i++]);
        } else if (terms_[i].first == o.terms_[j].first) {
            Rat c = terms_[i].second + o.terms_[j].second;
            if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        } else if (ring_.mono_less(o.terms_[j].first, terms_[i].first)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (!ring_.same_ring(o.ring_)) throw std::invalid_argument("MultiPoly: ring mismatch");
    auto cmp = [this](const Monomial& a, const Monomial& b) { return ring_.mono_less(b, a); };
    std::map<Monomial, Rat, decltype(cmp)> acc(cmp);
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) acc[a.first * b.first] += a.second * b.second;
    MultiPoly r(ring_);
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
    if (s == 0) return MultiPoly(ring_);
    MultiPoly r = *this;
    for (Term& t : r.terms_) t.second *= s;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (!ring_.initialised() || !o.ring_.initialised())
        return is_zero() && o.is_zero();
    return ring_.same_ring(o.ring_) && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(ring_, Rat(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::submul(const Rat& c, const Monomial& m, const MultiPoly& g) const {
    MultiPoly shifted(g.ring_);
    shifted.terms_.reserve(g.terms_.size());
    for (const Term& t : g.terms_) shifted.terms_.emplace_back(t.first * m, -c * t.second);
    return *this + shifted;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / leading_coeff());
}

MultiPoly MultiPoly::primitive() const {
    if (is_zero()) return *this;
    Int num_gcd(0), den_lcm(1);
    for (const Term& t : terms_) {
        Int n = t.second.get_num();
        Int d = t.second.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    if (sgn(leading_coeff()) < 0) scale = -scale;
    return *this * scale;
}

MultiPoly MultiPoly::substitute(std::size_t i, const MultiPoly& value) const {
    if (!ring_.same_ring(value.ring_)) throw std::invalid_argument("MultiPoly: ring mismatch");
    // Group by the exponent of variable i, then Horner from the top power.
    unsigned dmax = degree_in(i);
    if (dmax == 0) return *this;
    std::vector<MultiPoly> bucket(dmax + 1, MultiPoly(ring_));
    for (const Term& t : terms_) {
        Term stripped = t;
        unsigned k = stripped.first.e[i];
        stripped.first.e[i] = 0;
        bucket[k].terms_.push_back(std::move(stripped));
    }
    for (MultiPoly& b : bucket) b.normalise();
    MultiPoly acc = bucket[dmax];
    for (unsigned k = dmax; k-- > 0;) acc = acc * value + bucket[k];
    return acc;
}

Rat MultiPoly::eval_rat(const std::vector<Rat>& point) const {
    if (point.size() != ring_.nvars())
        throw std::invalid_argument("MultiPoly: evaluation point has wrong arity");
    Rat acc(0);
    for (const Term& t : terms_) {
        Rat v = t.second;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (t.first.e[i] > 0) v *= rat_pow(point[i], t.first.e[i]);
        acc += v;
    }
    return acc;
}

MultiPoly MultiPoly::transport(const Ring& target) const {
    std::vector<std::size_t> map(ring_.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i) map[i] = target.index_of(ring_.name(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m(target.nvars());
        for (std::size_t i = 0; i < ring_.nvars(); ++i) {
            if (t.first.e[i] == 0) continue;
            if (map[i] == Ring::npos)
                throw std::invalid_argument("MultiPoly::transport: variable " + ring_.name(i) +
                                            " missing from target ring");
            m.e[map[i]] += t.first.e[i];
        }
        out.emplace_back(std::move(m), t.second);
    }
    return from_terms(target, std::move(out));
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rat c = t.second;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = rat_abs(c);
        }
        first = false;
        bool printed_coeff = false;
        if (c != 1 || t.first.is_one()) {
            os << rat_str(c);
            printed_coeff = true;
        }
        bool any = printed_coeff;
        for (std::size_t i = 0; i < ring_.nvars(); ++i) {
            unsigned e = t.first.e[i];
            if (e == 0) continue;
            if (any) os << "*";
            os << ring_.name(i);
            if (e > 1) os << "^" << e;
            any = true;
        }
    }
    return os.str();
}

}  // namespace flagsolve
