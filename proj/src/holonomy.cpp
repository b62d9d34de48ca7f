#include "flagsolve/holonomy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flagsolve/equations.hpp"
#include "flagsolve/errors.hpp"
#include "flagsolve/factor.hpp"
#include "flagsolve/matrix.hpp"

namespace flagsolve {

namespace {

MultiPoly poly_one(const Ring& ring) { return MultiPoly::constant(ring, Rat(1)); }

/// p / g termwise; every term of p must be divisible by g.
MultiPoly divide_out_monomial(const MultiPoly& p, const Monomial& g) {
    if (g.is_one()) return p;
    std::vector<MultiPoly::Term> ts;
    ts.reserve(p.term_count());
    for (const auto& t : p.terms()) ts.push_back({t.first / g, t.second});
    return MultiPoly::from_terms(p.ring(), std::move(ts));
}

}  // namespace

PolyFraction::PolyFraction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.term_count() != 1)
        throw std::domain_error("PolyFraction denominator must be a single nonzero term");
    normalise();
}

void PolyFraction::normalise() {
    const Ring& ring = den_.ring();
    if (num_.is_zero()) {
        num_ = MultiPoly(ring);
        den_ = poly_one(ring);
        return;
    }
    Rat c = den_.leading_coeff();
    if (c != 1) {
        Rat inv = Rat(1) / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    Monomial g = den_.leading_monomial();
    for (const auto& t : num_.terms()) {
        bool any = false;
        for (std::size_t v = 0; v < g.e.size(); ++v) {
            g.e[v] = std::min(g.e[v], t.first.e[v]);
            any = any || g.e[v] != 0;
        }
        if (!any) break;
    }
    if (!g.is_one()) {
        num_ = divide_out_monomial(num_, g);
        den_ = divide_out_monomial(den_, g);
    }
}

PolyFraction PolyFraction::zero(const Ring& ring) {
    return PolyFraction(MultiPoly(ring), poly_one(ring));
}

PolyFraction PolyFraction::one(const Ring& ring) {
    return PolyFraction(poly_one(ring), poly_one(ring));
}

PolyFraction PolyFraction::constant(const Ring& ring, const Rat& c) {
    return PolyFraction(MultiPoly::constant(ring, c), poly_one(ring));
}

PolyFraction PolyFraction::from_poly(MultiPoly p) {
    Ring ring = p.ring();
    return PolyFraction(std::move(p), poly_one(ring));
}

PolyFraction PolyFraction::variable(const Ring& ring, std::size_t i) {
    return PolyFraction(MultiPoly::variable(ring, i), poly_one(ring));
}

bool PolyFraction::is_one() const { return num_ == den_; }

PolyFraction PolyFraction::operator+(const PolyFraction& o) const {
    return PolyFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

PolyFraction PolyFraction::operator-(const PolyFraction& o) const {
    return PolyFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

PolyFraction PolyFraction::operator*(const PolyFraction& o) const {
    return PolyFraction(num_ * o.num_, den_ * o.den_);
}

PolyFraction PolyFraction::operator-() const { return PolyFraction(-num_, den_); }

PolyFraction PolyFraction::inverse() const {
    if (num_.term_count() != 1)
        throw std::domain_error("PolyFraction reciprocal needs a single-term numerator, got " +
                                num_.str());
    return PolyFraction(den_, num_);
}

bool PolyFraction::operator==(const PolyFraction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string PolyFraction::str() const {
    if (den_ == poly_one(den_.ring())) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

SymbolicMatrix3 SymbolicMatrix3::identity(const Ring& ring) {
    SymbolicMatrix3 m = zero(ring);
    for (int i = 0; i < 3; ++i) m.at(i, i) = PolyFraction::one(ring);
    return m;
}

SymbolicMatrix3 SymbolicMatrix3::zero(const Ring& ring) {
    SymbolicMatrix3 m;
    for (auto& x : m.e_) x = PolyFraction::zero(ring);
    return m;
}

SymbolicMatrix3 SymbolicMatrix3::operator*(const SymbolicMatrix3& o) const {
    SymbolicMatrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            PolyFraction s = at(i, 0) * o.at(0, j);
            s = s + at(i, 1) * o.at(1, j);
            s = s + at(i, 2) * o.at(2, j);
            out.at(i, j) = s;
        }
    return out;
}

bool SymbolicMatrix3::operator==(const SymbolicMatrix3& o) const {
    for (int k = 0; k < 9; ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

PolyFraction SymbolicMatrix3::det() const {
    PolyFraction d = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
    d = d - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
    d = d + at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    return d;
}

SymbolicMatrix3 SymbolicMatrix3::inverse() const {
    PolyFraction d = det();
    PolyFraction dinv = d.inverse();  // throws unless single-term
    SymbolicMatrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor expansion of the (j,i) minor (adjugate transposes)
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            PolyFraction minor = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
            out.at(i, j) = minor * dinv;
        }
    return out;
}

bool SymbolicMatrix3::projectively_equal(const SymbolicMatrix3& o) const {
    int ref = -1;
    for (int k = 0; k < 9; ++k) {
        bool za = e_[k].is_zero(), zb = o.e_[k].is_zero();
        if (za != zb) return false;
        if (!za && ref < 0) ref = k;
    }
    if (ref < 0) return true;  // both zero matrices
    for (int k = 0; k < 9; ++k) {
        if (k == ref) continue;
        if (e_[k] * o.e_[ref] != o.e_[k] * e_[ref]) return false;
    }
    return true;
}

bool SymbolicMatrix3::is_upper_triangular() const {
    return at(1, 0).is_zero() && at(2, 0).is_zero() && at(2, 1).is_zero();
}

std::string SymbolicMatrix3::str() const {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        os << "[ ";
        for (int j = 0; j < 3; ++j) {
            os << at(i, j).str();
            if (j < 2) os << " , ";
        }
        os << " ]\n";
    }
    return os.str();
}

int permutation_sign(int a, int b, int c, int d) {
    int v[4] = {a, b, c, d};
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] > v[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

int state_sign(const PathState& s) {
    return permutation_sign(s.triple[0], s.triple[1], s.triple[2], s.missing_vertex());
}

PolyFraction triple_ratio(const Ring& ring, int tet, int a, int b, int c) {
    int d = 10 - a - b - c;
    Monomial m(ring.nvars());
    m.e[cross_ratio_index(ring, tet, a, d)] += 1;
    m.e[cross_ratio_index(ring, tet, b, d)] += 1;
    m.e[cross_ratio_index(ring, tet, c, d)] += 1;
    MultiPoly prod = MultiPoly::from_terms(ring, {{m, Rat(-1)}});
    if (permutation_sign(a, b, c, d) > 0) return PolyFraction::from_poly(prod);
    return PolyFraction::from_poly(prod).inverse();
}

SymbolicMatrix3 cyclic_matrix(const PolyFraction& X) {
    const Ring& ring = X.ring();
    PolyFraction one = PolyFraction::one(ring);
    SymbolicMatrix3 m = SymbolicMatrix3::zero(ring);
    m.at(0, 0) = X;
    m.at(0, 1) = X + one;
    m.at(0, 2) = one;
    m.at(1, 0) = -X;
    m.at(1, 1) = -X;
    m.at(2, 0) = X;
    return m;
}

SymbolicMatrix3 transposition_matrix(const Ring& ring) {
    SymbolicMatrix3 m = SymbolicMatrix3::zero(ring);
    m.at(0, 2) = PolyFraction::one(ring);
    m.at(1, 1) = PolyFraction::one(ring);
    m.at(2, 0) = PolyFraction::one(ring);
    return m;
}

SymbolicMatrix3 left_turn_matrix(const Ring& ring, int tet, int i, int j, bool even_source) {
    PolyFraction zij = PolyFraction::variable(ring, cross_ratio_index(ring, tet, i, j));
    PolyFraction zji = PolyFraction::variable(ring, cross_ratio_index(ring, tet, j, i));
    SymbolicMatrix3 m = SymbolicMatrix3::zero(ring);
    m.at(1, 1) = PolyFraction::one(ring);
    if (even_source) {
        m.at(0, 0) = zji.inverse();
        m.at(2, 2) = zij;
    } else {
        m.at(0, 0) = zji;
        m.at(2, 2) = zij.inverse();
    }
    return m;
}

namespace {

SymbolicMatrix3 right_turn_even(const Ring& ring, int tet, int i, int j, int k, int l) {
    auto var = [&](int p, int q) {
        return PolyFraction::variable(ring, cross_ratio_index(ring, tet, p, q));
    };
    PolyFraction zij = var(i, j), zkl = var(k, l), zlk = var(l, k), zlj = var(l, j),
                 zki = var(k, i), zil = var(i, l);
    SymbolicMatrix3 m = SymbolicMatrix3::zero(ring);
    m.at(0, 0) = zkl * zlk * zij.inverse();
    m.at(0, 1) = -(zkl * (zij * zlj).inverse()) - zki.inverse();
    m.at(0, 2) = -(zil * zki.inverse());
    m.at(1, 1) = PolyFraction::one(ring);
    m.at(1, 2) = zil;
    m.at(2, 2) = zij.inverse();
    return m;
}

}  // namespace

SymbolicMatrix3 right_turn_matrix(const Ring& ring, int tet, int i, int j, int k, int l,
                                  bool even_source) {
    if (even_source) return right_turn_even(ring, tet, i, j, k, l);
    return right_turn_even(ring, tet, i, j, l, k).inverse();
}

SymbolicMatrix3 step_matrix(const Triangulation& t, const Ring& ring, const PathState& from,
                            const PathState& to) {
    auto illegal = [&](const std::string& why) -> std::runtime_error {
        return std::runtime_error("illegal path step " + from.str() + " -> " + to.str() + ": " +
                                  why);
    };
    const auto& a = from.triple;
    const auto& b = to.triple;
    if (from.tet == to.tet) {
        bool same_face = std::is_permutation(a.begin(), a.end(), b.begin());
        if (same_face) {
            if (b[0] == a[1] && b[1] == a[2] && b[2] == a[0])
                return cyclic_matrix(triple_ratio(ring, from.tet, a[0], a[1], a[2]));
            if (b[0] == a[1] && b[1] == a[0] && b[2] == a[2])
                return transposition_matrix(ring);
            throw illegal("only the rotation (abc)->(bca) and the transposition (abc)->(bac) "
                          "are single steps");
        }
        int d = from.missing_vertex();
        bool even = state_sign(from) > 0;
        if (b[0] == a[0] && b[1] == a[1] && b[2] == d)
            return left_turn_matrix(ring, from.tet, a[0], a[1], even);
        if (b[0] == a[0] && b[2] == a[2] && b[1] == d)
            return right_turn_matrix(ring, from.tet, a[0], a[2], d, a[1], even);
        throw illegal("not a turn around a shared edge");
    }
    auto side = find_pairing(t, from.tet, a);
    if (!side) throw illegal("no face pairing glues this face");
    PathState image = map_across(t, *side, from);
    if (image != to) throw illegal("the pairing maps this state to " + image.str());
    return SymbolicMatrix3::identity(ring);
}

SymbolicMatrix3 path_matrix(const Triangulation& t, const Ring& ring,
                            const std::vector<PathState>& path) {
    SymbolicMatrix3 acc = SymbolicMatrix3::identity(ring);
    for (std::size_t i = 1; i < path.size(); ++i)
        acc = step_matrix(t, ring, path[i - 1], path[i]) * acc;
    return acc;
}

bool path_closes(const Triangulation& t, const std::vector<PathState>& path) {
    if (path.empty()) return true;
    const PathState& first = path.front();
    const PathState& last = path.back();
    if (first == last) return true;
    auto side = find_pairing(t, last.tet, last.triple);
    if (!side) return false;
    return map_across(t, *side, last) == first;
}

BoundaryEigenvalues boundary_eigenvalues(const Triangulation& t, const Ring& ring,
                                         std::size_t cusp) {
    if (cusp >= t.cusps.size()) throw std::out_of_range("cusp index out of range");
    auto eigen_pair = [&](const std::vector<PathState>& path, const char* which)
        -> std::pair<PolyFraction, PolyFraction> {
        if (!path_closes(t, path))
            throw std::runtime_error(std::string(which) + " path does not close up");
        SymbolicMatrix3 m = path_matrix(t, ring, path);
        if (!m.is_upper_triangular())
            throw std::runtime_error(std::string(which) +
                                     " coordinate-change product is not upper triangular");
        PolyFraction mid = m.at(1, 1);
        if (mid.is_zero())
            throw std::runtime_error(std::string(which) + " product has zero middle eigenvalue");
        if (mid.is_one()) return {m.at(0, 0), m.at(2, 2)};
        PolyFraction inv = mid.inverse();
        return {m.at(0, 0) * inv, m.at(2, 2) * inv};
    };
    auto [A, Astar] = eigen_pair(t.cusps[cusp].meridian, "meridian");
    auto [B, Bstar] = eigen_pair(t.cusps[cusp].longitude, "longitude");
    return {A, Astar, B, Bstar};
}

std::vector<SymbolicMatrix3> fundamental_group_generators(const Triangulation& t,
                                                          const Ring& ring) {
    std::vector<SymbolicMatrix3> out;
    for (std::size_t g = 0; g < t.generators.size(); ++g) {
        const auto& gen = t.generators[g];
        if (gen.path.empty())
            throw std::runtime_error("generator " + std::to_string(g) + " has an empty path");
        if (!path_closes(t, gen.path))
            throw std::runtime_error("generator " + std::to_string(g) +
                                     " path is not a loop at its start face");
        if (!gen.conjugator.empty()) {
            if (gen.conjugator.back() != gen.path.front())
                throw std::runtime_error("generator " + std::to_string(g) +
                                         " conjugator does not end at the path's start face");
            if (t.base_face && gen.conjugator.front() != *t.base_face)
                throw std::runtime_error("generator " + std::to_string(g) +
                                         " conjugator does not start at the base face");
        }
        SymbolicMatrix3 mp = path_matrix(t, ring, gen.path);
        SymbolicMatrix3 mc = gen.conjugator.empty() ? SymbolicMatrix3::identity(ring)
                                                    : path_matrix(t, ring, gen.conjugator);
        SymbolicMatrix3 mc_inv = mc.inverse();
        out.push_back(mc_inv * mp.inverse() * mc);
    }
    return out;
}

FieldMatrix3 FieldMatrix3::identity(const NumberField& field) {
    std::vector<NumberFieldElem> e;
    e.reserve(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e.push_back(i == j ? field.one() : field.zero());
    return from_entries(field, std::move(e));
}

FieldMatrix3 FieldMatrix3::from_entries(const NumberField& field,
                                        std::vector<NumberFieldElem> entries) {
    if (entries.size() != 9)
        throw std::invalid_argument("FieldMatrix3 needs exactly nine entries");
    FieldMatrix3 m;
    m.field_ = field;
    m.a_ = std::move(entries);
    return m;
}

FieldMatrix3 FieldMatrix3::operator*(const FieldMatrix3& o) const {
    std::vector<NumberFieldElem> e;
    e.reserve(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            e.push_back(at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j) + at(i, 2) * o.at(2, j));
    return from_entries(field_, std::move(e));
}

bool FieldMatrix3::operator==(const FieldMatrix3& o) const {
    for (int k = 0; k < 9; ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

NumberFieldElem FieldMatrix3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

FieldMatrix3 FieldMatrix3::inverse() const {
    NumberFieldElem d = det();
    if (d.is_zero()) throw std::domain_error("singular 3x3 matrix has no inverse");
    NumberFieldElem dinv = d.inverse();
    std::vector<NumberFieldElem> e;
    e.reserve(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            e.push_back((at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) * dinv);
        }
    return from_entries(field_, std::move(e));
}

FieldMatrix3 FieldMatrix3::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    FieldMatrix3 result = identity(field_);
    FieldMatrix3 base = *this;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool FieldMatrix3::is_identity() const { return *this == identity(field_); }

bool FieldMatrix3::is_upper_triangular() const {
    return at(1, 0).is_zero() && at(2, 0).is_zero() && at(2, 1).is_zero();
}

bool FieldMatrix3::is_unit_upper_triangular() const {
    if (!is_upper_triangular()) return false;
    NumberFieldElem one = field_.one();
    return at(0, 0) == one && at(1, 1) == one && at(2, 2) == one;
}

std::string FieldMatrix3::str(const std::string& var) const {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        os << "[ ";
        for (int j = 0; j < 3; ++j) {
            os << at(i, j).str(var);
            if (j < 2) os << " , ";
        }
        os << " ]\n";
    }
    return os.str();
}

std::optional<NumberFieldElem> projective_ratio(const FieldMatrix3& m, const FieldMatrix3& n) {
    int ref = -1;
    for (int k = 0; k < 9; ++k) {
        int i = k / 3, j = k % 3;
        if (!n.at(i, j).is_zero()) {
            ref = k;
            break;
        }
    }
    if (ref < 0) return std::nullopt;
    NumberFieldElem r = m.at(ref / 3, ref % 3) * n.at(ref / 3, ref % 3).inverse();
    if (r.is_zero()) return std::nullopt;
    for (int k = 0; k < 9; ++k) {
        int i = k / 3, j = k % 3;
        if (m.at(i, j) != r * n.at(i, j)) return std::nullopt;
    }
    return r;
}

FieldMatrix3 evaluate_matrix(const SymbolicMatrix3& m,
                             const std::vector<NumberFieldElem>& values,
                             const NumberField& field) {
    std::vector<NumberFieldElem> e;
    e.reserve(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const PolyFraction& f = m.at(i, j);
            NumberFieldElem den = evaluate_big(f.den(), values, field);
            if (den.is_zero())
                throw std::domain_error("holonomy entry denominator vanished: " + f.den().str());
            e.push_back(evaluate_big(f.num(), values, field) * den.inverse());
        }
    return FieldMatrix3::from_entries(field, std::move(e));
}

UnipotentUpperTriangular unipotent_entries(const FieldMatrix3& m) {
    if (!m.is_unit_upper_triangular())
        throw std::domain_error("matrix is not unipotent upper triangular:\n" + m.str());
    return {m.at(0, 1), m.at(1, 2), m.at(0, 2)};
}

namespace {

/// Sublattice of Z^2 given by a basis of at most two vectors.
struct Lattice2 {
    int rank = 0;
    std::array<long, 2> u{0, 0};
    std::array<long, 2> v{0, 0};
};

Lattice2 lattice_zero() { return {}; }

/// Rank-1 lattice spanned by exactly (a,b) (not reduced to primitive).
Lattice2 lattice_vector(long a, long b) {
    if (a == 0 && b == 0) return {};
    Lattice2 l;
    l.rank = 1;
    l.u = {a, b};
    return l;
}

/// The full line of integer solutions through (a,b): the primitive vector.
Lattice2 lattice_line(long a, long b) {
    long g = std::gcd(std::abs(a), std::abs(b));
    if (g == 0) return {};
    return lattice_vector(a / g, b / g);
}

Lattice2 lattice_full() {
    Lattice2 l;
    l.rank = 2;
    l.u = {1, 0};
    l.v = {0, 1};
    return l;
}

/// Integer solutions (s,t) of s*x + t*xp = 0 over the coefficient field.
Lattice2 row_solutions(const NumberFieldElem& x, const NumberFieldElem& xp) {
    if (x.is_zero() && xp.is_zero()) return lattice_full();
    if (x.is_zero()) return lattice_line(1, 0);
    if (xp.is_zero()) return lattice_line(0, 1);
    NumberFieldElem lam = xp * x.inverse();
    if (!lam.is_rational()) return lattice_zero();
    Rat pq = lam.rational_value();
    mpz_class p = pq.get_num(), q = pq.get_den();
    if (!p.fits_slong_p() || !q.fits_slong_p())
        throw ResourceError("peripheral relation ratio exceeds machine integers: " + rat_str(pq));
    return lattice_line(-p.get_si(), q.get_si());
}

Lattice2 intersect_small(const Lattice2& a, const Lattice2& b) {
    if (a.rank == 2) return b;
    if (b.rank == 2) return a;
    if (a.rank == 0 || b.rank == 0) return lattice_zero();
    long cross = a.u[0] * b.u[1] - a.u[1] * b.u[0];
    return cross == 0 ? a : lattice_zero();
}

/// {(s,t) : U^s V^t = 1} for commuting unipotent upper-triangular U, V with
/// strict upper entries (a,b,c) and (a',b',c').
Lattice2 unipotent_pair_lattice(const UnipotentUpperTriangular& U,
                                const UnipotentUpperTriangular& V) {
    if (U.a * V.b != V.a * U.b)
        throw std::logic_error("peripheral matrices do not commute");
    Lattice2 lin = intersect_small(row_solutions(U.a, V.a), row_solutions(U.b, V.b));
    if (lin.rank == 0) return lin;
    if (lin.rank == 2) return row_solutions(U.c, V.c);  // a,b all zero: only s*c + t*c' = 0
    // On the line (s,t) = k (s0,t0) the corner entry of U^s V^t is k^2 P + k Q.
    Rat s0(lin.u[0]), t0(lin.u[1]);
    NumberFieldElem ab = U.a * U.b, apbp = V.a * V.b, abp = U.a * V.b;
    NumberFieldElem P = (ab * (s0 * s0) + apbp * (t0 * t0)) * Rat(1, 2) + abp * (s0 * t0);
    NumberFieldElem Q = U.c * s0 + V.c * t0 - (ab * s0 + apbp * t0) * Rat(1, 2);
    return (P.is_zero() && Q.is_zero()) ? lin : lattice_zero();
}

/// Order of x in the multiplicative group when x is a root of unity, else 0.
unsigned eigen_order(const NumberFieldElem& x) {
    if (x == x.field().one()) return 1;
    unsigned ord = 0;
    if (is_cyclotomic(minimal_polynomial(x), &ord)) return ord;
    return 0;
}

/// Smallest n >= 1 with m^n == 1 given the lcm k of its eigenvalue orders;
/// 0 when m has infinite order.
long matrix_order(const FieldMatrix3& m, unsigned k) {
    if (k == 0) return 0;
    if (!m.pow(static_cast<long>(k)).is_identity()) return 0;
    for (unsigned d = 1; d <= k; ++d)
        if (k % d == 0 && m.pow(static_cast<long>(d)).is_identity()) return static_cast<long>(d);
    return static_cast<long>(k);
}

/// Hermite basis of the lattice spanned by integer rows: e1 = (x1,y1) with
/// x1 = gcd of first coordinates, e2 = (0,y2).  Requires full rank.
void hermite_basis(std::vector<std::array<long, 2>> rows, std::array<long, 2>& e1,
                   std::array<long, 2>& e2) {
    e1 = {0, 0};
    long g2 = 0;
    for (auto r : rows) {
        while (r[0] != 0) {
            if (e1[0] == 0) {
                std::swap(e1, r);
                continue;
            }
            long q = r[0] / e1[0];
            r[0] -= q * e1[0];
            r[1] -= q * e1[1];
            if (r[0] != 0) std::swap(e1, r);
        }
        g2 = std::gcd(g2, std::abs(r[1]));
    }
    if (e1[0] < 0) {
        e1[0] = -e1[0];
        e1[1] = -e1[1];
    }
    if (e1[0] == 0 || g2 == 0)
        throw std::logic_error("eigenvalue-compatibility lattice lost full rank");
    e2 = {0, g2};
    e1[1] %= g2;
}

PeripheralRank rank_from_lattice(const Lattice2& L) {
    PeripheralRank out;
    if (L.rank == 0) {
        out.rank = 2;
        return out;
    }
    auto witness_from = [&](std::array<long, 2> w) {
        // gM^u gL^v = 1  <=>  gM^u = gL^(-v)
        long n = w[0], np = -w[1];
        if (n < 0 || (n == 0 && np < 0)) {
            n = -n;
            np = -np;
        }
        out.has_witness = true;
        out.meridian_power = n;
        out.longitude_power = np;
    };
    if (L.rank == 1) {
        long g = std::gcd(std::abs(L.u[0]), std::abs(L.u[1]));
        out.rank = g == 1 ? 1 : 2;
        witness_from(L.u);
        return out;
    }
    long det = std::abs(L.u[0] * L.v[1] - L.u[1] * L.v[0]);
    long d1 = std::gcd(std::gcd(std::abs(L.u[0]), std::abs(L.u[1])),
                       std::gcd(std::abs(L.v[0]), std::abs(L.v[1])));
    long d2 = det / d1;
    out.rank = (d1 > 1 ? 1 : 0) + (d2 > 1 ? 1 : 0);
    // prefer the shorter basis vector as the reported relation
    std::array<long, 2> w =
        std::abs(L.u[0]) + std::abs(L.u[1]) <= std::abs(L.v[0]) + std::abs(L.v[1]) ? L.u : L.v;
    witness_from(w);
    return out;
}

}  // namespace

PeripheralRank peripheral_rank(const UnipotentUpperTriangular& gM,
                               const UnipotentUpperTriangular& gL) {
    Rat two(2);
    std::array<std::pair<NumberFieldElem, NumberFieldElem>, 3> rows = {{
        {gM.a, gL.a},
        {gM.b, gL.b},
        {gM.c * two - gM.a * gM.b, gL.c * two - gL.a * gL.b},
    }};
    std::vector<std::vector<NumberFieldElem>> mat;
    for (const auto& r : rows) mat.push_back({r.first, r.second});
    PeripheralRank out;
    out.rank = static_cast<int>(field_rref_rank(mat));
    if (out.rank != 1) return out;

    bool m_zero = true, l_zero = true;
    for (const auto& r : rows) {
        m_zero = m_zero && r.first.is_zero();
        l_zero = l_zero && r.second.is_zero();
    }
    if (m_zero) {
        out.has_witness = true;
        out.meridian_power = 1;
        out.longitude_power = 0;
        return out;
    }
    if (l_zero) {
        out.has_witness = true;
        out.meridian_power = 0;
        out.longitude_power = 1;
        return out;
    }
    for (const auto& r : rows) {
        if (r.first.is_zero() || r.second.is_zero()) continue;
        NumberFieldElem lam = r.first * r.second.inverse();  // = n'/n
        if (!lam.is_rational()) return out;
        Rat pq = lam.rational_value();
        mpz_class p = pq.get_num(), q = pq.get_den();
        if (!p.fits_slong_p() || !q.fits_slong_p()) return out;
        Rat qp(q), pp(p);
        bool ok = true;
        for (const auto& s : rows) ok = ok && s.first * qp == s.second * pp;
        if (ok) {
            out.has_witness = true;
            out.meridian_power = q.get_si();
            out.longitude_power = p.get_si();
        }
        return out;
    }
    return out;
}

PeripheralRank peripheral_rank_general(const FieldMatrix3& gM, const FieldMatrix3& gL) {
    if (!gM.is_upper_triangular() || !gL.is_upper_triangular())
        throw std::logic_error("peripheral rank needs upper-triangular matrices");
    const NumberField& F = gM.field();
    if (gM.at(1, 1) != F.one() || gL.at(1, 1) != F.one())
        throw std::logic_error("peripheral rank expects middle eigenvalue 1");

    NumberFieldElem alpha = gM.at(0, 0), alphas = gM.at(2, 2);
    NumberFieldElem beta = gL.at(0, 0), betas = gL.at(2, 2);
    unsigned oa = eigen_order(alpha), oas = eigen_order(alphas);
    unsigned ob = eigen_order(beta), obs = eigen_order(betas);
    unsigned kM = (oa && oas) ? std::lcm(oa, oas) : 0;
    unsigned kL = (ob && obs) ? std::lcm(ob, obs) : 0;

    Lattice2 L;
    if (kM == 0 && kL == 0) {
        throw std::logic_error(
            "peripheral rank: both carriers have infinite-order eigenvalues");
    } else if (kM == 0) {
        long o = matrix_order(gL, kL);
        L = o ? lattice_vector(0, o) : lattice_zero();
    } else if (kL == 0) {
        long o = matrix_order(gM, kM);
        L = o ? lattice_vector(o, 0) : lattice_zero();
    } else {
        if (static_cast<unsigned long>(kM) * kL > 20000)
            throw ResourceError("peripheral eigenvalue orders too large: " + std::to_string(kM) +
                                " x " + std::to_string(kL));
        std::vector<NumberFieldElem> pa{F.one()}, pas{F.one()}, pb{F.one()}, pbs{F.one()};
        for (unsigned r = 1; r < kM; ++r) {
            pa.push_back(pa.back() * alpha);
            pas.push_back(pas.back() * alphas);
        }
        for (unsigned r = 1; r < kL; ++r) {
            pb.push_back(pb.back() * beta);
            pbs.push_back(pbs.back() * betas);
        }
        std::vector<std::array<long, 2>> rows = {{static_cast<long>(kM), 0},
                                                 {0, static_cast<long>(kL)}};
        NumberFieldElem one = F.one();
        for (unsigned r = 0; r < kM; ++r)
            for (unsigned rp = 0; rp < kL; ++rp) {
                if (r == 0 && rp == 0) continue;
                if (pa[r] * pb[rp] == one && pas[r] * pbs[rp] == one)
                    rows.push_back({static_cast<long>(r), static_cast<long>(rp)});
            }
        std::array<long, 2> e1{}, e2{};
        hermite_basis(std::move(rows), e1, e2);
        UnipotentUpperTriangular u1 = unipotent_entries(gM.pow(e1[0]) * gL.pow(e1[1]));
        UnipotentUpperTriangular u2 = unipotent_entries(gL.pow(e2[1]));
        Lattice2 lam = unipotent_pair_lattice(u1, u2);
        if (lam.rank == 0) {
            L = lattice_zero();
        } else if (lam.rank == 1) {
            L = lattice_vector(lam.u[0] * e1[0] + lam.u[1] * e2[0],
                               lam.u[0] * e1[1] + lam.u[1] * e2[1]);
        } else {
            L.rank = 2;
            L.u = e1;
            L.v = e2;
        }
    }
    return rank_from_lattice(L);
}

NumberFieldElem quadratic_conjugate(const NumberFieldElem& x) {
    const NumberField& F = x.field();
    if (F.degree() == 1) return x;
    if (F.degree() != 2)
        throw std::domain_error("conjugation is only defined for fields of degree <= 2");
    Rat p = F.modulus().coeffs()[1];
    const auto& c = x.value().coeffs();
    Rat c0 = c.empty() ? Rat(0) : c[0];
    Rat c1 = c.size() > 1 ? c[1] : Rat(0);
    // Y -> -p - Y, so c0 + c1 Y -> (c0 - c1 p) - c1 Y
    return F.element(UniPoly({c0 - c1 * p, -c1}));
}

FieldMatrix3 conjugate_transpose(const FieldMatrix3& m) {
    std::vector<NumberFieldElem> e;
    e.reserve(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e.push_back(quadratic_conjugate(m.at(j, i)));
    return FieldMatrix3::from_entries(m.field(), std::move(e));
}

HermitianData hermitian_conjugator(const NumberFieldElem& Z0) {
    const NumberField& F = Z0.field();
    NumberFieldElem one = F.one();
    if (Z0.is_zero() || Z0 == -one)
        throw std::domain_error("base triple ratio must differ from 0 and -1");
    NumberFieldElem a = -(one + Z0) * Z0.inverse();
    NumberFieldElem zero = F.zero();
    FieldMatrix3 A = FieldMatrix3::from_entries(F, {a, zero, zero, zero, -one, zero, zero, zero,
                                                    one});
    FieldMatrix3 J = FieldMatrix3::from_entries(F, {zero, zero, one, zero, one, zero, one, zero,
                                                    zero});
    FieldMatrix3 Ainv = A.inverse();
    FieldMatrix3 J0 = conjugate_transpose(Ainv) * J * Ainv;
    return {A, J0};
}

bool preserves_form_projectively(const FieldMatrix3& g, const FieldMatrix3& form) {
    FieldMatrix3 lhs = conjugate_transpose(g) * form * g;
    return projective_ratio(lhs, form).has_value();
}

}  // namespace flagsolve
