#include "flagsolve/unipoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace flagsolve {

UniPoly UniPoly::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x = -x;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(c));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UniPoly(*it);
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rat(1 / lc());
}

UniPoly UniPoly::negate_variable() const {
    std::vector<Rat> c(c_);
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::reversed() const {
    std::vector<Rat> c(c_.rbegin(), c_.rend());
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc{Rat(1)};
    UniPoly base = *this;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& a = (*this)[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        Rat mag = rat_abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (k == 0 || !unit) out << mag.get_str();
        if (k > 0) {
            if (!unit) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const int db = b.degree();
    const Rat inv_lc = 1 / b.lc();
    for (int k = a.degree(); k >= db; --k) {
        Rat q = rem[static_cast<std::size_t>(k)] * inv_lc;
        if (q == 0) continue;
        quo[static_cast<std::size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

std::pair<Rat, UniPoly> integer_primitive(const UniPoly& p) {
    if (p.is_zero()) return {Rat(0), UniPoly()};
    Int den(1);
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Int g(0);
    std::vector<Rat> scaled(p.coeffs());
    for (auto& c : scaled) {
        c *= Rat(den);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    if (sgn(scaled.back()) < 0) g = -g;
    for (auto& c : scaled) c /= Rat(g);
    return {Rat(g) / Rat(den), UniPoly(std::move(scaled))};
}

namespace {

// One primitive pseudo-remainder step: returns the primitive part of
// prem(a, b), both inputs assumed integer-primitive.
UniPoly primitive_prem(const UniPoly& a, const UniPoly& b) {
    int delta = a.degree() - b.degree();
    UniPoly scaled = a * rat_pow(b.lc(), static_cast<unsigned long>(delta) + 1);
    auto [q, r] = divmod(scaled, b);
    (void)q;
    if (r.is_zero()) return r;
    return integer_primitive(r).second;
}

}  // namespace

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = integer_primitive(a).second;
    UniPoly g = integer_primitive(b).second;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UniPoly r = primitive_prem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return UniPoly{Rat(1)};
    UniPoly g = poly_gcd(p, p.derivative());
    return exact_div(p, g).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm on the monic normalization.
    UniPoly f = p.monic();
    UniPoly fp = f.derivative();
    UniPoly a = poly_gcd(f, fp);
    UniPoly b = exact_div(f, a);
    UniPoly c = exact_div(fp, a);
    UniPoly d = c - b.derivative();
    for (int i = 1; !b.is_constant(); ++i) {
        UniPoly t = poly_gcd(b, d);
        if (t.degree() > 0) out.emplace_back(t.monic(), i);
        b = exact_div(b, t);
        c = exact_div(d, t);
        d = c - b.derivative();
    }
    return out;
}

Rat resultant(const UniPoly& a, const UniPoly& b) {
    // Euclidean-remainder based resultant with explicit degree bookkeeping.
    if (a.is_zero() || b.is_zero()) return Rat(0);
    UniPoly f = a, g = b;
    Rat res(1);
    bool swapped = false;
    if (f.degree() < g.degree()) {
        std::swap(f, g);
        swapped = ((static_cast<long>(a.degree()) * b.degree()) % 2) != 0;
    }
    while (g.degree() > 0) {
        auto [q, r] = divmod(f, g);
        (void)q;
        if (r.is_zero()) return Rat(0);
        // res(f, g) = lc(g)^(deg f - deg r) * (-1)^(deg f * deg g) * res(g, r)
        res *= rat_pow(g.lc(), static_cast<unsigned long>(f.degree() - r.degree()));
        if ((static_cast<long>(f.degree()) * g.degree()) % 2 != 0) res = -res;
        f = std::move(g);
        g = std::move(r);
    }
    // g is a nonzero constant now.
    res *= rat_pow(g.lc(), static_cast<unsigned long>(f.degree()));
    return swapped ? -res : res;
}

Rat discriminant(const UniPoly& p) {
    if (p.degree() < 1) throw std::domain_error("discriminant: degree < 1");
    Rat r = resultant(p, p.derivative()) / p.lc();
    long d = p.degree();
    if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
    return r;
}

namespace {

// Minimal recursive-descent parser for polynomial expressions.
class ExprParser {
public:
    ExprParser(const std::string& text, const std::string& var) : s_(text), var_(var) {}

    UniPoly parse() {
        UniPoly p = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("parse_unipoly: trailing input at '" + s_.substr(pos_) + "'");
        return p;
    }

private:
    UniPoly expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        UniPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                UniPoly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    UniPoly term() {
        UniPoly acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                get();
                acc *= factor();
            } else if (c == '/') {
                get();
                UniPoly d = factor();
                if (!d.is_constant() || d.is_zero())
                    throw std::invalid_argument("parse_unipoly: '/' needs a nonzero constant divisor");
                acc = acc * Rat(1 / d[0]);
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                // Implicit multiplication, e.g. "2Y" or "3(Y+1)".
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    UniPoly factor() {
        skip_ws();
        UniPoly base;
        char c = peek();
        if (c == '(') {
            get();
            base = expr();
            skip_ws();
            if (get() != ')') throw std::invalid_argument("parse_unipoly: missing ')'");
        } else if (c == '-') {
            get();
            return -factor();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = UniPoly(number());
        } else if (match_var()) {
            base = UniPoly::variable();
        } else {
            throw std::invalid_argument("parse_unipoly: unexpected character '" + std::string(1, c) + "'");
        }
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            Rat e = number();
            if (e.get_den() != 1 || e < 0)
                throw std::invalid_argument("parse_unipoly: exponent must be a nonnegative integer");
            base = base.pow(static_cast<unsigned>(e.get_num().get_ui()));
        }
        return base;
    }

    Rat number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw std::invalid_argument("parse_unipoly: expected a number");
        Rat value(s_.substr(start, pos_ - start));
        // A '/' directly between two integer literals is a rational literal.
        std::size_t save = pos_;
        skip_ws();
        if (peek() == '/') {
            std::size_t slash = pos_;
            get();
            skip_ws();
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (dstart != pos_) {
                value /= Rat(s_.substr(dstart, pos_ - dstart));
                value.canonicalize();
                return value;
            }
            pos_ = slash;
            return value;
        }
        pos_ = save;
        return value;
    }

    bool match_var() {
        if (s_.compare(pos_, var_.size(), var_) == 0) {
            pos_ += var_.size();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    const std::string& s_;
    std::string var_;
    std::size_t pos_ = 0;
};

}  // namespace

UniPoly parse_unipoly(const std::string& text, const std::string& var) {
    return ExprParser(text, var).parse();
}

}  // namespace flagsolve
