#include "liegauge/poly.hpp"

#include <algorithm>
#include <sstream>

#include "liegauge/errors.hpp"

namespace liegauge {

Scalar scalar_pow(const Scalar& s, long k) {
    if (k == 0) return Scalar(1);
    if (s == 0 && k < 0) throw DegenerateInput("0 has no negative power");
    Scalar base = k > 0 ? s : Scalar(1) / s;
    long e = k > 0 ? k : -k;
    Scalar out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

Variable Variable::t(int index, int order) {
    if (index < 1 || order < 0) throw DegenerateInput("bad t-variable index/order");
    Variable v;
    v.kind = Kind::T;
    v.index = index;
    v.order = order;
    return v;
}

std::string Variable::str() const {
    if (kind == Kind::Z) return "z";
    std::string s = "t" + std::to_string(index);
    s.append(static_cast<size_t>(order), '\'');
    return s;
}

Monomial::Monomial(Variable v, int exp) {
    if (exp > 0) exps_.emplace_back(v, exp);
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

int Monomial::exponent(const Variable& v) const {
    for (const auto& [w, e] : exps_)
        if (w == v) return e;
    return 0;
}

void Monomial::set_exponent(const Variable& v, int exp) {
    auto it = std::find_if(exps_.begin(), exps_.end(),
                           [&](const auto& p) { return p.first == v; });
    if (it != exps_.end()) {
        if (exp > 0)
            it->second = exp;
        else
            exps_.erase(it);
        return;
    }
    if (exp <= 0) return;
    auto pos = std::lower_bound(exps_.begin(), exps_.end(), v,
                                [](const auto& p, const Variable& w) { return p.first < w; });
    exps_.insert(pos, {v, exp});
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto ia = exps_.begin(), ib = o.exps_.begin();
    while (ia != exps_.end() || ib != o.exps_.end()) {
        if (ib == o.exps_.end() || (ia != exps_.end() && ia->first < ib->first)) {
            out.exps_.push_back(*ia++);
        } else if (ia == exps_.end() || ib->first < ia->first) {
            out.exps_.push_back(*ib++);
        } else {
            out.exps_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial out;
    auto ia = exps_.begin();
    for (const auto& [v, e] : o.exps_) {
        while (ia != exps_.end() && ia->first < v) out.exps_.push_back(*ia++);
        if (ia == exps_.end() || ia->first != v || ia->second < e) return std::nullopt;
        if (ia->second > e) out.exps_.emplace_back(v, ia->second - e);
        ++ia;
    }
    while (ia != exps_.end()) out.exps_.push_back(*ia++);
    return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            out.exps_.emplace_back(ia->first, std::min(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    return out;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << v.str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

int cmp_grlex(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.exps().rbegin(), ib = b.exps().rbegin();
    while (ia != a.exps().rend() || ib != b.exps().rend()) {
        if (ia == a.exps().rend()) return -1;
        if (ib == b.exps().rend()) return 1;
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    return 0;
}

Poly::Poly(const Scalar& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly::Poly(const Variable& v) { terms_.emplace(Monomial(v), Scalar(1)); }

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar Poly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw DegenerateInput("not a constant polynomial");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

const std::pair<const Monomial, Scalar>& Poly::leading() const {
    if (terms_.empty()) throw DegenerateInput("zero polynomial has no leading term");
    return *terms_.rbegin();
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Poly& Poly::operator*=(const Scalar& c) {
    *this = *this * c;
    return *this;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw DegenerateInput("negative polynomial power");
    Poly out(Scalar(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) out *= base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return out;
}

Poly Poly::derive() const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.exps()) {
            Monomial nm = m;
            nm.set_exponent(v, e - 1);
            if (v.kind == Variable::Kind::T) {
                Variable next = Variable::t(v.index, v.order + 1);
                nm.set_exponent(next, nm.exponent(next) + 1);
            }
            out.add_term(nm, c * e);
        }
    }
    return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
    if (o.is_zero()) throw DegenerateInput("division by zero polynomial");
    Poly r = *this, q;
    const auto& [dm, dc] = o.leading();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        auto mq = rm.divide(dm);
        if (!mq) return std::nullopt;
        Scalar cq = rc / dc;
        Poly piece;
        piece.add_term(*mq, cq);
        q += piece;
        r -= o * piece;
    }
    return q;
}

Poly Poly::monomial_quotient(const Monomial& m) const {
    Poly out;
    for (const auto& [mm, c] : terms_) {
        auto d = mm.divide(m);
        if (!d) throw DegenerateInput("monomial does not divide term");
        out.terms_.emplace(*d, c);
    }
    return out;
}

Monomial Poly::content_monomial() const {
    if (terms_.empty()) throw DegenerateInput("zero polynomial has no content");
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        g = Monomial::gcd(g, m);
        if (g.is_one()) break;
    }
    return g;
}

Scalar Poly::signed_rational_content() const {
    if (terms_.empty()) throw DegenerateInput("zero polynomial has no content");
    Int g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        g = boost::multiprecision::gcd(g, numerator(c));
        l = boost::multiprecision::lcm(l, denominator(c));
    }
    Scalar content(g, l);
    if (leading().second < 0) content = -content;
    return content;
}

std::optional<Variable> Poly::sole_variable() const {
    std::optional<Variable> found;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.exps()) {
            if (!found)
                found = v;
            else if (*found != v)
                return std::nullopt;
        }
    }
    return found;
}

int Poly::degree_in(const Variable& v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

Poly Poly::rescale_t(const std::vector<Scalar>& factors) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Scalar nc = c;
        for (const auto& [v, e] : m.exps()) {
            if (v.kind != Variable::Kind::T) continue;
            size_t i = static_cast<size_t>(v.index);
            if (i >= 1 && i <= factors.size()) nc *= scalar_pow(factors[i - 1], e);
        }
        out.add_term(m, nc);
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Largest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Scalar a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << scalar_str(a);
        } else if (a == 1) {
            os << m.str();
        } else {
            os << scalar_str(a) << "*" << m.str();
        }
    }
    return os.str();
}

namespace {

// Dense coefficient list of a univariate polynomial, low degree first.
std::vector<Scalar> dense_coeffs(const Poly& p, const Variable& v) {
    std::vector<Scalar> c(static_cast<size_t>(p.degree_in(v)) + 1, Scalar(0));
    for (const auto& [m, k] : p.terms()) c[static_cast<size_t>(m.exponent(v))] += k;
    return c;
}

void trim(std::vector<Scalar>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

Poly univariate_gcd(const Poly& a, const Poly& b, const Variable& v) {
    std::vector<Scalar> x = dense_coeffs(a, v), y = dense_coeffs(b, v);
    trim(x);
    trim(y);
    while (!y.empty()) {
        // x mod y
        while (x.size() >= y.size() && !x.empty()) {
            Scalar q = x.back() / y.back();
            size_t shift = x.size() - y.size();
            for (size_t i = 0; i < y.size(); ++i) x[shift + i] -= q * y[i];
            trim(x);
        }
        std::swap(x, y);
    }
    if (x.empty()) throw DegenerateInput("gcd of zero polynomials");
    Poly out;
    Scalar lead = x.back();
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        out.add_term(Monomial(v, static_cast<int>(i)), x[i] / lead);
    }
    return out;
}

} // namespace liegauge
