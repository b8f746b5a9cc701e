#include "liegauge/fraction.hpp"

#include <sstream>

#include "liegauge/errors.hpp"

namespace liegauge {

FieldElem::FieldElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DegenerateInput("division by zero");
    normalize();
}

void FieldElem::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Scalar(1));
        return;
    }
    // Cancel the common monomial factor.
    Monomial g = Monomial::gcd(num_.content_monomial(), den_.content_monomial());
    if (!g.is_one()) {
        num_ = num_.monomial_quotient(g);
        den_ = den_.monomial_quotient(g);
    }
    if (den_.is_constant()) {
        Scalar d = den_.constant_value();
        if (d != 1) num_ *= Scalar(1) / d;
        den_ = Poly(Scalar(1));
        return;
    }
    // Univariate case: cancel via gcd.
    auto vn = num_.sole_variable();
    auto vd = den_.sole_variable();
    if (vd && vn && *vn == *vd) {
        Poly g2 = univariate_gcd(num_, den_, *vd);
        if (g2.total_degree() > 0) {
            num_ = *num_.divide_exact(g2);
            den_ = *den_.divide_exact(g2);
        }
        if (den_.is_constant()) {
            Scalar d = den_.constant_value();
            if (d != 1) num_ *= Scalar(1) / d;
            den_ = Poly(Scalar(1));
            return;
        }
    }
    // Strip integer content so the denominator is primitive with positive
    // leading coefficient.
    Scalar c = den_.signed_rational_content();
    if (c != 1) {
        Scalar inv = Scalar(1) / c;
        num_ *= inv;
        den_ *= inv;
    }
}

Scalar FieldElem::constant_value() const {
    if (!is_constant()) throw DegenerateInput("not a constant");
    return num_.constant_value() / den_.constant_value();
}

FieldElem FieldElem::operator-() const {
    FieldElem out = *this;
    out.num_ = -out.num_;
    return out;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return FieldElem(num_ + o.num_, den_);
    return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (is_zero() || o.is_zero()) return FieldElem();
    return FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    if (o.is_zero()) throw DegenerateInput("division by zero");
    if (is_zero()) return FieldElem();
    return FieldElem(num_ * o.den_, den_ * o.num_);
}

FieldElem FieldElem::pow(int k) const {
    if (k < 0) return FieldElem(1) / pow(-k);
    FieldElem out(1), base = *this;
    while (k > 0) {
        if (k & 1) out *= base;
        if (k > 1) base *= base;
        k >>= 1;
    }
    return out;
}

FieldElem FieldElem::derive() const {
    if (is_polynomial()) return FieldElem(num_.derive());
    return FieldElem(num_.derive() * den_ - num_ * den_.derive(), den_ * den_);
}

bool FieldElem::operator==(const FieldElem& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

FieldElem FieldElem::rescale_t(const std::vector<Scalar>& factors) const {
    return FieldElem(num_.rescale_t(factors), den_.rescale_t(factors));
}

std::string FieldElem::str() const {
    if (den_.is_constant()) return num_.str();
    std::ostringstream os;
    bool wrap_num = num_.terms().size() > 1;
    if (wrap_num)
        os << "(" << num_.str() << ")";
    else
        os << num_.str();
    os << "/";
    // Parenthesize the denominator unless it is a bare variable power.
    bool bare = den_.terms().size() == 1 && den_.leading().second == 1 &&
                den_.leading().first.exps().size() == 1;
    if (bare)
        os << den_.str();
    else
        os << "(" << den_.str() << ")";
    return os.str();
}

} // namespace liegauge
