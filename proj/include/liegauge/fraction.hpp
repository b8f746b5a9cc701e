#pragma once

#include <string>

#include "liegauge/poly.hpp"

namespace liegauge {

// An element of the exact coefficient field: a fraction of Polys. The
// representation is normalized (integer content stripped, common monomial
// factors cancelled, full gcd cancellation in the univariate case) but not
// globally canonical; equality is decided by cross-multiplication.
class FieldElem {
public:
    FieldElem() : num_(), den_(Scalar(1)) {}
    FieldElem(int c) : num_(Scalar(c)), den_(Scalar(1)) {}
    FieldElem(const Scalar& c) : num_(c), den_(Scalar(1)) {}
    FieldElem(const Poly& p) : num_(p), den_(Scalar(1)) {}
    FieldElem(Poly num, Poly den);

    static FieldElem z() { return FieldElem(Poly::z()); }
    static FieldElem t(int index, int order = 0) { return FieldElem(Poly::t(index, order)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Scalar constant_value() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
    FieldElem pow(int k) const;

    // Quotient-rule derivation.
    FieldElem derive() const;

    // Exact equality via cross-multiplication.
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Substitute t_i -> factors[i-1] * t_i (all derivative orders).
    FieldElem rescale_t(const std::vector<Scalar>& factors) const;

    std::string str() const;

private:
    void normalize();

    Poly num_, den_;
};

} // namespace liegauge
