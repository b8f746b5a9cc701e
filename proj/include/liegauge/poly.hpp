#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liegauge/scalar.hpp"

namespace liegauge {

// A variable of the coefficient ring: either the base variable z of C(z) or a
// differential indeterminate t_i^(j) (index i >= 1, derivative order j >= 0).
// t-variables are materialized lazily, so the derivation can introduce
// t_i^(j+1) without a pre-declared variable universe.
struct Variable {
    enum class Kind : unsigned char { Z, T };

    Kind kind = Kind::Z;
    int index = 0; // the i in t_i (T only)
    int order = 0; // the j in t_i^(j) (T only)

    static Variable z() { return Variable{}; }
    static Variable t(int index, int order = 0);

    // Ordering: z < t1 < t1' < ... < t2 < t2' < ...
    friend auto operator<=>(const Variable&, const Variable&) = default;

    std::string str() const;
};

// Sparse exponent vector, kept sorted by Variable with strictly positive
// exponents.
class Monomial {
public:
    using Exponents = std::vector<std::pair<Variable, int>>;

    Monomial() = default;
    explicit Monomial(Variable v, int exp = 1);

    const Exponents& exps() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int total_degree() const;
    int exponent(const Variable& v) const;

    Monomial operator*(const Monomial& o) const;
    // Componentwise quotient; nullopt if some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const;
    // Componentwise min, used for common-factor cancellation.
    static Monomial gcd(const Monomial& a, const Monomial& b);

    void set_exponent(const Variable& v, int exp);

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const;

private:
    Exponents exps_;
};

// Graded lexicographic comparison (total degree first, then lexicographic
// from the largest variable down). Gives the canonical term order used for
// printing and for fraction-free elimination.
int cmp_grlex(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_grlex(a, b) < 0;
    }
};

// Sparse multivariate polynomial over Scalar. The zero polynomial is the
// empty term map; no zero coefficients are ever stored.
class Poly {
public:
    using Terms = std::map<Monomial, Scalar, GrlexLess>;

    Poly() = default;
    Poly(int c) : Poly(Scalar(c)) {}
    explicit Poly(const Scalar& c);
    explicit Poly(const Variable& v);

    static Poly z() { return Poly(Variable::z()); }
    static Poly t(int index, int order = 0) { return Poly(Variable::t(index, order)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value as a constant; requires is_constant().
    Scalar constant_value() const;
    int total_degree() const; // -1 for the zero polynomial

    // Leading term in the grlex order; requires non-zero.
    const std::pair<const Monomial, Scalar>& leading() const;

    void add_term(const Monomial& m, const Scalar& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator*(const Scalar& c) const;
    Poly& operator*=(const Scalar& c);
    Poly pow(int k) const; // k >= 0

    friend bool operator==(const Poly&, const Poly&) = default;

    // The derivation: dz/dz = 1, d(t_i^(j)) = t_i^(j+1), extended by
    // linearity and the product rule.
    Poly derive() const;

    // Exact quotient, nullopt when o does not divide exactly.
    std::optional<Poly> divide_exact(const Poly& o) const;
    // Divide every term by a common monomial factor (must divide exactly).
    Poly monomial_quotient(const Monomial& m) const;
    // Componentwise-min monomial over all terms; requires non-zero.
    Monomial content_monomial() const;
    // gcd of coefficient numerators over lcm of denominators, carrying the
    // sign of the leading coefficient; requires non-zero.
    Scalar signed_rational_content() const;

    // The single variable this polynomial involves, if it involves exactly
    // one; nullopt for constants and genuinely multivariate polynomials.
    std::optional<Variable> sole_variable() const;
    int degree_in(const Variable& v) const;

    // Multiply every t_i (any derivative order) by factors[i-1]. Factors for
    // indices beyond the vector are taken as 1.
    Poly rescale_t(const std::vector<Scalar>& factors) const;

    std::string str() const;

private:
    Terms terms_;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

// Euclidean gcd of two univariate polynomials in the same variable v,
// returned monic. Constants map to 1.
Poly univariate_gcd(const Poly& a, const Poly& b, const Variable& v);

} // namespace liegauge
