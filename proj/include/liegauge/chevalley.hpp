#pragma once

#include <map>
#include <memory>
#include <vector>

#include "liegauge/matrix.hpp"
#include "liegauge/root_system.hpp"

namespace liegauge {

// Small dense integer matrix, used for the basis matrices themselves.
struct IntMat {
    int n = 0;
    std::vector<long long> e;

    IntMat() = default;
    explicit IntMat(int n_) : n(n_), e(static_cast<size_t>(n_) * n_, 0) {}

    long long& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    long long at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator-() const;
    IntMat scaled(long long c) const;
    // Exact division by an integer; throws when any entry is not divisible.
    IntMat divided(long long c) const;
    bool is_zero() const;
    bool is_diagonal() const;
    friend bool operator==(const IntMat&, const IntMat&) = default;
};

IntMat bracket(const IntMat& a, const IntMat& b);
Mat to_field(const IntMat& m);

class LieElement;

// The matrix Chevalley basis {X_alpha, H_alpha_i} of the defining
// representation. Non-simple root vectors are generated from the simple
// seeds by bracketing, normalized so that [X_a, X_-a] is the coroot.
class ChevalleyBasis : public std::enable_shared_from_this<ChevalleyBasis> {
public:
    static std::shared_ptr<const ChevalleyBasis> build(GroupType type, int rank);

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> shared_rs() const { return rs_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(2 * xpos_.size() + h_.size()); }

    const IntMat& X(const SignedRoot& sr) const;
    const IntMat& H(int i) const; // i in [1, rank]

    // N with [X_a, X_b] = N X_{a+b}; 0 when a+b is not a root.
    int struct_const(const SignedRoot& a, const SignedRoot& b) const;
    SignedRoot signed_root(const Root& r) const;

    LieElement zero_element() const;

private:
    friend LieElement decompose(const Mat& m, std::shared_ptr<const ChevalleyBasis> basis);

    ChevalleyBasis() = default;
    void construct(std::shared_ptr<const RootSystem> rs, std::vector<IntMat> e,
                   std::vector<IntMat> f);
    void prepare_solver();

    std::shared_ptr<const RootSystem> rs_;
    int n_ = 0;
    std::vector<IntMat> xpos_, xneg_; // by positive-root index
    std::vector<IntMat> h_;           // by simple index
    // Linear solver for decompose: coeffs = solve_ * flat[pivot_].
    std::vector<size_t> pivot_;
    std::vector<std::vector<Scalar>> solve_;
};

// A Lie algebra element in basis coordinates.
class LieElement {
public:
    explicit LieElement(std::shared_ptr<const ChevalleyBasis> basis);

    const ChevalleyBasis& basis() const { return *basis_; }
    std::shared_ptr<const ChevalleyBasis> shared_basis() const { return basis_; }

    const FieldElem& cartan(int i) const; // i in [1, rank]
    void set_cartan(int i, const FieldElem& v);
    void add_cartan(int i, const FieldElem& v);
    FieldElem coeff(const SignedRoot& sr) const;
    void set_coeff(const SignedRoot& sr, const FieldElem& v);
    void add_coeff(const SignedRoot& sr, const FieldElem& v);
    const std::map<SignedRoot, FieldElem>& root_coeffs() const { return roots_; }
    bool cartan_is_zero() const;

    Mat matrix() const;

    LieElement operator+(const LieElement& o) const;
    bool operator==(const LieElement& o) const;

private:
    std::shared_ptr<const ChevalleyBasis> basis_;
    std::vector<FieldElem> cartan_;
    std::map<SignedRoot, FieldElem> roots_; // nonzero coefficients only
};

// Coefficients of m over the basis; throws NotInLieAlgebra when the residual
// is nonzero (this is the membership test).
LieElement decompose(const Mat& m, std::shared_ptr<const ChevalleyBasis> basis);

// U_beta(x) = exp(x X_beta), a finite sum since X_beta is nilpotent.
Mat unipotent(const SignedRoot& beta, const FieldElem& x, const ChevalleyBasis& basis);

// Ad(U_beta(x)) applied in closed form through the root-system data; agrees
// with conjugation by the unipotent matrix.
LieElement ad_unipotent(const SignedRoot& beta, const FieldElem& x, const LieElement& target);

} // namespace liegauge
