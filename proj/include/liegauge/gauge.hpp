#pragma once

#include <utility>
#include <vector>

#include "liegauge/chevalley.hpp"

namespace liegauge {

// One factor of a gauge certificate, kept with its matrix realization.
struct GaugeFactor {
    enum class Kind { Unipotent, Diagonal };

    Kind kind = Kind::Unipotent;
    SignedRoot beta{};               // Unipotent
    FieldElem x;                     // Unipotent
    std::vector<FieldElem> diagonal; // Diagonal
    Mat matrix;

    static GaugeFactor make_unipotent(const SignedRoot& beta, const FieldElem& x,
                                      const ChevalleyBasis& basis);
    static GaugeFactor make_diagonal(std::vector<FieldElem> entries);
};

// An invertible gauge B together with its factorization. Factors are stored
// in application order; total = F_m ... F_1.
struct GaugeRecord {
    std::vector<GaugeFactor> factors;
    Mat total;

    static GaugeRecord identity(size_t n);
    void append(GaugeFactor f);
    void extend(const GaugeRecord& later);
    // Product of the stored factor matrices equals total.
    bool product_consistent() const;
};

// ldelta(B) = dB * B^{-1}.
Mat log_derivative(const Mat& b);

// B A B^{-1} + ldelta(B).
Mat gauge_transform(const Mat& a, const Mat& b);

// Gauge by a single unipotent factor, in basis coordinates:
// Ad(U_beta(x))(A) + d(x) X_beta.
LieElement gauge_unipotent(const LieElement& a, const SignedRoot& beta, const FieldElem& x);

// Removes the Cartan component using one U_{-alpha_j} factor per nonzero
// h_j, ascending j. Requires A in A_Delta + H + negative root spaces.
std::pair<LieElement, GaugeRecord> clear_cartan(const LieElement& a);

// Clears every height-j root of stratum k except gamma_k itself. Requires
// the lower heights of the stratum to be clear already.
std::pair<LieElement, GaugeRecord> clear_stratum_step(const LieElement& a, int k, int j);

struct NormalFormResult {
    LieElement normal;
    GaugeRecord gauge;
    std::vector<FieldElem> specialization; // coefficient on X_{-gamma_i}, i = 1..l

    // Certificate soundness: factors multiply to total, and
    // gauge_transform(input, total) equals the normal form exactly.
    bool verify(const Mat& input) const;
};

// Full reduction to A_Delta + span{X_{-gamma_i}}: Cartan clearing, then
// stratum clearing with k descending and heights ascending. Non-A types run
// the same sweep with a bounded fixpoint loop.
NormalFormResult reduce_to_normal_form(const LieElement& a);

} // namespace liegauge
