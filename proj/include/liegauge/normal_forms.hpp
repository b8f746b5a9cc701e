#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegauge/gauge.hpp"

namespace liegauge {

// sum_i coeffs[i] y^(i); monic of order coeffs.size()-1.
struct ScalarODE {
    std::vector<FieldElem> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string str() const;
    ScalarODE rescale_t(const std::vector<Scalar>& factors) const;
};

// Cyclic-covector certificate: rows[0] = e_1, rows[k+1] = rows[k] A + d(rows[k]),
// residual = sum_i a_i rows[i], witness = det of the stacked rows[0..n-1].
struct AnnihilatorCertificate {
    std::vector<std::vector<FieldElem>> rows;
    std::vector<FieldElem> residual;
    FieldElem rank_witness;
    std::vector<Scalar> epsilon; // t_i -> epsilon_i t_i applied to the ODE

    bool valid() const;
};

// Which gamma-chain root carries t_i, per type. Type A pairs t_i with
// gamma_{l+1-i} (the companion-matrix layout); B and C pair t_i with
// gamma_i; G2 follows the A-style reversed pairing.
std::vector<Root> parameter_roots(const RootSystem& rs);

// A(t) = A_Delta + sum_i t_i X_{-gamma}, over the pinned assignment.
LieElement build_parameter_matrix(GroupType type, int rank);
LieElement build_parameter_matrix(std::shared_ptr<const ChevalleyBasis> basis);
// Same with an explicit assignment roots[i-1] <-> t_i.
LieElement parameter_matrix_for(std::shared_ptr<const ChevalleyBasis> basis,
                                const std::vector<Root>& roots_for_t);

// The scalar equations, Leibniz-expanded to monic coefficient lists.
// Type D raises OutOfScope.
ScalarODE expand_theorem1(GroupType type, int rank);

// Verifies that the system matrix annihilates the scalar equation through
// the cyclic covector recursion. With sign_search, rescalings
// t_i -> epsilon_i t_i of the ODE are searched over a small set of signed
// powers of two that absorbs Chevalley lattice conventions; the first hit is
// recorded. Throws VerificationFailed when no epsilon works or the rank
// witness vanishes.
AnnihilatorCertificate verify_annihilator(const Mat& a, const ScalarODE& ode,
                                          int num_params, bool sign_search);
AnnihilatorCertificate verify_annihilator(const LieElement& a, const ScalarODE& ode,
                                          bool sign_search);
std::optional<AnnihilatorCertificate> try_verify_annihilator(const Mat& a, const ScalarODE& ode,
                                                             int num_params, bool sign_search);

// A_0 + z^2 A_1 with A_0 = sum (X_alpha_i + X_-alpha_i) and A_1 in H(C)
// given by coordinates h.
LieElement mitschi_singer_matrix(GroupType type, int rank, const std::vector<Scalar>& h);

struct GenericityChain {
    Mat input;        // the companion matrix of the a_i
    Mat stage1;       // after diag(1,...,1,1/f)
    Mat stage2;       // after the root-of-f diagonal
    LieElement final_normal;
    GaugeRecord gauge; // combined certificate B3 B2 B1
    std::vector<FieldElem> specialization;
};

// The unimodular reduction chain for a monic order-(l+1) companion system:
// clears the trace with diag(1,...,1,1/f), balances with the (l+1)-th root
// of 1/f (supplied by the caller as g), then reduces to the zero-corner
// companion normal form. Checks d(f)/f = a_{l+1} and g^{l+1} = 1/f.
GenericityChain sl_genericity_chain(const std::vector<FieldElem>& a, const FieldElem& f,
                                    const FieldElem& g);

// The two candidate gamma-chains for the rank-2 exceptional system: the
// nested chain seeded at either end node. Exactly one passes the order-7
// annihilator check; build_parameter_matrix uses that one.
std::vector<std::vector<Root>> g2_gamma_candidates(const RootSystem& rs);

} // namespace liegauge
