#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liegauge/scalar.hpp"

namespace liegauge {

enum class GroupType { A, B, C, D, G2 };

std::string group_type_str(GroupType t);
GroupType group_type_from_str(const std::string& s);

// A root as an integer coefficient vector over the simple basis. Positive
// roots have all coordinates >= 0, negative roots all <= 0.
struct Root {
    std::vector<int> coords;

    int height() const;
    bool is_positive() const;
    Root operator-() const;
    Root operator+(const Root& o) const;
    friend bool operator==(const Root&, const Root&) = default;
    std::string str() const;
};

// A root referenced by its positive-root index plus a sign. Negative roots
// are never stored, only flagged.
struct SignedRoot {
    int index = 0; // into RootSystem::positive_roots()
    int sign = 1;  // +1 or -1

    friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
    friend auto operator<=>(const SignedRoot&, const SignedRoot&) = default;
};

struct GammaSet {
    int k = 0;
    std::vector<Root> roots; // the gamma_i for k+1 <= i <= l, stored positive
};

class RootSystem {
public:
    static std::shared_ptr<const RootSystem> build(GroupType type, int rank);

    GroupType type() const { return type_; }
    int rank() const { return rank_; }
    int rep_dim() const { return rep_dim_; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

    Root simple(int i) const; // i in [1, rank]

    bool contains(const Root& r) const;
    // Index into positive_roots(); the root may be given with either sign.
    int index_of(const Root& r) const;
    Root resolve(const SignedRoot& sr) const;

    // The beta-string through alpha: alpha - r*beta ... alpha + q*beta.
    std::pair<int, int> root_string(const Root& alpha, const Root& beta) const;
    // Cartan integer <alpha, beta> = r - q of the beta-string through alpha.
    int cartan_integer(const Root& alpha, const Root& beta) const;
    // Pairing of an arbitrary integer vector with a simple root, straight
    // from the Cartan matrix (used by the closure construction).
    int pairing_with_simple(const Root& r, int i) const;

    // The nested-subsystem chain: gamma(k) is the maximal root of the
    // subsystem spanned by the last k simple nodes.
    const Root& gamma(int k) const; // k in [1, rank]
    std::vector<GammaSet> gamma_sets() const; // Gamma_0 ... Gamma_l

    // Stratum index k of a positive root: the smallest k with the root in
    // the subsystem of the last k nodes.
    int stratum_of(const Root& r) const;
    // Unique stratum root of a given height (type A contract); general
    // helper returning all stratum-k roots of height h.
    Root stratum_root(int k, int m) const;
    std::vector<Root> stratum_roots_of_height(int k, int h) const;
    // Remark-2 companion: the unique simple root whose sum with
    // stratum_root(k, m) stays in stratum k. Signals MaximalRoot at m == k.
    Root next_simple(int k, int m) const;

    // (alpha_i, alpha_i) in the normalization where long roots have norm 2.
    Scalar simple_norm(int i) const;
    // Coordinates of the coroot of r over the simple coroots; integral.
    std::vector<int> coroot_coords(const Root& r) const;

private:
    RootSystem() = default;

    GroupType type_{};
    int rank_ = 0;
    int rep_dim_ = 0;
    std::vector<Root> positive_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> gamma_; // gamma_[k-1] = gamma(k)
};

} // namespace liegauge
