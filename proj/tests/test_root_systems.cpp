#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "liegauge/errors.hpp"
#include "liegauge/root_system.hpp"

using namespace liegauge;

namespace {

// Independent oracle: close the simple roots under all simple reflections
// s_i(a) = a - <a, alpha_i> alpha_i and keep the positive ones.
std::set<std::vector<int>> reflection_closure(GroupType type, int rank) {
    auto rs = RootSystem::build(type, rank);
    const auto& cartan = rs->cartan_matrix();
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> v(rank, 0);
        v[i] = 1;
        all.insert(v);
        queue.push_back(v);
        for (int& c : v) c = -c;
        all.insert(v);
        queue.push_back(v);
    }
    while (!queue.empty()) {
        auto a = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            int pairing = 0;
            for (int j = 0; j < rank; ++j) pairing += a[j] * cartan[j][i];
            auto b = a;
            b[i] -= pairing;
            if (all.insert(b).second) queue.push_back(b);
        }
    }
    std::set<std::vector<int>> positives;
    for (const auto& v : all) {
        bool pos = true, nonzero = false;
        for (int c : v) {
            if (c < 0) pos = false;
            if (c != 0) nonzero = true;
        }
        if (pos && nonzero) positives.insert(v);
    }
    return positives;
}

std::set<std::vector<int>> as_set(const std::vector<Root>& roots) {
    std::set<std::vector<int>> out;
    for (const auto& r : roots) out.insert(r.coords);
    return out;
}

} // namespace

TEST_CASE("positive system matches the reflection-closure oracle") {
    struct Case {
        GroupType t;
        int rank;
        size_t count;
    };
    const Case cases[] = {
        {GroupType::A, 2, 3},  {GroupType::A, 3, 6},  {GroupType::A, 5, 15},
        {GroupType::B, 2, 4},  {GroupType::B, 3, 9},  {GroupType::B, 4, 16},
        {GroupType::C, 2, 4},  {GroupType::C, 3, 9},  {GroupType::C, 4, 16},
        {GroupType::D, 2, 2},  {GroupType::D, 3, 6},  {GroupType::D, 4, 12},
        {GroupType::G2, 2, 6},
    };
    for (const auto& c : cases) {
        CAPTURE(group_type_str(c.t));
        CAPTURE(c.rank);
        auto rs = RootSystem::build(c.t, c.rank);
        CHECK(rs->positive_roots().size() == c.count);
        CHECK(as_set(rs->positive_roots()) == reflection_closure(c.t, c.rank));
    }
}

TEST_CASE("type A explicit description") {
    auto rs = RootSystem::build(GroupType::A, 2);
    auto set = as_set(rs->positive_roots());
    CHECK(set == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
    // every positive root is alpha_s + ... + alpha_t
    auto rs5 = RootSystem::build(GroupType::A, 5);
    for (const auto& r : rs5->positive_roots()) {
        auto first = std::find_if(r.coords.begin(), r.coords.end(), [](int c) { return c != 0; });
        auto last = std::find_if(r.coords.rbegin(), r.coords.rend(), [](int c) { return c != 0; });
        for (auto it = first; it != last.base(); ++it) CHECK(*it == 1);
    }
}

TEST_CASE("invalid ranks are rejected") {
    CHECK_THROWS_AS(RootSystem::build(GroupType::A, 0), InvalidRank);
    CHECK_THROWS_AS(RootSystem::build(GroupType::B, 1), InvalidRank);
    CHECK_THROWS_AS(RootSystem::build(GroupType::G2, 3), InvalidRank);
}

TEST_CASE("root strings") {
    auto a2 = RootSystem::build(GroupType::A, 2);
    Root a1 = a2->simple(1), al2 = a2->simple(2);
    CHECK(a2->root_string(a1, al2) == std::pair<int, int>{0, 1});
    CHECK(a2->root_string(a1 + al2, al2) == std::pair<int, int>{1, 0});
    CHECK_THROWS_AS(a2->root_string(a1, -a1), DegenerateInput);

    auto g2 = RootSystem::build(GroupType::G2, 2);
    auto [r, q] = g2->root_string(g2->simple(1), g2->simple(2));
    CHECK(r == 0);
    CHECK(q == 1);
    auto [r2, q2] = g2->root_string(g2->simple(2), g2->simple(1));
    CHECK(r2 == 0);
    CHECK(q2 == 3);
}

TEST_CASE("cartan integer equals r - q, exhaustively at small rank") {
    for (auto [t, rank] : {std::pair{GroupType::A, 3}, {GroupType::B, 3}, {GroupType::C, 3},
                           {GroupType::D, 4}, {GroupType::G2, 2}}) {
        auto rs = RootSystem::build(t, rank);
        std::vector<Root> all;
        for (const auto& r : rs->positive_roots()) {
            all.push_back(r);
            all.push_back(-r);
        }
        for (const auto& a : all)
            for (const auto& b : all) {
                if (a == b || a == -b) continue;
                auto [r, q] = rs->root_string(a, b);
                CHECK(rs->cartan_integer(a, b) == r - q);
            }
    }
    auto a2 = RootSystem::build(GroupType::A, 2);
    CHECK(a2->cartan_integer(a2->simple(1), a2->simple(1)) == 2);
    CHECK(a2->cartan_integer(a2->simple(1), a2->simple(2)) == -1);
    CHECK(a2->cartan_integer(a2->simple(1), -a2->simple(1)) == -2);
}

TEST_CASE("gamma chain for type A") {
    auto rs = RootSystem::build(GroupType::A, 3);
    CHECK(rs->gamma(1).coords == std::vector<int>{0, 0, 1});
    CHECK(rs->gamma(2).coords == std::vector<int>{0, 1, 1});
    CHECK(rs->gamma(3).coords == std::vector<int>{1, 1, 1});
    auto sets = rs->gamma_sets();
    CHECK(sets.size() == 4);
    CHECK(sets[0].roots.size() == 3); // Gamma_0
    CHECK(sets[3].roots.empty());     // Gamma_l
    // gamma_l has height l
    for (int l = 1; l <= 5; ++l)
        CHECK(RootSystem::build(GroupType::A, l)->gamma(l).height() == l);
}

TEST_CASE("gamma maximality: gamma_k + alpha leaves the subsystem") {
    for (auto [t, rank] : {std::pair{GroupType::A, 4}, {GroupType::B, 3}, {GroupType::C, 3},
                           {GroupType::G2, 2}}) {
        auto rs = RootSystem::build(t, rank);
        for (int k = 1; k <= rank; ++k) {
            Root g = rs->gamma(k);
            CHECK(rs->stratum_of(g) <= k);
            for (const auto& a : rs->positive_roots()) {
                if (rs->stratum_of(a) > k) continue;
                Root sum = g + a;
                if (rs->contains(sum)) CHECK(rs->stratum_of(sum) > k);
            }
        }
    }
}

TEST_CASE("strata partition Phi+ with one root per height (type A)") {
    for (int l : {2, 3, 4}) {
        auto rs = RootSystem::build(GroupType::A, l);
        size_t total = 0;
        for (int k = 1; k <= l; ++k) {
            for (int m = 1; m <= k; ++m) {
                Root r = rs->stratum_root(k, m);
                CHECK(r.height() == m);
                CHECK(rs->stratum_of(r) == k);
                ++total;
                // explicit form alpha_{l-k+1} + ... + alpha_{l-k+m}
                std::vector<int> expect(l, 0);
                for (int i = l - k + 1; i <= l - k + m; ++i) expect[i - 1] = 1;
                CHECK(r.coords == expect);
            }
        }
        CHECK(total == rs->positive_roots().size());
    }
}

TEST_CASE("unique in-stratum successor (type A)") {
    for (int l : {3, 4}) {
        auto rs = RootSystem::build(GroupType::A, l);
        for (int k = 1; k <= l; ++k) {
            for (int m = 1; m < k; ++m) {
                Root alpha = rs->stratum_root(k, m);
                Root s = rs->next_simple(k, m);
                CHECK(rs->stratum_of(alpha + s) == k);
                // all other simple sums either leave Phi or drop a stratum
                for (int i = 1; i <= l; ++i) {
                    Root cand = alpha + rs->simple(i);
                    if (rs->simple(i) == s || !rs->contains(cand)) continue;
                    CHECK(rs->stratum_of(cand) != k);
                }
            }
            CHECK_THROWS_AS(rs->next_simple(k, k), MaximalRoot);
        }
    }
}

TEST_CASE("stratum and count spot checks") {
    CHECK(RootSystem::build(GroupType::A, 3)->stratum_root(2, 1).coords ==
          std::vector<int>{0, 1, 0});
    CHECK(RootSystem::build(GroupType::A, 3)->stratum_root(3, 3).coords ==
          std::vector<int>{1, 1, 1});
    CHECK(RootSystem::build(GroupType::A, 3)->next_simple(2, 1).coords ==
          std::vector<int>{0, 0, 1});
    CHECK(RootSystem::build(GroupType::C, 3)->positive_roots().size() == 9);
    CHECK(RootSystem::build(GroupType::G2, 2)->positive_roots().size() == 6);
}

TEST_CASE("coroot coordinates are integral and correct for G2") {
    auto g2 = RootSystem::build(GroupType::G2, 2);
    Root high{std::vector<int>{3, 2}};
    CHECK(g2->coroot_coords(high) == std::vector<int>{1, 2});
    CHECK(g2->coroot_coords(g2->simple(1)) == std::vector<int>{1, 0});
    for (auto [t, rank] : {std::pair{GroupType::B, 4}, {GroupType::C, 4}, {GroupType::D, 4}}) {
        auto rs = RootSystem::build(t, rank);
        for (const auto& r : rs->positive_roots()) (void)rs->coroot_coords(r);
    }
}

TEST_CASE("rep dims") {
    CHECK(RootSystem::build(GroupType::A, 4)->rep_dim() == 5);
    CHECK(RootSystem::build(GroupType::B, 3)->rep_dim() == 7);
    CHECK(RootSystem::build(GroupType::C, 3)->rep_dim() == 6);
    CHECK(RootSystem::build(GroupType::D, 4)->rep_dim() == 8);
    CHECK(RootSystem::build(GroupType::G2, 2)->rep_dim() == 7);
}
