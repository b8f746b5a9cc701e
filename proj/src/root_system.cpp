#include "liegauge/root_system.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "liegauge/errors.hpp"

namespace liegauge {

std::string group_type_str(GroupType t) {
    switch (t) {
    case GroupType::A: return "A";
    case GroupType::B: return "B";
    case GroupType::C: return "C";
    case GroupType::D: return "D";
    case GroupType::G2: return "G2";
    }
    return "?";
}

GroupType group_type_from_str(const std::string& s) {
    if (s == "A") return GroupType::A;
    if (s == "B") return GroupType::B;
    if (s == "C") return GroupType::C;
    if (s == "D") return GroupType::D;
    if (s == "G2" || s == "G") return GroupType::G2;
    throw InvalidRank("unknown group type '" + s + "'");
}

int Root::height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
}

bool Root::is_positive() const {
    bool nonzero = false;
    for (int c : coords) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

Root Root::operator-() const {
    Root r = *this;
    for (int& c : r.coords) c = -c;
    return r;
}

Root Root::operator+(const Root& o) const {
    Root r = *this;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

std::string Root::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i];
    }
    os << "]";
    return os.str();
}

namespace {

std::vector<std::vector<int>> cartan_matrix_for(GroupType type, int l) {
    std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) a[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    switch (type) {
    case GroupType::A:
        chain(l);
        break;
    case GroupType::B:
        chain(l);
        if (l >= 2) {
            a[l - 2][l - 1] = -2; // <alpha_{l-1}, alpha_l>
            a[l - 1][l - 2] = -1;
        }
        break;
    case GroupType::C:
        chain(l);
        if (l >= 2) {
            a[l - 2][l - 1] = -1;
            a[l - 1][l - 2] = -2; // <alpha_l, alpha_{l-1}>
        }
        break;
    case GroupType::D:
        chain(l - 1);
        if (l >= 3) {
            a[l - 3][l - 1] = -1; // fork node attaches to alpha_{l-2}
            a[l - 1][l - 3] = -1;
        }
        break;
    case GroupType::G2:
        a[0][1] = -1; // <alpha_1, alpha_2>, alpha_1 short
        a[1][0] = -3;
        break;
    }
    return a;
}

bool lex_greater(const Root& a, const Root& b) { return a.coords > b.coords; }

} // namespace

std::shared_ptr<const RootSystem> RootSystem::build(GroupType type, int rank) {
    bool ok = false;
    switch (type) {
    case GroupType::A: ok = rank >= 1; break;
    case GroupType::B:
    case GroupType::C:
    case GroupType::D: ok = rank >= 2; break;
    case GroupType::G2: ok = rank == 2; break;
    }
    if (!ok)
        throw InvalidRank("unsupported rank " + std::to_string(rank) + " for type " +
                          group_type_str(type));

    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->type_ = type;
    rs->rank_ = rank;
    rs->cartan_ = cartan_matrix_for(type, rank);
    switch (type) {
    case GroupType::A: rs->rep_dim_ = rank + 1; break;
    case GroupType::B: rs->rep_dim_ = 2 * rank + 1; break;
    case GroupType::C:
    case GroupType::D: rs->rep_dim_ = 2 * rank; break;
    case GroupType::G2: rs->rep_dim_ = 7; break;
    }

    std::vector<Root> roots;
    if (type == GroupType::A) {
        // Phi+ = { alpha_s + ... + alpha_t | 1 <= s <= t <= l }
        for (int s = 1; s <= rank; ++s)
            for (int t = s; t <= rank; ++t) {
                Root r{std::vector<int>(rank, 0)};
                for (int i = s; i <= t; ++i) r.coords[i - 1] = 1;
                roots.push_back(r);
            }
    } else {
        // Closure by height: alpha + alpha_i is a root iff
        // r - <alpha, alpha_i> > 0 where r is the length of the descending
        // alpha_i-string through alpha. BFS order guarantees all lower
        // heights are known when a root is processed.
        for (int i = 1; i <= rank; ++i) {
            Root r{std::vector<int>(rank, 0)};
            r.coords[i - 1] = 1;
            roots.push_back(r);
        }
        auto have = [&](const Root& r) {
            return std::find(roots.begin(), roots.end(), r) != roots.end();
        };
        size_t next = 0;
        while (next < roots.size()) {
            Root alpha = roots[next++];
            for (int i = 1; i <= rank; ++i) {
                Root step{std::vector<int>(rank, 0)};
                step.coords[i - 1] = 1;
                int r = 0;
                Root down = alpha;
                for (;;) {
                    down.coords[i - 1] -= 1;
                    if (!down.is_positive() || !have(down)) break;
                    ++r;
                }
                int pairing = 0;
                for (int j = 0; j < rank; ++j)
                    pairing += alpha.coords[j] * rs->cartan_[j][i - 1];
                if (r - pairing > 0) {
                    Root up = alpha + step;
                    if (!have(up)) roots.push_back(up);
                }
            }
        }
    }

    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return lex_greater(a, b);
    });
    rs->positive_ = std::move(roots);

    // Gamma chain: maximal root of the subsystem on the last k nodes,
    // ties broken lexicographically (only type D has ties, at k = 2).
    rs->gamma_.resize(rank);
    for (int k = 1; k <= rank; ++k) {
        const Root* best = nullptr;
        for (const Root& r : rs->positive_) {
            if (rs->stratum_of(r) > k) continue;
            if (!best || r.height() > best->height() ||
                (r.height() == best->height() && lex_greater(r, *best)))
                best = &r;
        }
        rs->gamma_[k - 1] = *best;
    }
    return rs;
}

Root RootSystem::simple(int i) const {
    if (i < 1 || i > rank_) throw InvalidRank("simple root index out of range");
    Root r{std::vector<int>(rank_, 0)};
    r.coords[i - 1] = 1;
    return r;
}

bool RootSystem::contains(const Root& r) const {
    Root p = r.is_positive() ? r : -r;
    if (!p.is_positive()) return false;
    return std::find(positive_.begin(), positive_.end(), p) != positive_.end();
}

int RootSystem::index_of(const Root& r) const {
    Root p = r.is_positive() ? r : -r;
    auto it = std::find(positive_.begin(), positive_.end(), p);
    if (it == positive_.end()) throw DegenerateInput("not a root: " + r.str());
    return static_cast<int>(it - positive_.begin());
}

Root RootSystem::resolve(const SignedRoot& sr) const {
    Root r = positive_.at(static_cast<size_t>(sr.index));
    return sr.sign >= 0 ? r : -r;
}

std::pair<int, int> RootSystem::root_string(const Root& alpha, const Root& beta) const {
    if (!contains(alpha) || !contains(beta)) throw DegenerateInput("string endpoints must be roots");
    // proportional => degenerate
    if (alpha == beta || alpha == -beta) throw DegenerateInput("proportional roots have no string");
    int r = 0, q = 0;
    Root cur = alpha;
    for (;;) {
        Root down{cur.coords};
        for (size_t i = 0; i < down.coords.size(); ++i) down.coords[i] -= beta.coords[i];
        if (!contains(down)) break;
        cur = down;
        if (++r > 4) throw Error("internal: root string too long");
    }
    cur = alpha;
    for (;;) {
        Root up{cur.coords};
        for (size_t i = 0; i < up.coords.size(); ++i) up.coords[i] += beta.coords[i];
        if (!contains(up)) break;
        cur = up;
        if (++q > 4) throw Error("internal: root string too long");
    }
    return {r, q};
}

int RootSystem::cartan_integer(const Root& alpha, const Root& beta) const {
    if (alpha == beta) return 2;
    if (alpha == -beta) return -2;
    auto [r, q] = root_string(alpha, beta);
    return r - q;
}

int RootSystem::pairing_with_simple(const Root& r, int i) const {
    int p = 0;
    for (int j = 0; j < rank_; ++j) p += r.coords[j] * cartan_[j][i - 1];
    return p;
}

const Root& RootSystem::gamma(int k) const {
    if (k < 1 || k > rank_) throw InvalidRank("gamma index out of range");
    return gamma_[k - 1];
}

std::vector<GammaSet> RootSystem::gamma_sets() const {
    std::vector<GammaSet> out;
    for (int k = 0; k <= rank_; ++k) {
        GammaSet g;
        g.k = k;
        for (int i = k + 1; i <= rank_; ++i) g.roots.push_back(gamma_[i - 1]);
        out.push_back(std::move(g));
    }
    return out;
}

int RootSystem::stratum_of(const Root& r) const {
    Root p = r.is_positive() ? r : -r;
    for (int j = 0; j < rank_; ++j)
        if (p.coords[j] != 0) return rank_ - j;
    throw DegenerateInput("zero vector has no stratum");
}

std::vector<Root> RootSystem::stratum_roots_of_height(int k, int h) const {
    std::vector<Root> out;
    for (const Root& r : positive_)
        if (stratum_of(r) == k && r.height() == h) out.push_back(r);
    return out;
}

Root RootSystem::stratum_root(int k, int m) const {
    if (k < 1 || k > rank_ || m < 1 || m > k)
        throw DegenerateInput("stratum indices out of range");
    auto matches = stratum_roots_of_height(k, m);
    if (matches.size() != 1)
        throw DegenerateInput("stratum root of height " + std::to_string(m) +
                              " in stratum " + std::to_string(k) + " is not unique");
    return matches[0];
}

Root RootSystem::next_simple(int k, int m) const {
    Root alpha = stratum_root(k, m);
    if (alpha == gamma_[k - 1])
        throw MaximalRoot("gamma_" + std::to_string(k) + " has no successor in its stratum");
    std::optional<Root> found;
    for (int s = 1; s <= rank_; ++s) {
        Root cand = alpha + simple(s);
        if (contains(cand) && stratum_of(cand) == k) {
            if (found) throw Error("internal: stratum successor not unique");
            found = simple(s);
        }
    }
    if (!found) throw Error("internal: stratum successor missing");
    return *found;
}

Scalar RootSystem::simple_norm(int i) const {
    switch (type_) {
    case GroupType::A:
    case GroupType::D: return Scalar(2);
    case GroupType::B: return i == rank_ ? Scalar(1) : Scalar(2);
    case GroupType::C: return i == rank_ ? Scalar(2) : Scalar(1);
    case GroupType::G2: return i == 1 ? Scalar(2) / 3 : Scalar(2);
    }
    return Scalar(2);
}

std::vector<int> RootSystem::coroot_coords(const Root& r) const {
    // (r, r) from the Gram matrix (alpha_i, alpha_j) = A_ij (alpha_j, alpha_j)/2.
    Scalar norm(0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            Scalar gram = Scalar(cartan_[i][j]) * simple_norm(j + 1) / 2;
            norm += Scalar(r.coords[i]) * Scalar(r.coords[j]) * gram;
        }
    if (norm == 0) throw DegenerateInput("zero norm");
    std::vector<int> out(rank_);
    for (int i = 0; i < rank_; ++i) {
        // c_i = m_i (alpha_i, alpha_i) / (r, r)
        Scalar c = Scalar(r.coords[i]) * simple_norm(i + 1) / norm;
        if (!is_integer(c)) throw Error("internal: coroot coordinates not integral");
        out[i] = static_cast<int>(numerator(c));
    }
    return out;
}

} // namespace liegauge
