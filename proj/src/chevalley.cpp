#include "liegauge/chevalley.hpp"

#include <algorithm>

#include "liegauge/errors.hpp"

namespace liegauge {

IntMat IntMat::operator+(const IntMat& o) const {
    IntMat out = *this;
    for (size_t k = 0; k < e.size(); ++k) out.e[k] += o.e[k];
    return out;
}

IntMat IntMat::operator-(const IntMat& o) const {
    IntMat out = *this;
    for (size_t k = 0; k < e.size(); ++k) out.e[k] -= o.e[k];
    return out;
}

IntMat IntMat::operator*(const IntMat& o) const {
    IntMat out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long long a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

IntMat IntMat::operator-() const { return scaled(-1); }

IntMat IntMat::scaled(long long c) const {
    IntMat out = *this;
    for (auto& v : out.e) v *= c;
    return out;
}

IntMat IntMat::divided(long long c) const {
    IntMat out = *this;
    for (auto& v : out.e) {
        if (v % c != 0) throw Error("internal: inexact integer matrix division");
        v /= c;
    }
    return out;
}

bool IntMat::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
}

bool IntMat::is_diagonal() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

IntMat bracket(const IntMat& a, const IntMat& b) { return a * b - b * a; }

Mat to_field(const IntMat& m) {
    Mat out(static_cast<size_t>(m.n), static_cast<size_t>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) != 0) out.at(i, j) = FieldElem(Scalar(m.at(i, j)));
    return out;
}

namespace {

IntMat unit(int n, int i, int j) {
    IntMat m(n);
    m.at(i - 1, j - 1) = 1;
    return m;
}

struct Seeds {
    std::vector<IntMat> e, f;
};

// Simple-root matrices of the defining representations. The orthogonal and
// symplectic forms are anti-diagonal, so Cartan elements are diagonal.
Seeds seeds_for(GroupType type, int l, int n);

Seeds seeds_a(int l, int n) {
    Seeds s;
    for (int i = 1; i <= l; ++i) {
        s.e.push_back(unit(n, i, i + 1));
        s.f.push_back(unit(n, i + 1, i));
    }
    return s;
}

Seeds seeds_b(int l, int n) {
    Seeds s;
    auto pr = [&](int i) { return n + 1 - i; }; // anti-diagonal mirror
    for (int i = 1; i < l; ++i) {
        s.e.push_back(unit(n, i, i + 1) - unit(n, pr(i + 1), pr(i)));
        s.f.push_back(unit(n, i + 1, i) - unit(n, pr(i), pr(i + 1)));
    }
    s.e.push_back(unit(n, l, l + 1).scaled(2) - unit(n, l + 1, l + 2));
    s.f.push_back(unit(n, l + 1, l) - unit(n, l + 2, l + 1).scaled(2));
    return s;
}

Seeds seeds_c(int l, int n) {
    Seeds s;
    auto pr = [&](int i) { return n + 1 - i; };
    for (int i = 1; i < l; ++i) {
        s.e.push_back(unit(n, i, i + 1) - unit(n, pr(i + 1), pr(i)));
        s.f.push_back(unit(n, i + 1, i) - unit(n, pr(i), pr(i + 1)));
    }
    s.e.push_back(unit(n, l, l + 1));
    s.f.push_back(unit(n, l + 1, l));
    return s;
}

Seeds seeds_d(int l, int n) {
    Seeds s;
    auto pr = [&](int i) { return n + 1 - i; };
    for (int i = 1; i < l; ++i) {
        s.e.push_back(unit(n, i, i + 1) - unit(n, pr(i + 1), pr(i)));
        s.f.push_back(unit(n, i + 1, i) - unit(n, pr(i), pr(i + 1)));
    }
    s.e.push_back(unit(n, l - 1, l + 1) - unit(n, l, l + 2));
    s.f.push_back(unit(n, l + 1, l - 1) - unit(n, l + 2, l));
    return s;
}

// The 7-dimensional representation, realized inside so_7: the short-root
// vectors combine the two so_7 root spaces that restrict to the same short
// root of the rank-2 system. The basis is then re-sorted by descending
// weight so that v_1 is the highest weight vector, as in the other types.
Seeds seeds_g2(int sign) {
    auto b3 = ChevalleyBasis::build(GroupType::B, 3);
    auto idx = [&](std::initializer_list<int> coords) {
        Root r{std::vector<int>(coords)};
        return b3->rs().index_of(r);
    };
    int eps2 = idx({0, 1, 1});            // epsilon_2
    int eps1_minus_eps2 = idx({1, 0, 0}); // epsilon_1 - epsilon_2
    int eps1_plus_eps3 = idx({1, 1, 2});  // epsilon_1 + epsilon_3
    Seeds s;
    s.e.push_back(b3->X({eps2, 1}) + b3->X({eps1_plus_eps3, -1}).scaled(sign));
    s.f.push_back(b3->X({eps2, -1}) + b3->X({eps1_plus_eps3, 1}).scaled(sign));
    s.e.push_back(b3->X({eps1_minus_eps2, 1}));
    s.f.push_back(b3->X({eps1_minus_eps2, -1}));

    // principal weight height 3 h_1 + 5 h_2, strictly decreasing along the
    // representation chain
    IntMat h1 = bracket(s.e[0], s.f[0]), h2 = bracket(s.e[1], s.f[1]);
    std::vector<int> order(7);
    for (int j = 0; j < 7; ++j) order[j] = j;
    auto key = [&](int j) { return 3 * h1.at(j, j) + 5 * h2.at(j, j); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) > key(b); });
    auto permute = [&](const IntMat& m) {
        IntMat out(7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) out.at(i, j) = m.at(order[i], order[j]);
        return out;
    };
    for (auto& m : s.e) m = permute(m);
    for (auto& m : s.f) m = permute(m);
    return s;
}

Seeds seeds_for(GroupType type, int l, int n) {
    switch (type) {
    case GroupType::A: return seeds_a(l, n);
    case GroupType::B: return seeds_b(l, n);
    case GroupType::C: return seeds_c(l, n);
    case GroupType::D: return seeds_d(l, n);
    case GroupType::G2: return seeds_g2(+1);
    }
    throw Error("unreachable");
}

bool cartan_relations_hold(const ChevalleyBasis& cb) {
    const RootSystem& rs = cb.rs();
    for (int i = 1; i <= rs.rank(); ++i) {
        for (size_t p = 0; p < rs.positive_roots().size(); ++p) {
            for (int sign : {1, -1}) {
                SignedRoot sr{static_cast<int>(p), sign};
                Root r = rs.resolve(sr);
                int eig = 0;
                for (int j = 0; j < rs.rank(); ++j)
                    eig += r.coords[j] * rs.cartan_matrix()[j][i - 1];
                if (bracket(cb.H(i), cb.X(sr)) != cb.X(sr).scaled(eig)) return false;
            }
        }
    }
    return true;
}

} // namespace

void ChevalleyBasis::construct(std::shared_ptr<const RootSystem> rs, std::vector<IntMat> e,
                               std::vector<IntMat> f) {
    rs_ = std::move(rs);
    n_ = rs_->rep_dim();
    int l = rs_->rank();
    const auto& pos = rs_->positive_roots();
    xpos_.assign(pos.size(), IntMat(n_));
    xneg_.assign(pos.size(), IntMat(n_));
    h_.assign(static_cast<size_t>(l), IntMat(n_));

    for (int i = 1; i <= l; ++i) {
        int pi = rs_->index_of(rs_->simple(i));
        xpos_[static_cast<size_t>(pi)] = e[static_cast<size_t>(i - 1)];
        xneg_[static_cast<size_t>(pi)] = f[static_cast<size_t>(i - 1)];
        h_[static_cast<size_t>(i - 1)] = bracket(e[static_cast<size_t>(i - 1)],
                                                 f[static_cast<size_t>(i - 1)]);
        if (!h_[static_cast<size_t>(i - 1)].is_diagonal())
            throw Error("internal: seed coroot is not diagonal");
    }

    // Positive roots in height order; pos is already sorted by height.
    for (size_t p = 0; p < pos.size(); ++p) {
        const Root& alpha = pos[p];
        if (alpha.height() == 1) continue;
        int i = 0;
        Root beta{};
        for (int s = 1; s <= l; ++s) {
            Root cand = alpha + (-rs_->simple(s));
            if (cand.is_positive() && rs_->contains(cand)) {
                i = s;
                beta = cand;
                break;
            }
        }
        if (i == 0) throw Error("internal: root without simple descent");
        // |N| = r+1 with r the length of the descending alpha_i-string
        // through beta.
        int r = 0;
        Root down = beta;
        for (;;) {
            down = down + (-rs_->simple(i));
            if (!rs_->contains(down)) break;
            ++r;
        }
        size_t bi = static_cast<size_t>(rs_->index_of(beta));
        xpos_[p] = bracket(xpos_[static_cast<size_t>(rs_->index_of(rs_->simple(i)))],
                           xpos_[bi])
                       .divided(r + 1);
        xneg_[p] = bracket(xneg_[static_cast<size_t>(rs_->index_of(rs_->simple(i)))],
                           xneg_[bi])
                       .divided(r + 1);
        if (xpos_[p].is_zero() || xneg_[p].is_zero())
            throw Error("internal: vanishing root vector");
        // Normalize the sign of X_{-alpha} so [X_alpha, X_-alpha] is the
        // coroot.
        IntMat k = bracket(xpos_[p], xneg_[p]);
        auto cc = rs_->coroot_coords(alpha);
        IntMat coroot(n_);
        for (int j = 0; j < l; ++j)
            if (cc[static_cast<size_t>(j)] != 0)
                coroot = coroot + h_[static_cast<size_t>(j)].scaled(cc[static_cast<size_t>(j)]);
        if (k == coroot) {
            // keep
        } else if (k == -coroot) {
            xneg_[p] = -xneg_[p];
        } else {
            throw Error("internal: [X_a, X_-a] is not the coroot");
        }
    }
    prepare_solver();
}

std::shared_ptr<const ChevalleyBasis> ChevalleyBasis::build(GroupType type, int rank) {
    auto rs = RootSystem::build(type, rank);
    if (type == GroupType::G2) {
        // The sign of the mixed short-root seed is pinned by the Cartan
        // eigenvalue relations; exactly one choice closes onto the rank-2
        // subalgebra.
        for (int sign : {+1, -1}) {
            auto cb = std::shared_ptr<ChevalleyBasis>(new ChevalleyBasis());
            try {
                Seeds s = seeds_g2(sign);
                cb->construct(rs, std::move(s.e), std::move(s.f));
            } catch (const Error&) {
                continue;
            }
            if (cartan_relations_hold(*cb)) return cb;
        }
        throw Error("internal: no G2 seed sign closes");
    }
    Seeds s = seeds_for(type, rank, rs->rep_dim());
    auto cb = std::shared_ptr<ChevalleyBasis>(new ChevalleyBasis());
    cb->construct(rs, std::move(s.e), std::move(s.f));
    return cb;
}

void ChevalleyBasis::prepare_solver() {
    int l = rs_->rank();
    size_t m = xpos_.size() * 2 + static_cast<size_t>(l);
    size_t rows = static_cast<size_t>(n_) * n_;
    // Column k of B = flattened basis matrix k, order: H_1..H_l, X+, X-.
    auto basis_entry = [&](size_t row, size_t col) -> long long {
        int i = static_cast<int>(row) / n_, j = static_cast<int>(row) % n_;
        if (col < static_cast<size_t>(l)) return h_[col].at(i, j);
        col -= static_cast<size_t>(l);
        if (col < xpos_.size()) return xpos_[col].at(i, j);
        return xneg_[col - xpos_.size()].at(i, j);
    };
    // Gaussian elimination to pick m independent rows.
    std::vector<std::vector<Scalar>> w(rows, std::vector<Scalar>(m));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < m; ++c) w[r][c] = Scalar(basis_entry(r, c));
    pivot_.clear();
    std::vector<bool> used(rows, false);
    for (size_t c = 0; c < m; ++c) {
        size_t pr = rows;
        for (size_t r = 0; r < rows; ++r)
            if (!used[r] && w[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr == rows) throw Error("internal: basis matrices are dependent");
        used[pr] = true;
        pivot_.push_back(pr);
        Scalar inv = Scalar(1) / w[pr][c];
        for (size_t cc = 0; cc < m; ++cc) w[pr][cc] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || w[r][c] == 0) continue;
            Scalar f = w[r][c];
            for (size_t cc = 0; cc < m; ++cc) w[r][cc] -= f * w[pr][cc];
        }
    }
    // Invert S = B[pivot_, :].
    std::vector<std::vector<Scalar>> s(m, std::vector<Scalar>(2 * m, Scalar(0)));
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < m; ++c) s[r][c] = Scalar(basis_entry(pivot_[r], c));
        s[r][m + r] = Scalar(1);
    }
    for (size_t c = 0; c < m; ++c) {
        size_t pr = c;
        while (pr < m && s[pr][c] == 0) ++pr;
        if (pr == m) throw Error("internal: pivot submatrix singular");
        std::swap(s[pr], s[c]);
        Scalar inv = Scalar(1) / s[c][c];
        for (size_t cc = 0; cc < 2 * m; ++cc) s[c][cc] *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == c || s[r][c] == 0) continue;
            Scalar f = s[r][c];
            for (size_t cc = 0; cc < 2 * m; ++cc) s[r][cc] -= f * s[c][cc];
        }
    }
    solve_.assign(m, std::vector<Scalar>(m));
    for (size_t r = 0; r < m; ++r)
        for (size_t c = 0; c < m; ++c) solve_[r][c] = s[r][m + c];
}

const IntMat& ChevalleyBasis::X(const SignedRoot& sr) const {
    const auto& v = sr.sign >= 0 ? xpos_ : xneg_;
    return v.at(static_cast<size_t>(sr.index));
}

const IntMat& ChevalleyBasis::H(int i) const { return h_.at(static_cast<size_t>(i - 1)); }

SignedRoot ChevalleyBasis::signed_root(const Root& r) const {
    return SignedRoot{rs_->index_of(r), r.is_positive() ? 1 : -1};
}

int ChevalleyBasis::struct_const(const SignedRoot& a, const SignedRoot& b) const {
    Root sum = rs_->resolve(a) + rs_->resolve(b);
    bool zero = std::all_of(sum.coords.begin(), sum.coords.end(), [](int c) { return c == 0; });
    if (zero || !rs_->contains(sum)) return 0;
    IntMat br = bracket(X(a), X(b));
    const IntMat& target = X(signed_root(sum));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (target.at(i, j) != 0) {
                long long num = br.at(i, j), den = target.at(i, j);
                if (num % den != 0) throw Error("internal: non-integral structure constant");
                long long nval = num / den;
                if (br != target.scaled(nval))
                    throw Error("internal: bracket is not a multiple of the root vector");
                return static_cast<int>(nval);
            }
    throw Error("internal: zero root vector");
}

LieElement ChevalleyBasis::zero_element() const {
    return LieElement(shared_from_this());
}

LieElement::LieElement(std::shared_ptr<const ChevalleyBasis> basis)
    : basis_(std::move(basis)), cartan_(static_cast<size_t>(basis_->rs().rank())) {}

const FieldElem& LieElement::cartan(int i) const {
    return cartan_.at(static_cast<size_t>(i - 1));
}

void LieElement::set_cartan(int i, const FieldElem& v) {
    cartan_.at(static_cast<size_t>(i - 1)) = v;
}

void LieElement::add_cartan(int i, const FieldElem& v) {
    cartan_.at(static_cast<size_t>(i - 1)) += v;
}

FieldElem LieElement::coeff(const SignedRoot& sr) const {
    auto it = roots_.find(sr);
    return it == roots_.end() ? FieldElem() : it->second;
}

void LieElement::set_coeff(const SignedRoot& sr, const FieldElem& v) {
    if (v.is_zero())
        roots_.erase(sr);
    else
        roots_[sr] = v;
}

void LieElement::add_coeff(const SignedRoot& sr, const FieldElem& v) {
    set_coeff(sr, coeff(sr) + v);
}

bool LieElement::cartan_is_zero() const {
    return std::all_of(cartan_.begin(), cartan_.end(),
                       [](const FieldElem& c) { return c.is_zero(); });
}

Mat LieElement::matrix() const {
    int n = basis_->n();
    Mat out(static_cast<size_t>(n), static_cast<size_t>(n));
    auto fold = [&](const IntMat& m, const FieldElem& c) {
        if (c.is_zero()) return;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m.at(i, j) != 0)
                    out.at(static_cast<size_t>(i), static_cast<size_t>(j)) +=
                        c * FieldElem(Scalar(m.at(i, j)));
    };
    for (int i = 1; i <= basis_->rs().rank(); ++i) fold(basis_->H(i), cartan(i));
    for (const auto& [sr, c] : roots_) fold(basis_->X(sr), c);
    return out;
}

LieElement LieElement::operator+(const LieElement& o) const {
    LieElement out = *this;
    for (int i = 1; i <= basis_->rs().rank(); ++i) out.add_cartan(i, o.cartan(i));
    for (const auto& [sr, c] : o.roots_) out.add_coeff(sr, c);
    return out;
}

bool LieElement::operator==(const LieElement& o) const {
    for (int i = 1; i <= basis_->rs().rank(); ++i)
        if (cartan(i) != o.cartan(i)) return false;
    auto keys = [](const std::map<SignedRoot, FieldElem>& m) {
        std::vector<SignedRoot> k;
        for (const auto& [sr, c] : m) k.push_back(sr);
        return k;
    };
    for (const auto& sr : keys(roots_))
        if (coeff(sr) != o.coeff(sr)) return false;
    for (const auto& sr : keys(o.roots_))
        if (coeff(sr) != o.coeff(sr)) return false;
    return true;
}

LieElement decompose(const Mat& m, std::shared_ptr<const ChevalleyBasis> basis) {
    const ChevalleyBasis& cb = *basis;
    int n = cb.n();
    if (m.rows() != static_cast<size_t>(n) || m.cols() != static_cast<size_t>(n))
        throw NotInLieAlgebra("matrix has the wrong shape");
    size_t l = static_cast<size_t>(cb.rs().rank());
    size_t dim = static_cast<size_t>(cb.dim());
    std::vector<FieldElem> rhs(dim);
    for (size_t r = 0; r < dim; ++r) {
        size_t p = cb.pivot_[r];
        rhs[r] = m.at(p / static_cast<size_t>(n), p % static_cast<size_t>(n));
    }
    std::vector<FieldElem> coeffs(dim);
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c)
            if (cb.solve_[r][c] != 0) coeffs[r] += FieldElem(cb.solve_[r][c]) * rhs[c];
    LieElement out(basis);
    for (size_t i = 0; i < l; ++i) out.set_cartan(static_cast<int>(i + 1), coeffs[i]);
    size_t npos = (dim - l) / 2;
    for (size_t p = 0; p < npos; ++p) {
        out.set_coeff({static_cast<int>(p), 1}, coeffs[l + p]);
        out.set_coeff({static_cast<int>(p), -1}, coeffs[l + npos + p]);
    }
    if (!(out.matrix() == m)) throw NotInLieAlgebra("nonzero residual");
    return out;
}

Mat unipotent(const SignedRoot& beta, const FieldElem& x, const ChevalleyBasis& basis) {
    int n = basis.n();
    Mat out = Mat::identity(static_cast<size_t>(n));
    IntMat power = basis.X(beta);
    long long factorial = 1;
    FieldElem xk = x;
    for (int k = 1; !power.is_zero(); ++k) {
        if (k > 1) factorial *= k;
        IntMat divided = power.divided(factorial);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (divided.at(i, j) != 0)
                    out.at(static_cast<size_t>(i), static_cast<size_t>(j)) +=
                        xk * FieldElem(Scalar(divided.at(i, j)));
        power = power * basis.X(beta);
        xk = xk * x;
        if (k > n) throw Error("internal: root vector not nilpotent");
    }
    return out;
}

LieElement ad_unipotent(const SignedRoot& beta, const FieldElem& x, const LieElement& target) {
    auto basis = target.shared_basis();
    const RootSystem& rs = basis->rs();
    int l = rs.rank();
    Root beta_root = rs.resolve(beta);
    LieElement out(basis);

    // Cartan part: H -> H - x <beta, alpha_i> X_beta.
    for (int i = 1; i <= l; ++i) {
        const FieldElem& h = target.cartan(i);
        if (h.is_zero()) continue;
        out.add_cartan(i, h);
        int pairing = rs.cartan_integer(beta_root, rs.simple(i));
        if (pairing != 0)
            out.add_coeff(beta, h * x * FieldElem(Scalar(-pairing)));
    }

    SignedRoot minus_beta{beta.index, -beta.sign};
    for (const auto& [sr, zc] : target.root_coeffs()) {
        if (sr == beta) {
            out.add_coeff(beta, zc);
            continue;
        }
        if (sr == minus_beta) {
            // X_-b + x H_b - x^2 X_b
            out.add_coeff(sr, zc);
            auto cc = rs.coroot_coords(beta_root);
            for (int i = 1; i <= l; ++i)
                if (cc[static_cast<size_t>(i - 1)] != 0)
                    out.add_cartan(i, zc * x * FieldElem(Scalar(cc[static_cast<size_t>(i - 1)])));
            out.add_coeff(beta, -(zc * x * x));
            continue;
        }
        // sum over the beta-string: c_i = (prod of structure constants)/i!
        out.add_coeff(sr, zc);
        SignedRoot cur = sr;
        Scalar prod(1);
        long long factorial = 1;
        FieldElem xk(1);
        for (int i = 1;; ++i) {
            Root next = rs.resolve(cur) + beta_root;
            bool zero = std::all_of(next.coords.begin(), next.coords.end(),
                                    [](int c) { return c == 0; });
            if (zero || !rs.contains(next)) break;
            prod *= basis->struct_const(beta, cur);
            factorial *= i;
            xk = xk * x;
            Scalar ci = prod / factorial;
            if (!is_integer(ci)) throw Error("internal: non-integral string coefficient");
            SignedRoot nxt = basis->signed_root(next);
            out.add_coeff(nxt, zc * xk * FieldElem(ci));
            cur = nxt;
            if (i > 4) throw Error("internal: string too long");
        }
    }
    return out;
}

} // namespace liegauge
