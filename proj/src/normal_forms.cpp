#include "liegauge/normal_forms.hpp"

#include <algorithm>
#include <sstream>

#include "liegauge/errors.hpp"

namespace liegauge {

namespace {

// A differential expression in y, stored as coefficients of y^(k).
using YExpr = std::vector<FieldElem>;

YExpr y_deriv(int k) {
    YExpr e(static_cast<size_t>(k) + 1);
    e[static_cast<size_t>(k)] = FieldElem(1);
    return e;
}

YExpr d(const YExpr& e) {
    YExpr out(e.size() + 1);
    for (size_t k = 0; k < e.size(); ++k) {
        out[k] += e[k].derive();
        out[k + 1] += e[k];
    }
    return out;
}

YExpr dn(YExpr e, int n) {
    for (int i = 0; i < n; ++i) e = d(e);
    return e;
}

YExpr mul(const FieldElem& f, YExpr e) {
    for (auto& c : e) c = c * f;
    return e;
}

void add_to(YExpr& acc, const YExpr& e, const Scalar& scale = Scalar(1)) {
    if (acc.size() < e.size()) acc.resize(e.size());
    for (size_t k = 0; k < e.size(); ++k) acc[k] += e[k] * FieldElem(scale);
}

std::string y_str(int k) {
    if (k == 0) return "y";
    if (k == 1) return "y'";
    if (k == 2) return "y''";
    return "y^(" + std::to_string(k) + ")";
}

// (is_negative, magnitude string) for ODE rendering; only single-term
// polynomial coefficients get the sign pulled out.
std::pair<bool, std::string> signed_coeff_str(const FieldElem& c) {
    if (c.is_polynomial() && c.num().terms().size() == 1) {
        const auto& [m, k] = *c.num().terms().begin();
        if (k < 0) return {true, (-c).str()};
        return {false, c.str()};
    }
    return {false, "(" + c.str() + ")"};
}

} // namespace

std::string ScalarODE::str() const {
    int n = order();
    std::ostringstream os;
    if (coeffs.back() == FieldElem(1)) {
        os << y_str(n);
    } else {
        auto [neg, s] = signed_coeff_str(coeffs.back());
        os << (neg ? "-" : "") << s << "*" << y_str(n);
    }
    for (int k = 0; k < n; ++k) {
        const FieldElem& c = coeffs[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (c == FieldElem(1)) {
            os << " + " << y_str(k);
            continue;
        }
        if (c == FieldElem(Scalar(-1))) {
            os << " - " << y_str(k);
            continue;
        }
        auto [neg, s] = signed_coeff_str(c);
        os << (neg ? " - " : " + ") << s << "*" << y_str(k);
    }
    return os.str();
}

ScalarODE ScalarODE::rescale_t(const std::vector<Scalar>& factors) const {
    ScalarODE out = *this;
    for (auto& c : out.coeffs) c = c.rescale_t(factors);
    return out;
}

bool AnnihilatorCertificate::valid() const {
    if (rank_witness.is_zero()) return false;
    return std::all_of(residual.begin(), residual.end(),
                       [](const FieldElem& c) { return c.is_zero(); });
}

std::vector<Root> parameter_roots(const RootSystem& rs) {
    int l = rs.rank();
    std::vector<Root> out;
    for (int i = 1; i <= l; ++i) {
        switch (rs.type()) {
        case GroupType::A:
        case GroupType::G2:
            out.push_back(rs.gamma(l + 1 - i));
            break;
        case GroupType::B:
        case GroupType::C:
        case GroupType::D:
            out.push_back(rs.gamma(i));
            break;
        }
    }
    return out;
}

LieElement parameter_matrix_for(std::shared_ptr<const ChevalleyBasis> basis,
                                const std::vector<Root>& roots_for_t) {
    const RootSystem& rs = basis->rs();
    LieElement a(basis);
    for (int i = 1; i <= rs.rank(); ++i)
        a.set_coeff({rs.index_of(rs.simple(i)), 1}, FieldElem(1));
    for (size_t i = 0; i < roots_for_t.size(); ++i)
        a.set_coeff({rs.index_of(roots_for_t[i]), -1},
                    FieldElem::t(static_cast<int>(i) + 1));
    return a;
}

LieElement build_parameter_matrix(std::shared_ptr<const ChevalleyBasis> basis) {
    return parameter_matrix_for(basis, parameter_roots(basis->rs()));
}

LieElement build_parameter_matrix(GroupType type, int rank) {
    return build_parameter_matrix(ChevalleyBasis::build(type, rank));
}

ScalarODE expand_theorem1(GroupType type, int rank) {
    int l = rank;
    YExpr acc;
    switch (type) {
    case GroupType::A: {
        (void)RootSystem::build(type, rank); // validates the (type, rank) pair
        acc = y_deriv(l + 1);
        for (int i = 1; i <= l; ++i)
            add_to(acc, mul(FieldElem::t(i), y_deriv(i - 1)), Scalar(-1));
        break;
    }
    case GroupType::C: {
        (void)RootSystem::build(type, rank);
        acc = y_deriv(2 * l);
        for (int i = 1; i <= l; ++i) {
            Scalar s = (i % 2 == 1) ? Scalar(-1) : Scalar(1);
            add_to(acc, dn(mul(FieldElem::t(i), y_deriv(l - i)), l - i), s);
        }
        break;
    }
    case GroupType::B: {
        (void)RootSystem::build(type, rank);
        acc = y_deriv(2 * l + 1);
        for (int i = 1; i <= l; ++i) {
            Scalar s = (i % 2 == 1) ? Scalar(-1) : Scalar(1);
            add_to(acc, dn(mul(FieldElem::t(i), y_deriv(l + 1 - i)), l - i), s);
            add_to(acc, dn(mul(FieldElem::t(i), y_deriv(l - i)), l + 1 - i), s);
        }
        break;
    }
    case GroupType::G2: {
        (void)RootSystem::build(type, rank);
        FieldElem t1 = FieldElem::t(1), t2 = FieldElem::t(2);
        acc = y_deriv(7);
        add_to(acc, mul(t1 * FieldElem(Scalar(2)), y_deriv(1)));
        add_to(acc, d(mul(t1, y_deriv(0))), Scalar(2));
        add_to(acc, d(mul(t2, y_deriv(4))), Scalar(2));
        add_to(acc, dn(mul(t2, y_deriv(1)), 4));
        add_to(acc, d(mul(t2, d(mul(t2, y_deriv(1))))), Scalar(-2));
        break;
    }
    case GroupType::D:
        throw OutOfScope("the scalar form for the even orthogonal family depends on external "
                         "substitutions and is not generated here");
    }
    ScalarODE ode{std::move(acc)};
    if (!(ode.coeffs.back() == FieldElem(1))) throw Error("internal: expansion not monic");
    return ode;
}

namespace {

std::vector<std::vector<FieldElem>> cyclic_rows(const Mat& a, int order) {
    size_t n = a.rows();
    std::vector<std::vector<FieldElem>> rows;
    std::vector<FieldElem> cur(n);
    cur[0] = FieldElem(1);
    rows.push_back(cur);
    for (int k = 0; k < order; ++k) {
        std::vector<FieldElem> next(n);
        for (size_t j = 0; j < n; ++j) {
            FieldElem acc = cur[j].derive();
            for (size_t i = 0; i < n; ++i)
                if (!cur[i].is_zero() && !a.at(i, j).is_zero()) acc += cur[i] * a.at(i, j);
            next[j] = acc;
        }
        rows.push_back(next);
        cur = std::move(next);
    }
    return rows;
}

std::vector<FieldElem> combo_residual(const std::vector<std::vector<FieldElem>>& rows,
                                      const ScalarODE& ode) {
    size_t n = rows[0].size();
    std::vector<FieldElem> res(n);
    for (size_t i = 0; i < ode.coeffs.size(); ++i) {
        if (ode.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j)
            if (!rows[i][j].is_zero()) res[j] += ode.coeffs[i] * rows[i][j];
    }
    return res;
}

bool all_zero(const std::vector<FieldElem>& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElem& c) { return c.is_zero(); });
}

// Rescalings that absorb the lattice conventions of the basis matrices:
// identity first, then signs, then the powers of two seen for the short-root
// normalizations.
const std::vector<Scalar>& epsilon_choices() {
    static const std::vector<Scalar> s = {
        Scalar(1),           Scalar(-1),          Scalar(2),  Scalar(-2),
        Scalar(1) / 2,       Scalar(-1) / 2,      Scalar(4),  Scalar(-4),
        Scalar(1) / 4,       Scalar(-1) / 4,
    };
    return s;
}

} // namespace

std::optional<AnnihilatorCertificate> try_verify_annihilator(const Mat& a, const ScalarODE& ode,
                                                             int num_params, bool sign_search) {
    size_t n = a.rows();
    if (ode.order() != static_cast<int>(n))
        throw DegenerateInput("equation order must match the system dimension");
    auto rows = cyclic_rows(a, ode.order());

    Mat stack(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) stack.at(i, j) = rows[i][j];
    FieldElem witness = ff_det(stack);
    if (witness.is_zero()) return std::nullopt;

    const auto& choices = epsilon_choices();
    size_t count = 1;
    int params = sign_search ? num_params : 0;
    for (int i = 0; i < params; ++i) count *= choices.size();
    for (size_t pick = 0; pick < count; ++pick) {
        std::vector<Scalar> eps(static_cast<size_t>(num_params), Scalar(1));
        size_t rem = pick;
        for (int i = 0; i < params; ++i) {
            eps[static_cast<size_t>(i)] = choices[rem % choices.size()];
            rem /= choices.size();
        }
        ScalarODE scaled = ode.rescale_t(eps);
        auto res = combo_residual(rows, scaled);
        if (all_zero(res)) {
            AnnihilatorCertificate cert;
            cert.rows = rows;
            cert.residual = std::move(res);
            cert.rank_witness = witness;
            cert.epsilon = std::move(eps);
            return cert;
        }
    }
    return std::nullopt;
}

AnnihilatorCertificate verify_annihilator(const Mat& a, const ScalarODE& ode, int num_params,
                                          bool sign_search) {
    auto cert = try_verify_annihilator(a, ode, num_params, sign_search);
    if (!cert)
        throw VerificationFailed(
            "the equation is not annihilated for any rescaling; the cyclic covector "
            "tried was the first standard basis vector (highest weight)");
    return *cert;
}

AnnihilatorCertificate verify_annihilator(const LieElement& a, const ScalarODE& ode,
                                          bool sign_search) {
    if (ode.order() != a.basis().n())
        throw DegenerateInput("equation order must match the representation dimension");
    return verify_annihilator(a.matrix(), ode, a.basis().rs().rank(), sign_search);
}

LieElement mitschi_singer_matrix(GroupType type, int rank, const std::vector<Scalar>& h) {
    auto basis = ChevalleyBasis::build(type, rank);
    const RootSystem& rs = basis->rs();
    if (h.size() != static_cast<size_t>(rank))
        throw InvalidRank("need one Cartan coordinate per rank");
    LieElement a(basis);
    FieldElem z2(Poly::z().pow(2));
    for (int i = 1; i <= rank; ++i) {
        int p = rs.index_of(rs.simple(i));
        a.set_coeff({p, 1}, FieldElem(1));
        a.set_coeff({p, -1}, FieldElem(1));
        a.set_cartan(i, z2 * FieldElem(h[static_cast<size_t>(i - 1)]));
    }
    return a;
}

GenericityChain sl_genericity_chain(const std::vector<FieldElem>& a, const FieldElem& f,
                                    const FieldElem& g) {
    if (a.size() < 2) throw DegenerateInput("need coefficients a_1 ... a_{l+1} with l >= 1");
    int l = static_cast<int>(a.size()) - 1;
    size_t n = static_cast<size_t>(l) + 1;
    if (f.is_zero()) throw SingularGauge("f must be invertible");
    if (!(f.derive() / f == a.back()))
        throw PreconditionViolated("d(f)/f must equal a_{l+1}");
    if (!(g.pow(l + 1) == FieldElem(1) / f))
        throw PreconditionViolated("g^{l+1} must equal 1/f");

    Mat input(n, n);
    for (size_t i = 0; i + 1 < n; ++i) input.at(i, i + 1) = FieldElem(1);
    for (size_t j = 0; j < n; ++j) input.at(n - 1, j) = a[j];

    GaugeRecord rec = GaugeRecord::identity(n);

    std::vector<FieldElem> d1(n, FieldElem(1));
    d1[n - 1] = FieldElem(1) / f;
    GaugeFactor b1 = GaugeFactor::make_diagonal(d1);
    Mat stage1 = gauge_transform(input, b1.matrix);
    rec.append(std::move(b1));

    // expected first stage: superdiagonal 1s with f in the corner
    // column, bottom row a_i/f, zero corner
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FieldElem expect;
            if (i + 1 == j && j + 1 < n) expect = FieldElem(1);
            if (i + 2 == n && j + 1 == n) expect = f;
            if (i + 1 == n && j + 1 < n) expect = a[j] / f;
            if (!(stage1.at(i, j) == expect))
                throw Error("internal: first chain stage has the wrong shape");
        }
    if (!stage1.trace().is_zero())
        throw Error("internal: first chain stage is not trace free");

    std::vector<FieldElem> d2(n, g);
    d2[n - 1] = g.pow(-l);
    GaugeFactor b2 = GaugeFactor::make_diagonal(d2);
    Mat stage2 = gauge_transform(stage1, b2.matrix);
    rec.append(std::move(b2));

    FieldElem diag = -(f.derive() / (f * FieldElem(Scalar(l + 1))));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FieldElem expect;
            if (i == j) expect = (i + 1 == n) ? -diag * FieldElem(Scalar(l)) : diag;
            if (i + 1 == j) expect = FieldElem(1);
            if (i + 1 == n && j + 1 < n) expect = a[j];
            if (!(stage2.at(i, j) == expect))
                throw Error("internal: second chain stage has the wrong shape");
        }

    auto basis = ChevalleyBasis::build(GroupType::A, l);
    LieElement a2 = decompose(stage2, basis);
    NormalFormResult nf = reduce_to_normal_form(a2);
    rec.extend(nf.gauge);

    if (!(gauge_transform(input, rec.total) == nf.normal.matrix()))
        throw Error("internal: combined chain certificate failed");
    return GenericityChain{std::move(input),     std::move(stage1),
                           std::move(stage2),    std::move(nf.normal),
                           std::move(rec),       std::move(nf.specialization)};
}

std::vector<std::vector<Root>> g2_gamma_candidates(const RootSystem& rs) {
    if (rs.type() != GroupType::G2) throw InvalidRank("candidates exist only for the rank-2 exceptional type");
    Root high = rs.gamma(2);
    return {{rs.simple(2), high}, {rs.simple(1), high}};
}

} // namespace liegauge
