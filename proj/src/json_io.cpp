#include "liegauge/json_io.hpp"

#include <ostream>
#include <random>

#include "liegauge/errors.hpp"
#include "liegauge/parser.hpp"

namespace liegauge {

namespace {

json root_coords(const Root& r) { return json(r.coords); }

json intmat_to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

bool uses_kind(const FieldElem& f, Variable::Kind kind) {
    for (const Poly* p : {&f.num(), &f.den()})
        for (const auto& [m, c] : p->terms())
            for (const auto& [v, e] : m.exps())
                if (v.kind == kind) return true;
    return false;
}

json gauge_to_json(const GaugeRecord& rec, const RootSystem& rs) {
    json factors = json::array();
    for (const auto& f : rec.factors) {
        json jf;
        if (f.kind == GaugeFactor::Kind::Unipotent) {
            jf["kind"] = "unipotent";
            jf["root"] = root_coords(rs.resolve(f.beta));
            jf["x"] = f.x.str();
        } else {
            jf["kind"] = "diagonal";
            json entries = json::array();
            for (const auto& e : f.diagonal) entries.push_back(e.str());
            jf["entries"] = entries;
        }
        factors.push_back(jf);
    }
    return json{{"factors", factors}, {"total", mat_to_json(rec.total)}};
}

json strings(const std::vector<FieldElem>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(e.str());
    return out;
}

} // namespace

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix entries must be a non-empty array");
    size_t rows = j.size();
    size_t cols = j[0].size();
    Mat m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw ParseError("ragged matrix entries");
        for (size_t k = 0; k < cols; ++k)
            m.at(i, k) = parse_expr(j[i][k].get<std::string>());
    }
    return m;
}

json roots_json(GroupType type, int rank) {
    auto rs = RootSystem::build(type, rank);
    json pos = json::array();
    for (const auto& r : rs->positive_roots()) pos.push_back(root_coords(r));
    json gamma = json::array();
    for (int k = 1; k <= rank; ++k) gamma.push_back(root_coords(rs->gamma(k)));
    return json{{"schema", "1"},
                {"type", group_type_str(type)},
                {"rank", rank},
                {"positive_roots", pos},
                {"cartan_matrix", rs->cartan_matrix()},
                {"gamma", gamma}};
}

json basis_json(GroupType type, int rank) {
    auto cb = ChevalleyBasis::build(type, rank);
    const RootSystem& rs = cb->rs();
    json h = json::array();
    for (int i = 1; i <= rank; ++i) h.push_back(intmat_to_json(cb->H(i)));
    json xp = json::array(), xm = json::array();
    for (size_t p = 0; p < rs.positive_roots().size(); ++p) {
        const Root& r = rs.positive_roots()[p];
        xp.push_back(json{{"root", root_coords(r)},
                          {"matrix", intmat_to_json(cb->X({static_cast<int>(p), 1}))}});
        xm.push_back(json{{"root", root_coords(-r)},
                          {"matrix", intmat_to_json(cb->X({static_cast<int>(p), -1}))}});
    }
    return json{{"schema", "1"},     {"type", group_type_str(type)}, {"rank", rank},
                {"n", cb->n()},      {"H", h},
                {"X_plus", xp},      {"X_minus", xm}};
}

json reduce_json(const json& request) {
    GroupType type = group_type_from_str(request.at("type").get<std::string>());
    int rank = request.at("rank").get<int>();
    std::string field = request.value("field", "Cz");
    if (field != "Cz" && field != "Ct")
        throw ParseError("field must be \"Cz\" or \"Ct\"");
    Mat m = mat_from_json(request.at("entries"));
    Variable::Kind forbidden =
        field == "Cz" ? Variable::Kind::T : Variable::Kind::Z;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (uses_kind(m.at(i, j), forbidden))
                throw ParseError("entry uses a variable outside the declared field");

    auto basis = ChevalleyBasis::build(type, rank);
    if (m.rows() != static_cast<size_t>(basis->n()) || m.cols() != m.rows())
        throw UnsupportedShape("matrix must be " + std::to_string(basis->n()) + "x" +
                               std::to_string(basis->n()));
    LieElement a = decompose(m, basis);
    NormalFormResult nf = reduce_to_normal_form(a);
    return json{{"schema", "1"},
                {"type", group_type_str(type)},
                {"rank", rank},
                {"normal", mat_to_json(nf.normal.matrix())},
                {"specialization", strings(nf.specialization)},
                {"gauge", gauge_to_json(nf.gauge, basis->rs())},
                {"certified", nf.verify(m)}};
}

json theorem1_json(const Theorem1Options& opts) {
    json out{{"schema", "1"}, {"type", group_type_str(opts.type)}, {"rank", opts.rank}};
    if (opts.emit_matrix) {
        LieElement a = build_parameter_matrix(opts.type, opts.rank);
        out["matrix"] = mat_to_json(a.matrix());
    }
    if (opts.emit_scalar || opts.verify) {
        ScalarODE ode = expand_theorem1(opts.type, opts.rank);
        if (opts.emit_scalar) out["scalar"] = ode.str();
        if (opts.verify) {
            LieElement a = build_parameter_matrix(opts.type, opts.rank);
            AnnihilatorCertificate cert = verify_annihilator(a, ode, true);
            json eps = json::array();
            for (const auto& e : cert.epsilon) eps.push_back(scalar_str(e));
            out["verified"] = cert.valid();
            out["epsilon"] = eps;
            out["rank_witness"] = cert.rank_witness.str();
            out["rank_witness_nonzero"] = !cert.rank_witness.is_zero();
        }
    }
    return out;
}

json mitschi_singer_json(GroupType type, int rank, const std::vector<Scalar>& h) {
    LieElement a = mitschi_singer_matrix(type, rank, h);
    Mat input = a.matrix();
    NormalFormResult nf = reduce_to_normal_form(a);
    const RootSystem& rs = a.basis().rs();
    json hj = json::array();
    for (const auto& s : h) hj.push_back(scalar_str(s));
    json tmap;
    auto roots_t = parameter_roots(rs);
    for (size_t i = 0; i < roots_t.size(); ++i) {
        SignedRoot slot{rs.index_of(roots_t[i]), -1};
        tmap["t" + std::to_string(i + 1)] = nf.normal.coeff(slot).str();
    }
    return json{{"schema", "1"},
                {"type", group_type_str(type)},
                {"rank", rank},
                {"h", hj},
                {"matrix", mat_to_json(input)},
                {"normal", mat_to_json(nf.normal.matrix())},
                {"specialization", strings(nf.specialization)},
                {"t_map", tmap},
                {"gauge", gauge_to_json(nf.gauge, rs)},
                {"certified", nf.verify(input)}};
}

json genericity_json(int rank, const std::string& f_expr, const std::string& g_expr,
                     const std::vector<std::string>& a_exprs) {
    FieldElem f = parse_expr(f_expr);
    FieldElem g = parse_expr(g_expr);
    std::vector<FieldElem> a;
    for (const auto& s : a_exprs) a.push_back(parse_expr(s));
    GenericityChain chain = sl_genericity_chain(a, f, g);
    return json{{"schema", "1"},
                {"rank", rank},
                {"f", f.str()},
                {"g", g.str()},
                {"a", strings(a)},
                {"input", mat_to_json(chain.input)},
                {"stage1", mat_to_json(chain.stage1)},
                {"stage2", mat_to_json(chain.stage2)},
                {"final", mat_to_json(chain.final_normal.matrix())},
                {"specialization", strings(chain.specialization)},
                {"gauge", gauge_to_json(chain.gauge, chain.final_normal.basis().rs())},
                {"certified",
                 gauge_transform(chain.input, chain.gauge.total) == chain.final_normal.matrix()}};
}

namespace {

bool suite_bracket_relations(int max_rank, bool corrupt) {
    std::vector<std::pair<GroupType, int>> cases = {{GroupType::A, std::min(3, max_rank)},
                                                    {GroupType::B, std::min(3, max_rank)},
                                                    {GroupType::C, std::min(3, max_rank)},
                                                    {GroupType::D, 3},
                                                    {GroupType::G2, 2}};
    for (auto [t, rank] : cases) {
        if (t != GroupType::A && rank < 2) continue;
        auto cb = ChevalleyBasis::build(t, rank);
        const RootSystem& rs = cb->rs();
        for (size_t p = 0; p < rs.positive_roots().size(); ++p) {
            for (int sign : {1, -1}) {
                SignedRoot sr{static_cast<int>(p), sign};
                IntMat x = cb->X(sr);
                if (corrupt && t == GroupType::A && p == 0 && sign == 1)
                    x.at(0, 0) += 1; // injected fault
                for (int i = 1; i <= rank; ++i) {
                    int eig = rs.cartan_integer(rs.resolve(sr), rs.simple(i));
                    if (!(bracket(cb->H(i), x) == x.scaled(eig))) return false;
                }
            }
        }
    }
    return true;
}

bool suite_adjoint_oracle() {
    for (auto [t, rank] : {std::pair{GroupType::A, 2}, {GroupType::G2, 2}}) {
        auto cb = ChevalleyBasis::build(t, rank);
        FieldElem x = FieldElem::t(9);
        for (size_t p = 0; p < cb->rs().positive_roots().size(); ++p) {
            for (int sign : {1, -1}) {
                SignedRoot beta{static_cast<int>(p), sign};
                Mat u = unipotent(beta, x, *cb);
                Mat uinv = unipotent(beta, -x, *cb);
                for (size_t q = 0; q < cb->rs().positive_roots().size(); ++q) {
                    LieElement el(cb);
                    el.set_coeff({static_cast<int>(q), -1}, FieldElem(1));
                    LieElement closed = ad_unipotent(beta, x, el);
                    LieElement oracle = decompose(u * el.matrix() * uinv, cb);
                    if (!(closed == oracle)) return false;
                }
            }
        }
    }
    return true;
}

bool suite_cocycle() {
    auto cb = ChevalleyBasis::build(GroupType::A, 2);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pick(0, 2), coeff(-2, 2), sgn(0, 1);
    for (int rep = 0; rep < 5; ++rep) {
        auto rand_b = [&]() {
            Mat b = Mat::identity(3);
            for (int k = 0; k < 2; ++k) {
                SignedRoot beta{pick(rng), sgn(rng) ? 1 : -1};
                FieldElem x(Poly::z() * Poly(coeff(rng)) + Poly(coeff(rng)));
                b = unipotent(beta, x, *cb) * b;
            }
            return b;
        };
        Mat b1 = rand_b(), b2 = rand_b();
        if (!(log_derivative(b1 * b2) ==
              log_derivative(b1) + b1 * log_derivative(b2) * inverse(b1)))
            return false;
    }
    return true;
}

bool suite_companion_tautology() {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (size_t n = 2; n <= 4; ++n) {
        Mat m(n, n);
        for (size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = FieldElem(1);
        std::vector<FieldElem> b;
        for (size_t j = 0; j < n; ++j) {
            Poly p = Poly(coeff(rng)) + Poly::z() * Poly(coeff(rng));
            m.at(n - 1, j) = FieldElem(p);
            b.push_back(FieldElem(p));
        }
        ScalarODE ode;
        ode.coeffs.assign(n + 1, FieldElem());
        ode.coeffs[n] = FieldElem(1);
        for (size_t i = 0; i < n; ++i) ode.coeffs[i] = -b[i];
        auto cert = try_verify_annihilator(m, ode, 0, false);
        if (!cert || !cert->valid()) return false;
    }
    return true;
}

bool suite_annihilators(int max_rank) {
    for (int l = 1; l <= std::min(3, max_rank); ++l) {
        auto cert = try_verify_annihilator(build_parameter_matrix(GroupType::A, l).matrix(),
                                           expand_theorem1(GroupType::A, l), l, false);
        if (!cert || !cert->valid()) return false;
    }
    for (GroupType t : {GroupType::B, GroupType::C}) {
        auto cert = try_verify_annihilator(build_parameter_matrix(t, 2).matrix(),
                                           expand_theorem1(t, 2), 2, true);
        if (!cert || !cert->valid()) return false;
    }
    return true;
}

} // namespace

bool run_selftest(std::ostream& out, int max_rank, bool corrupt_basis) {
    bool all = true;
    auto report = [&](const char* name, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        all = all && ok;
    };
    report("bracket-relations", suite_bracket_relations(max_rank, corrupt_basis));
    report("adjoint-oracle", suite_adjoint_oracle());
    report("gauge-cocycle", suite_cocycle());
    report("companion-tautology", suite_companion_tautology());
    report("theorem-annihilators", suite_annihilators(max_rank));
    return all;
}

} // namespace liegauge
