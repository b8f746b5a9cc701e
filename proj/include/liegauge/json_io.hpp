#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "liegauge/normal_forms.hpp"

namespace liegauge {

using nlohmann::json;

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json roots_json(GroupType type, int rank);
json basis_json(GroupType type, int rank);

// {"type":..,"rank":..,"field":"Cz"|"Ct","entries":[["expr",...],...]}
// -> normal form, specialization and the full gauge certificate.
json reduce_json(const json& request);

struct Theorem1Options {
    GroupType type;
    int rank;
    bool emit_scalar = true;
    bool emit_matrix = false;
    bool verify = false;
};
json theorem1_json(const Theorem1Options& opts);

json mitschi_singer_json(GroupType type, int rank, const std::vector<Scalar>& h);

json genericity_json(int rank, const std::string& f_expr, const std::string& g_expr,
                     const std::vector<std::string>& a_exprs);

// Runs the invariant suites at small rank, printing one PASS/FAIL line per
// suite; returns false when any suite fails. When corrupt_basis is set a
// deliberately broken basis matrix is fed through the bracket suite.
bool run_selftest(std::ostream& out, int max_rank = 3, bool corrupt_basis = false);

} // namespace liegauge
