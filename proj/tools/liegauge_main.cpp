#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liegauge/errors.hpp"
#include "liegauge/json_io.hpp"
#include "liegauge/parser.hpp"

using namespace liegauge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoFailure {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure{"cannot open input file: " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw IoFailure{"cannot open output file: " + output_path};
    out << text << "\n";
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact gauge reduction and normal forms for classical-group "
                 "connection matrices"};
    app.require_subcommand(1);

    std::string type_str = "A", output, input, f_expr, g_expr, a_csv, h_csv, emit_what = "scalar";
    int rank = 1;
    bool verify = false, inject_fault = false;
    int selftest_rank = 3;

    auto add_type_rank = [&](CLI::App* cmd) {
        cmd->add_option("--type", type_str, "group type: A, B, C, D or G2")->required();
        cmd->add_option("--rank", rank, "Lie rank")->required();
        cmd->add_option("--output", output, "write output to this file");
    };

    CLI::App* roots = app.add_subcommand("roots", "dump the positive system, Cartan matrix "
                                                  "and gamma chain as JSON");
    add_type_rank(roots);

    CLI::App* basis = app.add_subcommand("basis", "dump the basis matrices as JSON");
    add_type_rank(basis);

    CLI::App* reduce = app.add_subcommand("reduce", "reduce a connection matrix to normal "
                                                    "form with a gauge certificate");
    reduce->add_option("--input", input, "JSON file with type, rank, field and entries")
        ->required();
    reduce->add_option("--output", output, "write output to this file");

    CLI::App* theorem1 = app.add_subcommand("theorem1", "emit and verify the parameter "
                                                        "normal-form equations");
    add_type_rank(theorem1);
    theorem1->add_option("--emit", emit_what, "scalar, matrix or both")
        ->check(CLI::IsMember({"scalar", "matrix", "both"}));
    theorem1->add_flag("--verify", verify, "run the annihilator certificate");

    CLI::App* gen = app.add_subcommand("genericity-demo", "run the unimodular reduction "
                                                          "chain for a companion system");
    gen->add_option("--rank", rank, "Lie rank l")->required();
    gen->add_option("--f", f_expr, "determinant-like coefficient f")->required();
    gen->add_option("--g", g_expr, "an (l+1)-th root of 1/f")->required();
    gen->add_option("--a", a_csv, "comma-separated a_1,...,a_{l+1}")->required();
    gen->add_option("--output", output, "write output to this file");

    CLI::App* ms = app.add_subcommand("mitschi-singer", "reduce A_0 + z^2 A_1 and emit the "
                                                        "specialization");
    ms->set_help_flag("--help", "print help"); // frees -h for the option below
    add_type_rank(ms);
    ms->add_option("--h", h_csv, "comma-separated Cartan coordinates of A_1")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suites");
    selftest->add_option("--max-rank", selftest_rank, "largest rank to exercise");
    selftest->add_flag("--inject-fault", inject_fault,
                       "corrupt one basis matrix to prove the suite can fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (roots->parsed()) {
            emit(roots_json(group_type_from_str(type_str), rank).dump(2), output);
        } else if (basis->parsed()) {
            emit(basis_json(group_type_from_str(type_str), rank).dump(2), output);
        } else if (reduce->parsed()) {
            json request = json::parse(read_file(input));
            emit(reduce_json(request).dump(2), output);
        } else if (theorem1->parsed()) {
            Theorem1Options opts;
            opts.type = group_type_from_str(type_str);
            opts.rank = rank;
            opts.emit_scalar = emit_what != "matrix";
            opts.emit_matrix = emit_what != "scalar";
            opts.verify = verify;
            json out = theorem1_json(opts);
            if (emit_what == "scalar" && !verify)
                emit(out.at("scalar").get<std::string>(), output);
            else
                emit(out.dump(2), output);
        } else if (gen->parsed()) {
            emit(genericity_json(rank, f_expr, g_expr, split_csv(a_csv)).dump(2), output);
        } else if (ms->parsed()) {
            std::vector<Scalar> h;
            for (const auto& part : split_csv(h_csv)) h.push_back(parse_scalar(part));
            emit(mitschi_singer_json(group_type_from_str(type_str), rank, h).dump(2), output);
        } else if (selftest->parsed()) {
            bool ok = run_selftest(std::cout, selftest_rank, inject_fault);
            return ok ? kExitOk : kExitDomain;
        }
    } catch (const IoFailure& e) {
        std::cerr << "io error: " << e.message << "\n";
        return kExitIo;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
