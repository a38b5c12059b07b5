#include <CLI11.hpp>
#include <endolift/emit.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

constexpr int kExitUsage = 2;

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitUsage;
    }
    f << text;
    return f ? 0 : kExitUsage;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Endo-trivial modules, lifts, deformations and Lambda algebras: exact verification"};
    app.require_subcommand(1);

    // verify
    endolift::VerifyOptions vo;
    bool d_given = false;
    std::uint64_t seed = 0;
    std::string timings, out, format = "json";
    auto* verify = app.add_subcommand("verify", "Run verification suites and print a report");
    verify->add_option("group", vo.family, "Group family")->required()->check(CLI::IsMember({"sd", "gq", "q8", "cyclic"}));
    verify->add_option("--d", vo.d, "Order exponent: |G| = 2^d");
    verify->add_option("--precision", vo.N, "Precision N of W = Z/2^N")->capture_default_str();
    verify->add_option("--suite", vo.suite, "Suite to run")
        ->check(CLI::IsMember({"all", "endotrivial", "lift", "lambda", "deform"}))
        ->capture_default_str();
    verify->add_flag("--omega", vo.omega, "Extend scalars by a primitive cube root of unity (q8)");
    auto* seed_opt = verify->add_option("--seed", seed, "Enable randomized isomorphism search with this seed");
    verify->add_flag("--unsafe-large", vo.unsafe_large, "Allow d > 5 or N > 16");
    verify->add_option("--timings", timings, "Write per-check timings (ms) to this file");
    verify->add_option("--out", out, "Write the report to this file");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    // emit
    auto* emit = app.add_subcommand("emit", "Write a deterministic JSON certificate or matrix dump");
    emit->require_subcommand(1);
    std::string emit_out, branch = "plus";
    int emit_d = 0, emit_N = 16;
    bool emit_unsafe = false;
    auto common = [&](CLI::App* s) {
        s->add_option("--d", emit_d, "Order exponent")->required();
        s->add_option("--precision", emit_N, "Precision N")->capture_default_str();
        s->add_option("--out", emit_out, "Output file (default stdout)");
        s->add_flag("--unsafe-large", emit_unsafe, "Allow d > 5 or N > 16");
    };
    auto* e_beta = emit->add_subcommand("beta", "beta element and its certificate");
    common(e_beta);
    e_beta->add_option("--branch", branch, "Root of the quadratic")->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();

    endolift::EmitOptions eo;
    std::string lambda_family, ring = "field";
    auto module_opts = [&](CLI::App* s, bool group_required) {
        auto* g = s->add_option("--group", eo.family, "Group family")->check(CLI::IsMember({"sd", "gq", "q8", "cyclic"}));
        if (group_required) g->required();
        s->add_option("--module", eo.module, "Module: k, L or Y")->capture_default_str();
        s->add_option("--omega-power", eo.power, "Apply Omega^i first")->capture_default_str();
        s->add_option("--branch", branch, "Branch for the generalized quaternion L")
            ->check(CLI::IsMember({"plus", "minus"}))
            ->capture_default_str();
    };
    auto* e_def = emit->add_subcommand("deformation", "Universal deformation over W[Gbar]");
    common(e_def);
    module_opts(e_def, true);
    auto* e_mat = emit->add_subcommand("matrices", "Representation matrices, or a Lambda multiplication table");
    common(e_mat);
    module_opts(e_mat, false);
    e_mat->add_option("--lambda", lambda_family, "Emit the Lambda table for sd or gq")->check(CLI::IsMember({"sd", "gq"}));
    e_mat->add_option("--ring", ring, "field or w")->check(CLI::IsMember({"field", "w"}))->capture_default_str();

    // report
    std::string report_file, report_format = "text";
    auto* report = app.add_subcommand("report", "Render a saved report; exit status follows its checks");
    report->add_option("file", report_file, "Report JSON")->required();
    report->add_option("--format", report_format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            d_given = verify->count("--d") > 0;
            if (!d_given) vo.d = endolift::default_d(vo.family);
            if (*seed_opt) vo.seed = seed;
            auto r = endolift::run_verify(vo);
            auto j = r.to_json();
            int rc = write_output(format == "json" ? dump(j) : endolift::render_text(j), out);
            if (rc) return rc;
            if (!timings.empty()) {
                rc = write_output(dump(r.timings_json()), timings);
                if (rc) return rc;
            }
            return endolift::exit_code(r);
        }
        if (emit->parsed()) {
            nlohmann::json j;
            eo.d = emit_d;
            eo.N = emit_N;
            eo.unsafe_large = emit_unsafe;
            eo.branch = endolift::parse_branch(branch);
            if (e_beta->parsed()) {
                endolift::VerifyOptions chk;
                chk.family = "gq";
                chk.d = emit_d;
                chk.N = emit_N;
                chk.unsafe_large = emit_unsafe;
                endolift::normalize(chk);
                j = endolift::emit_beta(emit_d, eo.branch, emit_N);
            } else if (e_def->parsed()) {
                j = endolift::emit_deformation(eo);
            } else if (!lambda_family.empty()) {
                if (emit_d > 6 || emit_d < (lambda_family == "sd" ? 4 : 3))
                    throw std::invalid_argument("Lambda tables exist for sd 4..6 and gq 3..6");
                j = endolift::emit_lambda(lambda_family == "sd" ? endolift::LambdaFamily::SD : endolift::LambdaFamily::GQ,
                                          emit_d);
            } else {
                if (eo.family.empty() || !e_mat->count("--group")) throw std::invalid_argument("--group or --lambda is required");
                eo.over_w = ring == "w";
                j = endolift::emit_matrices(eo);
            }
            return write_output(dump(j), emit_out);
        }
        if (report->parsed()) {
            std::ifstream f(report_file, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot read " << report_file << "\n";
                return kExitUsage;
            }
            std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
            auto j = text.find_first_not_of(" \t\r\n") == std::string::npos ? nlohmann::json::array()
                                                                            : nlohmann::json::parse(text);
            if (j.is_array() && j.empty()) {
                // empty run
                std::cout << (report_format == "json" ? "[]\n" : "no checks\n");
                return 0;
            }
            if (report_format == "json") {
                auto errs = endolift::validate_report(j);
                if (!errs.empty()) {
                    for (auto& e : errs) std::cerr << "schema: " << e << "\n";
                    return kExitUsage;
                }
                std::cout << dump(j);
            } else {
                std::cout << endolift::render_text(j);
            }
            std::vector<endolift::Status> st;
            if (j.contains("checks") && j.at("checks").is_array())
                for (auto& c : j.at("checks")) {
                    auto s = endolift::parse_status(c.value("status", std::string()));
                    st.push_back(s ? *s : endolift::Status::Fail);
                }
            return endolift::exit_code_for(st);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
