// Command-line front end. Talks to the library exclusively through the C API
// in sweedler.h; reports cross the boundary as JSON and are rendered here.

#include <sweedler.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct StringDeleter {
    void operator()(char* s) const { swd_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

template <typename T, void (*Destroy)(T*)>
struct HandleDeleter {
    void operator()(T* h) const { Destroy(h); }
};
using AlgebraHandle = std::unique_ptr<swd_algebra, HandleDeleter<swd_algebra, swd_algebra_destroy>>;
using ComoduleHandle = std::unique_ptr<swd_comodule, HandleDeleter<swd_comodule, swd_comodule_destroy>>;
using DescentHandle = std::unique_ptr<swd_descent, HandleDeleter<swd_descent, swd_descent_destroy>>;
using OperatorHandle = std::unique_ptr<swd_operator, HandleDeleter<swd_operator, swd_operator_destroy>>;

int exit_code_for(swd_status st) {
    switch (st) {
        case SWD_OK: return kExitOk;
        case SWD_VERIFY_FAILED: return kExitVerifyFailed;
        default: return kExitInputError;
    }
}

std::size_t report_width() {
    const char* cols = std::getenv("COLUMNS");
    if (!cols) return 100;
    const long w = std::strtol(cols, nullptr, 10);
    return w >= 40 ? static_cast<std::size_t>(w) : 40;
}

void print_wrapped(const std::string& text, std::size_t indent, std::size_t width) {
    std::size_t pos = 0;
    const std::size_t body = width > indent + 8 ? width - indent : 40;
    while (pos < text.size()) {
        std::cout << std::string(indent, ' ') << text.substr(pos, body) << "\n";
        pos += body;
    }
}

std::string fnv1a64_hex(const std::string& content) {
    unsigned long long h = 14695981039346656037ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

struct RunContext {
    std::string command;
    Clock::time_point start = Clock::now();
    bool machine_output = false;
    json artifacts = json::array();

    void note_artifact(const std::string& path, const std::string& content) {
        artifacts.push_back(json{{"path", path}, {"fnv1a64", fnv1a64_hex(content)}});
    }

    bool write_artifact(const std::string& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        out << content;
        if (!out) {
            std::cerr << "error: cannot write '" << path << "'\n";
            return false;
        }
        note_artifact(path, content);
        return true;
    }

    // Renders the run and returns the process exit code.
    int finish(swd_status st, const json& report) {
        const long ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        if (machine_output) {
            json run{{"command", command},
                     {"pass", st == SWD_OK},
                     {"elapsed_ms", ms},
                     {"artifacts", artifacts}};
            if (!report.is_null()) run["report"] = report;
            if (st != SWD_OK && *swd_last_error()) run["error"] = swd_last_error();
            std::cout << run.dump(2) << "\n";
            return exit_code_for(st);
        }
        const std::size_t width = report_width();
        std::cout << "command: " << command << "\n";
        if (report.is_object() && report.contains("checks")) {
            for (const json& c : report.at("checks")) {
                std::cout << (c.at("pass").get<bool>() ? "  ok   " : "  FAIL ")
                          << c.at("name").get<std::string>() << "\n";
                if (c.contains("witness")) print_wrapped(c.at("witness").get<std::string>(), 9, width);
            }
        }
        if (report.is_object() && report.contains("criteria")) {
            for (const json& cr : report.at("criteria")) {
                std::cout << (cr.at("pass").get<bool>() ? "  PASS " : "  FAIL ")
                          << cr.at("id").get<std::string>() << "  " << cr.at("title").get<std::string>()
                          << "\n";
                if (!cr.at("pass").get<bool>())
                    for (const json& c : cr.at("checks"))
                        if (!c.at("pass").get<bool>()) {
                            std::cout << "         FAIL " << c.at("name").get<std::string>() << "\n";
                            if (c.contains("witness"))
                                print_wrapped(c.at("witness").get<std::string>(), 14, width);
                        }
            }
        }
        for (const json& a : artifacts)
            std::cout << "wrote " << a.at("path").get<std::string>() << " (fnv1a64 "
                      << a.at("fnv1a64").get<std::string>() << ")\n";
        if (st == SWD_OK) {
            std::cout << "pass (" << ms << " ms)\n";
        } else if (st == SWD_VERIFY_FAILED) {
            std::cout << "FAILED (" << ms << " ms)\n";
        } else {
            std::cerr << "error: " << swd_last_error() << "\n";
        }
        return exit_code_for(st);
    }
};

json parse_report(const ApiString& text) {
    if (!text) return json();
    return json::parse(text.get(), nullptr, false);
}

AlgebraHandle make_algebra(const std::string& spec, const std::string& field, swd_status& st) {
    swd_algebra* raw = nullptr;
    st = swd_algebra_create(spec.c_str(), field.c_str(), &raw);
    return AlgebraHandle(raw);
}

ComoduleHandle make_comodule(const swd_algebra* a, const std::string& spec, swd_status& st) {
    swd_comodule* raw = nullptr;
    st = swd_comodule_create(a, spec.c_str(), &raw);
    return ComoduleHandle(raw);
}

int fail_input(RunContext& ctx) { return ctx.finish(SWD_INVALID_INPUT, json()); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact comodules over the Sweedler coring A (x) A, descent data, braidings, and "
                 "Yang-Baxter operators"};
    app.require_subcommand(1);

    std::string field = "Q";
    bool machine_output = false;
    app.add_option("--field", field, "ground field: Q or Fp:<prime>")->capture_default_str();
    app.add_flag("--json", machine_output, "emit the run report as JSON");

    // algebra check
    auto* algebra_cmd = app.add_subcommand("algebra", "algebra inspection");
    auto* algebra_check = algebra_cmd->add_subcommand("check", "validate associativity and unit laws");
    std::string algebra_spec;
    algebra_check->add_option("spec", algebra_spec, "builtin name (kn:2, mat:3, upper:2), file, or JSON")
        ->required();

    // comodule verify
    auto* comodule_cmd = app.add_subcommand("comodule", "comodule verification");
    auto* comodule_verify = comodule_cmd->add_subcommand("verify", "check the coaction axioms");
    std::string comodule_algebra, comodule_spec;
    bool check_yd = false;
    comodule_verify->add_option("--algebra", comodule_algebra, "algebra spec")->required();
    comodule_verify->add_option("comodule", comodule_spec, "regular | zero | free:<n> | rmatrix | file | JSON")
        ->required();
    comodule_verify->add_flag("--yd", check_yd, "also require the Yetter-Drinfeld compatibilities");

    // descent verify
    auto* descent_cmd = app.add_subcommand("descent", "descent data");
    auto* descent_verify = descent_cmd->add_subcommand("verify", "check the descent datum conditions");
    std::string descent_algebra, descent_spec;
    descent_verify->add_option("--algebra", descent_algebra, "algebra spec")->required();
    descent_verify->add_option("datum", descent_spec, "regular | free:<n> | file | JSON")->required();

    // tensor
    auto* tensor_cmd = app.add_subcommand("tensor", "compute V (x)_A W with its induced coaction");
    std::string tensor_algebra, tensor_v, tensor_w, tensor_out;
    tensor_cmd->add_option("--algebra", tensor_algebra, "algebra spec")->required();
    tensor_cmd->add_option("V", tensor_v, "left factor")->required();
    tensor_cmd->add_option("W", tensor_w, "right factor")->required();
    tensor_cmd->add_option("--out", tensor_out, "write the quotient data as JSON");

    // braid
    auto* braid_cmd = app.add_subcommand("braid", "braiding matrices and categorical checks");
    std::string braid_algebra, braid_v, braid_w, braid_out, braid_check;
    braid_cmd->add_option("--algebra", braid_algebra, "algebra spec")->required();
    braid_cmd->add_option("V", braid_v, "first comodule")->required();
    braid_cmd->add_option("W", braid_w, "second comodule (required unless --check naturality|unit)");
    braid_cmd->add_option("--check", braid_check, "hexagon | naturality | unit");
    braid_cmd->add_option("--out", braid_out, "write the braiding matrices as JSON");

    // ybe build / check / export
    auto* ybe_cmd = app.add_subcommand("ybe", "Yang-Baxter operators");
    auto* ybe_build = ybe_cmd->add_subcommand("build", "build an operator from a comodule");
    std::string ybe_algebra, ybe_comodule, ybe_from = "comodule", ybe_out;
    ybe_build->add_option("--algebra", ybe_algebra, "algebra spec")->required();
    ybe_build->add_option("comodule", ybe_comodule, "source comodule spec (grouplike spec for --from grouplike)")->required();
    ybe_build->add_option("--from", ybe_from, "comodule | yd | grouplike | rmatrix")->capture_default_str();
    ybe_build->add_option("--out", ybe_out, "export the operator as JSON");

    auto* ybe_check = ybe_cmd->add_subcommand("check", "verify an exported operator file");
    std::string ybe_check_file;
    bool flag_qybe = false, flag_cube = false;
    std::string ybe_check_algebra, ybe_check_source;
    ybe_check->add_option("operator", ybe_check_file, "operator JSON file")->required();
    ybe_check->add_flag("--qybe", flag_qybe, "check the quantum Yang-Baxter equation (m <= 9)");
    ybe_check->add_flag("--cube", flag_cube, "check Omega^3 = Omega against a source comodule");
    ybe_check->add_option("--algebra", ybe_check_algebra, "algebra for --cube");
    ybe_check->add_option("--source", ybe_check_source, "source comodule for --cube");

    auto* ybe_export = ybe_cmd->add_subcommand("export", "build and write an operator file");
    std::string export_algebra, export_comodule, export_from = "comodule", export_out,
                export_format = "json";
    ybe_export->add_option("--algebra", export_algebra, "algebra spec")->required();
    ybe_export->add_option("comodule", export_comodule, "source comodule spec")->required();
    ybe_export->add_option("--from", export_from, "comodule | yd | grouplike | rmatrix")->capture_default_str();
    ybe_export->add_option("--format", export_format, "json")->capture_default_str();
    ybe_export->add_option("--out", export_out, "output path")->required();

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run the built-in property suite");
    std::string profile = "quick";
    suite_cmd->add_option("--profile", profile, "quick | full")->capture_default_str();

    // let --field / --json appear after the subcommand name
    for (CLI::App* cmd : {algebra_cmd, algebra_check, comodule_cmd, comodule_verify, descent_cmd,
                          descent_verify, tensor_cmd, braid_cmd, ybe_cmd, ybe_build, ybe_check,
                          ybe_export, suite_cmd})
        cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    RunContext ctx;
    ctx.machine_output = machine_output;

    if (algebra_check->parsed()) {
        ctx.command = "algebra check " + algebra_spec;
        swd_status st;
        AlgebraHandle a = make_algebra(algebra_spec, field, st);
        if (!a) return ctx.finish(st, json());
        char* rep = nullptr;
        st = swd_algebra_check(a.get(), &rep);
        ApiString rep_s(rep);
        return ctx.finish(st, parse_report(rep_s));
    }

    if (comodule_verify->parsed()) {
        ctx.command = "comodule verify " + comodule_spec;
        swd_status st;
        AlgebraHandle a = make_algebra(comodule_algebra, field, st);
        if (!a) return ctx.finish(st, json());
        ComoduleHandle c = make_comodule(a.get(), comodule_spec, st);
        if (!c) return ctx.finish(st, json());
        char* rep = nullptr;
        st = swd_comodule_verify(c.get(), check_yd ? 1 : 0, &rep);
        ApiString rep_s(rep);
        return ctx.finish(st, parse_report(rep_s));
    }

    if (descent_verify->parsed()) {
        ctx.command = "descent verify " + descent_spec;
        swd_status st;
        AlgebraHandle a = make_algebra(descent_algebra, field, st);
        if (!a) return ctx.finish(st, json());
        swd_descent* raw = nullptr;
        st = swd_descent_create(a.get(), descent_spec.c_str(), &raw);
        DescentHandle d(raw);
        if (!d) return ctx.finish(st, json());
        char* rep = nullptr;
        st = swd_descent_verify(d.get(), &rep);
        ApiString rep_s(rep);
        return ctx.finish(st, parse_report(rep_s));
    }

    if (tensor_cmd->parsed()) {
        ctx.command = "tensor " + tensor_v + " " + tensor_w;
        swd_status st;
        AlgebraHandle a = make_algebra(tensor_algebra, field, st);
        if (!a) return ctx.finish(st, json());
        ComoduleHandle v = make_comodule(a.get(), tensor_v, st);
        if (!v) return ctx.finish(st, json());
        ComoduleHandle w = make_comodule(a.get(), tensor_w, st);
        if (!w) return ctx.finish(st, json());
        char* out = nullptr;
        st = swd_tensor(v.get(), w.get(), &out);
        ApiString out_s(out);
        if (st != SWD_OK) return ctx.finish(st, json());
        if (!tensor_out.empty() && !ctx.write_artifact(tensor_out, std::string(out_s.get()) + "\n"))
            return fail_input(ctx);
        json rep = json::parse(out_s.get(), nullptr, false);
        json checks{{"name", "tensor-dim-" + std::to_string(rep.value("dim", 0))}, {"pass", true}};
        return ctx.finish(st, json{{"checks", json::array({checks})}});
    }

    if (braid_cmd->parsed()) {
        swd_status st;
        AlgebraHandle a = make_algebra(braid_algebra, field, st);
        if (!a) return ctx.finish(st, json());
        ComoduleHandle v = make_comodule(a.get(), braid_v, st);
        if (!v) return ctx.finish(st, json());
        if (!braid_check.empty()) {
            ctx.command = "braid --check " + braid_check;
            ComoduleHandle w;
            if (braid_check == "hexagon") {
                if (braid_w.empty()) {
                    std::cerr << "error: --check hexagon needs two comodules\n";
                    return fail_input(ctx);
                }
                w = make_comodule(a.get(), braid_w, st);
                if (!w) return ctx.finish(st, json());
            }
            char* rep = nullptr;
            st = swd_braided_check(v.get(), w.get(), braid_check.c_str(), &rep);
            ApiString rep_s(rep);
            return ctx.finish(st, parse_report(rep_s));
        }
        if (braid_w.empty()) {
            std::cerr << "error: braid needs two comodules\n";
            return fail_input(ctx);
        }
        ctx.command = "braid " + braid_v + " " + braid_w;
        ComoduleHandle w = make_comodule(a.get(), braid_w, st);
        if (!w) return ctx.finish(st, json());
        char* out = nullptr;
        st = swd_braiding(v.get(), w.get(), &out);
        ApiString out_s(out);
        if (st != SWD_OK) return ctx.finish(st, json());
        if (!braid_out.empty() && !ctx.write_artifact(braid_out, std::string(out_s.get()) + "\n"))
            return fail_input(ctx);
        json rep = json::parse(out_s.get(), nullptr, false);
        json checks = json::array(
            {json{{"name", "braiding-dim-" + std::to_string(rep.value("dim_vw", 0))}, {"pass", true}}});
        return ctx.finish(st, json{{"checks", checks}});
    }

    if (ybe_build->parsed() || ybe_export->parsed()) {
        const bool exporting = ybe_export->parsed();
        const std::string& alg_spec = exporting ? export_algebra : ybe_algebra;
        const std::string& com_spec = exporting ? export_comodule : ybe_comodule;
        const std::string& from = exporting ? export_from : ybe_from;
        const std::string& out_path = exporting ? export_out : ybe_out;
        if (exporting && export_format != "json") {
            std::cerr << "error: only --format json is supported\n";
            ctx.command = "ybe export";
            return fail_input(ctx);
        }
        ctx.command = (exporting ? "ybe export " : "ybe build ") + com_spec + " --from " + from;
        swd_status st;
        AlgebraHandle a = make_algebra(alg_spec, field, st);
        if (!a) return ctx.finish(st, json());
        ComoduleHandle c;  // stays empty for the grouplike recipe
        swd_operator* raw = nullptr;
        if (from == "grouplike") {
            st = swd_operator_build_grouplike(a.get(), com_spec.c_str(), &raw);
        } else {
            c = make_comodule(a.get(), com_spec, st);
            if (!c) return ctx.finish(st, json());
            st = swd_operator_build(c.get(), from.c_str(), &raw);
        }
        OperatorHandle op(raw);
        if (!op) return ctx.finish(st, json());
        char* out = nullptr;
        st = swd_operator_to_json(op.get(), c.get(), &out);
        ApiString out_s(out);
        if (st != SWD_OK) return ctx.finish(st, json());
        if (!out_path.empty() && !ctx.write_artifact(out_path, std::string(out_s.get()) + "\n"))
            return fail_input(ctx);
        const json exported = json::parse(out_s.get(), nullptr, false);
        json checks = json::array();
        checks.push_back(json{{"name", "qybe"}, {"pass", exported.value("qybe", false)}});
        if (exported.value("provenance", "") == "comodule")
            checks.push_back(json{{"name", "cube"}, {"pass", exported.value("cube", false)}});
        const json rep{{"checks", checks}};
        bool all = true;
        for (const json& ch : checks) all = all && ch.at("pass").get<bool>();
        return ctx.finish(all ? SWD_OK : SWD_VERIFY_FAILED, rep);
    }

    if (ybe_check->parsed()) {
        ctx.command = "ybe check " + ybe_check_file;
        if (!flag_qybe && !flag_cube) flag_qybe = true;
        std::ifstream in(ybe_check_file, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read '" << ybe_check_file << "'\n";
            return fail_input(ctx);
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        swd_operator* raw = nullptr;
        swd_status st = swd_operator_from_json(text.c_str(), &raw);
        OperatorHandle op(raw);
        if (!op) return ctx.finish(st, json());
        ComoduleHandle source;
        if (flag_cube) {
            if (ybe_check_algebra.empty() || ybe_check_source.empty()) {
                std::cerr << "error: --cube needs --algebra and --source\n";
                return fail_input(ctx);
            }
            AlgebraHandle a = make_algebra(ybe_check_algebra, field, st);
            if (!a) return ctx.finish(st, json());
            source = make_comodule(a.get(), ybe_check_source, st);
            if (!source) return ctx.finish(st, json());
        }
        char* rep = nullptr;
        st = swd_operator_check(op.get(), source.get(), flag_qybe ? 1 : 0, flag_cube ? 1 : 0, &rep);
        ApiString rep_s(rep);
        return ctx.finish(st, parse_report(rep_s));
    }

    if (suite_cmd->parsed()) {
        ctx.command = "suite --profile " + profile;
        char* rep = nullptr;
        const swd_status st = swd_suite_run(profile.c_str(), &rep);
        ApiString rep_s(rep);
        return ctx.finish(st, parse_report(rep_s));
    }

    std::cerr << "error: no command\n";
    return kExitInputError;
}
