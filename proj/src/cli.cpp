#include "matchstick/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "matchstick/render.hpp"
#include "matchstick/serialize.hpp"

namespace matchstick::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string script_path;
    bool builtin = false;
    std::vector<std::string> param_args;
    std::string output;

    void attach(CLI::App* cmd) {
        cmd->add_option("script", script_path, "Construction script (.msc)");
        cmd->add_flag("--builtin", builtin, "Use the bundled 54-vertex construction");
        cmd->add_option("--param", param_args, "Parameter override NAME=DEGREES (repeatable)");
        cmd->add_option("-o,--output", output, "Write output to this file instead of stdout");
    }

    Construction load() const {
        if (builtin == !script_path.empty()) throw UsageError("give exactly one of SCRIPT or --builtin");
        return builtin ? builtin_graph54() : load_script(script_path);
    }

    ParamValues params(const Construction& c) const {
        ParamValues out;
        for (const auto& arg : param_args) {
            const auto eq = arg.find('=');
            if (eq == std::string::npos || eq == 0) throw UsageError(fmt::format("bad --param '{}'", arg));
            const std::string name = arg.substr(0, eq);
            if (!c.parameters.contains(name)) throw UsageError(fmt::format("unknown parameter '{}'", name));
            double v = 0.0;
            try {
                std::size_t used = 0;
                v = std::stod(arg.substr(eq + 1), &used);
                if (used != arg.size() - eq - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw UsageError(fmt::format("bad value in --param '{}'", arg));
            }
            out[name] = v;
        }
        return out;
    }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error(fmt::format("cannot write '{}'", path));
    f << text;
}

io::Json read_json(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error(fmt::format("cannot open '{}'", path));
    try {
        return io::Json::parse(f);
    } catch (const io::Json::parse_error& e) {
        throw std::runtime_error(fmt::format("'{}' is not valid JSON: {}", path, e.what()));
    }
}

// Executes at the given parameters, or solves the directive first.
Embedding build(const Construction& c, const ParamValues& params, bool at_solved) {
    if (!at_solved) return execute(c, params);
    const SolveDirective* d = c.solve_directive();
    if (d == nullptr) throw solve::SolveError(solve::SolveError::Kind::NoSolveDirective, "no solve directive");
    const auto r = solve::solve_param(c, d->parameter, {d->lo, d->hi}, d->target, solve::kResidualTol, params);
    ParamValues solved = params;
    solved[r.param_name] = r.value;
    return execute(c, solved);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Build, solve and verify matchstick graph constructions"};
    app.name("matchstick");
    app.require_subcommand(1);

    Source build_src, solve_src, verify_src, sweep_src, render_src, cal_src;

    auto* build_cmd = app.add_subcommand("build", "Execute a construction and print the embedding as JSON");
    build_src.attach(build_cmd);
    bool build_solved = false;
    build_cmd->add_flag("--at-solved", build_solved, "Solve the free parameter first");

    auto* solve_cmd = app.add_subcommand("solve", "Solve the free parameter so the closing edge has the target length");
    solve_src.attach(solve_cmd);
    std::optional<double> solve_lo, solve_hi;
    double solve_tol = solve::kResidualTol;
    bool solve_json = false;
    solve_cmd->add_option("--lo", solve_lo, "Bracket low end (degrees)");
    solve_cmd->add_option("--hi", solve_hi, "Bracket high end (degrees)");
    solve_cmd->add_option("--tol", solve_tol, "Residual tolerance")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--json", solve_json, "Print the full result as JSON");

    auto* verify_cmd = app.add_subcommand("verify", "Verify matchstick properties; exit 0 iff all pass");
    verify_src.attach(verify_cmd);
    bool verify_solved = false;
    std::string verify_file;
    graphcheck::VerifyConfig vcfg;
    verify_cmd->add_flag("--at-solved", verify_solved, "Solve the free parameter first");
    verify_cmd->add_option("--embedding", verify_file, "Verify an embedding JSON file instead of a script");
    verify_cmd->add_option("--tol", vcfg.unit_tol, "Unit-length tolerance")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--clearance-floor", vcfg.clearance_floor, "Minimum allowed clearance");
    verify_cmd->add_option("--degree", vcfg.expected_degree, "Required vertex degree");
    verify_cmd->add_option("--girth", vcfg.expected_girth, "Required girth");

    auto* sweep_cmd = app.add_subcommand("sweep", "Sample the closing length across the free parameter (CSV)");
    sweep_src.attach(sweep_cmd);
    std::optional<double> sweep_lo, sweep_hi;
    int sweep_steps = 201;
    sweep_cmd->add_option("--lo", sweep_lo, "Range low end (degrees)");
    sweep_cmd->add_option("--hi", sweep_hi, "Range high end (degrees)");
    sweep_cmd->add_option("--steps", sweep_steps, "Number of samples, endpoints included")->check(CLI::Range(2, 1000000));

    auto* render_cmd = app.add_subcommand("render", "Draw the embedding as SVG");
    render_src.attach(render_cmd);
    bool render_solved = false;
    std::string render_file;
    render::RenderOptions ropts;
    render_cmd->add_flag("--at-solved", render_solved, "Solve the free parameter first");
    render_cmd->add_option("--embedding", render_file, "Render an embedding JSON file instead of a script");
    render_cmd->add_option("--scale", ropts.scale, "Pixels per unit length")->check(CLI::PositiveNumber);
    render_cmd->add_flag("--labels", ropts.show_labels, "Draw vertex labels");
    render_cmd->add_option("--vertex-radius", ropts.vertex_radius, "Vertex dot radius (px)")->check(CLI::NonNegativeNumber);
    render_cmd->add_option("--margin", ropts.margin, "Margin (px)")->check(CLI::NonNegativeNumber);
    render_cmd->add_option("--edge-color", ropts.edge_color, "Edge stroke color");
    render_cmd->add_option("--vertex-color", ropts.vertex_color, "Vertex fill color");

    auto* cal_cmd = app.add_subcommand("calibrate", "Search orientation signs for steps marked '?' (development tool)");
    cal_src.attach(cal_cmd);
    std::optional<double> cal_expected;
    cal_cmd->add_option("--expect", cal_expected, "Required solved parameter value (degrees)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*build_cmd) {
            const Construction c = build_src.load();
            const Embedding e = build(c, build_src.params(c), build_solved);
            emit(io::embedding_to_json(e, c.metadata.symmetry).dump(2) + "\n", build_src.output, out);
            return kOk;
        }

        if (*solve_cmd) {
            const Construction c = solve_src.load();
            const SolveDirective* d = c.solve_directive();
            if (d == nullptr) throw solve::SolveError(solve::SolveError::Kind::NoSolveDirective, "no solve directive");
            const solve::Bracket b{solve_lo.value_or(d->lo), solve_hi.value_or(d->hi)};
            const ParamValues base = solve_src.params(c);
            const auto r = solve::solve_param(c, d->parameter, b, d->target, solve_tol, base);
            if (r.sign_changes > 1) {
                err << fmt::format("warning: {} sign changes in [{}, {}]; root may not be unique\n", r.sign_changes,
                                   b.lo, b.hi);
            }
            const std::string json = io::solve_result_to_json(r).dump(2) + "\n";
            if (!solve_src.output.empty()) emit(json, solve_src.output, out);
            if (solve_json) {
                out << json;
            } else {
                out << fmt::format("{} = {:.12f}\n", r.param_name, r.value);
            }
            return kOk;
        }

        if (*verify_cmd) {
            Embedding e;
            std::optional<Symmetry> sym;
            if (!verify_file.empty()) {
                if (verify_src.builtin || !verify_src.script_path.empty()) {
                    throw UsageError("--embedding cannot be combined with a script");
                }
                auto loaded = io::embedding_from_json(read_json(verify_file));
                e = std::move(loaded.embedding);
                sym = std::move(loaded.symmetry);
            } else {
                const Construction c = verify_src.load();
                e = build(c, verify_src.params(c), verify_solved);
                sym = c.metadata.symmetry;
            }
            const auto report = graphcheck::verify(e, vcfg, sym);
            emit(io::report_to_json(report).dump(2) + "\n", verify_src.output, out);
            if (!report.passed) err << "verification failed\n";
            return report.passed ? kOk : kVerificationFailed;
        }

        if (*sweep_cmd) {
            const Construction c = sweep_src.load();
            const SolveDirective* d = c.solve_directive();
            if (d == nullptr) throw solve::SolveError(solve::SolveError::Kind::NoSolveDirective, "no solve directive");
            const solve::Bracket range{sweep_lo.value_or(d->lo), sweep_hi.value_or(d->hi)};
            const auto samples = solve::sweep(c, d->parameter, range, sweep_steps, sweep_src.params(c));
            emit(io::sweep_to_csv(samples), sweep_src.output, out);
            return kOk;
        }

        if (*render_cmd) {
            Embedding e;
            if (!render_file.empty()) {
                if (render_src.builtin || !render_src.script_path.empty()) {
                    throw UsageError("--embedding cannot be combined with a script");
                }
                e = io::embedding_from_json(read_json(render_file)).embedding;
            } else {
                const Construction c = render_src.load();
                e = build(c, render_src.params(c), render_solved);
            }
            emit(render::render_svg(e, ropts), render_src.output, out);
            return kOk;
        }

        if (*cal_cmd) {
            const Construction c = cal_src.load();
            solve::CalibrationOptions opts;
            opts.expected_value = cal_expected;
            const auto found = solve::calibrate_orientations(c, opts);
            std::string text;
            for (const auto& signs : found) {
                for (Turn t : signs) text += geom::turn_symbol(t);
                text += '\n';
            }
            emit(text, cal_src.output, out);
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kConstructionError;
    }
    return kUsage;
}

}  // namespace matchstick::cli
