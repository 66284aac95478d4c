#include "rescurv/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rescurv/families.hpp"
#include "rescurv/verify.hpp"
#include "rescurv/walks.hpp"

namespace rescurv {

namespace {

constexpr const char* kSchema = "rescurv/1";

std::string fmt(double x, const char* spec = "%.12g") {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

Graph load_graph(const std::string& input, std::istream& in) {
    if (input == "-") return parse_edge_list(in);
    std::ifstream file(input);
    if (!file) throw Error("cannot open input file: " + input);
    return parse_edge_list(file);
}

// Prepends the schema version to a module-level JSON object.
std::string with_schema(const std::string& body) {
    auto parsed = nlohmann::ordered_json::parse(body);
    nlohmann::ordered_json out;
    out["schema"] = kSchema;
    for (auto& [key, value] : parsed.items()) out[key] = std::move(value);
    return out.dump(2);
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

const char* sign_color(SignClass s) {
    switch (s) {
    case SignClass::Positive: return "red";
    case SignClass::Negative: return "blue";
    case SignClass::Zero: return "gray";
    }
    return "gray";
}

int resolve_vertex(const Graph& g, const std::string& label) {
    int v = g.index_of(label);
    if (v < 0) throw Error("unknown vertex label: " + label);
    return v;
}

int run_curvature(const Graph& g, const std::string& format, std::ostream& out) {
    const CurvatureResult cr = curvature(resistance_matrix(g, /*with_spectrum=*/false));
    if (format == "json") {
        out << with_schema(curvature_json(cr)) << "\n";
        return 0;
    }
    out << "graph: " << g.order() << " vertices, " << g.edge_count() << " edges\n";
    out << "vertex kappa sign\n";
    for (int v = 0; v < g.order(); ++v) {
        const char* sign = cr.signs[v] == SignClass::Positive ? "+"
                           : cr.signs[v] == SignClass::Negative ? "-"
                                                                : "0";
        out << g.label(v) << " " << fmt(cr.kappa[v]) << " " << sign << "\n";
    }
    out << "total " << fmt(cr.total) << "\n";
    out << "kmin " << fmt(cr.kmin) << "\n";
    out << "kmax " << fmt(cr.kmax) << "\n";
    out << "constant " << (cr.constant ? "yes" : "no") << "\n";
    return 0;
}

int run_verify(const Graph& g, const std::string& format, std::ostream& out) {
    const TheoremReport report = verify_all(g);
    if (format == "json") {
        out << with_schema(report_json(report)) << "\n";
    } else {
        for (const auto& c : report.checks) {
            if (!c.applicable) {
                out << c.name << " SKIP (" << c.reason << ")\n";
                continue;
            }
            out << c.name << (c.pass ? " PASS " : " FAIL ") << "lhs=" << fmt(c.lhs, "%.9g")
                << " rhs=" << fmt(c.rhs, "%.9g") << " margin=" << fmt(c.margin, "%.9g")
                << "\n";
        }
        out << (report.all_pass() ? "all checks passed\n"
                                  : std::to_string(report.failed()) + " check(s) failed\n");
    }
    return report.all_pass() ? 0 : 1;
}

int run_export(const Graph& g, bool dot, bool json, bool csv, std::ostream& out) {
    if (json) {
        out << g.to_json() << "\n";
        return 0;
    }
    if (csv) {
        out << omega_csv(g, resistance_matrix(g, /*with_spectrum=*/false));
        return 0;
    }
    if (dot) {
        const CurvatureResult cr =
            curvature(resistance_matrix(g, /*with_spectrum=*/false));
        out << "graph G {\n  node [style=filled];\n";
        for (int v = 0; v < g.order(); ++v)
            out << "  \"" << dot_escape(g.label(v)) << "\" [fillcolor="
                << sign_color(cr.signs[v]) << "];\n";
        for (auto [u, v] : g.edges())
            out << "  \"" << dot_escape(g.label(u)) << "\" -- \""
                << dot_escape(g.label(v)) << "\";\n";
        out << "}\n";
        return 0;
    }
    throw Error("export: choose one of --dot, --json, --csv");
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"resistance-curvature toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "text";

    auto* curvature_cmd = app.add_subcommand("curvature", "solve for per-vertex curvature");
    curvature_cmd->add_option("input,--input,-i", input, "edge-list file or '-'");
    curvature_cmd->add_option("--format,-f", format)
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run every applicable theorem check");
    verify_cmd->add_option("input,--input,-i", input, "edge-list file or '-'");
    verify_cmd->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json"}));

    auto* family_cmd = app.add_subcommand("family", "emit a named graph as edge-list text");
    std::string kind;
    std::vector<int> params;
    family_cmd->add_option("kind", kind,
                           "complete|cycle|path|hypercube|torus|petersen|wagner|antiprism")
        ->required();
    family_cmd->add_option("params", params, "family parameters");

    auto* simulate_cmd = app.add_subcommand("simulate", "random-walk experiments");
    simulate_cmd->require_subcommand(1);
    std::string x_label, y_label, start_label;
    std::int64_t samples = 20000;
    std::uint64_t seed = 1;
    int horizon = 100;
    double laziness = 0.0;

    auto* commute_cmd = simulate_cmd->add_subcommand("commute", "estimate commute time");
    commute_cmd->add_option("input,--input,-i", input, "edge-list file or '-'");
    commute_cmd->add_option("--x", x_label, "start vertex label")->required();
    commute_cmd->add_option("--y", y_label, "target vertex label")->required();
    commute_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
    commute_cmd->add_option("--seed", seed);
    commute_cmd->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json"}));

    auto* mixing_cmd = simulate_cmd->add_subcommand("mixing", "exact TV mixing curve (CSV)");
    mixing_cmd->add_option("input,--input,-i", input, "edge-list file or '-'");
    mixing_cmd->add_option("--start", start_label, "start vertex label");
    mixing_cmd->add_option("--horizon,-T", horizon)->check(CLI::NonNegativeNumber);
    mixing_cmd->add_option("--laziness", laziness)->check(CLI::Range(0.0, 0.999999));
    mixing_cmd->add_option("--seed", seed); // accepted for interface symmetry; unused

    auto* export_cmd = app.add_subcommand("export", "write graph artifacts");
    export_cmd->add_option("input,--input,-i", input, "edge-list file or '-'");
    bool want_dot = false, want_json = false, want_csv = false;
    auto* dot_flag = export_cmd->add_flag("--dot", want_dot, "DOT, colored by curvature sign");
    auto* json_flag = export_cmd->add_flag("--json", want_json, "graph as JSON");
    auto* csv_flag = export_cmd->add_flag("--csv", want_csv, "resistance matrix as CSV");
    dot_flag->excludes(json_flag)->excludes(csv_flag);
    json_flag->excludes(csv_flag);

    std::vector<const char*> argv;
    argv.push_back("rescurv");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(family_cmd)) {
            out << generate(family_spec(kind, params)).to_edge_list();
            return 0;
        }
        if (app.got_subcommand(curvature_cmd))
            return run_curvature(load_graph(input, in), format, out);
        if (app.got_subcommand(verify_cmd))
            return run_verify(load_graph(input, in), format, out);
        if (app.got_subcommand(export_cmd))
            return run_export(load_graph(input, in), want_dot, want_json, want_csv, out);
        if (app.got_subcommand(simulate_cmd)) {
            const Graph g = load_graph(input, in);
            if (simulate_cmd->got_subcommand(commute_cmd)) {
                const int x = resolve_vertex(g, x_label);
                const int y = resolve_vertex(g, y_label);
                const WalkEstimate e = estimate_commute(g, x, y, samples, seed);
                const ResistanceData rd = resistance_matrix(g, /*with_spectrum=*/false);
                const double exact = 2.0 * g.edge_count() * rd.omega(x, y);
                if (format == "json") {
                    nlohmann::ordered_json j;
                    j["schema"] = kSchema;
                    j["mean"] = e.mean;
                    j["std_error"] = e.std_error;
                    j["samples"] = e.samples;
                    j["seed"] = e.seed;
                    j["exact"] = exact;
                    out << j.dump(2) << "\n";
                } else {
                    out << "commute(" << x_label << ", " << y_label
                        << "): mean=" << fmt(e.mean) << " std_error=" << fmt(e.std_error)
                        << " samples=" << e.samples << " seed=" << e.seed
                        << " exact=" << fmt(exact) << "\n";
                }
                return 0;
            }
            // mixing
            const int start = start_label.empty() ? 0 : resolve_vertex(g, start_label);
            const MixingCurve curve = tv_curve(g, start, horizon, laziness);
            std::optional<double> bound;
            const CurvatureResult cr =
                curvature(resistance_matrix(g, /*with_spectrum=*/false));
            if (cr.positively_curved())
                bound = 4.0 / cr.kmin * g.edge_count() / g.order();
            out << mixing_csv(curve, bound);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace rescurv
