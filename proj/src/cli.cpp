#include "graceful/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "graceful/bounds.hpp"
#include "graceful/constructions.hpp"
#include "graceful/json_io.hpp"
#include "graceful/solver.hpp"

namespace graceful {

namespace {

FamilySpec parse_family_spec(const std::string& code, int n) {
    auto family = family_from_code(code);
    if (!family) {
        std::string known;
        for (Family f : all_families()) {
            if (!known.empty()) known += ", ";
            known += family_code(f);
        }
        throw CLI::ValidationError("--family", "unknown family \"" + code +
                                                   "\" (one of: " + known + ")");
    }
    return {*family, n};
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    const std::string text = read_text(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json doc = Json::parse(text, nullptr, false);
        if (doc.is_discarded()) throw SchemaError("invalid JSON in " + path);
        return graph_from_json(doc);
    }
    return graph_from_dot(text);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw SchemaError("cannot write " + path);
    file << text;
}

// "A..B" or a single "N"
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw CLI::ValidationError("--n", "empty range " + text);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--n", "expected N or A..B, got \"" + text + "\"");
    }
}

std::string coloring_line(const Graph& g, const VertexColoring& f) {
    std::string line;
    for (const auto& v : g.vertices()) {
        if (!line.empty()) line += ' ';
        line += to_string(v) + '=' + std::to_string(f.color_of(v));
    }
    return line;
}

struct SolverFlags {
    int kmax = 16;
    std::optional<int> kmin;
    bool no_prune = false;
    bool max_degree_only = false;
    bool no_symmetry = false;
    std::string order = "interleaved";
    int jobs = 1;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_secs;

    void attach(CLI::App& cmd) {
        cmd.add_option("--kmax", kmax, "largest palette size tried")
            ->check(CLI::Range(2, 62));
        cmd.add_option("--kmin", kmin, "start the palette climb at this k");
        cmd.add_flag("--no-prune", no_prune, "drop the extreme-color pruning rule");
        cmd.add_flag("--prune-max-degree-only", max_degree_only,
                     "apply the extreme-color rule only at maximum-degree vertices");
        cmd.add_flag("--no-symmetry", no_symmetry,
                     "do not halve the root colors by palette reflection");
        cmd.add_option("--order", order, "assignment order: interleaved|degree-descending");
        cmd.add_option("--jobs", jobs, "parallel workers split by root color")
            ->check(CLI::PositiveNumber);
        cmd.add_option("--budget-nodes", budget_nodes, "per-k node budget");
        cmd.add_option("--budget-secs", budget_secs, "per-k time budget in seconds");
    }

    SearchConfig config() const {
        SearchConfig cfg;
        cfg.k_max_cap = kmax;
        cfg.k_min_override = kmin;
        cfg.prune_extreme_colors = !no_prune;
        cfg.prune_per_vertex_degree = !max_degree_only;
        cfg.symmetry_reflection = !no_symmetry;
        auto parsed = vertex_order_from_string(order);
        if (!parsed)
            throw CLI::ValidationError("--order", "unknown order \"" + order + "\"");
        cfg.vertex_order = *parsed;
        cfg.jobs = jobs;
        cfg.node_budget = budget_nodes;
        cfg.time_budget_seconds = budget_secs;
        return cfg;
    }
};

int cmd_gen(const std::string& family, int n, const std::string& format,
            const std::string& out_path, std::ostream& out) {
    const FamilySpec spec = parse_family_spec(family, n);
    const Graph g = build_family(spec);
    if (format == "dot")
        write_output(out_path, to_dot(g), out);
    else
        write_output(out_path, graph_to_json(g, spec).dump(2) + "\n", out);
    return kExitOk;
}

int cmd_color(const std::string& family, int n, const std::string& format,
              std::ostream& out, std::ostream& err) {
    const FamilySpec spec = parse_family_spec(family, n);
    auto result = color_family(spec);
    if (!result) {
        err << "no closed-form coloring for " << family_graph_name(spec)
            << "; use `solve` for an exact search\n";
        return kExitUsage;
    }
    if (format == "grid") {
        out << family_graph_name(spec) << "  k=" << result->claimed_chi_g << "  ("
            << result->source_case << ")\n";
        for (Rail rail : {Rail::X, Rail::Y}) {
            out << (rail == Rail::X ? "x:" : "y:");
            for (int i = 1; i <= n; ++i)
                out << ' ' << result->coloring.color_of({rail, i});
            out << '\n';
        }
    } else {
        out << construction_to_json(*result).dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_validate(const std::string& graph_path, const std::string& coloring_path,
                 bool as_json, std::ostream& out) {
    const Graph g = load_graph(graph_path);
    Json doc = Json::parse(read_text(coloring_path), nullptr, false);
    if (doc.is_discarded()) throw SchemaError("invalid JSON in " + coloring_path);
    const VertexColoring f = coloring_from_json(doc);
    ValidationReport report;
    try {
        report = is_graceful(g, f);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());  // missing vertex or out-of-range color
    }
    if (as_json) {
        out << validation_to_json(report).dump(2) << '\n';
    } else if (report.graceful) {
        out << g.name() << ": graceful with k=" << f.k << '\n';
    } else {
        out << g.name() << ": not graceful (" << report.violations.size()
            << " violations)\n";
        for (const auto& v : report.violations) {
            out << "  " << to_string(v.kind) << ":";
            for (const auto& vertex : v.vertices) out << ' ' << to_string(vertex);
            out << '\n';
        }
    }
    return report.graceful ? kExitOk : kExitNegative;
}

int cmd_solve(const Graph& g, std::optional<int> single_k, const SolverFlags& flags,
              bool as_json, bool deterministic, const std::string& out_path,
              std::ostream& out) {
    const SearchConfig cfg = flags.config();
    std::ostringstream text;
    int exit_code = kExitOk;
    if (single_k) {
        const FeasibilityResult res = find_graceful_coloring(g, *single_k, cfg);
        if (as_json) {
            text << feasibility_to_json(g, *single_k, res, cfg, !deterministic).dump(2)
                 << '\n';
        } else if (res.witness) {
            text << g.name() << ": graceful " << *single_k << "-coloring found\n  "
                 << coloring_line(g, *res.witness) << '\n';
        } else {
            text << g.name() << ": no graceful " << *single_k << "-coloring ("
                 << (res.completed ? "exhausted" : "budget ran out") << ", "
                 << res.nodes_expanded << " nodes)\n";
        }
        exit_code = res.witness ? kExitOk
                                : (res.completed ? kExitNegative : kExitInconclusive);
    } else {
        const SolveReport report = graceful_chromatic_number(g, cfg);
        if (as_json) {
            text << solve_report_to_json(g, report, !deterministic).dump(2) << '\n';
        } else {
            text << g.name() << ": ";
            if (report.chi_g > 0)
                text << "chi_g " << (report.conclusive() ? "= " : "<= ") << report.chi_g;
            else
                text << "no graceful coloring with k <= " << cfg.k_max_cap;
            text << "  [" << to_string(report.status) << ", lower bound "
                 << report.lower_bound_used << ", " << report.nodes_expanded_total
                 << " nodes]\n";
            for (const auto& a : report.attempts)
                text << "  k=" << a.k << ": "
                     << (a.k == report.chi_g
                             ? "witness"
                             : (a.completed ? "infeasible, exhausted" : "budget ran out"))
                     << ", " << a.nodes_expanded << " nodes\n";
            if (report.witness)
                text << "  witness: " << coloring_line(g, *report.witness) << '\n';
        }
        switch (report.status) {
            case SolveStatus::Solved: exit_code = kExitOk; break;
            case SolveStatus::ExhaustedToCap: exit_code = kExitNegative; break;
            default: exit_code = kExitInconclusive; break;
        }
    }
    write_output(out_path, text.str(), out);
    return exit_code;
}

int cmd_table(const std::string& families_csv, const std::string& range, bool solve,
              const std::string& format, const SolverFlags& flags, std::ostream& out) {
    std::vector<Family> families;
    std::stringstream ss(families_csv);
    std::string code;
    while (std::getline(ss, code, ',')) {
        auto f = family_from_code(code);
        if (!f) throw CLI::ValidationError("--families", "unknown family \"" + code + "\"");
        families.push_back(*f);
    }
    const auto [lo, hi] = parse_range(range);

    const bool markdown = format == "markdown";
    const char* dash = "—";
    std::vector<std::string> header{"family", "n", "known", "construction"};
    if (solve) header.push_back("solver");
    header.push_back("agree");

    auto emit_row = [&](const std::vector<std::string>& cells) {
        if (markdown) {
            out << "|";
            for (const auto& c : cells) out << ' ' << c << " |";
            out << '\n';
        } else {
            for (std::size_t i = 0; i < cells.size(); ++i)
                out << cells[i] << (i + 1 < cells.size() ? "," : "");
            out << '\n';
        }
    };
    emit_row(header);
    if (markdown) {
        std::vector<std::string> rule(header.size(), "---");
        emit_row(rule);
    }

    bool all_agree = true;
    for (Family family : families) {
        for (int n = std::max(lo, family_min_n(family)); n <= hi; ++n) {
            const FamilySpec spec{family, n};
            std::vector<std::string> cells{std::string(family_code(family)),
                                           std::to_string(n)};
            std::vector<int> present;
            if (auto known = known_chi_g(spec)) {
                cells.push_back(std::to_string(known->chi_g));
                present.push_back(known->chi_g);
            } else {
                cells.push_back(dash);
            }
            if (auto built = color_family(spec)) {
                cells.push_back(std::to_string(built->claimed_chi_g));
                present.push_back(built->claimed_chi_g);
            } else {
                cells.push_back(dash);
            }
            bool row_conclusive = true;
            if (solve) {
                const SolveReport report =
                    graceful_chromatic_number(build_family(spec), flags.config());
                if (report.conclusive()) {
                    cells.push_back(std::to_string(report.chi_g));
                    present.push_back(report.chi_g);
                } else {
                    cells.push_back(dash);
                    row_conclusive = false;
                }
            }
            const bool agree =
                row_conclusive &&
                std::all_of(present.begin(), present.end(),
                            [&](int v) { return v == present.front(); });
            cells.push_back(agree ? "true" : "false");
            if (solve && !agree) all_agree = false;
            emit_row(cells);
        }
    }
    return (!solve || all_agree) ? kExitOk : kExitNegative;
}

int cmd_bench(const Graph& g, std::optional<int> single_k, int repeat,
              const SolverFlags& flags, std::ostream& out) {
    const SearchConfig cfg = flags.config();
    out << "graph,run,mode,k,nodes,seconds\n";
    for (int run = 1; run <= repeat; ++run) {
        if (single_k) {
            const FeasibilityResult res = find_graceful_coloring(g, *single_k, cfg);
            out << g.name() << ',' << run << ",feasibility," << *single_k << ','
                << res.nodes_expanded << ',' << res.elapsed_seconds << '\n';
        } else {
            const SolveReport report = graceful_chromatic_number(g, cfg);
            out << g.name() << ',' << run << ",chi," << report.chi_g << ','
                << report.nodes_expanded_total << ',' << report.elapsed_seconds << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graceful colorings of ladder graphs: generate, color, validate, solve"};
    app.name("graceful");
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a family graph as JSON or DOT");
    std::string gen_family, gen_format = "json", gen_out;
    int gen_n = 0;
    gen->add_option("--family", gen_family, "family code (L, OL, ..., P, C)")->required();
    gen->add_option("--n", gen_n, "number of columns / vertices")->required();
    gen->add_option("--format", gen_format, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // color
    auto* color = app.add_subcommand("color", "emit the closed-form graceful coloring");
    std::string color_family_code, color_format = "json";
    int color_n = 0;
    color->add_option("--family", color_family_code, "family code")->required();
    color->add_option("--n", color_n, "number of columns")->required();
    color->add_option("--format", color_format, "json|grid")
        ->check(CLI::IsMember({"json", "grid"}));

    // validate
    auto* validate = app.add_subcommand("validate", "check a coloring against a graph");
    std::string val_graph, val_coloring;
    bool val_json = false;
    validate->add_option("--graph", val_graph, "graph file (JSON or DOT, - for stdin)")
        ->required();
    validate->add_option("--coloring", val_coloring, "coloring file (JSON)")->required();
    validate->add_flag("--json", val_json, "emit the full report as JSON");

    // solve
    auto* solve = app.add_subcommand("solve", "exact graceful chromatic number search");
    std::string solve_family, solve_graph, solve_out;
    int solve_n = 0;
    std::optional<int> solve_k;
    bool solve_json = false, solve_deterministic = false;
    SolverFlags solve_flags;
    solve->add_option("--family", solve_family, "family code");
    solve->add_option("--n", solve_n, "number of columns");
    solve->add_option("--graph", solve_graph, "graph file instead of --family/--n");
    solve->add_option("--k", solve_k, "test a single palette size only");
    solve->add_flag("--json", solve_json, "emit the report as JSON");
    solve->add_flag("--deterministic", solve_deterministic,
                    "omit wall-clock fields so identical runs emit identical bytes");
    solve->add_option("--out", solve_out, "output file (default stdout)");
    solve_flags.attach(*solve);

    // table
    auto* table = app.add_subcommand("table", "known / constructed / solved values per n");
    std::string table_families = "L,OL,SL,TL,OTL,DL,ODL,CL,P,C";
    std::string table_range, table_format = "csv";
    bool table_solve = false;
    SolverFlags table_flags;
    table->add_option("--families", table_families, "comma-separated family codes");
    table->add_option("--n", table_range, "range A..B (or single N)")->required();
    table->add_flag("--solve", table_solve, "add an exact-solver column");
    table->add_option("--format", table_format, "csv|markdown")
        ->check(CLI::IsMember({"csv", "markdown"}));
    table_flags.attach(*table);

    // bench
    auto* bench = app.add_subcommand("bench", "time repeated solver runs as CSV");
    std::string bench_family, bench_graph;
    int bench_n = 0, bench_repeat = 3;
    std::optional<int> bench_k;
    SolverFlags bench_flags;
    bench->add_option("--family", bench_family, "family code");
    bench->add_option("--n", bench_n, "number of columns");
    bench->add_option("--graph", bench_graph, "graph file instead of --family/--n");
    bench->add_option("--k", bench_k, "time single-k feasibility instead of the climb");
    bench->add_option("--repeat", bench_repeat, "number of timed runs")
        ->check(CLI::PositiveNumber);
    bench_flags.attach(*bench);

    auto resolve_graph = [&](const std::string& family, int n,
                             const std::string& path) -> Graph {
        if (!family.empty() && !path.empty())
            throw CLI::ValidationError("--graph", "give --family/--n or --graph, not both");
        if (!family.empty()) return build_family(parse_family_spec(family, n));
        if (!path.empty()) return load_graph(path);
        throw CLI::ValidationError("--family", "need --family/--n or --graph");
    };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (gen->parsed()) return cmd_gen(gen_family, gen_n, gen_format, gen_out, out);
        if (color->parsed())
            return cmd_color(color_family_code, color_n, color_format, out, err);
        if (validate->parsed()) return cmd_validate(val_graph, val_coloring, val_json, out);
        if (solve->parsed())
            return cmd_solve(resolve_graph(solve_family, solve_n, solve_graph), solve_k,
                             solve_flags, solve_json, solve_deterministic, solve_out, out);
        if (table->parsed())
            return cmd_table(table_families, table_range, table_solve, table_format,
                             table_flags, out);
        if (bench->parsed())
            return cmd_bench(resolve_graph(bench_family, bench_n, bench_graph), bench_k,
                             bench_repeat, bench_flags, out);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace graceful
