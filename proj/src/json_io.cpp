#include "graceful/json_io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace graceful {

namespace {

std::string hex64(std::uint64_t value) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

void check_schema(const Json& doc) {
    if (doc.contains("schema") && doc["schema"] != kSchemaTag)
        throw SchemaError("unsupported schema: " + doc["schema"].dump());
}

VertexId vertex_or_throw(const std::string& name) {
    auto v = parse_vertex(name);
    if (!v) throw SchemaError("bad vertex name: \"" + name + "\"");
    return *v;
}

Json vertex_list(const std::vector<VertexId>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(to_string(v));
    return arr;
}

}  // namespace

Json graph_to_json(const Graph& g, const std::optional<FamilySpec>& spec) {
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["kind"] = "graph";
    doc["name"] = g.name();
    if (spec) {
        doc["family"] = family_code(spec->family);
        doc["n"] = spec->n;
    }
    doc["vertices"] = vertex_list(g.vertices());
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(Json::array({to_string(g.vertex(u)), to_string(g.vertex(v))}));
    doc["edges"] = edges;
    return doc;
}

Graph graph_from_json(const Json& doc) {
    check_schema(doc);
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw SchemaError("graph document needs \"vertices\" and \"edges\"");
    std::vector<VertexId> vs;
    for (const auto& item : doc["vertices"]) {
        if (!item.is_string()) throw SchemaError("vertex entries must be strings");
        vs.push_back(vertex_or_throw(item.get<std::string>()));
    }
    std::vector<Edge> es;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw SchemaError("edge entries must be two-element arrays");
        es.push_back({vertex_or_throw(pair[0].get<std::string>()),
                      vertex_or_throw(pair[1].get<std::string>())});
    }
    std::string name = doc.value("name", std::string("graph"));
    try {
        return Graph(std::move(name), std::move(vs), es);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

Json coloring_to_json(const VertexColoring& f) {
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["kind"] = "coloring";
    doc["k"] = f.k;
    Json colors = Json::object();
    for (const auto& [v, c] : f.assignment) colors[to_string(v)] = c;
    doc["colors"] = colors;
    return doc;
}

VertexColoring coloring_from_json(const Json& doc) {
    check_schema(doc);
    if (!doc.is_object()) throw SchemaError("coloring document must be an object");
    if (doc.contains("coloring")) return coloring_from_json(doc["coloring"]);
    if (doc.contains("witness") && !doc.contains("colors"))
        return coloring_from_json(doc["witness"]);
    if (!doc.contains("k") || !doc.contains("colors"))
        throw SchemaError("coloring document needs \"k\" and \"colors\"");
    VertexColoring f;
    if (!doc["k"].is_number_integer() || doc["k"].get<int>() < 2)
        throw SchemaError("\"k\" must be an integer >= 2");
    f.k = doc["k"].get<int>();
    for (const auto& [name, value] : doc["colors"].items()) {
        if (!value.is_number_integer())
            throw SchemaError("color of \"" + name + "\" must be an integer");
        const int c = value.get<int>();
        if (c < 1 || c > f.k)
            throw SchemaError("color of \"" + name + "\" outside [1, k]");
        f.assignment[vertex_or_throw(name)] = c;
    }
    return f;
}

Json validation_to_json(const ValidationReport& report) {
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["kind"] = "validation_report";
    doc["graceful"] = report.graceful;
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        Json item;
        item["kind"] = to_string(v.kind);
        item["witness"] = vertex_list(v.vertices);
        violations.push_back(item);
    }
    doc["violations"] = violations;
    return doc;
}

Json construction_to_json(const ConstructionResult& result) {
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["kind"] = "construction";
    doc["family"] = family_code(result.spec.family);
    doc["n"] = result.spec.n;
    doc["claimed_chi_g"] = result.claimed_chi_g;
    doc["source_case"] = result.source_case;
    doc["coloring"] = coloring_to_json(result.coloring);
    return doc;
}

Json solve_report_to_json(const Graph& g, const SolveReport& report, bool include_timing) {
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["kind"] = "solve_report";
    doc["graph"] = g.name();
    doc["graph_hash"] = hex64(graph_hash(g));
    doc["status"] = to_string(report.status);
    doc["conclusive"] = report.conclusive();
    if (report.chi_g > 0) doc["chi_g"] = report.chi_g;
    doc["lower_bound"] = report.lower_bound_used;
    Json attempts = Json::array();
    for (const auto& a : report.attempts) {
        Json item;
        item["k"] = a.k;
        item["nodes_expanded"] = a.nodes_expanded;
        item["completed"] = a.completed;
        attempts.push_back(item);
    }
    doc["attempts"] = attempts;
    doc["nodes_expanded_total"] = report.nodes_expanded_total;
    doc["jobs"] = report.jobs;
    if (report.witness) doc["witness"] = coloring_to_json(*report.witness);
    if (include_timing) doc["elapsed_seconds"] = report.elapsed_seconds;
    return doc;
}

Json feasibility_to_json(const Graph& g, int k, const FeasibilityResult& result,
                         const SearchConfig& cfg, bool include_timing) {
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["kind"] = "feasibility";
    doc["graph"] = g.name();
    doc["graph_hash"] = hex64(graph_hash(g));
    doc["k"] = k;
    doc["feasible"] = result.witness.has_value();
    doc["completed"] = result.completed;
    doc["nodes_expanded"] = result.nodes_expanded;
    if (result.witness) doc["witness"] = coloring_to_json(*result.witness);
    if (!result.witness && result.completed) {
        InfeasibilityCertificate cert;
        cert.graph_name = g.name();
        cert.graph_hash = graph_hash(g);
        cert.k = k;
        cert.vertex_order = cfg.vertex_order;
        cert.prune_extreme_colors = cfg.prune_extreme_colors;
        cert.prune_per_vertex_degree = cfg.prune_per_vertex_degree;
        cert.symmetry_reflection = cfg.symmetry_reflection;
        cert.config_hash = config_hash(cfg);
        cert.nodes_expanded = result.nodes_expanded;
        doc["certificate"] = certificate_to_json(cert);
    }
    if (include_timing) doc["elapsed_seconds"] = result.elapsed_seconds;
    return doc;
}

Json certificate_to_json(const InfeasibilityCertificate& cert) {
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["kind"] = "infeasibility_certificate";
    doc["graph"] = cert.graph_name;
    doc["graph_hash"] = hex64(cert.graph_hash);
    doc["k"] = cert.k;
    doc["vertex_order"] = to_string(cert.vertex_order);
    doc["prune_extreme_colors"] = cert.prune_extreme_colors;
    doc["prune_per_vertex_degree"] = cert.prune_per_vertex_degree;
    doc["symmetry_reflection"] = cert.symmetry_reflection;
    doc["config_hash"] = hex64(cert.config_hash);
    doc["nodes_expanded"] = cert.nodes_expanded;
    doc["completed"] = true;
    return doc;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph \"" << g.name() << "\" {\n";
    out << "  rankdir=LR;\n";
    bool has_y = false;
    for (const auto& v : g.vertices()) has_y |= v.rail == Rail::Y;
    for (Rail rail : {Rail::X, Rail::Y}) {
        if (rail == Rail::Y && !has_y) continue;
        out << "  { rank=same;";
        for (const auto& v : g.vertices())
            if (v.rail == rail) out << " \"" << to_string(v) << "\";";
        out << " }\n";
    }
    for (const auto& [u, v] : g.edges())
        out << "  \"" << to_string(g.vertex(u)) << "\" -- \"" << to_string(g.vertex(v))
            << "\";\n";
    out << "}\n";
    return out.str();
}

Graph graph_from_dot(const std::string& text) {
    // only the emitted subset: a quoted header name, rank groups declaring
    // vertices in canonical order, then quoted "a" -- "b" edge lines
    auto fail = [](const std::string& why) -> Graph { throw SchemaError("dot: " + why); };
    std::size_t pos = text.find("graph \"");
    if (pos == std::string::npos) return fail("missing graph header");
    pos += 7;
    const std::size_t name_end = text.find('"', pos);
    if (name_end == std::string::npos) return fail("unterminated graph name");
    std::string name = text.substr(pos, name_end - pos);

    std::vector<VertexId> vs;
    std::vector<Edge> es;
    std::istringstream lines(text.substr(name_end));
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find("rank=same") != std::string::npos) {
            std::size_t at = 0;
            while ((at = line.find('"', at)) != std::string::npos) {
                const std::size_t end = line.find('"', at + 1);
                if (end == std::string::npos) return fail("unterminated vertex name");
                vs.push_back(vertex_or_throw(line.substr(at + 1, end - at - 1)));
                at = end + 1;
            }
        } else if (line.find("--") != std::string::npos) {
            std::array<std::string, 2> names;
            std::size_t at = 0;
            for (auto& n : names) {
                at = line.find('"', at);
                if (at == std::string::npos) return fail("edge line needs two names");
                const std::size_t end = line.find('"', at + 1);
                if (end == std::string::npos) return fail("unterminated vertex name");
                n = line.substr(at + 1, end - at - 1);
                at = end + 1;
            }
            es.push_back({vertex_or_throw(names[0]), vertex_or_throw(names[1])});
        }
    }
    // rank groups list x's then y's; restore the interleaved canonical order
    std::sort(vs.begin(), vs.end());
    try {
        return Graph(std::move(name), std::move(vs), es);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

}  // namespace graceful
