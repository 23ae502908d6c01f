#include "myxo/geometry/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "myxo/errors.hpp"

namespace myxo::geom {

namespace {

GraphFamily family_from_string(const std::string& s) {
    for (GraphFamily f : {GraphFamily::Delaunay, GraphFamily::Gabriel, GraphFamily::Rng,
                          GraphFamily::Mst, GraphFamily::ErdosRenyi,
                          GraphFamily::WattsStrogatz, GraphFamily::SwarmNetwork}) {
        if (to_string(f) == s) return f;
    }
    throw RuntimeError("unknown graph family '" + s + "'");
}

} // namespace

std::string to_json(const ProximityGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["family"] = std::string(to_string(g.family));
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges) {
        edges.push_back(nlohmann::json::array({e.a, e.b, e.weight}));
    }
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

ProximityGraph graph_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ProximityGraph g;
    g.n = j.at("n").get<std::uint32_t>();
    g.family = family_from_string(j.at("family").get<std::string>());
    for (const auto& e : j.at("edges")) {
        g.edges.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>(),
                           e.at(2).get<double>()});
    }
    g.finalize();
    return g;
}

std::string to_dot(const ProximityGraph& g, const PointSet* points) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << "graph " << to_string(g.family) << " {\n";
    out << "  node [shape=point];\n";
    if (points != nullptr && points->size() == g.n) {
        for (std::uint32_t v = 0; v < g.n; ++v) {
            out << "  " << v << " [pos=\"" << (*points)[v].x << "," << (*points)[v].y
                << "!\"];\n";
        }
    } else {
        for (std::uint32_t v = 0; v < g.n; ++v) out << "  " << v << ";\n";
    }
    for (const auto& e : g.edges) {
        out << "  " << e.a << " -- " << e.b << " [weight=" << e.weight << "];\n";
    }
    out << "}\n";
    return out.str();
}

void write_graph(const std::filesystem::path& path, const ProximityGraph& g,
                 const std::string& format, const PointSet* points) {
    std::string body;
    if (format == "json") {
        body = to_json(g);
    } else if (format == "dot") {
        body = to_dot(g, points);
    } else {
        throw UsageError("unknown graph format '" + format + "' (expected json or dot)");
    }
    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    if (!f) throw RuntimeError("cannot open " + path.string() + " for writing");
    f << body;
    if (!f) throw RuntimeError("short write to " + path.string());
}

} // namespace myxo::geom
