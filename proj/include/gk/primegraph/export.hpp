#pragma once

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gk/primegraph/coclique.hpp"
#include "gk/primegraph/graph.hpp"

namespace gk::primegraph {

namespace detail {

inline std::string vertex_id(const Vertex& v) {
    return v.pseudo ? "c" + std::to_string(v.degree) + "_" + v.prime.get_str() : v.prime.get_str();
}

inline std::string vertex_label(const Vertex& v, const Int& p) {
    if (v.pseudo) return v.prime.get_str() + " (composite, e=" + std::to_string(v.degree) + ")";
    if (v.prime == p) return v.prime.get_str() + " (p)";
    return v.prime.get_str() + " (e=" + std::to_string(v.degree) + ")";
}

}  // namespace detail

/// Graphviz text. Adjacent edges are solid, unknown edges dashed, and
/// non-adjacent pairs are omitted.
inline std::string to_dot(const PrimeGraph& g) {
    std::ostringstream out;
    out << "graph \"GK(" << g.spec().name() << ")\" {\n";
    for (const auto& v : g.vertices()) {
        out << "  \"" << detail::vertex_id(v) << "\" [label=\"" << detail::vertex_label(v, g.spec().p()) << "\"";
        if (v.pseudo) out << ", shape=box";
        out << "];\n";
    }
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Edge& e = g.edge(i, j);
            if (e.state == EdgeState::NonAdjacent) continue;
            out << "  \"" << detail::vertex_id(vs[i]) << "\" -- \"" << detail::vertex_id(vs[j]) << "\"";
            if (e.state == EdgeState::Unknown) out << " [style=dashed]";
            out << ";\n";
        }
    out << "}\n";
    return out.str();
}

inline nlohmann::json to_json(const PrimeGraph& g) {
    using nlohmann::json;
    json vertices = json::array();
    for (const auto& v : g.vertices())
        vertices.push_back({{"prime", v.prime.get_str()}, {"degree", v.degree}, {"pseudo", v.pseudo},
                            {"characteristic", !v.pseudo && v.prime == g.spec().p()}});
    json edges = json::array();
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Edge& e = g.edge(i, j);
            edges.push_back({{"r", detail::vertex_id(vs[i])}, {"s", detail::vertex_id(vs[j])},
                             {"state", to_string(e.state)}, {"provenance", to_string(e.provenance)}});
        }
    json warnings = json::array();
    for (const auto& w : g.warnings()) warnings.push_back(w);
    return {{"group", g.spec().name()}, {"spec", g.spec().code()}, {"q", g.spec().q().get_str()},
            {"vertices", vertices}, {"edges", edges}, {"warnings", warnings}};
}

inline nlohmann::json to_json(const CocliqueReport& r) {
    using nlohmann::json;
    json cocliques = json::array();
    for (const auto& c : r.max_cocliques) {
        json row = json::array();
        for (const auto& p : c) row.push_back(p.get_str());
        cocliques.push_back(row);
    }
    json erho = json::array();
    for (const auto& e : r.E_rho_list) erho.push_back(json(std::vector<long>(e.begin(), e.end())));
    return {{"t", r.t}, {"E", std::vector<long>(r.E.begin(), r.E.end())},
            {"J", std::vector<long>(r.J.begin(), r.J.end())}, {"E_rho", erho},
            {"max_cocliques", cocliques}, {"count", r.coclique_count}, {"truncated", r.truncated}};
}

}  // namespace gk::primegraph
