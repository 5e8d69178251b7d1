#pragma once

// Side-by-side comparison of computed coclique data with the row tables.

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/cgroups/tables.hpp"
#include "gk/primegraph/coclique.hpp"
#include "gk/primegraph/graph.hpp"

namespace gk::primegraph {

struct TableCheck {
    cgroups::GroupSpec spec;
    std::string row;
    int predicted_t = 0;
    std::set<long> predicted_E, predicted_JminusE;
    int t = 0;
    std::set<long> E, JminusE;
    bool partial = false;  // graph had unresolved factorizations
    bool match = false;
};

inline std::set<long> minus(const std::set<long>& a, const std::set<long>& b) {
    std::set<long> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
    return out;
}

namespace detail {

inline std::optional<PrimeGraph> graph_or_partial(const cgroups::GroupSpec& L, const BuildOptions& opts,
                                                  bool& partial) {
    try {
        return build_graph(L, opts);
    } catch (const PartialGraphError& e) {
        partial = true;
        return std::nullopt;
    }
}

}  // namespace detail

/// Coclique table rows for every sampled spec with q <= qmax.
inline std::vector<TableCheck> reproduce_table1(long qmax, const BuildOptions& opts = {}) {
    std::vector<TableCheck> out;
    for (const auto& s : cgroups::table1_samples(qmax)) {
        TableCheck c{s.spec, s.row->label, 0, {}, {}, 0, {}, {}, false, false};
        const auto pred = cgroups::evaluate_row(*s.row, s.spec.prk());
        c.predicted_t = pred.t;
        c.predicted_E = pred.E;
        c.predicted_JminusE = pred.JminusE;
        if (auto g = detail::graph_or_partial(s.spec, opts, c.partial)) {
            const auto rep = max_cocliques(*g);
            c.t = rep.t;
            c.E = rep.E;
            c.JminusE = minus(rep.J, rep.E);
            c.match = c.t == c.predicted_t && c.E == c.predicted_E && c.JminusE == c.predicted_JminusE;
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// t(L) for each class entry and every admissible prime power q <= qmax.
inline std::vector<TableCheck> reproduce_table2(long qmax, const BuildOptions& opts = {}) {
    std::vector<TableCheck> out;
    for (const auto& e : cgroups::data::table2_entries())
        for (long q = 2; q <= qmax; ++q) {
            if (!arith::is_prime_power(Int(q))) continue;
            auto L = cgroups::GroupSpec::from_q(e.family, e.prk, Int(q));
            if (cgroups::table2_class(L) != e.t) continue;
            TableCheck c{L, "t = " + std::to_string(e.t), 0, {}, {}, 0, {}, {}, false, false};
            c.predicted_t = e.t;
            if (auto g = detail::graph_or_partial(L, opts, c.partial)) {
                const auto rep = max_cocliques(*g);
                c.t = rep.t;
                c.E = rep.E;
                c.JminusE = minus(rep.J, rep.E);
                c.match = c.t == c.predicted_t;
            }
            out.push_back(std::move(c));
        }
    return out;
}

inline nlohmann::json to_json(const TableCheck& c, bool with_sets = true) {
    nlohmann::json j{{"spec", c.spec.code()}, {"name", c.spec.name()}, {"row", c.row},
                     {"predicted_t", c.predicted_t}, {"t", c.t}, {"partial", c.partial}, {"match", c.match}};
    if (with_sets) {
        j["predicted_E"] = c.predicted_E;
        j["predicted_JminusE"] = c.predicted_JminusE;
        j["E"] = c.E;
        j["JminusE"] = c.JminusE;
    }
    return j;
}

}  // namespace gk::primegraph
