#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gk/primegraph/graph.hpp"

namespace gk::primegraph {

struct CocliqueReport {
    int t = 0;
    std::set<long> E;
    std::set<long> J;
    std::vector<std::vector<Int>> max_cocliques;  // sorted; possibly truncated
    std::vector<std::set<long>> E_rho_list;      // distinct degree sets, sorted
    std::uint64_t coclique_count = 0;            // exact number of maximum cocliques
    bool truncated = false;
};

namespace detail {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t(1) << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[k]));
        return npos;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
        return r;
    }
    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
        return r;
    }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> words_;
};

// All maximum independent sets of a small graph given by adjacency rows.
// Branch on the first candidate; prune with a greedy clique cover, since an
// independent set meets each clique at most once.
class MaxIndependentSets {
public:
    explicit MaxIndependentSets(std::vector<Bits> adj) : adj_(std::move(adj)) {}

    std::vector<std::vector<std::size_t>> run(const Bits& candidates) {
        best_ = 0;
        found_.clear();
        std::vector<std::size_t> cur;
        search(cur, candidates);
        return found_;
    }

    std::size_t best() const { return best_; }

private:
    std::size_t clique_cover(Bits cand) const {
        std::size_t cliques = 0;
        while (cand.any()) {
            Bits clique_cand = cand;
            while (clique_cand.any()) {
                std::size_t v = clique_cand.first();
                cand.reset(v);
                clique_cand.reset(v);
                clique_cand = clique_cand & adj_[v];
            }
            ++cliques;
        }
        return cliques;
    }

    void search(std::vector<std::size_t>& cur, const Bits& cand) {
        if (!cand.any()) {
            if (cur.size() > best_) {
                best_ = cur.size();
                found_.clear();
            }
            if (cur.size() == best_) found_.push_back(cur);
            return;
        }
        if (cur.size() + clique_cover(cand) < best_) return;
        std::size_t v = cand.first();
        Bits rest = cand;
        rest.reset(v);
        cur.push_back(v);
        search(cur, rest.minus(adj_[v]));
        cur.pop_back();
        search(cur, rest);
    }

    std::vector<Bits> adj_;
    std::size_t best_ = 0;
    std::vector<std::vector<std::size_t>> found_;
};

// Vertices eligible for coclique search: odd, not the characteristic, not
// pseudo, with every edge to another eligible vertex decided.
inline std::vector<std::size_t> eligible(const PrimeGraph& g, bool restrict) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertices()[i];
        if (v.pseudo) continue;
        if (restrict && (v.prime == 2 || v.prime == g.spec().p())) continue;
        out.push_back(i);
    }
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            if (g.edge(out[a], out[b]).state == EdgeState::Unknown)
                throw InvariantViolation("unknown edge " + g.vertices()[out[a]].prime.get_str() + "-" +
                                         g.vertices()[out[b]].prime.get_str() + " inside the search set");
    return out;
}

// Twin classes: vertices with equal closed neighbourhoods in the search set.
struct Quotient {
    std::vector<std::vector<std::size_t>> members;  // graph indices per class
    std::vector<Bits> adj;
};

inline Quotient quotient(const PrimeGraph& g, const std::vector<std::size_t>& verts) {
    auto closed = [&](std::size_t i) {
        std::vector<bool> row(verts.size());
        for (std::size_t b = 0; b < verts.size(); ++b)
            row[b] = verts[b] == i || g.edge(i, verts[b]).state == EdgeState::Adjacent;
        return row;
    };
    Quotient qt;
    std::vector<std::vector<bool>> keys;
    for (std::size_t i : verts) {
        auto key = closed(i);
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(key);
            qt.members.push_back({i});
        } else {
            qt.members[static_cast<std::size_t>(it - keys.begin())].push_back(i);
        }
    }
    const std::size_t k = qt.members.size();
    qt.adj.assign(k, Bits(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && g.edge(qt.members[a][0], qt.members[b][0]).state == EdgeState::Adjacent) qt.adj[a].set(b);
    return qt;
}

}  // namespace detail

/// Exact maximum cocliques. With `restrict` (the default) the search runs on
/// odd primes other than p, where every edge is decided.
inline CocliqueReport max_cocliques(const PrimeGraph& g, bool restrict = true, std::size_t list_limit = 4096) {
    CocliqueReport rep;
    const auto verts = detail::eligible(g, restrict);
    if (verts.empty()) return rep;
    auto qt = detail::quotient(g, verts);
    const std::size_t k = qt.members.size();
    detail::Bits all(k);
    for (std::size_t a = 0; a < k; ++a) all.set(a);
    detail::MaxIndependentSets mis(qt.adj);
    auto sets = mis.run(all);
    rep.t = static_cast<int>(mis.best());

    std::set<std::set<long>> erhos;
    std::set<std::vector<Int>> listed;
    for (const auto& s : sets) {
        std::uint64_t combos = 1;
        for (std::size_t c : s) combos *= qt.members[c].size();
        rep.coclique_count += combos;
        // Degree choices per class; twins may carry different degrees.
        std::vector<std::set<long>> degs;
        for (std::size_t c : s) {
            std::set<long> d;
            for (std::size_t i : qt.members[c]) d.insert(g.vertices()[i].degree);
            degs.push_back(d);
        }
        std::vector<long> pick;
        auto rec = [&](auto&& self, std::size_t pos) -> void {
            if (pos == degs.size()) {
                erhos.insert(std::set<long>(pick.begin(), pick.end()));
                return;
            }
            for (long d : degs[pos]) {
                pick.push_back(d);
                self(self, pos + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
        // Expand to concrete prime sets until the listing cap.
        std::vector<std::size_t> choice(s.size(), 0);
        while (listed.size() < list_limit) {
            std::vector<Int> primes;
            for (std::size_t a = 0; a < s.size(); ++a) primes.push_back(g.vertices()[qt.members[s[a]][choice[a]]].prime);
            std::sort(primes.begin(), primes.end());
            listed.insert(primes);
            std::size_t a = 0;
            while (a < s.size() && ++choice[a] == qt.members[s[a]].size()) choice[a++] = 0;
            if (a == s.size()) break;
        }
    }
    rep.truncated = rep.coclique_count > listed.size();
    rep.max_cocliques.assign(listed.begin(), listed.end());
    rep.E_rho_list.assign(erhos.begin(), erhos.end());
    if (!rep.E_rho_list.empty()) {
        rep.E = rep.E_rho_list.front();
        for (const auto& e : rep.E_rho_list) {
            std::set<long> inter;
            std::set_intersection(rep.E.begin(), rep.E.end(), e.begin(), e.end(), std::inserter(inter, inter.begin()));
            rep.E = inter;
            rep.J.insert(e.begin(), e.end());
        }
    }
    return rep;
}

/// Largest coclique containing r, searched in the same vertex set as max_cocliques.
inline int t_of_r(const PrimeGraph& g, const Int& r, bool restrict = true) {
    const auto verts = detail::eligible(g, restrict);
    auto ir = g.index_of(r);
    if (!ir || std::find(verts.begin(), verts.end(), *ir) == verts.end())
        throw InvalidArgument(r.get_str() + " is not a searchable vertex of GK(" + g.spec().name() + ")");
    std::vector<std::size_t> sub;
    for (std::size_t i : verts)
        if (i != *ir && g.edge(*ir, i).state == EdgeState::NonAdjacent) sub.push_back(i);
    if (sub.empty()) return 1;
    auto qt = detail::quotient(g, sub);
    detail::Bits all(qt.members.size());
    for (std::size_t a = 0; a < qt.members.size(); ++a) all.set(a);
    detail::MaxIndependentSets mis(qt.adj);
    mis.run(all);
    return static_cast<int>(mis.best()) + 1;
}

}  // namespace gk::primegraph
