#pragma once

#include <algorithm>
#include <chrono>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "gk/arith/cyclotomic.hpp"
#include "gk/arith/factor.hpp"
#include "gk/cgroups/attributes.hpp"
#include "gk/cgroups/tables.hpp"

namespace gk::primegraph {

using cgroups::Family;
using cgroups::GroupSpec;

enum class EdgeState { Adjacent, NonAdjacent, Unknown };

/// Which rule decided an edge.
enum class Provenance {
    LinearUnitaryCriterion,
    SymplecticOddOrthogonalCriterion,
    EvenOrthogonalCriterion,
    TorusDivisibility,
    LowDegree,
    DisjointNeighbourhood,
    Undecided,
};

inline const char* to_string(EdgeState s) {
    switch (s) {
        case EdgeState::Adjacent: return "adjacent";
        case EdgeState::NonAdjacent: return "non-adjacent";
        case EdgeState::Unknown: return "unknown";
    }
    return "unknown";
}

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::LinearUnitaryCriterion: return "linear-unitary-criterion";
        case Provenance::SymplecticOddOrthogonalCriterion: return "symplectic-odd-orthogonal-criterion";
        case Provenance::EvenOrthogonalCriterion: return "even-orthogonal-criterion";
        case Provenance::TorusDivisibility: return "torus-divisibility";
        case Provenance::LowDegree: return "low-degree";
        case Provenance::DisjointNeighbourhood: return "disjoint-neighbourhood";
        case Provenance::Undecided: return "unknown";
    }
    return "unknown";
}

struct Edge {
    EdgeState state = EdgeState::Unknown;
    Provenance provenance = Provenance::Undecided;
    bool operator==(const Edge&) const = default;
};

/// A vertex of GK(L). `degree` is e(r, q), or 0 for the characteristic.
/// A pseudo vertex stands for an unfactored composite part of Phi_degree(q).
struct Vertex {
    Int prime;
    long degree = 0;
    bool pseudo = false;
    bool operator==(const Vertex&) const = default;
};

class PrimeGraph {
public:
    PrimeGraph(GroupSpec spec, std::vector<Vertex> vertices)
        : spec_(std::move(spec)), vertices_(std::move(vertices)), edges_(vertices_.size() * vertices_.size()) {}

    const GroupSpec& spec() const { return spec_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<std::string>& warnings() const { return warnings_; }

    std::optional<std::size_t> index_of(const Int& r) const {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!vertices_[i].pseudo && vertices_[i].prime == r) return i;
        return std::nullopt;
    }

    const Edge& edge(std::size_t i, std::size_t j) const { return edges_[i * size() + j]; }

    EdgeState state(const Int& r, const Int& s) const {
        auto i = index_of(r), j = index_of(s);
        if (!i || !j) throw InvalidArgument("not a vertex of " + spec_.name());
        return edge(*i, *j).state;
    }

    void set_edge(std::size_t i, std::size_t j, Edge e) {
        if (i == j) throw InvalidArgument("no loops in a prime graph");
        edges_[i * size() + j] = e;
        edges_[j * size() + i] = e;
    }

    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

    bool has_pseudo_vertices() const {
        return std::any_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.pseudo; });
    }

    bool operator==(const PrimeGraph& o) const {
        return spec_ == o.spec_ && vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    GroupSpec spec_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::string> warnings_;
};

/// Thrown when some Phi_i(q) could not be factored in time; carries the graph
/// with the stuck parts as pseudo vertices.
struct PartialGraphError : std::runtime_error {
    explicit PartialGraphError(PrimeGraph g)
        : std::runtime_error("prime graph of " + g.spec().name() + " is partial: factorization timed out"),
          graph(std::move(g)) {}
    PrimeGraph graph;
};

namespace detail {

inline bool odd_quotient(long k, long l) { return l % k == 0 && (l / k) % 2 == 1; }

// Adjacency of odd primes r, s != p with degrees er, es. For linear and
// unitary groups with phi = 1 on one side the verdict is read off the cyclic
// torus containing the other prime; this needs r itself.
inline Edge decide_odd(const GroupSpec& L, const Int& r, long er, const Int& s, long es) {
    const long n = L.prk();
    long fr = cgroups::phi_from_degree(L, er), fs = cgroups::phi_from_degree(L, es);
    Int pr = r, ps = s;
    if (fr > fs) {
        std::swap(fr, fs);
        std::swap(er, es);
        std::swap(pr, ps);
    }
    switch (L.family()) {
        case Family::Linear:
        case Family::Unitary: {
            if (fr >= 2) {
                bool adj = fr + fs <= n || fs % fr == 0;
                return {adj ? EdgeState::Adjacent : EdgeState::NonAdjacent, Provenance::LinearUnitaryCriterion};
            }
            if (fs <= n - 2) return {EdgeState::Adjacent, Provenance::TorusDivisibility};
            const int e = L.epsilon();
            const Int& q = L.q();
            const Int g = gcd(Int(n), Int(q - e));
            auto sgn = [&](long k) { return (k % 2 == 0 || e > 0) ? Int(1) : Int(-1); };
            Int m;
            if (fs == n)
                m = (ipow(q, static_cast<unsigned long>(n)) - sgn(n)) / ((q - e) * g);
            else
                m = (ipow(q, static_cast<unsigned long>(n - 1)) - sgn(n - 1)) / g;
            return {divides(pr, m) ? EdgeState::Adjacent : EdgeState::NonAdjacent, Provenance::TorusDivisibility};
        }
        case Family::Symplectic:
        case Family::OrthogonalOdd: {
            bool adj = fr + fs <= n || odd_quotient(er, es) || (fr == fs && odd_quotient(es, er));
            return {adj ? EdgeState::Adjacent : EdgeState::NonAdjacent,
                    Provenance::SymplecticOddOrthogonalCriterion};
        }
        case Family::OrthogonalPlus:
        case Family::OrthogonalMinus: {
            const int eps = L.epsilon();
            const long sign = ((er + es) % 2 == 0) ? 1 : -1;
            bool adj = 2 * fr + 2 * fs <= 2 * n - (1 - eps * sign);
            adj = adj || odd_quotient(er, es) || (fr == fs && odd_quotient(es, er));
            auto special = [&](long k, long l) { return eps > 0 && n % 2 == 0 && l == n && k == n / 2; };
            adj = adj || special(er, es) || (fr == fs && special(es, er));
            return {adj ? EdgeState::Adjacent : EdgeState::NonAdjacent, Provenance::EvenOrthogonalCriterion};
        }
    }
    return {};
}

inline void require_odd_vertex(const GroupSpec& L, const Int& r) {
    if (L.prk() < 4) throw InvalidArgument("adjacency criteria need prk >= 4: " + L.name());
    if (r == 2 || r == L.p()) throw InvalidArgument("criteria apply to primes other than 2 and p");
    if (!cgroups::pi_membership(L, r)) throw InvalidArgument(r.get_str() + " is not in pi(" + L.name() + ")");
}

}  // namespace detail

/// Adjacency of distinct odd primes r, s in pi(L) \ {p}. For linear and
/// unitary groups both phi values must be at least 2.
inline bool adjacent_odd(const GroupSpec& L, const Int& r, const Int& s) {
    detail::require_odd_vertex(L, r);
    detail::require_odd_vertex(L, s);
    if (r == s) throw InvalidArgument("adjacency needs distinct primes");
    const long er = cgroups::e_of(r, L), es = cgroups::e_of(s, L);
    if (cgroups::is_linear_or_unitary(L.family()) &&
        (cgroups::phi_from_degree(L, er) < 2 || cgroups::phi_from_degree(L, es) < 2))
        throw InvalidArgument("linear/unitary criterion needs phi(r, L) >= 2 on both primes");
    return detail::decide_odd(L, r, er, s, es).state == EdgeState::Adjacent;
}

/// True when phi(r, L) <= n - 2, which forces pr and 2r to be element orders.
inline bool char_adjacency_sufficient(const GroupSpec& L, const Int& r) {
    detail::require_odd_vertex(L, r);
    return cgroups::phi_rL(L, r) <= L.prk() - 2;
}

struct BuildOptions {
    std::optional<std::chrono::milliseconds> factor_timeout;
    bool parallel = true;
};

inline PrimeGraph build_graph(const GroupSpec& L, const BuildOptions& opts = {}) {
    if (L.prk() < 4) throw InvalidArgument("prime graph construction needs prk >= 4: " + L.name());
    const Int& q = L.q();
    const Int& p = L.p();

    struct DegreeResult {
        long degree;
        std::vector<Int> primes;
        std::optional<Int> stuck;
    };
    auto work = [&](long i) {
        DegreeResult out{i, {}, std::nullopt};
        arith::FactorOptions fo;
        fo.timeout = opts.factor_timeout;
        Int v = gk::abs(arith::cyclotomic_value(i, q));
        arith::Factorization f;
        try {
            f = arith::factorize(v, fo);
        } catch (const arith::FactorTimeout& t) {
            f = t.partial;
            out.stuck = t.cofactor;
        }
        for (const auto& pp : f.factors()) {
            if (pp.prime == p) continue;
            if (arith::mult_order(pp.prime, q) == i) out.primes.push_back(pp.prime);
        }
        return out;
    };

    const auto profile = cgroups::degree_profile(L);
    std::vector<DegreeResult> results;
    if (opts.parallel) {
        std::vector<std::future<DegreeResult>> futures;
        for (long i : profile.degrees) futures.push_back(std::async(std::launch::async, work, i));
        for (auto& f : futures) results.push_back(f.get());
    } else {
        for (long i : profile.degrees) results.push_back(work(i));
    }

    std::vector<Vertex> vertices{{p, 0, false}};
    std::vector<Vertex> pseudo;
    for (const auto& r : results) {
        for (const auto& prime : r.primes) vertices.push_back({prime, r.degree, false});
        if (r.stuck) pseudo.push_back({*r.stuck, r.degree, true});
    }
    std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) { return a.prime < b.prime; });
    std::sort(pseudo.begin(), pseudo.end(), [](const Vertex& a, const Vertex& b) { return a.prime < b.prime; });
    vertices.insert(vertices.end(), pseudo.begin(), pseudo.end());

    PrimeGraph g(L, vertices);
    const auto& vs = g.vertices();
    const long n = L.prk();
    auto is_odd_regular = [&](const Vertex& v) { return !v.pseudo && v.prime != 2 && v.prime != p; };

    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (is_odd_regular(vs[i]) && is_odd_regular(vs[j]))
                g.set_edge(i, j, detail::decide_odd(L, vs[i].prime, vs[i].degree, vs[j].prime, vs[j].degree));

    auto decide = [&](std::size_t i, std::size_t j, Edge e) {
        const Edge& cur = g.edge(i, j);
        if (cur.state != EdgeState::Unknown && cur.state != e.state)
            throw InvariantViolation("conflicting verdicts for edge " + vs[i].prime.get_str() + "-" +
                                     vs[j].prime.get_str() + " in " + L.name());
        if (cur.state == EdgeState::Unknown) g.set_edge(i, j, e);
    };

    const auto ip = g.index_of(p);
    const auto i2 = g.index_of(Int(2));
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!is_odd_regular(vs[i])) continue;
        if (cgroups::phi_from_degree(L, vs[i].degree) > n - 2) continue;
        decide(i, *ip, {EdgeState::Adjacent, Provenance::LowDegree});
        if (i2) decide(i, *i2, {EdgeState::Adjacent, Provenance::LowDegree});
    }

    if (cgroups::has_disjoint_row(L)) {
        for (const auto& d : cgroups::disjoint_pair_variants(L)) {
            for (const auto& [deg, ms] : {std::pair{d.r1_degree, d.m1}, std::pair{d.r2_degree, d.m2}}) {
                auto hits = [&](const Int& r) {
                    return std::any_of(ms.begin(), ms.end(), [&](const Int& m) { return divides(r, m); });
                };
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    if (vs[i].pseudo || vs[i].degree != deg || !is_odd_regular(vs[i])) continue;
                    const Provenance pv = Provenance::DisjointNeighbourhood;
                    decide(i, *ip, {hits(p) ? EdgeState::Adjacent : EdgeState::NonAdjacent, pv});
                    if (i2 && *i2 != *ip) decide(i, *i2, {hits(Int(2)) ? EdgeState::Adjacent : EdgeState::NonAdjacent, pv});
                }
            }
        }
    }

    for (const auto& v : vs)
        if (v.pseudo)
            g.add_warning("unfactored part " + v.prime.get_str() + " of Phi_" + std::to_string(v.degree) +
                          "(q) kept as a pseudo vertex");
    if (g.has_pseudo_vertices()) throw PartialGraphError(std::move(g));
    return g;
}

}  // namespace gk::primegraph
