#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gk/arith/numtheory.hpp"
#include "gk/cgroups/attributes.hpp"
#include "gk/cgroups/table_data.hpp"

namespace gk::cgroups {

struct CocliquePrediction {
    int t = 0;
    std::set<long> E;
    std::set<long> JminusE;
    std::string row;
};

namespace detail {

inline bool q_rule_admits(data::QRule rule, const Int& q) {
    switch (rule) {
        case data::QRule::Any: return true;
        case data::QRule::Only2: return q == 2;
        case data::QRule::Not2: return q != 2;
    }
    return false;
}

inline bool row_admits(const data::Table1Row& row, const GroupSpec& L) {
    const long n = L.prk();
    if (std::find(row.families.begin(), row.families.end(), L.family()) == row.families.end()) return false;
    if (n < row.n_min || (row.n_max != 0 && n > row.n_max)) return false;
    if (n % row.modulus != row.residue) return false;
    if (!q_rule_admits(row.q, L.q())) return false;
    for (const auto& [en, eq] : row.excluded)
        if (n == en && L.q() == eq) return false;
    return true;
}

inline long select(data::Selector s, long i) {
    switch (s) {
        case data::Selector::Plain: return i;
        case data::Selector::Nu: return arith::nu(i);
        case data::Selector::Eta: return arith::eta(i);
    }
    return i;
}

// Compares x against the affine bound exactly: sign of d*x - (a*n + b).
inline bool above(long x, const data::Bound& b, long n) {
    long lhs = b.value.d * x, rhs = b.value.a * n + b.value.b;
    return b.strict ? lhs > rhs : lhs >= rhs;
}

inline bool below(long x, const data::Bound& b, long n) {
    long lhs = b.value.d * x, rhs = b.value.a * n + b.value.b;
    return b.strict ? lhs < rhs : lhs <= rhs;
}

}  // namespace detail

inline CocliquePrediction evaluate_row(const data::Table1Row& row, long n) {
    CocliquePrediction out;
    out.row = row.label;
    out.t = static_cast<int>(row.t.at(n));
    if (!row.e_explicit.empty()) {
        out.E.insert(row.e_explicit.begin(), row.e_explicit.end());
    } else {
        for (long i = 1; i <= 2 * n; ++i) {
            long s = detail::select(row.selector, i);
            if (!detail::above(s, row.lower, n) || !detail::below(s, row.upper, n)) continue;
            bool skip = false;
            for (const auto& ex : row.e_excluded) skip = skip || ex.at(n) == i;
            if (!skip) out.E.insert(i);
        }
    }
    out.JminusE.insert(row.j_explicit.begin(), row.j_explicit.end());
    for (const auto& a : row.j_rule) {
        long v = a.at(n);
        out.JminusE.insert(row.j_rule_through_nu ? arith::nu(v) : v);
    }
    return out;
}

/// Coclique data for L from the row table; nullopt when no row applies.
inline std::optional<CocliquePrediction> table1_prediction(const GroupSpec& L) {
    for (const auto& row : data::table1_rows())
        if (detail::row_admits(row, L)) return evaluate_row(row, L.prk());
    return std::nullopt;
}

inline std::optional<int> table2_class(const GroupSpec& L) {
    for (const auto& e : data::table2_entries())
        if (e.family == L.family() && e.prk == L.prk() && detail::q_rule_admits(e.q, L.q())) return e.t;
    return std::nullopt;
}

struct ExponentBounds {
    int alpha, beta, gamma;
};

/// Triple with (1/alpha) p q^gamma <= exp(L) <= beta p q^gamma, for 5 <= t(L) <= 7.
inline ExponentBounds exponent_bounds(const GroupSpec& L) {
    auto t = table2_class(L);
    if (!t || *t > 7) throw UnsupportedSpec("exponent bounds need 5 <= t(L) <= 7: " + L.name());
    for (const auto& row : data::table4_rows())
        for (const auto& [fam, prk] : row.types)
            if (fam == L.family() && prk == L.prk()) return {row.alpha, row.beta, row.gamma};
    throw UnsupportedSpec("no exponent bounds listed for " + L.name());
}

/// Two prime classes R1, R2 with disjoint neighbourhoods, as degrees e(r, q),
/// and the exact maximal element orders divisible by their members.
struct DisjointPairData {
    std::string row;
    long r1_degree = 0, r2_degree = 0;
    std::vector<Int> m1, m2;
};

inline bool disjoint_row_needs_epsilon(const GroupSpec& L) {
    const long n = L.prk();
    switch (L.family()) {
        case Family::Symplectic:
        case Family::OrthogonalOdd: return n >= 6 && n % 2 == 0;
        case Family::OrthogonalMinus: return n >= 6 && n % 2 == 0;
        default: return false;
    }
}

inline DisjointPairData disjoint_pair_data(const GroupSpec& L, std::optional<int> epsilon = std::nullopt) {
    const long n = L.prk();
    const Int& q = L.q();
    const Int& p = L.p();
    const Int g2 = gcd(Int(2), Int(q - 1));
    auto pw = [&](long k) { return ipow(q, static_cast<unsigned long>(k)); };
    auto degree = [](long i, int sign) { return sign > 0 ? i : arith::nu(i); };

    const bool needs = disjoint_row_needs_epsilon(L);
    if (needs && (!epsilon || (*epsilon != 1 && *epsilon != -1)))
        throw InvalidArgument("this row of the disjoint-neighbourhood table needs epsilon = +1 or -1");
    if (!needs && epsilon)
        throw InvalidArgument("epsilon applies only to rows with even n: " + L.name());

    DisjointPairData d;
    switch (L.family()) {
        case Family::Linear:
        case Family::Unitary: {
            if (n < 9) break;
            const int e = L.epsilon();
            const Int qe = q - e;
            const Int en = (n % 2 == 0 || e > 0) ? Int(1) : Int(-1);
            const Int en1 = ((n - 1) % 2 == 0 || e > 0) ? Int(1) : Int(-1);
            const Int g = gcd(Int(n), qe);
            d.row = "linear/unitary";
            d.r1_degree = degree(n, e);
            d.r2_degree = degree(n - 1, e);
            d.m1 = {Int((pw(n) - en) / (qe * g))};
            d.m2 = {Int((pw(n - 1) - en1) / g)};
            return d;
        }
        case Family::Symplectic:
        case Family::OrthogonalOdd: {
            if (n >= 5 && n % 2 == 1) {
                d.row = "symplectic/orthogonal, n odd";
                d.r1_degree = 2 * n;
                d.r2_degree = n;
                d.m1 = {Int((pw(n) + 1) / g2)};
                d.m2 = {Int((pw(n) - 1) / g2)};
                return d;
            }
            if (n >= 6 && n % 2 == 0) {
                const int s = *epsilon;
                d.row = L.family() == Family::Symplectic ? "symplectic, n even" : "odd orthogonal, n even";
                d.r1_degree = 2 * n;
                d.r2_degree = degree(n - 1, s);
                d.m1 = {Int((pw(n) + 1) / g2)};
                Int base = pw(n - 1) - s;
                Int second = L.family() == Family::Symplectic ? Int(p * base) : Int(p * base / g2);
                d.m2 = {Int(base * (q + s) / g2), second};
                return d;
            }
            break;
        }
        case Family::OrthogonalPlus:
        case Family::OrthogonalMinus: {
            const int e = L.epsilon();
            if (n >= 5 && n % 2 == 1) {
                const Int g4 = gcd(Int(4), Int(q - e));
                d.row = "even orthogonal, n odd";
                d.r1_degree = 2 * n - 2;
                d.r2_degree = degree(n, e);
                d.m1 = {Int((pw(n - 1) + 1) * (q + e) / g4)};
                d.m2 = {Int((pw(n) - e) / g4)};
                return d;
            }
            if (e > 0 && n >= 6 && n % 2 == 0) {
                const long m = n - 1;
                d.row = "plus type, n even";
                d.r1_degree = 2 * m;
                d.r2_degree = m;
                d.m1 = {Int((pw(m) + 1) / g2)};
                d.m2 = {Int((pw(m) - 1) / g2)};
                return d;
            }
            if (e < 0 && n >= 6 && n % 2 == 0) {
                const int s = *epsilon;
                d.row = "minus type, n even";
                d.r1_degree = 2 * n;
                d.r2_degree = degree(n - 1, s);
                d.m1 = {Int((pw(n) + 1) / g2)};
                d.m2 = {Int((pw(n - 1) - s) * (q + s) / g2)};
                return d;
            }
            break;
        }
    }
    throw UnsupportedSpec("no disjoint-neighbourhood row for " + L.name());
}

/// Every epsilon choice admitted by L's row (one entry when the row has none).
inline std::vector<DisjointPairData> disjoint_pair_variants(const GroupSpec& L) {
    if (disjoint_row_needs_epsilon(L)) return {disjoint_pair_data(L, 1), disjoint_pair_data(L, -1)};
    return {disjoint_pair_data(L)};
}

inline bool has_disjoint_row(const GroupSpec& L) {
    try {
        disjoint_pair_variants(L);
        return true;
    } catch (const UnsupportedSpec&) {
        return false;
    }
}

/// Specs exercised when reproducing the coclique table: each row at a few n
/// and every prime power q <= qmax the row admits.
struct Table1Sample {
    GroupSpec spec;
    const data::Table1Row* row;
};

inline std::vector<Table1Sample> table1_samples(long qmax) {
    std::vector<Int> qs;
    for (long q = 2; q <= qmax; ++q)
        if (arith::is_prime_power(Int(q))) qs.push_back(Int(q));
    std::vector<Table1Sample> out;
    for (const auto& row : data::table1_rows()) {
        std::vector<long> ns;
        if (row.n_max != 0) {
            ns = {row.n_min};
        } else if (is_linear_or_unitary(row.families.front())) {
            for (long n = 9; n <= 16; ++n)
                if (n >= row.n_min && n % row.modulus == row.residue) ns.push_back(n);
        } else {
            for (long n = row.n_min; n <= 13 && ns.size() < 2; n += row.modulus) ns.push_back(n);
        }
        for (Family fam : row.families)
            for (long n : ns)
                for (const auto& q : qs) {
                    auto L = GroupSpec::from_q(fam, n, q);
                    if (detail::row_admits(row, L)) out.push_back({L, &row});
                }
    }
    return out;
}

}  // namespace gk::cgroups
