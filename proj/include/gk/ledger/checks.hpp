#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/arith.hpp"
#include "gk/cgroups.hpp"
#include "gk/ledger/claim.hpp"
#include "gk/ledger/expr.hpp"
#include "gk/mersenne.hpp"
#include "gk/primegraph.hpp"

namespace gk::ledger {

struct CheckOutcome {
    Status status = Status::Fail;
    std::string evidence;
};

namespace detail {

inline Rational value_of(const json& v, const Env& env) {
    if (v.is_number_integer()) return Rational(Int(std::to_string(v.get<long long>())));
    if (v.is_string()) return Expr::parse(v.get<std::string>()).eval(env);
    throw InvalidArgument("expected an integer or an expression, got " + v.dump());
}

inline Int int_of(const json& v, const Env& env, const std::string& ctx) {
    return detail::as_int(value_of(v, env), ctx);
}

inline std::string show(const Rational& v) { return gk::to_string(v); }

inline std::string show(const Env& env, const std::vector<std::string>& order) {
    std::string out;
    for (const auto& name : order) {
        if (!out.empty()) out += ", ";
        out += name + "=" + show(env.at(name));
    }
    return out;
}

inline Env bindings_of(const json& payload) {
    Env env;
    if (payload.contains("bindings"))
        for (const auto& [k, v] : payload.at("bindings").items()) env[k] = value_of(v, env);
    return env;
}

inline std::vector<std::string> string_list(const json& payload, const char* key) {
    std::vector<std::string> out;
    if (!payload.contains(key)) return out;
    const json& v = payload.at(key);
    if (v.is_string()) return {v.get<std::string>()};
    for (const auto& x : v) out.push_back(x.get<std::string>());
    return out;
}

/// Admissible values of one variable: an integer range filtered by a kind
/// (prime, prime power, ...), exclusions and an optional condition.
class Domain {
public:
    Domain(std::string var, const json& spec) : var_(std::move(var)), spec_(spec) {
        kind_ = spec.value("kind", "range");
        static const std::set<std::string> kinds{"range", "prime", "prime_power", "odd_prime_power", "sign", "list"};
        if (!kinds.count(kind_)) throw InvalidArgument("unknown domain kind " + kind_ + " for " + var_);
        if (spec.contains("where")) where_ = Expr::parse(spec.at("where").get<std::string>());
    }

    bool admissible(const Int& n, const Env& env) const {
        if (kind_ == "prime" && !arith::is_prime(n)) return false;
        if (kind_ == "prime_power" && !arith::is_prime_power(n)) return false;
        if (kind_ == "odd_prime_power" && (n % 2 == 0 || !arith::is_prime_power(n))) return false;
        if (spec_.contains("exclude"))
            for (const auto& x : spec_.at("exclude"))
                if (int_of(x, env, var_) == n) return false;
        if (where_) {
            Env e = env;
            e[var_] = Rational(n);
            if (where_->eval(e) == 0) return false;
        }
        return true;
    }

    Int lower(const Env& env) const {
        if (spec_.contains("min")) return int_of(spec_.at("min"), env, var_ + " min");
        if (kind_ == "odd_prime_power") return 3;
        if (kind_ == "prime" || kind_ == "prime_power") return 2;
        throw InvalidArgument("domain of " + var_ + " needs a minimum");
    }

    std::optional<Int> upper(const Env& env) const {
        if (spec_.contains("max")) return int_of(spec_.at("max"), env, var_ + " max");
        return std::nullopt;
    }

    std::vector<Int> values(const Env& env) const {
        std::vector<Int> raw;
        if (kind_ == "sign") {
            raw = {Int(-1), Int(1)};
        } else if (kind_ == "list") {
            for (const auto& x : spec_.at("values")) raw.push_back(int_of(x, env, var_));
        } else {
            auto hi = upper(env);
            if (!hi) throw InvalidArgument("domain of " + var_ + " is unbounded; the system is not provably finite");
            for (Int n = lower(env); n <= *hi; ++n) raw.push_back(n);
        }
        std::vector<Int> out;
        for (const auto& n : raw)
            if (admissible(n, env)) out.push_back(n);
        return out;
    }

    /// Least admissible value >= from, or nothing past the declared maximum.
    std::optional<Int> next(Int from, const Env& env) const {
        auto hi = upper(env);
        for (long guard = 0; guard < 10'000'000; ++guard, ++from) {
            if (hi && from > *hi) return std::nullopt;
            if (admissible(from, env)) return from;
        }
        throw InvalidArgument("no admissible value of " + var_ + " found in the search window");
    }

    const std::string& var() const { return var_; }

private:
    std::string var_;
    json spec_;
    std::string kind_;
    std::optional<Expr> where_;
};

/// Calls visit(env) for every assignment of the declared variables.
template <class Visit>
void for_each_assignment(const json& vars, const Env& base, Visit&& visit) {
    std::vector<Domain> doms;
    for (const auto& v : vars) doms.emplace_back(v.at("name").get<std::string>(), v.at("domain"));
    Env env = base;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == doms.size()) {
            visit(env);
            return;
        }
        for (const auto& n : doms[i].values(env)) {
            env[doms[i].var()] = Rational(n);
            self(self, i + 1);
        }
        env.erase(doms[i].var());
    };
    rec(rec, 0);
}

inline std::vector<std::string> var_names(const json& vars) {
    std::vector<std::string> out;
    for (const auto& v : vars) out.push_back(v.at("name").get<std::string>());
    return out;
}

inline std::string show_tuple(const std::vector<Rational>& t) {
    if (t.size() == 1) return show(t[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + show(t[i]);
    return out + ")";
}

inline std::string show_set(const std::set<std::vector<Rational>>& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& t : s) {
        out += (first ? "" : ", ") + show_tuple(t);
        first = false;
    }
    return out + "}";
}

inline void require_bound(const std::set<std::string>& free, const Env& env) {
    for (const auto& s : free)
        if (!env.count(s)) throw InvalidArgument("unbound symbol " + s);
}

}  // namespace detail

inline CheckOutcome check_exact_value(const json& p) {
    Env env = detail::bindings_of(p);
    const std::string text = p.at("expr").get<std::string>();
    const Rational v = Expr::parse(text).eval(env);
    std::ostringstream ev;
    ev << text << " = " << detail::show(v);
    bool ok = true;
    if (p.contains("expected")) {
        Rational want = detail::value_of(p.at("expected"), env);
        if (want != v) {
            ok = false;
            ev << "; expected " << detail::show(want);
        }
    }
    if (p.contains("factors")) {
        Int n = detail::as_int(v, "factorization");
        std::vector<Int> want;
        for (const auto& f : p.at("factors")) want.push_back(detail::int_of(f, env, "factor"));
        std::sort(want.begin(), want.end());
        std::vector<Int> got;
        const auto fac = arith::factorize(gk::abs(n));
        for (const auto& pp : fac.factors())
            for (unsigned i = 0; i < pp.exponent; ++i) got.push_back(pp.prime);
        ev << "; factorization " << fac.to_string();
        if (got != want) {
            ok = false;
            std::string w;
            for (const auto& x : want) w += (w.empty() ? "" : " * ") + x.get_str();
            ev << "; expected factors " << w;
        }
    }
    if (p.contains("prime")) {
        bool want = p.at("prime").get<bool>();
        bool got = arith::is_prime(detail::as_int(v, "primality"));
        ev << (got ? "; prime" : "; not prime");
        if (got != want) ok = false;
    }
    return {ok ? Status::Pass : Status::Fail, ev.str()};
}

inline CheckOutcome check_order_bound(const json& p) {
    Env env = detail::bindings_of(p);
    const Int bound = detail::int_of(p.at("min"), env, "min");
    std::ostringstream ev;
    std::string bad;
    for (const auto& rj : p.at("primes")) {
        Int r = detail::int_of(rj, env, "prime");
        if (!arith::is_prime(r)) throw InvalidArgument(r.get_str() + " is not prime");
        for (const auto& aj : p.at("bases")) {
            Int a = detail::int_of(aj, env, "base");
            if (divides(r, a)) throw InvalidArgument("base " + a.get_str() + " is divisible by " + r.get_str());
            Int e = arith::mult_order(r, a);
            std::string item = "e(" + r.get_str() + "," + a.get_str() + ") = " + e.get_str();
            ev << (ev.tellp() > 0 ? "; " : "") << item;
            if (e < bound && bad.empty()) bad = item;
        }
    }
    if (!bad.empty()) return {Status::Fail, "counterexample " + bad + " < " + bound.get_str() + "; " + ev.str()};
    return {Status::Pass, ev.str() + "; all >= " + bound.get_str()};
}

/// A*x^alpha < B*x^beta (or <=) with alpha > beta and A, B > 0 holds on an
/// initial segment of x > 0, so the largest admissible solution is found by
/// scanning upward until the first failure.
inline CheckOutcome check_bound_search(const json& p) {
    Env env = detail::bindings_of(p);
    const std::string var = p.at("var").get<std::string>();
    const Rational A = detail::value_of(p.at("A"), env), B = detail::value_of(p.at("B"), env);
    const long alpha = p.at("alpha").get<long>(), beta = p.at("beta").get<long>();
    const bool strict = p.value("strict", true);
    if (alpha <= beta) throw InvalidArgument("bound search needs alpha > beta");
    if (A <= 0 || B <= 0) throw InvalidArgument("bound search needs positive A and B");
    const unsigned long d = static_cast<unsigned long>(alpha - beta);
    const detail::Domain dom(var, p.at("domain"));
    auto holds = [&](const Int& x) {
        Rational lhs = A * Rational(ipow(x, d));
        return strict ? lhs < B : lhs <= B;
    };

    std::optional<Int> best, cur = dom.next(dom.lower(env), env);
    if (!cur) throw InvalidArgument("empty domain for " + var);
    if (*cur <= 0) throw InvalidArgument("bound search needs a positive domain");
    std::vector<Int> scanned;
    while (cur && holds(*cur)) {
        scanned.push_back(*cur);
        best = cur;
        cur = dom.next(*cur + 1, env);
    }
    std::ostringstream ev;
    ev << "reduced to " << detail::show(A) << "*" << var << "^" << d << (strict ? " < " : " <= ") << detail::show(B);
    if (best)
        ev << "; largest admissible " << var << " = " << best->get_str();
    else
        ev << "; no admissible " << var << " satisfies it";
    if (cur) {
        ev << "; next admissible " << var << " = " << cur->get_str() << " fails";
        scanned.push_back(*cur);
    }
    if (p.contains("derivation")) ev << "; derivation: " << p.at("derivation").get<std::string>();

    bool ok = true;
    if (p.contains("rational_form")) {
        // The integerized form must follow from the stated one on every value
        // scanned, plus a few admissible values past the cut-off.
        const json& rf = p.at("rational_form");
        const Expr lhs = Expr::parse(rf.at("lhs").get<std::string>()), rhs = Expr::parse(rf.at("rhs").get<std::string>());
        const bool rstrict = rf.value("strict", true);
        for (int extra = 0; cur && extra < 8; ++extra)
            if ((cur = dom.next(*cur + 1, env))) scanned.push_back(*cur);
        for (const auto& x : scanned) {
            Env e = env;
            e[var] = Rational(x);
            Rational l = lhs.eval(e), r = rhs.eval(e);
            bool stated = rstrict ? l < r : l <= r;
            if (stated && !holds(x)) {
                ok = false;
                ev << "; integerization unsound at " << var << "=" << x.get_str();
                break;
            }
        }
        if (ok) ev << "; stated form implies the reduced one on " << scanned.size() << " values";
    }

    const json& want = p.at("expected_max");
    if (want.is_null()) {
        if (best) ok = false;
        ev << "; expected none";
    } else {
        Int w = detail::int_of(want, env, "expected_max");
        if (!best || *best != w) ok = false;
        ev << "; expected " << w.get_str();
    }
    return {ok ? Status::Pass : Status::Fail, ev.str()};
}

inline CheckOutcome check_divisibility(const json& p) {
    Env env = detail::bindings_of(p);
    auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    const Expr dividend = Expr::parse(text(p.at("dividend")));
    const Expr divisor = Expr::parse(text(p.at("divisor")));
    detail::require_bound(dividend.free_symbols(), env);
    detail::require_bound(divisor.free_symbols(), env);
    const Int n = detail::as_int(dividend.eval(env), "dividend");
    const Int dv = detail::as_int(divisor.eval(env), "divisor");
    if (dv == 0) throw InvalidArgument("zero divisor");
    const bool got = divides(dv, n);
    const bool want = p.at("expected").get<bool>();
    std::ostringstream ev;
    ev << "divisor " << divisor.text() << " = " << dv.get_str() << "; dividend " << dividend.text() << " = "
       << n.get_str();
    Int r = n % dv;
    if (r < 0) r += gk::abs(dv);
    ev << "; remainder " << r.get_str() << (got ? "; divides" : "; does not divide");
    return {got == want ? Status::Pass : Status::Fail, ev.str()};
}

inline CheckOutcome check_enumeration(const json& p) {
    Env base = detail::bindings_of(p);
    const json& vars = p.at("vars");
    std::vector<Expr> constraints;
    for (const auto& c : detail::string_list(p, "constraints")) constraints.push_back(Expr::parse(c));
    std::vector<Expr> project;
    for (const auto& c : p.contains("project") ? detail::string_list(p, "project") : detail::var_names(vars))
        project.push_back(Expr::parse(c));

    std::set<std::vector<Rational>> got;
    long candidates = 0;
    detail::for_each_assignment(vars, base, [&](const Env& env) {
        ++candidates;
        for (const auto& c : constraints)
            if (c.eval(env) == 0) return;
        std::vector<Rational> t;
        for (const auto& e : project) t.push_back(e.eval(env));
        got.insert(t);
    });

    std::set<std::vector<Rational>> want;
    for (const auto& t : p.at("expected")) {
        std::vector<Rational> row;
        if (t.is_array())
            for (const auto& x : t) row.push_back(detail::value_of(x, base));
        else
            row.push_back(detail::value_of(t, base));
        if (row.size() != project.size()) throw InvalidArgument("expected tuple has the wrong arity");
        want.insert(row);
    }
    std::ostringstream ev;
    ev << candidates << " candidates; solutions " << detail::show_set(got);
    if (got == want) return {Status::Pass, ev.str()};
    ev << "; expected " << detail::show_set(want);
    return {Status::Fail, ev.str()};
}

inline CheckOutcome check_inequality_grid(const json& p) {
    Env base = detail::bindings_of(p);
    const json& vars = p.at("vars");
    std::optional<Expr> where;
    if (p.contains("where")) where = Expr::parse(p.at("where").get<std::string>());
    std::vector<Expr> asserts;
    for (const auto& a : detail::string_list(p, "assert")) asserts.push_back(Expr::parse(a));
    if (asserts.empty()) throw InvalidArgument("grid claim without assertions");
    const auto names = detail::var_names(vars);

    long points = 0;
    std::optional<std::string> counterexample;
    detail::for_each_assignment(vars, base, [&](const Env& env) {
        if (counterexample) return;
        if (where && where->eval(env) == 0) return;
        ++points;
        for (const auto& a : asserts)
            if (a.eval(env) == 0) {
                counterexample = "counterexample " + detail::show(env, names) + ": " + a.text();
                return;
            }
    });
    if (counterexample) return {Status::Fail, *counterexample};
    std::ostringstream ev;
    ev << asserts.size() << " assertion(s) hold at all " << points << " grid points";
    return {Status::Pass, ev.str()};
}

/// Sufficient refutations of w in omega(S); abstention is INCONCLUSIVE, never FAIL.
inline CheckOutcome check_not_in_omega(const json& p) {
    Env env = detail::bindings_of(p);
    const Int w = detail::as_int(detail::value_of(p.at("value"), env), "value");
    if (w < 2) throw InvalidArgument("value must be at least 2");
    const auto fac = arith::factorize(w);
    std::ostringstream ev;
    ev << w.get_str() << " = " << fac.to_string();
    bool all = true;
    for (const auto& code : detail::string_list(p, "groups")) {
        const auto S = cgroups::GroupSpec::parse(code);
        std::string verdict;
        for (const auto& r : fac.primes())
            if (!cgroups::pi_membership(S, r)) {
                verdict = "(a) " + r.get_str() + " not in pi, e(" + r.get_str() + "," + S.q().get_str() +
                          ") = " + std::to_string(cgroups::e_of(r, S));
                break;
            }
        if (verdict.empty() && Rational(w) > cgroups::max_order_bound(S))
            verdict = "(b) exceeds the element order bound " + gk::to_string(cgroups::max_order_bound(S));
        if (verdict.empty() && S.prk() >= 4) {
            std::vector<Int> odd;
            for (const auto& r : fac.primes())
                if (r != 2 && r != S.p()) odd.push_back(r);
            for (std::size_t i = 0; i < odd.size() && verdict.empty(); ++i)
                for (std::size_t j = i + 1; j < odd.size() && verdict.empty(); ++j) {
                    const long ei = cgroups::e_of(odd[i], S), ej = cgroups::e_of(odd[j], S);
                    auto edge = primegraph::detail::decide_odd(S, odd[i], ei, odd[j], ej);
                    if (edge.state == primegraph::EdgeState::NonAdjacent)
                        verdict = "(c) " + odd[i].get_str() + " and " + odd[j].get_str() +
                                  " are not adjacent, e = " + std::to_string(ei) + ", " + std::to_string(ej);
                }
        }
        if (verdict.empty()) {
            all = false;
            verdict = "no sufficient refutation";
        }
        ev << "; " << S.name() << ": " << verdict;
    }
    if (all) return {Status::Pass, ev.str()};
    ev << "; deciding membership needs the full spectrum of S, which is out of scope";
    return {Status::Inconclusive, ev.str()};
}

inline CheckOutcome check_mersenne_scan(const json& p) {
    const long max_exp = p.value("max_exponent", mersenne::kDefaultMaxExponent);
    mersenne::ScanOptions opts;
    opts.rounds = p.value("rounds", mersenne::kDefaultRounds);
    opts.seed = p.value("seed", mersenne::kDefaultSeed);
    const auto recs = mersenne::scan(max_exp, opts);
    std::set<Int> got, want;
    for (const auto& q : mersenne::satisfying_primes(recs)) got.insert(q);
    for (const auto& x : p.at("expected")) want.insert(detail::int_of(x, {}, "expected"));
    std::ostringstream ev;
    ev << recs.size() << " Mersenne primes with exponent <= " << max_exp << " (k =";
    for (const auto& r : recs) ev << " " << r.exponent;
    ev << "); q with q^2-q+1 (probably) prime:";
    for (const auto& q : got) ev << " " << q.get_str();
    if (got == want) return {Status::Pass, ev.str()};
    ev << "; expected";
    for (const auto& q : want) ev << " " << q.get_str();
    return {Status::Fail, ev.str()};
}

inline CheckOutcome check_claim(const Claim& c) {
    if (c.skip_reason) return {Status::Skipped, *c.skip_reason};
    switch (c.kind) {
        case ClaimKind::ExactValue: return check_exact_value(c.payload);
        case ClaimKind::OrderBound: return check_order_bound(c.payload);
        case ClaimKind::BoundSearch: return check_bound_search(c.payload);
        case ClaimKind::Divisibility: return check_divisibility(c.payload);
        case ClaimKind::Enumeration: return check_enumeration(c.payload);
        case ClaimKind::NotInOmega: return check_not_in_omega(c.payload);
        case ClaimKind::InequalityGrid: return check_inequality_grid(c.payload);
        case ClaimKind::MersenneScan: return check_mersenne_scan(c.payload);
    }
    throw InvariantViolation("unhandled claim kind");
}

}  // namespace gk::ledger
