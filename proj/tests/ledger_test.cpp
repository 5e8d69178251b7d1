#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gk/arith.hpp"
#include "gk/ledger.hpp"

using namespace gk;
using namespace gk::ledger;

namespace {

CheckOutcome run(const json& claim) { return check_claim(Claim::from_json(claim)); }

json claim(const std::string& kind, json payload) {
    return {{"id", "t." + kind}, {"kind", kind}, {"paper_ref", "test"}, {"quote", ""}, {"payload", std::move(payload)}};
}

const Report& full_report() {
    static const Report rep = run_catalogue(load_catalogue());
    return rep;
}

const ClaimResult& result(const std::string& id) {
    for (const auto& r : full_report().results)
        if (r.id == id) return r;
    throw std::runtime_error("no result " + id);
}

}  // namespace

// ---------------------------------------------------------------- expressions

TEST(Expr, PrecedenceAndAssociativity) {
    EXPECT_EQ(evaluate("2+3*4"), 14);
    EXPECT_EQ(evaluate("2^3^2"), 512);
    EXPECT_EQ(evaluate("-2^2"), -4);
    EXPECT_EQ(evaluate("(1+2)*(3+4)/7"), 3);
    EXPECT_EQ(evaluate("1/2 + 1/3"), Rational(5, 6));
    EXPECT_EQ(evaluate("2^-2"), Rational(1, 4));
    EXPECT_EQ(evaluate("1 < 2 && 3 >= 3 || 0"), 1);
    EXPECT_EQ(evaluate("!(1 == 1)"), 0);
}

TEST(Expr, FunctionsMatchArith) {
    EXPECT_EQ(evaluate("k(9,-5)"), 5167);
    EXPECT_EQ(evaluate("Phi(6,3)"), 7);
    EXPECT_EQ(evaluate("e(5167,2)"), 861);
    EXPECT_EQ(evaluate("nu(3)"), 6);
    EXPECT_EQ(evaluate("cong_part(k(13,8),1,12)"), 121369);
    EXPECT_EQ(evaluate("maxe(k(9,7),2)"), 531);
    EXPECT_EQ(evaluate("maxe(4,2)"), 0);
    EXPECT_EQ(evaluate("rpart(48,2)"), 16);
    EXPECT_EQ(evaluate("isprimepower(243) + isprime(243)"), 1);
}

TEST(Expr, IntegerFunctionsAgreeWithStdOnRandomInputs) {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int it = 0; it < 500; ++it) {
        long a = d(gen), b = d(gen);
        Env env{{"a", a}, {"b", b}};
        EXPECT_EQ(evaluate("gcd(a,b)", env), std::gcd(a, b));
        EXPECT_EQ(evaluate("abs(a) + min(a,b) + max(a,b)", env), std::abs(a) + std::min(a, b) + std::max(a, b));
        if (b > 0) {
            EXPECT_EQ(evaluate("mod(a,b)", env), ((a % b) + b) % b);
        }
        if (b != 0) {
            long fl = a / b;
            if (a % b != 0 && (a < 0) != (b < 0)) --fl;
            EXPECT_EQ(evaluate("floor(a/b)", env), fl);
        }
    }
}

TEST(Expr, Errors) {
    EXPECT_THROW(evaluate("1/0"), InvalidArgument);
    EXPECT_THROW(evaluate("x+1"), InvalidArgument);
    EXPECT_THROW(evaluate("(1+2"), InvalidArgument);
    EXPECT_THROW(evaluate("nosuch(1)"), InvalidArgument);
    EXPECT_THROW(evaluate("gcd(1)"), InvalidArgument);
    EXPECT_THROW(evaluate("k(3,1/2)"), InvalidArgument);
    EXPECT_EQ(Expr::parse("q^2 + gcd(u,q)").free_symbols(), (std::set<std::string>{"q", "u"}));
}

// ---------------------------------------------------------------- checkers

TEST(Checks, ExactValue) {
    EXPECT_EQ(run(claim("ExactValue", {{"expr", "k(9,-5)"}, {"expected", 5167}})).status, Status::Pass);
    EXPECT_EQ(run(claim("ExactValue", {{"expr", "k(7,5)"}, {"expected", 19531}, {"prime", true}})).status, Status::Pass);
    EXPECT_EQ(run(claim("ExactValue", {{"expr", "k(8,q)"}, {"bindings", {{"q", 9}}}, {"factors", {17, 193}}})).status,
              Status::Pass);
    EXPECT_EQ(run(claim("ExactValue", {{"expr", "k(9,5)"}, {"expected", 15752}})).status, Status::Fail);
    EXPECT_EQ(run(claim("ExactValue", {{"expr", "k(9,5)"}, {"prime", true}})).status, Status::Fail);
    EXPECT_EQ(run(claim("ExactValue", {{"expr", "k(9,5)"}, {"factors", {19, 19, 829}}})).status, Status::Fail);
}

TEST(Checks, OrderBound) {
    EXPECT_EQ(run(claim("OrderBound", {{"primes", {5167}}, {"bases", {2, 3}}, {"min", 207}})).status, Status::Pass);
    EXPECT_EQ(run(claim("OrderBound", {{"primes", {829}}, {"bases", {2, 3}}, {"min", 207}})).status, Status::Pass);
    auto neg = run(claim("OrderBound", {{"primes", {7}}, {"bases", {2}}, {"min", 4}}));
    EXPECT_EQ(neg.status, Status::Fail);
    EXPECT_NE(neg.evidence.find("e(7,2) = 3"), std::string::npos) << neg.evidence;
}

TEST(Checks, BoundSearch) {
    json spot{{"var", "q"}, {"A", "5^5"}, {"alpha", 7}, {"B", "24^6*43"}, {"beta", 0},
              {"domain", {{"kind", "odd_prime_power"}}}, {"expected_max", 7},
              {"rational_form", {{"lhs", "q^36"}, {"rhs", "(24/5)^6*5*43*q^29"}}}};
    EXPECT_EQ(run(claim("BoundSearch", spot)).status, Status::Pass);
    spot["expected_max"] = 9;
    EXPECT_EQ(run(claim("BoundSearch", spot)).status, Status::Fail);

    json empty{{"var", "q"}, {"A", 1}, {"alpha", 7}, {"B", 2}, {"beta", 0},
               {"domain", {{"kind", "odd_prime_power"}}}, {"expected_max", nullptr}};
    EXPECT_EQ(run(claim("BoundSearch", empty)).status, Status::Pass);

    json u{{"var", "u"}, {"A", 3}, {"alpha", 3}, {"B", "8*d"}, {"beta", 0}, {"bindings", {{"d", 1}}},
           {"domain", {{"kind", "prime_power"}}}, {"expected_max", nullptr}};
    EXPECT_EQ(run(claim("BoundSearch", u)).status, Status::Pass);

    json bad = spot;
    bad["alpha"] = 0;
    EXPECT_THROW(run(claim("BoundSearch", bad)), InvalidArgument);
}

TEST(Checks, BoundSearchRejectsAnInconsistentRationalForm) {
    json p{{"var", "q"}, {"A", "5^5"}, {"alpha", 7}, {"B", "24^6*43"}, {"beta", 0},
           {"domain", {{"kind", "odd_prime_power"}}}, {"expected_max", 7},
           {"rational_form", {{"lhs", "q^36"}, {"rhs", "(24/5)^6*5*43*q^31"}}}};
    auto r = run(claim("BoundSearch", p));
    EXPECT_EQ(r.status, Status::Fail);
    EXPECT_NE(r.evidence.find("integerization unsound at q=9"), std::string::npos) << r.evidence;
}

TEST(Checks, Divisibility) {
    EXPECT_EQ(run(claim("Divisibility", {{"dividend", "6562*5"}, {"divisor", "k(8,9)"}, {"expected", true}})).status,
              Status::Pass);
    auto d = run(claim("Divisibility",
                       {{"dividend", "(q^8-1)/gcd(9,4)"}, {"divisor", "(q^6+1)/2"}, {"bindings", {{"q", 5}}},
                        {"expected", false}}));
    EXPECT_EQ(d.status, Status::Pass) << d.evidence;
    EXPECT_EQ(run(claim("Divisibility", {{"dividend", "n"}, {"divisor", 1}, {"bindings", {{"n", 12345}}},
                                         {"expected", true}}))
                  .status,
              Status::Pass);
    EXPECT_THROW(run(claim("Divisibility", {{"dividend", "q+1"}, {"divisor", 2}, {"expected", true}})),
                 InvalidArgument);
}

TEST(Checks, Enumeration) {
    json sys{{"vars", {{{"name", "u"}, {"domain", {{"kind", "prime_power"}, {"max", 40},
                                                    {"where", "mod(u,3) != 0"}}}}}},
             {"constraints", {"q^4 < 8*u^2", "u^20 < 5*43*q^29"}},
             {"bindings", {{"q", 9}}},
             {"expected", {29, 31}}};
    EXPECT_EQ(run(claim("Enumeration", sys)).status, Status::Pass);
    sys["expected"] = {29};
    EXPECT_EQ(run(claim("Enumeration", sys)).status, Status::Fail);

    json l11{{"vars", {{{"name", "u"}, {"domain", {{"kind", "list"}, {"values", {4, 5, 7, 8}}}}},
                       {{"name", "q"}, {"domain", {{"kind", "odd_prime_power"}, {"max", 50},
                                                    {"where", "gcd(q,u) == 1"}}}}}},
             {"constraints", {"q^4 < 4*gcd(5,q^2-1)*u^6", "u^42 < 1180*q^21"}},
             {"expected", {{5, 19}}}};
    EXPECT_EQ(run(claim("Enumeration", l11)).status, Status::Pass);

    json none{{"vars", {{{"name", "x"}, {"domain", {{"kind", "list"}, {"values", json::array()}}}}}},
              {"constraints", json::array()}, {"expected", json::array()}};
    EXPECT_EQ(run(claim("Enumeration", none)).status, Status::Pass);

    json unbounded{{"vars", {{{"name", "q"}, {"domain", {{"kind", "odd_prime_power"}}}}}},
                   {"constraints", {"q < 10"}}, {"expected", {3, 5, 7, 9}}};
    EXPECT_THROW(run(claim("Enumeration", unbounded)), InvalidArgument);
}

TEST(Checks, InequalityGridReportsTheFirstCounterexample) {
    json g{{"vars", {{{"name", "q"}, {"domain", {{"kind", "odd_prime_power"}, {"max", 50}}}}}},
           {"assert", {"q < 20"}}};
    auto r = run(claim("InequalityGrid", g));
    EXPECT_EQ(r.status, Status::Fail);
    EXPECT_NE(r.evidence.find("q=23"), std::string::npos) << r.evidence;
}

TEST(Checks, NotInOmega) {
    auto a = run(claim("NotInOmega", {{"value", 313}, {"groups", {"L:9:7", "U:9:7", "L:9:2:3", "U:9:2:3"}}}));
    EXPECT_EQ(a.status, Status::Pass) << a.evidence;
    EXPECT_NE(a.evidence.find("(a)"), std::string::npos);
    auto b = run(claim("NotInOmega", {{"value", 3281}, {"groups", {"S:5:29"}}}));
    EXPECT_EQ(b.status, Status::Pass) << b.evidence;
    auto c = run(claim("NotInOmega", {{"value", 4}, {"groups", {"L:9:5"}}}));
    EXPECT_EQ(c.status, Status::Inconclusive);
    EXPECT_NE(c.evidence.find("full spectrum"), std::string::npos);
}

TEST(Checks, SkipReasonShortCircuits) {
    json c = claim("InequalityGrid", json::object());
    c["skip_reason"] = "assumed";
    auto r = run(c);
    EXPECT_EQ(r.status, Status::Skipped);
    EXPECT_EQ(r.evidence, "assumed");
}

// ---------------------------------------------------------------- catalogue

TEST(Catalogue, RejectsDuplicatesAndMalformedClaims) {
    json one = claim("ExactValue", {{"expr", "1"}, {"expected", 1}});
    EXPECT_THROW(parse_catalogue({{"claims", {one, one}}}), InvalidArgument);
    json bad = one;
    bad["kind"] = "Nonsense";
    EXPECT_THROW(parse_catalogue({{"claims", {bad}}}), InvalidArgument);
    bad = one;
    bad.erase("payload");
    EXPECT_THROW(parse_catalogue({{"claims", {bad}}}), InvalidArgument);
}

TEST(Catalogue, CheckerErrorsBecomeFailures) {
    auto cat = parse_catalogue({{"claims", {claim("ExactValue", {{"expr", "1/0"}})}}});
    auto rep = run_catalogue(cat);
    ASSERT_EQ(rep.results.size(), 1u);
    EXPECT_EQ(rep.results[0].status, Status::Fail);
    EXPECT_EQ(rep.exit_code(), 1);
}

TEST(Catalogue, FilterByPrefix) {
    auto cat = load_catalogue();
    auto rep = run_catalogue(cat, std::string("mersenne"));
    ASSERT_EQ(rep.results.size(), 1u);
    EXPECT_EQ(rep.results[0].kind, ClaimKind::MersenneScan);
    EXPECT_THROW(run_catalogue(cat, std::string("nonexistent.")), InvalidArgument);
}

TEST(Catalogue, ShippedCatalogueHasNoFailures) {
    const auto& rep = full_report();
    EXPECT_GE(rep.summary.total(), 60);
    EXPECT_EQ(rep.summary.fail, 0);
    EXPECT_LE(rep.summary.inconclusive * 100, rep.summary.total() * 15);
    for (const auto& r : rep.results) {
        EXPECT_NE(r.status, Status::Fail) << r.id << ": " << r.evidence;
        if (r.status == Status::Skipped || r.status == Status::Inconclusive) {
            EXPECT_FALSE(r.evidence.empty()) << r.id;
        }
    }
    EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Catalogue, PinnedValues) {
    EXPECT_EQ(result("lu.u3.k9m5").status, Status::Pass);
    EXPECT_NE(result("lu.u3.k9m5").evidence.find("5167"), std::string::npos);
    EXPECT_NE(result("lu.u3.k9p5").evidence.find("19 * 829"), std::string::npos);
    EXPECT_NE(result("lu.so.o14p5.k7").evidence.find("19531; prime"), std::string::npos);
    EXPECT_NE(result("lu.so.s12.n9.k8q5").evidence.find("313"), std::string::npos);
    EXPECT_NE(result("so.56.l11.k10").evidence.find("11 * 2251"), std::string::npos);
    EXPECT_NE(result("lu.u3.e5167").evidence.find("e(5167,2) = 861; e(5167,3) = 738"), std::string::npos);
    EXPECT_NE(result("lu.so.n9.q").evidence.find("largest admissible q = 7"), std::string::npos);
    EXPECT_NE(result("lu.so.s10.n9.sys").evidence.find("{29, 31}"), std::string::npos);
    for (const char* id : {"lu.u3.k9p5", "lu.so.o14p5.k7", "lu.so.s12.n9.k8q5", "so.56.l11.k10", "lu.u3.e5167",
                           "lu.so.n9.q", "lu.so.s10.n9.sys"})
        EXPECT_EQ(result(id).status, Status::Pass) << id;
}

TEST(Catalogue, ReportIsDeterministicModuloTiming) {
    auto cat = load_catalogue();
    auto a = to_json(run_catalogue(cat, std::nullopt, 1), cat, false).dump();
    auto b = to_json(run_catalogue(cat, std::nullopt, 4), cat, false).dump();
    EXPECT_EQ(a, b);
    auto withtime = to_json(full_report(), cat);
    EXPECT_TRUE(withtime["claims"][0].contains("ms"));
}
