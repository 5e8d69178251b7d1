#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gk/arith.hpp"

using namespace gk;
using namespace gk::arith;

namespace {

// Brute-force order oracle: repeated multiplication.
long slow_order(long r, long a) {
    long am = ((a % r) + r) % r;
    long x = am;
    for (long i = 1; i <= r; ++i) {
        if (x == 1) return i;
        x = x * am % r;
    }
    return -1;
}

bool slow_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST(RPart, Examples) {
    EXPECT_EQ(r_part(48, 2), std::make_pair(Int(16), Int(3)));
    EXPECT_EQ(r_part(7, 5), std::make_pair(Int(1), Int(7)));
    EXPECT_EQ(r_part(6562, 2), std::make_pair(Int(2), Int(3281)));
    EXPECT_THROW(r_part(48, 4), InvalidArgument);
}

TEST(Factorize, Examples) {
    EXPECT_TRUE(factorize(1).empty());
    auto f = factorize(6562);
    ASSERT_EQ(f.factors().size(), 3u);
    EXPECT_EQ(f.to_string(), "2 * 17 * 193");
    EXPECT_EQ(factorize(15751).to_string(), "19 * 829");
    EXPECT_EQ(factorize(Int(1) << 20).to_string(), "2^20");
    EXPECT_THROW(factorize(0), InvalidArgument);
}

TEST(Factorize, LargeSemiprimeNeedsRho) {
    Int p("1000000007"), q("998244353");
    auto f = factorize(p * q * p);
    EXPECT_EQ(f.to_string(), "998244353 * 1000000007^2");
}

TEST(Factorize, TimeoutReportsPartial) {
    // Two 64-bit primes: far beyond a 1 ms rho budget.
    Int p("18446744073709551557"), q("18446744073709551533");
    FactorOptions opts;
    opts.timeout = std::chrono::milliseconds(1);
    opts.use_cache = false;
    try {
        factorize(Int(12) * p * q, opts);
        FAIL() << "expected timeout";
    } catch (const FactorTimeout& t) {
        EXPECT_EQ(t.partial.to_string(), "2^2 * 3");
        EXPECT_EQ(t.cofactor, p * q);
    }
}

TEST(Factorize, PropertyProductAndPrimality) {
    std::mt19937_64 gen(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        Int n = 1;
        int parts = 1 + static_cast<int>(gen() % 4);
        for (int j = 0; j < parts; ++j) n *= from_u64(gen() % 4000000000ULL + 2);
        auto f = factorize(n);
        Int prod = 1;
        Int prev = 0;
        for (const auto& pp : f.factors()) {
            EXPECT_GT(pp.prime, prev);
            EXPECT_GE(pp.exponent, 1u);
            EXPECT_TRUE(is_prime(pp.prime));
            prev = pp.prime;
            prod *= ipow(pp.prime, pp.exponent);
        }
        EXPECT_EQ(prod, n);
        EXPECT_EQ(factorize(n), f);
    }
}

TEST(FactorCache, JsonRoundTripRejectsBadEntries) {
    FactorCache cache;
    cache.insert(6562, factorize(6562));
    auto j = cache.to_json();
    j["15"] = nlohmann::json::array({nlohmann::json::array({"15", 1})});
    FactorCache other;
    EXPECT_EQ(other.merge_json(j), 1u);
    EXPECT_EQ(other.lookup(6562)->to_string(), "2 * 17 * 193");
    EXPECT_FALSE(other.lookup(15).has_value());
}

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(19531));
    EXPECT_TRUE(is_prime(5167));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(Int(3215031751L)));  // strong pseudoprime to bases 2,3,5,7
    EXPECT_EQ(primality(Int("170141183460469231731687303715884105727")), Primality::ProbablePrime);
    EXPECT_EQ(primality(Int("170141183460469231731687303715884105729")), Primality::Composite);
}

TEST(IsPrime, AgreesWithTrialDivision) {
    for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(from_u64(n)), slow_is_prime(n)) << n;
    std::mt19937_64 gen(7);
    for (int t = 0; t < 2000; ++t) {
        std::uint64_t n = gen() % 10000000000ULL;
        ASSERT_EQ(is_prime(from_u64(n)), slow_is_prime(n)) << n;
    }
}

TEST(IsPrime, LucasSideCatchesProductsAbove64Bits) {
    std::mt19937_64 gen(99);
    for (int t = 0; t < 50; ++t) {
        Int a, b;
        mpz_nextprime(a.get_mpz_t(), from_u64(gen()).get_mpz_t());
        mpz_nextprime(b.get_mpz_t(), from_u64(gen()).get_mpz_t());
        EXPECT_EQ(primality(a * b), Primality::Composite);
        EXPECT_FALSE(detail::strong_lucas_probable_prime(a * b));
        EXPECT_TRUE(detail::strong_lucas_probable_prime(a));
    }
}

TEST(MultOrder, Examples) {
    EXPECT_EQ(mult_order(2, 5), 1);
    EXPECT_EQ(mult_order(2, 7), 2);
    EXPECT_EQ(mult_order(7, 2), 3);
    EXPECT_GE(mult_order(5167, 2), 207);
    EXPECT_GE(mult_order(5167, 3), 207);
    EXPECT_THROW(mult_order(2, 4), InvalidArgument);
    EXPECT_THROW(mult_order(7, 14), InvalidArgument);
    EXPECT_THROW(mult_order(9, 2), InvalidArgument);
}

TEST(MultOrder, AgreesWithRepeatedMultiplication) {
    for (long r : {3L, 5L, 7L, 11L, 13L, 101L, 829L, 5167L})
        for (long a = -40; a <= 40; ++a) {
            if (a > -2 && a < 2) continue;
            if (a % r == 0) continue;
            ASSERT_EQ(mult_order(r, a), slow_order(r, a)) << r << " " << a;
        }
}

TEST(NuEta, Examples) {
    EXPECT_EQ(nu(3), 6);
    EXPECT_EQ(nu(6), 3);
    EXPECT_EQ(nu(8), 8);
    EXPECT_EQ(nu(1), 2);
    EXPECT_EQ(eta(5), 5);
    EXPECT_EQ(eta(10), 5);
    for (long k = 1; k < 500; ++k) EXPECT_EQ(nu(nu(k)), k);
}

TEST(EulerMoebius, Examples) {
    EXPECT_EQ(euler_phi(9), 6);
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_EQ(moebius(1), 1);
    EXPECT_EQ(euler_phi(12), 4);
    EXPECT_EQ(moebius(12), 0);
    EXPECT_EQ(moebius(30), -1);
}

TEST(Cyclotomic, Coefficients) {
    EXPECT_EQ(cyclotomic_coeffs(1), (std::vector<Int>{-1, 1}));
    EXPECT_EQ(cyclotomic_coeffs(6), (std::vector<Int>{1, -1, 1}));
    auto c105 = cyclotomic_coeffs(105);
    EXPECT_EQ(c105.size(), 49u);
    EXPECT_NE(std::find(c105.begin(), c105.end(), Int(-2)), c105.end());
    for (long i = 1; i < 105; ++i)
        for (const auto& c : cyclotomic_coeffs(i)) ASSERT_TRUE(c >= -1 && c <= 1) << i;
}

TEST(Cyclotomic, Values) {
    EXPECT_EQ(cyclotomic_value(9, 5), 15751);
    EXPECT_EQ(cyclotomic_value(5, 2), 31);
    EXPECT_EQ(cyclotomic_value(12, 5), 601);
    EXPECT_EQ(cyclotomic_value(1, -3), -4);
}

TEST(Cyclotomic, ValueMatchesHornerOnCoefficients) {
    for (long i = 1; i <= 60; ++i)
        for (long a : {-7L, -2L, 2L, 3L, 10L}) {
            auto c = cyclotomic_coeffs(i);
            Int h = 0;
            for (std::size_t k = c.size(); k-- > 0;) h = h * a + c[k];
            ASSERT_EQ(h, cyclotomic_value(i, a)) << i << " " << a;
        }
}

TEST(Cyclotomic, ProductFormula) {
    for (long a = 2; a <= 20; ++a)
        for (long n = 1; n <= 40; ++n) {
            Int prod = 1;
            for (long d : divisors(n)) prod *= cyclotomic_value(d, a);
            ASSERT_EQ(prod, ipow(a, n) - 1) << a << " " << n;
        }
}

TEST(PrimitiveDivisors, Examples) {
    EXPECT_TRUE(primitive_prime_divisors(6, 2).empty());
    EXPECT_EQ(primitive_prime_divisors(5, 2), std::vector<Int>{31});
    EXPECT_TRUE(primitive_prime_divisors(2, -3).empty());
    EXPECT_EQ(primitive_prime_divisors(2, 3), std::vector<Int>{2});
    EXPECT_EQ(primitive_prime_divisors(1, 5), std::vector<Int>{2});
}

TEST(PrimitiveDivisors, ZsigmondyExceptionsExactly) {
    const std::set<std::pair<long, long>> exceptions{{2, 1}, {2, 6}, {-2, 2}, {-2, 3}, {3, 1}, {-3, 2}};
    for (long a = -12; a <= 12; ++a) {
        if (a > -2 && a < 2) continue;
        for (long i = 1; i <= 30; ++i) {
            bool empty = primitive_prime_divisors(i, a).empty();
            ASSERT_EQ(empty, exceptions.count({a, i}) == 1) << a << " " << i;
        }
    }
    // Wider grid through k_i(a) = 1, which needs no factoring.
    for (long a = -50; a <= 50; ++a) {
        if (a > -2 && a < 2) continue;
        for (long i = 3; i <= 60; ++i)
            ASSERT_EQ(k_value(i, a) == 1, exceptions.count({a, i}) == 1) << a << " " << i;
    }
}

TEST(KValue, Examples) {
    EXPECT_EQ(k_value(9, -5), 5167);
    EXPECT_EQ(k_value(6, 2), 1);
    EXPECT_EQ(k_value(10, 19), 24761);
    EXPECT_EQ(factorize(k_value(10, 19)).to_string(), "11 * 2251");
    EXPECT_EQ(k_value(4, 7), 25);
    EXPECT_EQ(k_value(9, 5), 15751);
    EXPECT_EQ(k_value(7, 5), 19531);
    EXPECT_EQ(k_value(8, 5), 313);
    EXPECT_THROW(k_value(2, 2), InvalidArgument);
    EXPECT_THROW(k_value(5, 1), InvalidArgument);
}

// The generator below samples (i, a) pairs away from the acceptance grid's
// corners so the property also sees larger bases.
TEST(KValue, Properties) {
    std::mt19937_64 gen(314159);
    for (int t = 0; t < 400; ++t) {
        long b = 2 + static_cast<long>(gen() % 60);
        long a = (gen() & 1) ? b : -b;
        long i = 3 + static_cast<long>(gen() % 28);
        Int k = k_value(i, a);
        std::vector<Int> ppd;
        if (b <= 12) ppd = primitive_prime_divisors(i, a);
        if (b <= 12) {
            EXPECT_EQ(k == 1, ppd.empty());
        }
        for (const auto& r : ppd) {
            EXPECT_TRUE(divides(Int(i), Int(r - 1))) << r << " mod " << i;
            Int pw = ipow(Int(a), static_cast<unsigned long>(i)) - 1;
            EXPECT_EQ(r_part(gk::abs(pw), r).first, r_part(k, r).first);
        }
        if (nu(i) >= 3) {
            EXPECT_EQ(k_value(i, -a), k_value(nu(i), a)) << i << " " << a;
            if (b <= 12) {
                EXPECT_EQ(primitive_prime_divisors(i, -a), primitive_prime_divisors(nu(i), a));
            }
        }
        long j = 3 + static_cast<long>(gen() % 28);
        if (j != i) {
            EXPECT_EQ(gcd(k, k_value(j, a)), 1);
        }
    }
}

TEST(KValue, PrimitiveDivisorMembership) {
    // r in R_i(q) divides q^eta(i) + (-1)^i.
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 13L})
        for (long i = 1; i <= 26; ++i)
            for (const auto& r : primitive_prime_divisors(i, q)) {
                Int target = ipow(Int(q), static_cast<unsigned long>(eta(i))) + (i % 2 ? -1 : 1);
                EXPECT_TRUE(divides(r, target)) << q << " " << i << " " << r;
            }
}
