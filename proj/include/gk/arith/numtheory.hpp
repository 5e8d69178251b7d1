#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gk/arith/factor.hpp"
#include "gk/arith/primality.hpp"
#include "gk/bigint.hpp"

namespace gk::arith {

/// An integer a with |a| >= 2, the base of a^i - 1.
class SignedBase {
public:
    SignedBase(const Int& a) : a_(a) {  // NOLINT(google-explicit-constructor)
        if (gk::abs(a_) < 2) throw InvalidArgument("base must satisfy |a| >= 2, got " + a_.get_str());
    }
    SignedBase(long a) : SignedBase(Int(a)) {}  // NOLINT(google-explicit-constructor)

    const Int& value() const { return a_; }
    Int magnitude() const { return gk::abs(a_); }
    SignedBase negated() const { return SignedBase(Int(-a_)); }

private:
    Int a_;
};

/// Splits a = r_part * coprime_part with r_part the largest power of r dividing a.
inline std::pair<Int, Int> r_part(const Int& a, const Int& r) {
    if (a < 1) throw InvalidArgument("r_part requires a >= 1");
    if (!is_prime(r)) throw InvalidArgument("r_part requires prime r, got " + r.get_str());
    Int part = 1, rest = a;
    while (divides(r, rest)) {
        rest /= r;
        part *= r;
    }
    return {part, rest};
}

/// e(r, a). For r = 2 this is 1 when 4 | a - 1 and 2 otherwise.
inline Int mult_order(const Int& r, const SignedBase& base) {
    if (!is_prime(r)) throw InvalidArgument("mult_order requires prime r, got " + r.get_str());
    const Int& a = base.value();
    if (r == 2) {
        if (mpz_even_p(a.get_mpz_t())) throw InvalidArgument("e(2, a) requires odd a");
        return divides(Int(4), Int(a - 1)) ? Int(1) : Int(2);
    }
    Int am = a % r;
    if (am < 0) am += r;
    if (am == 0) throw InvalidArgument("e(r, a) requires gcd(a, r) = 1");
    Int order = r - 1;
    const auto fo = factorize(order);
    for (const auto& pp : fo.factors()) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            Int cand = order / pp.prime;
            Int x;
            mpz_powm(x.get_mpz_t(), am.get_mpz_t(), cand.get_mpz_t(), r.get_mpz_t());
            if (x != 1) break;
            order = cand;
        }
    }
    return order;
}

inline long nu(long k) {
    if (k < 1) throw InvalidArgument("nu requires k >= 1");
    if (k % 2 != 0) return 2 * k;
    if (k % 4 == 2) return k / 2;
    return k;
}

inline long eta(long k) {
    if (k < 1) throw InvalidArgument("eta requires k >= 1");
    return k % 2 != 0 ? k : k / 2;
}

inline Int euler_phi(const Int& n) {
    if (n < 1) throw InvalidArgument("euler_phi requires n >= 1");
    Int out = n;
    const auto f = factorize(n);
    for (const auto& pp : f.factors()) out = out / pp.prime * (pp.prime - 1);
    return out;
}

inline int moebius(const Int& n) {
    if (n < 1) throw InvalidArgument("moebius requires n >= 1");
    int sign = 1;
    const auto f = factorize(n);
    for (const auto& pp : f.factors()) {
        if (pp.exponent > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline long largest_prime_factor(long n) {
    long best = 1;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            best = p;
            n /= p;
        }
    return n > 1 ? n : best;
}

// Prime power test for q >= 2; returns (p, f) with q = p^f, or nullopt.
inline std::optional<std::pair<Int, unsigned>> prime_power_decomposition(const Int& q) {
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.factors().size() != 1) return std::nullopt;
    return std::make_pair(f.factors()[0].prime, f.factors()[0].exponent);
}

inline bool is_prime_power(const Int& q) { return prime_power_decomposition(q).has_value(); }

}  // namespace gk::arith
