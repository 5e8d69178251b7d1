#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "gk/arith/factor.hpp"
#include "gk/arith/numtheory.hpp"
#include "gk/bigint.hpp"

namespace gk::arith {

/// Coefficients of Phi_i(x), constant term first. Memoized.
inline std::vector<Int> cyclotomic_coeffs(long i) {
    if (i < 1) throw InvalidArgument("cyclotomic_coeffs requires i >= 1");
    static std::mutex mutex;
    static std::map<long, std::vector<Int>> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(i); it != memo.end()) return it->second;
    }
    // x^i - 1 divided by Phi_d for every proper divisor d. Each divisor is monic,
    // so long division stays in the integers.
    std::vector<Int> num(static_cast<std::size_t>(i) + 1, Int(0));
    num[0] = -1;
    num[static_cast<std::size_t>(i)] = 1;
    for (long d : divisors(i)) {
        if (d == i) continue;
        std::vector<Int> den = cyclotomic_coeffs(d);
        std::size_t dn = den.size() - 1;
        std::vector<Int> quot(num.size() - dn, Int(0));
        for (std::size_t k = quot.size(); k-- > 0;) {
            Int c = num[k + dn];
            quot[k] = c;
            if (c != 0)
                for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= c * den[j];
        }
        for (const auto& rem : num)
            if (rem != 0) throw InvariantViolation("non-exact cyclotomic division");
        num = std::move(quot);
    }
    std::lock_guard lock(mutex);
    memo.emplace(i, num);
    return num;
}

/// Phi_i(a) as a product of (a^d - 1)^mu(i/d) over divisors d of i.
inline Int cyclotomic_value(long i, const SignedBase& base) {
    if (i < 1) throw InvalidArgument("cyclotomic_value requires i >= 1");
    const Int& a = base.value();
    Int num = 1, den = 1;
    for (long d : divisors(i)) {
        int mu = moebius(Int(i / d));
        if (mu == 0) continue;
        Int term = ipow(a, static_cast<unsigned long>(d)) - 1;
        (mu > 0 ? num : den) *= term;
    }
    if (!divides(den, num)) throw InvariantViolation("non-exact cyclotomic value");
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

/// R_i(a): primes r with e(r, a) = i, sorted ascending.
inline std::vector<Int> primitive_prime_divisors(long i, const SignedBase& base,
                                                 const FactorOptions& opts = {}) {
    Int v = gk::abs(cyclotomic_value(i, base));
    std::vector<Int> out;
    if (v == 0) return out;
    const auto f = factorize(v, opts);
    for (const auto& pp : f.factors()) {
        if (pp.prime == 2 && mpz_even_p(base.value().get_mpz_t())) continue;
        if (divides(pp.prime, base.value())) continue;
        if (mult_order(pp.prime, base) == i) out.push_back(pp.prime);
    }
    return out;
}

/// k_i(a) = Phi_i(a) / (r, Phi_{(i)_{r'}}(a)) with r the largest prime divisor of i.
inline Int k_value(long i, const SignedBase& base) {
    if (i < 3) throw InvalidArgument("k_i(a) is defined for i >= 3, got i = " + std::to_string(i));
    const long r = largest_prime_factor(i);
    long rest = i;
    while (rest % r == 0) rest /= r;
    const Int phi_i = cyclotomic_value(i, base);
    Int g = 1;
    if ((r - 1) % rest == 0) {
        g = gcd(Int(r), cyclotomic_value(rest, base));
    }
#ifdef GK_CHECKED
    else if (gcd(Int(r), cyclotomic_value(rest, base)) != 1) {
        throw InvariantViolation("k_value gcd shortcut disagrees with direct gcd");
    }
#endif
    Int out;
    mpz_divexact(out.get_mpz_t(), phi_i.get_mpz_t(), g.get_mpz_t());
    return out;
}

}  // namespace gk::arith
