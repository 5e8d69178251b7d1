#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "gk/bigint.hpp"

namespace gk::arith {

enum class Primality { Composite, ProbablePrime, Prime };

inline std::string to_string(Primality v) {
    switch (v) {
        case Primality::Composite: return "composite";
        case Primality::ProbablePrime: return "probable-prime";
        case Primality::Prime: return "prime";
    }
    return "composite";
}

namespace detail {

// Strong probable-prime test of odd n > 2 to base a.
inline bool strong_probable_prime(const Int& n, const Int& a) {
    Int nm1 = n - 1;
    Int d = nm1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int base = a % n;
    if (base == 0) return true;
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

inline Int half_mod(Int x, const Int& n) {
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    return x;
}

// Strong Lucas probable-prime test with Selfridge parameters, odd n > 2.
inline bool strong_lucas_probable_prime(const Int& n) {
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;
    long dd = 5;
    for (;;) {
        Int D(dd);
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0 && abs(D) != n) return false;
        dd = dd > 0 ? -(dd + 2) : -(dd - 2);
    }
    const Int D(dd);
    const Int P(1);
    const Int Q = (1 - D) / 4;

    Int d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    auto mod = [&](Int x) {
        x %= n;
        if (x < 0) x += n;
        return x;
    };

    Int U = 1, V = P, Qk = mod(Q);
    for (long bit = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
        U = mod(U * V);
        V = mod(V * V - 2 * Qk);
        Qk = mod(Qk * Qk);
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
            Int U2 = half_mod(mod(P * U + V), n);
            Int V2 = half_mod(mod(D * U + P * V), n);
            U = U2;
            V = V2;
            Qk = mod(Qk * Q);
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod(V * V - 2 * Qk);
        if (V == 0) return true;
        Qk = mod(Qk * Qk);
    }
    return false;
}

inline constexpr std::array<unsigned, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace detail

/// Deterministic below 2^64 (Miller-Rabin with the first twelve prime bases);
/// Baillie-PSW above, reported as ProbablePrime.
inline Primality primality(const Int& n) {
    if (n < 2) return Primality::Composite;
    for (unsigned p : detail::kWitnesses) {
        if (n == p) return Primality::Prime;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::Composite;
    }
    if (fits_u64(n)) {
        for (unsigned p : detail::kWitnesses)
            if (!detail::strong_probable_prime(n, Int(p))) return Primality::Composite;
        return Primality::Prime;
    }
    if (!detail::strong_probable_prime(n, Int(2))) return Primality::Composite;
    if (!detail::strong_lucas_probable_prime(n)) return Primality::Composite;
    return Primality::ProbablePrime;
}

inline bool is_prime(const Int& n) { return primality(n) != Primality::Composite; }

/// Baillie-PSW followed by `rounds` Miller-Rabin tests with bases drawn from a
/// seeded generator, so repeated runs see the same bases.
inline Primality primality_with_rounds(const Int& n, unsigned rounds, std::uint64_t seed) {
    Primality v = primality(n);
    if (v != Primality::ProbablePrime) return v;
    std::mt19937_64 gen(seed);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(gen()));
    Int span = n - 3;
    for (unsigned i = 0; i < rounds; ++i) {
        Int a = rng.get_z_range(span) + 2;
        if (!detail::strong_probable_prime(n, a)) return Primality::Composite;
    }
    return Primality::ProbablePrime;
}

}  // namespace gk::arith
