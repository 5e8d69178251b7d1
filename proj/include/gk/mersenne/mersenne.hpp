#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/arith.hpp"
#include "gk/bigint.hpp"
#include "gk/errors.hpp"

namespace gk::mersenne {

inline constexpr std::uint64_t kDefaultSeed = 0x6b6d657273656e6eULL;
inline constexpr unsigned kDefaultRounds = 20;
inline constexpr long kDefaultMaxExponent = 1300;

/// Whether 2^k - 1 is prime.
inline bool lucas_lehmer(long k) {
    if (k < 2) throw InvalidArgument("lucas_lehmer needs k >= 2");
    if (k == 2) return true;
    if (!arith::is_prime(Int(k))) return false;
    const auto bits = static_cast<unsigned long>(k);
    const Int m = ipow(2, bits) - 1;
    Int s = 4, hi;
    for (long i = 0; i < k - 2; ++i) {
        s = s * s - 2;
        // Reduce modulo 2^k - 1 by folding the high bits onto the low bits.
        while (mpz_sizeinbase(s.get_mpz_t(), 2) > bits) {
            mpz_tdiv_q_2exp(hi.get_mpz_t(), s.get_mpz_t(), bits);
            mpz_tdiv_r_2exp(s.get_mpz_t(), s.get_mpz_t(), bits);
            s += hi;
        }
        if (s == m) s = 0;
    }
    return s == 0;
}

struct MersenneRecord {
    long exponent = 0;
    Int q;
    bool q_is_prime = false;
    Int phi6_value;
    arith::Primality phi6_is_prime = arith::Primality::Composite;

    bool satisfies() const { return phi6_is_prime != arith::Primality::Composite; }
};

struct ScanOptions {
    unsigned rounds = kDefaultRounds;
    std::uint64_t seed = kDefaultSeed;
    bool parallel = true;
};

inline MersenneRecord make_record(long k, const ScanOptions& opts = {}) {
    MersenneRecord rec;
    rec.exponent = k;
    rec.q = ipow(2, static_cast<unsigned long>(k)) - 1;
    rec.q_is_prime = true;
    rec.phi6_value = rec.q * rec.q - rec.q + 1;
    rec.phi6_is_prime = arith::primality_with_rounds(rec.phi6_value, opts.rounds, opts.seed);
    return rec;
}

/// Records for each prime exponent k <= max_exponent with 2^k - 1 prime,
/// ordered by k.
inline std::vector<MersenneRecord> scan(long max_exponent, const ScanOptions& opts = {}) {
    if (max_exponent < 2) throw InvalidArgument("scan needs max_exponent >= 2");
    std::vector<long> exps;
    for (long k = 2; k <= max_exponent; ++k)
        if (arith::is_prime(Int(k))) exps.push_back(k);
    std::vector<std::future<std::optional<MersenneRecord>>> jobs;
    const auto policy = opts.parallel ? std::launch::async : std::launch::deferred;
    for (long k : exps)
        jobs.push_back(std::async(policy, [k, opts]() -> std::optional<MersenneRecord> {
            if (!lucas_lehmer(k)) return std::nullopt;
            return make_record(k, opts);
        }));
    std::vector<MersenneRecord> out;
    for (auto& j : jobs)
        if (auto r = j.get()) out.push_back(std::move(*r));
    return out;
}

inline std::vector<Int> satisfying_primes(const std::vector<MersenneRecord>& recs) {
    std::vector<Int> out;
    for (const auto& r : recs)
        if (r.satisfies()) out.push_back(r.q);
    return out;
}

inline nlohmann::json to_json(const MersenneRecord& r) {
    return {{"exponent", r.exponent},
            {"q", r.q.get_str()},
            {"q_is_prime", r.q_is_prime},
            {"phi6_value", r.phi6_value.get_str()},
            {"phi6_is_prime", arith::to_string(r.phi6_is_prime)}};
}

inline nlohmann::json to_json(const std::vector<MersenneRecord>& recs, long max_exponent,
                              const ScanOptions& opts = {}) {
    nlohmann::json list = nlohmann::json::array(), sat = nlohmann::json::array();
    for (const auto& r : recs) list.push_back(to_json(r));
    for (const auto& q : satisfying_primes(recs)) sat.push_back(q.get_str());
    return {{"max_exponent", max_exponent},
            {"rounds", opts.rounds},
            {"seed", opts.seed},
            {"records", list},
            {"satisfying", sat}};
}

}  // namespace gk::mersenne
