#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gk/arith/primality.hpp"
#include "gk/bigint.hpp"

namespace gk::arith {

struct PrimePower {
    Int prime;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of a positive integer; primes strictly increasing.
class Factorization {
public:
    Factorization() : value_(1) {}

    static Factorization from_factors(std::vector<PrimePower> factors) {
        std::sort(factors.begin(), factors.end(),
                  [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
        std::vector<PrimePower> merged;
        for (auto& f : factors) {
            if (f.exponent == 0) continue;
            if (!merged.empty() && merged.back().prime == f.prime)
                merged.back().exponent += f.exponent;
            else
                merged.push_back(f);
        }
        Factorization out;
        out.factors_ = std::move(merged);
        out.value_ = 1;
        for (const auto& f : out.factors_) out.value_ *= ipow(f.prime, f.exponent);
        return out;
    }

    const Int& value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    std::vector<Int> primes() const {
        std::vector<Int> out;
        out.reserve(factors_.size());
        for (const auto& f : factors_) out.push_back(f.prime);
        return out;
    }

    unsigned exponent_of(const Int& p) const {
        for (const auto& f : factors_)
            if (f.prime == p) return f.exponent;
        return 0;
    }

    /// "2 * 17 * 193", "2^5 * 3"; "1" for the empty product.
    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const auto& f : factors_) {
            if (!s.empty()) s += " * ";
            s += f.prime.get_str();
            if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
        }
        return s;
    }

    bool operator==(const Factorization& o) const { return factors_ == o.factors_; }

private:
    Int value_;
    std::vector<PrimePower> factors_;
};

/// Raised when Pollard rho exceeds its time budget. `partial` holds the
/// primes found so far; `cofactor` is the unfactored composite remainder.
struct FactorTimeout : std::runtime_error {
    FactorTimeout(Int n, Factorization found, Int rest)
        : std::runtime_error("factorization of " + n.get_str() + " timed out on cofactor " +
                             rest.get_str()),
          input(std::move(n)),
          partial(std::move(found)),
          cofactor(std::move(rest)) {}
    Int input;
    Factorization partial;
    Int cofactor;
};

/// Thread-safe memo of completed factorizations, optionally persisted as JSON.
class FactorCache {
public:
    std::optional<Factorization> lookup(const Int& n) const {
        std::shared_lock lock(mutex_);
        if (!enabled_) return std::nullopt;
        auto it = table_.find(n);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const Int& n, const Factorization& f) {
        std::unique_lock lock(mutex_);
        if (enabled_) table_.emplace(n, f);
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    void set_enabled(bool on) {
        std::unique_lock lock(mutex_);
        enabled_ = on;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    nlohmann::json to_json() const {
        std::shared_lock lock(mutex_);
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [n, f] : table_) {
            nlohmann::json fs = nlohmann::json::array();
            for (const auto& pp : f.factors()) fs.push_back({pp.prime.get_str(), pp.exponent});
            j[n.get_str()] = fs;
        }
        return j;
    }

    // Entries are re-verified by multiplication and primality before use.
    std::size_t merge_json(const nlohmann::json& j) {
        std::size_t added = 0;
        for (auto it = j.begin(); it != j.end(); ++it) {
            Int n = parse_int(it.key());
            std::vector<PrimePower> fs;
            for (const auto& e : it.value())
                fs.push_back({parse_int(e.at(0).get<std::string>()), e.at(1).get<unsigned>()});
            auto f = Factorization::from_factors(std::move(fs));
            if (f.value() != n) continue;
            bool ok = std::all_of(f.factors().begin(), f.factors().end(),
                                  [](const PrimePower& pp) { return is_prime(pp.prime); });
            if (!ok) continue;
            insert(n, f);
            ++added;
        }
        return added;
    }

    bool load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return false;
        merge_json(nlohmann::json::parse(in));
        return true;
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw InvalidArgument("cannot write factor cache: " + path);
        out << to_json().dump() << '\n';
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Int, Factorization> table_;
    bool enabled_ = true;
};

inline FactorCache& factor_cache() {
    static FactorCache cache;
    return cache;
}

struct FactorOptions {
    std::optional<std::chrono::milliseconds> timeout;
    bool use_cache = true;
};

namespace detail {

inline constexpr std::uint32_t kTrialBound = 1000000;

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialBound, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < kTrialBound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

using Clock = std::chrono::steady_clock;

// Brent's cycle variant of Pollard rho on odd composite n. Returns a proper
// factor or 0 if the polynomial x^2 + c degenerated.
inline Int brent_rho(const Int& n, unsigned long c, const std::optional<Clock::time_point>& deadline) {
    const unsigned long m = 128;
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    auto f = [&](const Int& v) {
        Int w = v * v + c;
        mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
        return w;
    };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        do {
            if (deadline && Clock::now() > *deadline) return -1;
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                Int diff = x - y;
                q = q * abs(diff) % n;
            }
            g = gcd(q, n);
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(Int(x - ys)), n);
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

inline void split(const Int& n, std::vector<PrimePower>& out, std::vector<Int>& stuck,
                  const std::optional<Clock::time_point>& deadline) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back({n, 1});
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::vector<PrimePower> sub;
                split(root, sub, stuck, deadline);
                for (auto& pp : sub) out.push_back({pp.prime, pp.exponent * static_cast<unsigned>(k)});
                return;
            }
        }
    }
    for (unsigned long c = 1;; ++c) {
        Int d = brent_rho(n, c, deadline);
        if (d < 0) {
            stuck.push_back(n);
            return;
        }
        if (d > 1) {
            split(d, out, stuck, deadline);
            split(n / d, out, stuck, deadline);
            return;
        }
    }
}

}  // namespace detail

/// Exact factorization: trial division below 10^6, then Brent-Pollard rho
/// with fixed polynomial constants so results are reproducible.
inline Factorization factorize(const Int& n, const FactorOptions& opts = {}) {
    if (n < 1) throw InvalidArgument("factorize requires n >= 1, got " + n.get_str());
    if (opts.use_cache)
        if (auto hit = factor_cache().lookup(n)) return *hit;

    std::vector<PrimePower> found;
    Int m = n;
    for (std::uint32_t p : detail::small_primes()) {
        if (Int(p) * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        found.push_back({Int(p), e});
    }
    std::vector<Int> stuck;
    if (m > 1) {
        Int bound(detail::kTrialBound);
        if (m < bound * bound) {
            found.push_back({m, 1});
        } else {
            std::optional<detail::Clock::time_point> deadline;
            if (opts.timeout) deadline = detail::Clock::now() + *opts.timeout;
            detail::split(m, found, stuck, deadline);
        }
    }
    auto result = Factorization::from_factors(std::move(found));
    if (!stuck.empty()) {
        Int rest = 1;
        for (const auto& s : stuck) rest *= s;
        throw FactorTimeout(n, result, rest);
    }
    if (result.value() != n) throw InvariantViolation("factorization product mismatch for " + n.get_str());
    if (opts.use_cache) factor_cache().insert(n, result);
    return result;
}

}  // namespace gk::arith
