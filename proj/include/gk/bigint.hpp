#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "gk/errors.hpp"

namespace gk {

using Int = mpz_class;
using Rational = mpq_class;

inline Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int ipow(long base, unsigned long exp) { return ipow(Int(base), exp); }

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

// Accepts an optional sign followed by decimal digits.
inline Int parse_int(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidArgument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InvalidArgument("malformed integer literal: " + s);
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw InvalidArgument("malformed integer literal: " + s);
    if (s[0] == '+') s.erase(0, 1);
    return Int(s, 10);
}

inline bool fits_u64(const Int& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const Int& n) {
    if (!fits_u64(n)) throw InvalidArgument("value does not fit in 64 bits: " + n.get_str());
    std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
    if constexpr (sizeof(mp_limb_t) == 8) return lo;
    std::uint64_t hi = mpz_size(n.get_mpz_t()) > 1 ? mpz_getlimbn(n.get_mpz_t(), 1) : 0;
    return (hi << 32) | lo;
}

inline Int from_u64(std::uint64_t v) {
    Int r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw InvalidArgument("value does not fit in a machine long: " + n.get_str());
    return n.get_si();
}

inline Int abs(const Int& n) { return n < 0 ? Int(-n) : n; }

}  // namespace gk
