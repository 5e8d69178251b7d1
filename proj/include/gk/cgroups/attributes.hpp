#pragma once

#include <set>

#include "gk/arith/cyclotomic.hpp"
#include "gk/arith/numtheory.hpp"
#include "gk/cgroups/group_spec.hpp"

namespace gk::cgroups {

/// Whether a prime r != p with e(r, q) = e divides |L|.
inline bool degree_in_pi(const GroupSpec& L, long e) {
    const long n = L.prk();
    switch (L.family()) {
        case Family::Linear: return e <= n;
        case Family::Unitary: return arith::nu(e) <= n;
        case Family::Symplectic:
        case Family::OrthogonalOdd: return arith::eta(e) <= n;
        case Family::OrthogonalPlus: return arith::eta(e) <= n - 1 || n % e == 0;
        case Family::OrthogonalMinus: return arith::eta(e) <= n - 1 || ((2 * n) % e == 0 && n % e != 0);
    }
    return false;
}

inline long e_of(const Int& r, const GroupSpec& L) { return to_long(arith::mult_order(r, L.q())); }

inline bool pi_membership(const GroupSpec& L, const Int& r) {
    if (!arith::is_prime(r)) throw InvalidArgument("pi_membership requires a prime, got " + r.get_str());
    if (r == L.p()) return true;
    return degree_in_pi(L, e_of(r, L));
}

/// Degrees i <= 2 prk with R_i(q) nonempty and admitted by the family rule.
struct DegreeProfile {
    std::set<long> degrees;
    bool has_characteristic = true;
};

inline DegreeProfile degree_profile(const GroupSpec& L) {
    DegreeProfile out;
    for (long i = 1; i <= 2 * L.prk(); ++i) {
        if (!degree_in_pi(L, i)) continue;
        // Zsigmondy exceptions with positive base.
        if ((L.q() == 2 && (i == 1 || i == 6)) || (L.q() == 3 && i == 1)) continue;
        out.degrees.insert(i);
    }
    return out;
}

/// Degree of r seen through the family: e for L, nu(e) for U, eta(e) otherwise.
inline long phi_from_degree(const GroupSpec& L, long e) {
    switch (L.family()) {
        case Family::Linear: return e;
        case Family::Unitary: return arith::nu(e);
        default: return arith::eta(e);
    }
}

inline long phi_rL(const GroupSpec& L, const Int& r) {
    if (r == L.p()) throw InvalidArgument("phi(r, L) is undefined for the characteristic");
    if (!pi_membership(L, r)) throw InvalidArgument(r.get_str() + " does not divide |" + L.name() + "|");
    return phi_from_degree(L, e_of(r, L));
}

/// q^(l+1) / (q - 1), l the Lie rank: an upper bound for element orders.
inline Rational max_order_bound(const GroupSpec& L) {
    Rational out(ipow(L.q(), static_cast<unsigned long>(L.lie_rank() + 1)), L.q() - 1);
    out.canonicalize();
    return out;
}

}  // namespace gk::cgroups
