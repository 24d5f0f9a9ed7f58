#pragma once

#include <optional>
#include <string>

#include "concordia/fulltwist.hpp"
#include "concordia/knotexpr.hpp"

namespace concordia {

// Lower bound for nu+ of the (p,q) cable given nu+ of the companion:
// max(0, p*nuK + (p-1)(q-1)/2). Requires p >= 1, gcd(p,q) = 1; q may be negative.
long long cable_nu_lower(long long p, long long q, long long nuK);

// True when q >= (2*nuK - 1)*p - 1; in that regime the cable's nu+ equals
// p*nuK + (p-1)(q-1)/2 exactly. Requires p, q >= 1 coprime.
bool wu_regime(long long p, long long q, long long nuK);

// Exact 4-genus of the (p,q >= 1) cable, valid when the companion satisfies
// nu+ = g_4 (a caller-supplied hypothesis): p*g4K + (p-1)(q-1)/2.
long long g4_cable(long long p, long long q, long long g4K);

// Slice-surface upper bound g_4(cable) <= p*g4K + (p-1)(q-1)/2 for p, q >= 1.
long long genus_upper(long long p, long long q, long long g4K);

// nu+ of the (p,q) cable of a single certified atom (or the unknot): engine-exact
// when the cable itself certifies, the closed form in the Wu regime, otherwise the
// interval [cable_nu_lower, p*g + (p-1)(q-1)/2] (upper endpoint only for q > 0).
struct CableNu {
    std::optional<long long> exact;
    NuInterval bounds;
    std::string route;  // "engine", "wu", or "bounds"
};

CableNu cable_nu(const KnotExpr& companion, long long p, long long q);

}  // namespace concordia
