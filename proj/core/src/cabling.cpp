#include "concordia/cabling.hpp"

#include <numeric>
#include <stdexcept>

#include "concordia/errors.hpp"

namespace concordia {

namespace {

long long twist_term(long long p, long long q) { return (p - 1) * (q - 1) / 2; }

void check_cable(long long p, long long q) {
    if (p < 1) throw std::invalid_argument("cable requires p >= 1");
    if (std::gcd(p, q < 0 ? -q : q) != 1)
        throw std::invalid_argument("cable requires gcd(p,q) = 1");
    if (p > 1000000 || q > 1000000 || q < -1000000)
        throw std::invalid_argument("cable parameter out of range");
}

}  // namespace

long long cable_nu_lower(long long p, long long q, long long nuK) {
    check_cable(p, q);
    return std::max(0ll, p * nuK + twist_term(p, q));
}

bool wu_regime(long long p, long long q, long long nuK) {
    check_cable(p, q);
    if (q < 1) throw std::invalid_argument("the equality regime needs q >= 1");
    return q >= (2 * nuK - 1) * p - 1;
}

long long g4_cable(long long p, long long q, long long g4K) {
    check_cable(p, q);
    if (q < 1) throw std::invalid_argument("exact cable 4-genus needs q >= 1");
    return p * g4K + twist_term(p, q);
}

long long genus_upper(long long p, long long q, long long g4K) { return g4_cable(p, q, g4K); }

CableNu cable_nu(const KnotExpr& companion, long long p, long long q) {
    check_cable(p, q);
    SignedAtom inner{1, std::nullopt};
    if (!companion.is_identity()) {
        const auto& terms = companion.terms();
        if (terms.size() != 1 || terms.begin()->second != 1)
            throw std::invalid_argument("cable companion must be a single atom or the unknot");
        inner.atom = terms.begin()->first;
        certify(*inner.atom);
    }
    long long g = inner.atom ? genus(*inner.atom) : 0;
    long long nuK = g;  // nu+ = genus for certified atoms

    CableNu out;
    out.bounds.lo = cable_nu_lower(p, q, nuK);
    if (q > 0) out.bounds.hi = p * g + twist_term(p, q);

    SignedAtom cab = normalize_cable(static_cast<int>(p), static_cast<int>(q), inner);
    if (!cab.atom) {
        out.exact = 0;
        out.route = "engine";
    } else if (cab.sign > 0 && is_certified(*cab.atom)) {
        out.exact = nu_plus(KnotExpr::atom(*cab.atom));
        out.route = "engine";
    } else if (q > 0 && wu_regime(p, q, nuK)) {
        out.exact = p * nuK + twist_term(p, q);
        out.route = "wu";
    } else {
        out.route = "bounds";
    }
    return out;
}

}  // namespace concordia
