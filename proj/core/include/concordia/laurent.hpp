#pragma once

#include <map>
#include <string>
#include <vector>

#include "concordia/numeric.hpp"

namespace concordia {

// Integer Laurent polynomial, dense between its lowest and highest nonzero exponent.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    explicit LaurentPoly(const std::map<int, BigInt>& coeffs);
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exponent, BigInt coeff);

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    const BigInt& coeff(int exponent) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    // t -> t^p substitution, p >= 1.
    LaurentPoly compose_power(int p) const;
    BigInt value_at_one() const;
    bool is_symmetric() const;  // coeff(e) == coeff(-e) for all e

    // Exponents carrying nonzero coefficients, descending.
    std::vector<int> support_descending() const;
    std::string str() const;  // e.g. "t^3 - t^2 + 1 - t^-2 + t^-3"

private:
    void trim();
    int min_exp_ = 0;
    std::vector<BigInt> coeffs_;  // coeffs_[k] multiplies t^(min_exp_+k); ends nonzero
};

// Symmetrized Alexander polynomial of the (p,q) torus knot, expanded by polynomial
// long division of (t^{pq}-1)(t-1) by (t^p-1)(t^q-1). Requires p,q >= 1, gcd(p,q)=1.
// Degenerate parameters (p == 1 or q == 1) give the constant 1.
LaurentPoly torus_alexander(int p, int q);

// Alexander polynomial of the (p,q) cable with companion polynomial `companion`:
// companion(t^p) * torus_alexander(p,q). Requires p >= 1, gcd(p,|q|) = 1.
LaurentPoly cable_alexander(const LaurentPoly& companion, int p, int q);

// Torsion coefficient t_k = sum_{j>=1} j*a_{k+j} where a_e = coeff of t^e.
// Zero for k at or beyond the top exponent. Requires k >= 0 and a symmetric input.
BigInt torsion_coeff(const LaurentPoly& alexander, int k);

}  // namespace concordia
