#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "concordia/laurent.hpp"

namespace concordia {

// A normalized atom: a positive torus knot T(p,q) with 2 <= p < q, or an iterated
// cable C(p,q;A) with p >= 2 and gcd(p,q) = 1 (q may be negative; such cables are
// representable but never certified). The unknot and mirrors never appear as atoms:
// the unknot normalizes away and mirrors live in the sign of a term's coefficient.
class Atom {
public:
    static Atom torus(int p, int q);                 // requires 2 <= p < q, gcd = 1
    static Atom cable(int p, int q, const Atom& c);  // requires p >= 2, gcd(p,|q|) = 1

    bool is_torus() const { return !companion_; }
    int p() const { return p_; }
    int q() const { return q_; }
    const Atom& companion() const { return *companion_; }

    std::string str() const;
    bool operator==(const Atom& o) const;
    // Total order used for canonical term ordering (string order of the rendering).
    bool operator<(const Atom& o) const { return str() < o.str(); }

private:
    Atom(int p, int q, std::shared_ptr<const Atom> companion)
        : p_(p), q_(q), companion_(std::move(companion)) {}
    int p_, q_;
    std::shared_ptr<const Atom> companion_;  // null for torus atoms
};

// Result of normalizing a raw atom: a sign and an optional atom; the unknot
// normalizes to an absent atom (its class is the identity).
struct SignedAtom {
    int sign = 1;  // +1 or -1
    std::optional<Atom> atom;
};

SignedAtom normalize_torus(int p, int q);
SignedAtom normalize_cable(int p, int q, const SignedAtom& companion);

// A formal connected sum of atoms with integer multiplicities; negative
// multiplicities denote mirrors. Always held in normal form: multiplicities are
// nonzero and terms are sorted by atom. The empty sum is the unknot class.
class KnotExpr {
public:
    KnotExpr() = default;
    static KnotExpr atom(const Atom& a, long long multiplicity = 1);

    const std::map<Atom, long long>& terms() const { return terms_; }
    bool is_identity() const { return terms_.empty(); }

    KnotExpr operator+(const KnotExpr& o) const;
    KnotExpr operator-() const;
    KnotExpr operator-(const KnotExpr& o) const { return *this + (-o); }
    bool operator==(const KnotExpr& o) const = default;
    bool operator<(const KnotExpr& o) const { return str() < o.str(); }

    std::string str() const;

private:
    std::map<Atom, long long> terms_;
};

// Parses the DSL:
//   expr := term (("+"|"-") term)*
//   term := [INT "*"] atom
//   atom := "U" | "T(" INT "," INT ")" | "C(" INT "," INT ";" atom ")"
//         | "-" atom | "(" expr ")"
// Whitespace is insignificant. Throws ParseError with the offending position.
KnotExpr parse_expr(const std::string& input);

// Certificate that an atom is a positive L-space knot: its Alexander polynomial in
// staircase form (coefficients +-1, alternating, symmetric, value 1 at t=1) and its
// Seifert genus, which such knots realize as both the polynomial degree and the
// smooth 4-genus.
struct LSpaceCertificate {
    Atom atom;
    int genus;
    LaurentPoly alexander;
};

// Certifies an atom or throws CertificationError. Torus atoms always certify; a
// cable C(p,q;A) certifies when A does and q >= p*(2*genus(A) - 1).
LSpaceCertificate certify(const Atom& a);
bool is_certified(const Atom& a);

// Seifert genus of a certified atom: (p-1)(q-1)/2 for T(p,q), and
// p*g(companion) + (p-1)(q-1)/2 for a certified cable.
int genus(const Atom& a);

// Sum of |multiplicity| * genus over terms; an upper bound for the smooth 4-genus
// of the expression and the truncation scale used by the engine. Requires every
// atom to certify.
long long genus_bound(const KnotExpr& e);

}  // namespace concordia
