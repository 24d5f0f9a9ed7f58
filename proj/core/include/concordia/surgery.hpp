#pragma once

#include <set>

#include "concordia/engine.hpp"
#include "concordia/knotexpr.hpp"
#include "concordia/numeric.hpp"

namespace concordia {

// d-invariant of p-surgery on the unknot in spin-c class i:
// f_p(i) = (-p + (p-2i)^2) / (4p), exact. Requires p >= 1 and 0 <= i < p.
Rational f_p(long long p, long long i);

// d-invariant of p/q-surgery on the unknot, by the lens-space recursion
//   R(1,0,0) = 0,
//   R(p,q,i) = ((2i+1-p-q)^2 - pq) / (4pq) - R(q, p mod q, i mod q),
// which reduces to f_p(i) identically at q = 1. Requires p,q >= 1 coprime,
// 0 <= i < p.
Rational d_unknot_rational(long long p, long long q, long long i);

// d-invariant of p/q-surgery on the knot: d(unknot surgery) - 2*V_m with
// m = min(floor(i/q), floor((p+q-1-i)/q)); at q = 1 the index is min(i, p-i).
Rational d_surgery(const KnotExpr& e, long long p, long long q, long long i);
Rational d_surgery(const VSequence& v, long long p, long long q, long long i);

// { i in [0, n^2) : f_{n^2}(i) is an even integer }, by direct evaluation.
// Closed form (tested, not assumed): multiples of n for odd n, the class
// n/2 mod n for even n; always exactly n elements.
std::set<long long> parity_classes(long long n);

// Four algebraic forms of f_{n^2}(i), used by the identity suite. Forms 1-2
// are stated for odd n on i in n*Z, forms 3-4 for even n on i = n/2 mod n;
// all four are checked against f_{n^2} by exact arithmetic.
Rational fn2_form1(long long n, long long i);  // ((n-1)/2 - i/n)((n-1)/2 - i/n + 1)
Rational fn2_form2(long long n, long long i);  // (n+1)(n-1)/4 - i + (i/n)^2
Rational fn2_form3(long long n, long long i);  // (n/2 - x)(n/2 - x - 1), x = (i-n/2)/n
Rational fn2_form4(long long n, long long i);  // (n/2)^2 - i + x + x^2

}  // namespace concordia
