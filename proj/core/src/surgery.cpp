#include "concordia/surgery.hpp"

#include <numeric>
#include <stdexcept>

namespace concordia {

namespace {

void check_spin_c(long long p, long long q, long long i) {
    if (p < 1 || q < 1) throw std::invalid_argument("surgery slope requires p, q >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("surgery slope requires gcd(p,q) = 1");
    if (i < 0 || i >= p) throw std::out_of_range("spin-c index must satisfy 0 <= i < p");
}

Rational rat(long long num) { return Rational(BigInt(num)); }

}  // namespace

Rational f_p(long long p, long long i) {
    check_spin_c(p, 1, i);
    BigInt s = BigInt(p) - 2 * BigInt(i);
    return Rational(s * s - p, 4 * BigInt(p));
}

Rational d_unknot_rational(long long p, long long q, long long i) {
    check_spin_c(p, q, i);
    Rational total(0);
    int sign = 1;
    // Unrolled Euclidean descent of R(p,q,i); ends at the R(1,0,0) = 0 base case.
    while (q != 0) {
        BigInt s = 2 * BigInt(i) + 1 - p - q;
        total += sign * Rational(s * s - BigInt(p) * q, 4 * BigInt(p) * q);
        long long np = q, nq = p % q, ni = i % q;
        p = np;
        q = nq;
        i = ni;
        sign = -sign;
    }
    return total;
}

Rational d_surgery(const VSequence& v, long long p, long long q, long long i) {
    check_spin_c(p, q, i);
    long long m = std::min(i / q, (p + q - 1 - i) / q);
    return d_unknot_rational(p, q, i) - 2 * rat(v.v(static_cast<int>(m)));
}

Rational d_surgery(const KnotExpr& e, long long p, long long q, long long i) {
    check_spin_c(p, q, i);
    if (e.is_identity()) return d_unknot_rational(p, q, i);
    return d_surgery(v_sequence_of(e), p, q, i);
}

std::set<long long> parity_classes(long long n) {
    if (n < 1) throw std::invalid_argument("parity_classes requires n >= 1");
    std::set<long long> out;
    for (long long i = 0; i < n * n; ++i)
        if (is_even_integer(f_p(n * n, i))) out.insert(i);
    return out;
}

Rational fn2_form1(long long n, long long i) {
    Rational a = Rational(BigInt(n) - 1, 2) - Rational(BigInt(i), BigInt(n));
    return a * (a + 1);
}

Rational fn2_form2(long long n, long long i) {
    Rational u{BigInt(i), BigInt(n)};
    return Rational((BigInt(n) + 1) * (BigInt(n) - 1), 4) - rat(i) + u * u;
}

Rational fn2_form3(long long n, long long i) {
    Rational x(2 * BigInt(i) - n, 2 * BigInt(n));
    Rational b = Rational(BigInt(n), 2) - x;
    return b * (b - 1);
}

Rational fn2_form4(long long n, long long i) {
    Rational x(2 * BigInt(i) - n, 2 * BigInt(n));
    return Rational(BigInt(n) * n, 4) - rat(i) + x + x * x;
}

}  // namespace concordia
