#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>
#include <vector>

#include "concordia/knotexpr.hpp"
#include "concordia/laurent.hpp"

using namespace concordia;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, int>> cs) {
    std::map<int, BigInt> m;
    for (auto [e, c] : cs) m[e] = c;
    return LaurentPoly(m);
}

// Alternating-sign staircase check: descending support with coefficients
// +1, -1, +1, ...
bool staircase_form(const LaurentPoly& f) {
    auto sup = f.support_descending();
    if (sup.size() % 2 == 0) return false;
    for (std::size_t s = 0; s < sup.size(); ++s)
        if (f.coeff(sup[s]) != (s % 2 == 0 ? 1 : -1)) return false;
    return true;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly z;
    CHECK(z.is_zero());
    CHECK(z.coeff(0) == 0);

    auto f = poly({{1, 1}, {0, -1}, {-1, 1}});
    CHECK(f.min_exp() == -1);
    CHECK(f.max_exp() == 1);
    CHECK(f.coeff(0) == -1);
    CHECK(f.coeff(5) == 0);
    CHECK(f.value_at_one() == 1);
    CHECK(f.is_symmetric());

    CHECK(f + z == f);
    CHECK(f - f == LaurentPoly());
    CHECK(f * LaurentPoly::one() == f);
    CHECK(LaurentPoly::monomial(2, 3) * LaurentPoly::monomial(-2, 5) ==
          LaurentPoly::monomial(0, 15));

    // cancellation in the middle must re-trim the ends
    auto g = poly({{2, 1}, {0, 1}}) - poly({{2, 1}, {-1, 2}});
    CHECK(g.max_exp() == 0);
    CHECK(g.min_exp() == -1);
}

TEST_CASE("laurent compose_power and rendering") {
    auto f = poly({{1, 1}, {0, -1}, {-1, 1}});
    auto f2 = f.compose_power(2);
    CHECK(f2 == poly({{2, 1}, {0, -1}, {-2, 1}}));
    CHECK(f.compose_power(1) == f);
    CHECK(f.str() == "t - 1 + t^-1");
    CHECK(LaurentPoly().str() == "0");
    CHECK(poly({{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}}).str() ==
          "t^3 - t^2 + 1 - t^-2 + t^-3");
}

TEST_CASE("torus knot alexander polynomials") {
    CHECK(torus_alexander(1, 5) == LaurentPoly::one());
    CHECK(torus_alexander(2, 3) == poly({{1, 1}, {0, -1}, {-1, 1}}));
    CHECK(torus_alexander(3, 4) ==
          poly({{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}}));
    CHECK(torus_alexander(2, 5) == poly({{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}));
    CHECK(torus_alexander(3, 2) == torus_alexander(2, 3));
}

TEST_CASE("torus alexander properties over the small coprime grid") {
    for (int p = 2; p <= 12; ++p)
        for (int q = p + 1; q <= 12; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CAPTURE(p);
            CAPTURE(q);
            auto f = torus_alexander(p, q);
            CHECK(f.is_symmetric());
            CHECK(f.value_at_one() == 1);
            CHECK(f.max_exp() == (p - 1) * (q - 1) / 2);
            CHECK(staircase_form(f));
        }
}

TEST_CASE("cable alexander polynomial") {
    auto t23 = torus_alexander(2, 3);
    CHECK(cable_alexander(LaurentPoly::one(), 2, 5) == torus_alexander(2, 5));
    CHECK(cable_alexander(t23, 1, 0) == t23);

    auto c = cable_alexander(t23, 2, 5);
    CHECK(c == t23.compose_power(2) * torus_alexander(2, 5));
    CHECK(c == poly({{4, 1}, {3, -1}, {0, 1}, {-3, -1}, {-4, 1}}));
    CHECK(c.is_symmetric());
    CHECK(c.max_exp() == 4);
    CHECK(c.value_at_one() == 1);
}

TEST_CASE("torsion coefficients") {
    auto t23 = torus_alexander(2, 3);
    auto t34 = torus_alexander(3, 4);
    CHECK(torsion_coeff(LaurentPoly::one(), 0) == 0);
    CHECK(torsion_coeff(t23, 0) == 1);
    CHECK(torsion_coeff(t23, 1) == 0);
    CHECK(torsion_coeff(t34, 0) == 1);
    CHECK(torsion_coeff(t34, 1) == 1);  // 1*a_2 + 2*a_3 = -1 + 2
    CHECK(torsion_coeff(t34, 2) == 1);
    CHECK(torsion_coeff(t34, 3) == 0);
    for (int k = 3; k < 10; ++k) CHECK(torsion_coeff(t34, k) == 0);
}

TEST_CASE("torsion coefficients across the certified grid") {
    std::vector<LaurentPoly> family;
    for (int p = 2; p <= 7; ++p)
        for (int q = p + 1; q <= 13; ++q)
            if (std::gcd(p, q) == 1) family.push_back(torus_alexander(p, q));
    family.push_back(cable_alexander(torus_alexander(2, 3), 2, 5));
    family.push_back(cable_alexander(torus_alexander(2, 5), 3, 16));

    for (const auto& f : family) {
        int deg = f.max_exp();
        for (int k = 0; k <= deg + 2; ++k) {
            CHECK(torsion_coeff(f, k) >= 0);
            if (k >= deg) CHECK(torsion_coeff(f, k) == 0);
        }
        // second difference of t_k recovers the coefficients: for k >= 1,
        // t_{k-1} - 2 t_k + t_{k+1} = a_k
        for (int k = 1; k <= deg + 1; ++k)
            CHECK(torsion_coeff(f, k - 1) - 2 * torsion_coeff(f, k) +
                      torsion_coeff(f, k + 1) ==
                  f.coeff(k));
    }
}
