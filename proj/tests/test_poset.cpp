#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "concordia/errors.hpp"
#include "concordia/knotexpr.hpp"
#include "concordia/poset.hpp"

using namespace concordia;

namespace {

const Atom kT23 = Atom::torus(2, 3);
const Atom kT25 = Atom::torus(2, 5);

// Index of an expression among the universe elements; fails the test if absent.
std::size_t index_of(const OrderUniverse& u, const KnotExpr& e) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u.element(i) == e) return i;
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("leq is the vanishing of V0 on the difference") {
    auto t23 = parse_expr("T(2,3)");
    auto t34 = parse_expr("T(3,4)");
    CHECK(leq(t23, t23));
    CHECK(leq(KnotExpr(), t23));
    CHECK_FALSE(leq(t23, KnotExpr()));
    CHECK(leq(-t23, KnotExpr()));
    CHECK(leq(t23, t34));
}

TEST_CASE("single generator universe is a chain") {
    auto u = build_universe({kT23}, 1);
    REQUIRE(u.size() == 3);
    CHECK(u.class_count() == 3);

    auto neg = index_of(u, parse_expr("-T(2,3)"));
    auto zero = index_of(u, KnotExpr());
    auto pos = index_of(u, parse_expr("T(2,3)"));

    CHECK(u.leq(neg, zero));
    CHECK(u.leq(zero, pos));
    CHECK(u.leq(neg, pos));
    CHECK_FALSE(u.leq(pos, zero));
    CHECK_FALSE(u.leq(zero, neg));

    auto hasse = u.hasse_edges();
    CHECK(hasse.size() == 2);  // transitive reduction of the 3-chain
}

TEST_CASE("empty generator list gives the one-class universe") {
    auto u = build_universe({}, 3);
    REQUIRE(u.size() == 1);
    CHECK(u.element(0).is_identity());
    CHECK(u.class_count() == 1);
    CHECK(u.hasse_edges().empty());
}

TEST_CASE("two-generator grid") {
    auto u = build_universe({kT23, kT25}, 1);
    CHECK(u.size() == 9);

    // normalization: every element is a distinct formal sum, so the identity
    // appears exactly once
    std::size_t identities = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u.element(i).is_identity()) ++identities;
    CHECK(identities == 1);

    // T(2,5) and 2*T(2,3) are nu+-equivalent (V0 of both differences vanishes),
    // which merges two pairs of elements; the other seven stand alone
    CHECK(u.class_count() == 7);
    CHECK(leq(parse_expr("T(2,5)"), parse_expr("2*T(2,3)")));
    CHECK(leq(parse_expr("2*T(2,3)"), parse_expr("T(2,5)")));
    CHECK(u.class_of(index_of(u, parse_expr("-T(2,3)"))) ==
          u.class_of(index_of(u, parse_expr("T(2,3)-T(2,5)"))));

    // elements appear in canonical string order
    for (std::size_t i = 1; i < u.size(); ++i)
        CHECK(u.element(i - 1).str() < u.element(i).str());
}

TEST_CASE("universe relation is a preorder with antisymmetric classes") {
    auto u = build_universe({kT23, kT25}, 1);
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(u.leq(i, i));
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (u.leq(i, j) && u.leq(j, i)) CHECK(u.class_of(i) == u.class_of(j));
            for (std::size_t k = 0; k < u.size(); ++k)
                if (u.leq(i, j) && u.leq(j, k)) CHECK(u.leq(i, k));
        }
    }
}

TEST_CASE("pair budget guards construction") {
    CHECK_THROWS_AS(build_universe({kT23, kT25}, 2, 10), BudgetError);
}

TEST_CASE("order respects translation and negation") {
    auto u = build_universe({kT23, kT25}, 1);
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const auto& x = u.element(rng() % u.size());
        const auto& y = u.element(rng() % u.size());
        if (!leq(x, y)) continue;
        const auto& z = u.element(rng() % u.size());
        CHECK(leq(x + z, y + z));
        CHECK(leq(-y, -x));
    }
}

TEST_CASE("monotone invariants report no violations") {
    auto u = build_universe({kT23}, 1);

    auto tau = monotone_check(u, "tau", [](const KnotExpr& e) {
        return Rational(BigInt(tau_additive(e)));
    });
    CHECK(tau.pairs_checked > 0);
    CHECK(tau.violations.empty());

    auto nu = monotone_check(u, "nu+", [](const KnotExpr& e) {
        return Rational(BigInt(cached_nu_plus(e)));
    });
    CHECK(nu.violations.empty());

    auto v0 = monotone_check(u, "V0", [](const KnotExpr& e) {
        return Rational(BigInt(cached_v(e, 0)));
    });
    CHECK(v0.violations.empty());

    // an artificial non-monotone functional is caught
    auto bogus = monotone_check(u, "minus-tau", [](const KnotExpr& e) {
        return Rational(BigInt(-tau_additive(e)));
    });
    CHECK_FALSE(bogus.violations.empty());
}

TEST_CASE("twist rule edges") {
    CHECK(fulltwist_rule_edge(0, false) == EdgeDecision::kLeq);
    CHECK(fulltwist_rule_edge(1, true) == EdgeDecision::kLeq);
    CHECK(fulltwist_rule_edge(2, true) == EdgeDecision::kUndetermined);
    CHECK(fulltwist_rule_edge(3, true) == EdgeDecision::kGreater);
    CHECK(fulltwist_rule_edge(3, false) == EdgeDecision::kNotLeq);

    CHECK(satellite_rule_edge(0, false) == EdgeDecision::kGeq);
    CHECK(satellite_rule_edge(1, true) == EdgeDecision::kGeq);
    CHECK(satellite_rule_edge(2, true) == EdgeDecision::kUndetermined);
    CHECK(satellite_rule_edge(3, true) == EdgeDecision::kLess);
    CHECK(satellite_rule_edge(4, false) == EdgeDecision::kUndetermined);
}

TEST_CASE("cable pattern application") {
    CHECK(cable_pattern_apply(3, 1, 1, KnotExpr()) == parse_expr("T(3,4)"));
    CHECK(cable_pattern_apply(3, 1, 0, KnotExpr()).is_identity());  // T(3,1) unknots
    CHECK(cable_pattern_apply(2, 5, 0, parse_expr("T(2,3)")) == parse_expr("C(2,5;T(2,3))"));
    CHECK(cable_pattern_apply(2, 5, 2, parse_expr("T(2,3)")) == parse_expr("C(2,9;T(2,3))"));
    CHECK_THROWS_AS(cable_pattern_apply(2, 5, 0, parse_expr("T(2,3)+T(2,5)")),
                    std::invalid_argument);
}

TEST_CASE("rule edges attach to classes and never fight the computed order") {
    auto u = build_universe({Atom::torus(3, 4)}, 1);
    auto unknot = KnotExpr();
    auto t34 = parse_expr("T(3,4)");

    // winding-3 satellite comparison of the unknot: T(3,1) < T(3,4)
    CHECK(u.add_rule_edge(unknot, t34, satellite_rule_edge(3, true),
                          Provenance::kRuleSatellite, "w=3"));
    REQUIRE(u.rule_edges().size() == 1);
    const auto& e = u.rule_edges()[0];
    CHECK(e.strict);
    CHECK(u.class_rep(e.from).is_identity());
    CHECK(u.class_rep(e.to) == t34);
    CHECK(to_string(e.prov) == "rule-satellite");

    // the engine agrees with the asserted direction
    CHECK(leq(unknot, t34));
    CHECK(u.class_leq(e.from, e.to));

    // undetermined decisions attach nothing
    CHECK_FALSE(u.add_rule_edge(unknot, t34, fulltwist_rule_edge(2, true),
                                Provenance::kRuleFullTwist, "n=2"));
    CHECK_FALSE(u.add_rule_edge(unknot, t34, fulltwist_rule_edge(3, false),
                                Provenance::kRuleFullTwist, "n=3"));
    CHECK(u.rule_edges().size() == 1);
}

TEST_CASE("dot rendering is deterministic and reduced") {
    auto chain = build_universe({kT23}, 1);
    auto dot = hasse_dot(chain);
    CHECK(dot == hasse_dot(build_universe({kT23}, 1)));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"-T(2,3)\" -> \"U\"") != std::string::npos);
    CHECK(dot.find("\"U\" -> \"T(2,3)\"") != std::string::npos);
    // the composite -T -> T edge is transitively reduced away
    CHECK(dot.find("\"-T(2,3)\" -> \"T(2,3)\"") == std::string::npos);

    auto single = hasse_dot(build_universe({}, 1));
    CHECK(single.find("\"U\"") != std::string::npos);
    CHECK(single.find("->") == std::string::npos);

    auto empty = hasse_dot(OrderUniverse{});
    CHECK(empty.find("->") == std::string::npos);
    CHECK(empty.find("digraph") != std::string::npos);
}
