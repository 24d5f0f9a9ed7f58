#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "concordia/engine.hpp"
#include "concordia/knotexpr.hpp"
#include "concordia/numeric.hpp"

namespace concordia {

// Process-wide memo of engine values keyed by canonical expression string.
// Order computations hit the same formal differences over and over (729 pairs in
// the standard 27-element universe share 125 differences), so every V_k request
// funnels through here.
int cached_v(const KnotExpr& e, int k);
int cached_nu_plus(const KnotExpr& e);

// x <= y in the nu+ order: V_0(x - y) = 0 (equivalently nu+(x - y) = 0, since the
// V-sequence is non-increasing).
bool leq(const KnotExpr& x, const KnotExpr& y);

enum class Provenance { kComputed, kRuleFullTwist, kRuleSatellite, kAsserted };

// How a pair of knots relates according to a twist/satellite rule. kLeq/kGeq are
// non-strict, kLess/kGreater strict, kNotLeq rules out <= without deciding >.
enum class EdgeDecision { kLeq, kGeq, kLess, kGreater, kNotLeq, kUndetermined };

std::string to_string(Provenance p);
std::string to_string(EdgeDecision d);

// Order rule for "J arises from K by a positive full twist with n-linking":
// n in {0,1} gives J <= K; n >= 3 rules out J <= K, and gives the strict J > K
// when the geometric linking equals n; n = 2 decides nothing.
EdgeDecision fulltwist_rule_edge(int n, bool geometric_equals_n);

// Order rule for pattern twisting, relating P_m(x) to P_n(x) for m < n: winding
// 0 or 1 gives P_m >= P_n; winding >= 3 with geometric winding equal to the
// algebraic one gives P_m < P_n; winding 2 decides nothing.
EdgeDecision satellite_rule_edge(int winding, bool geometric_equals_winding);

// The t-times-twisted (p,q)-cable pattern applied to x: C(p, q + p*t; x).
// x must be a single atom or the unknot.
KnotExpr cable_pattern_apply(int p, int q, long long twists, const KnotExpr& x);

struct OrderEdge {
    std::size_t from, to;  // class indices, from <= to (or from < to when strict)
    Provenance prov;
    bool strict;
    std::string detail;
};

// A finite slice of the nu+-order: all formal sums of the generator atoms with
// bounded coefficients, the computed <= relation, its classes, and any rule edges
// attached afterwards. Elements and classes are in canonical string order, so
// every derived output is deterministic.
class OrderUniverse {
public:
    std::size_t size() const { return elements_.size(); }
    const std::vector<KnotExpr>& elements() const { return elements_; }
    const KnotExpr& element(std::size_t i) const { return elements_[i]; }
    bool leq(std::size_t i, std::size_t j) const { return rel_[i * elements_.size() + j]; }

    std::size_t class_count() const { return classes_.size(); }
    std::size_t class_of(std::size_t element) const { return class_of_[element]; }
    const std::vector<std::size_t>& class_members(std::size_t c) const { return classes_[c]; }
    const KnotExpr& class_rep(std::size_t c) const { return elements_[classes_[c].front()]; }
    bool class_leq(std::size_t c, std::size_t d) const {
        return leq(classes_[c].front(), classes_[d].front());
    }

    // Records a rule-provenance edge between the classes of x and y (which must be
    // universe members): x <= y, strict when the decision is kLess/kGreater.
    // kNotLeq and kUndetermined record nothing and return false.
    bool add_rule_edge(const KnotExpr& x, const KnotExpr& y, EdgeDecision d, Provenance prov,
                       const std::string& detail);
    const std::vector<OrderEdge>& rule_edges() const { return rule_edges_; }

    // Cover relations of the computed class order (transitive reduction).
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

private:
    friend OrderUniverse build_universe(const std::vector<Atom>&, int, std::uint64_t);
    std::size_t find_class(const KnotExpr& e) const;

    std::vector<KnotExpr> elements_;
    std::vector<char> rel_;
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<OrderEdge> rule_edges_;
};

// All formal sums over `generators` with coefficients in [-max_coeff, max_coeff],
// with the <= relation computed pairwise. Throws BudgetError when the number of
// element pairs would exceed `pair_budget`.
OrderUniverse build_universe(const std::vector<Atom>& generators, int max_coeff,
                             std::uint64_t pair_budget = 250000);

// Checks f(x) <= f(y) for every computed pair x <= y of universe elements.
struct MonotoneReport {
    std::string invariant;
    std::size_t pairs_checked = 0;
    struct Violation {
        std::size_t x, y;
        Rational fx, fy;
    };
    std::vector<Violation> violations;
};

MonotoneReport monotone_check(const OrderUniverse& u, const std::string& name,
                              const std::function<Rational(const KnotExpr&)>& f);

// DOT rendering: one node per class (labeled by representative), solid arrows for
// the computed cover relations, dashed labeled arrows for rule edges.
std::string hasse_dot(const OrderUniverse& u);

}  // namespace concordia
