#include "concordia/poset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "concordia/errors.hpp"
#include "concordia/parallel.hpp"

namespace concordia {

namespace {

std::mutex cache_mutex;

std::map<std::string, std::map<int, int>>& v_store() {
    static std::map<std::string, std::map<int, int>> store;
    return store;
}

}  // namespace

int cached_v(const KnotExpr& e, int k) {
    if (e.is_identity()) return 0;
    const std::string key = e.str();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = v_store().find(key);
        if (it != v_store().end()) {
            auto jt = it->second.find(k);
            if (jt != it->second.end()) return jt->second;
        }
    }
    int val = v_k_of(e, k);
    std::lock_guard<std::mutex> lock(cache_mutex);
    v_store()[key][k] = val;
    return val;
}

int cached_nu_plus(const KnotExpr& e) {
    if (cached_v(e, 0) == 0) return 0;
    int hi = static_cast<int>(genus_bound(e)) + 1;  // V vanishes from the width on
    int lo = 0;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (cached_v(e, mid) == 0 ? hi : lo) = mid;
    }
    return hi;
}

bool leq(const KnotExpr& x, const KnotExpr& y) { return cached_v(x - y, 0) == 0; }

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::kComputed: return "computed";
        case Provenance::kRuleFullTwist: return "rule-fulltwist";
        case Provenance::kRuleSatellite: return "rule-satellite";
        case Provenance::kAsserted: return "asserted";
    }
    return "?";
}

std::string to_string(EdgeDecision d) {
    switch (d) {
        case EdgeDecision::kLeq: return "<=";
        case EdgeDecision::kGeq: return ">=";
        case EdgeDecision::kLess: return "<";
        case EdgeDecision::kGreater: return ">";
        case EdgeDecision::kNotLeq: return "not<=";
        case EdgeDecision::kUndetermined: return "undetermined";
    }
    return "?";
}

EdgeDecision fulltwist_rule_edge(int n, bool geometric_equals_n) {
    if (n < 0) throw std::invalid_argument("linking number must be non-negative");
    if (n <= 1) return EdgeDecision::kLeq;
    if (n == 2) return EdgeDecision::kUndetermined;
    return geometric_equals_n ? EdgeDecision::kGreater : EdgeDecision::kNotLeq;
}

EdgeDecision satellite_rule_edge(int winding, bool geometric_equals_winding) {
    if (winding < 0) throw std::invalid_argument("winding number must be non-negative");
    if (winding <= 1) return EdgeDecision::kGeq;
    if (winding == 2 || !geometric_equals_winding) return EdgeDecision::kUndetermined;
    return EdgeDecision::kLess;
}

KnotExpr cable_pattern_apply(int p, int q, long long twists, const KnotExpr& x) {
    long long q_twisted = q + static_cast<long long>(p) * twists;
    if (q_twisted > 1000000 || q_twisted < -1000000)
        throw std::invalid_argument("twisted cable parameter out of range");
    SignedAtom inner{1, std::nullopt};
    if (!x.is_identity()) {
        const auto& terms = x.terms();
        if (terms.size() != 1 || terms.begin()->second != 1)
            throw std::invalid_argument("cable pattern applies to a single atom or the unknot");
        inner.atom = terms.begin()->first;
    }
    SignedAtom result = normalize_cable(p, static_cast<int>(q_twisted), inner);
    if (!result.atom) return KnotExpr();
    return KnotExpr::atom(*result.atom, result.sign);
}

bool OrderUniverse::add_rule_edge(const KnotExpr& x, const KnotExpr& y, EdgeDecision d,
                                  Provenance prov, const std::string& detail) {
    if (d == EdgeDecision::kNotLeq || d == EdgeDecision::kUndetermined) return false;
    std::size_t cx = find_class(x), cy = find_class(y);
    bool strict = d == EdgeDecision::kLess || d == EdgeDecision::kGreater;
    // Store as from <= to.
    if (d == EdgeDecision::kGeq || d == EdgeDecision::kGreater) std::swap(cx, cy);
    rule_edges_.push_back({cx, cy, prov, strict, detail});
    return true;
}

std::size_t OrderUniverse::find_class(const KnotExpr& e) const {
    const std::string key = e.str();
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].str() == key) return class_of_[i];
    throw std::invalid_argument("expression is not a universe member: " + key);
}

std::vector<std::pair<std::size_t, std::size_t>> OrderUniverse::hasse_edges() const {
    const std::size_t n = classes_.size();
    auto lt = [&](std::size_t c, std::size_t d) { return c != d && class_leq(c, d); };
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
            if (!lt(c, d)) continue;
            bool covered = false;
            for (std::size_t e = 0; e < n && !covered; ++e)
                if (lt(c, e) && lt(e, d)) covered = true;
            if (!covered) out.emplace_back(c, d);
        }
    }
    return out;
}

OrderUniverse build_universe(const std::vector<Atom>& generators, int max_coeff,
                             std::uint64_t pair_budget) {
    if (max_coeff < 1) throw std::invalid_argument("max_coeff must be >= 1");
    std::vector<Atom> atoms = generators;
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end(),
                            [](const Atom& a, const Atom& b) { return a == b; }),
                atoms.end());
    for (const Atom& a : atoms) certify(a);

    const std::uint64_t span = 2 * static_cast<std::uint64_t>(max_coeff) + 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < atoms.size() && count <= (1u << 26); ++i) count *= span;
    if (count > pair_budget / count)
        throw BudgetError("universe needs " + std::to_string(count) + "^2 order pairs, over the budget of " +
                          std::to_string(pair_budget));

    OrderUniverse u;
    std::vector<long long> coeff(atoms.size(), -max_coeff);
    for (;;) {
        KnotExpr e;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (coeff[i] != 0) e = e + KnotExpr::atom(atoms[i], coeff[i]);
        u.elements_.push_back(e);
        std::size_t pos = 0;
        while (pos < atoms.size() && coeff[pos] == max_coeff) coeff[pos++] = -max_coeff;
        if (pos == atoms.size()) break;
        ++coeff[pos];
    }
    std::sort(u.elements_.begin(), u.elements_.end());

    const std::size_t n = u.elements_.size();
    u.rel_.assign(n * n, 0);

    // The relation only depends on the difference, so compute each distinct
    // difference once (in parallel) and then fill the matrix.
    std::map<std::string, KnotExpr> diffs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            KnotExpr d = u.elements_[i] - u.elements_[j];
            diffs.emplace(d.str(), d);
        }
    std::vector<const KnotExpr*> work;
    work.reserve(diffs.size());
    for (auto& [key, e] : diffs) work.push_back(&e);
    std::vector<char> vanishes(work.size());
    parallel_for(work.size(), [&](std::size_t i) { vanishes[i] = cached_v(*work[i], 0) == 0; });
    std::map<std::string, bool> leq_by_diff;
    for (std::size_t i = 0; i < work.size(); ++i) leq_by_diff[work[i]->str()] = vanishes[i] != 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            u.rel_[i * n + j] = leq_by_diff.at((u.elements_[i] - u.elements_[j]).str());

    // Classes: mutual <=; members stay sorted, classes sort by representative.
    u.class_of_.assign(n, 0);
    std::vector<char> assigned(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (assigned[i]) continue;
        std::vector<std::size_t> members{i};
        assigned[i] = 1;
        for (std::size_t j = i + 1; j < n; ++j)
            if (!assigned[j] && u.rel_[i * n + j] && u.rel_[j * n + i]) {
                members.push_back(j);
                assigned[j] = 1;
            }
        u.classes_.push_back(std::move(members));
    }
    for (std::size_t c = 0; c < u.classes_.size(); ++c)
        for (std::size_t m : u.classes_[c]) u.class_of_[m] = c;
    return u;
}

MonotoneReport monotone_check(const OrderUniverse& u, const std::string& name,
                              const std::function<Rational(const KnotExpr&)>& f) {
    MonotoneReport report;
    report.invariant = name;
    std::vector<Rational> values(u.size());
    parallel_for(u.size(), [&](std::size_t i) { values[i] = f(u.element(i)); });
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (i == j || !u.leq(i, j)) continue;
            ++report.pairs_checked;
            if (!(values[i] <= values[j]))
                report.violations.push_back({i, j, values[i], values[j]});
        }
    return report;
}

std::string hasse_dot(const OrderUniverse& u) {
    std::ostringstream out;
    out << "digraph nu_plus_order {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t c = 0; c < u.class_count(); ++c) {
        std::string rep = u.class_rep(c).str();
        out << "  \"" << rep << "\"";
        if (u.class_members(c).size() > 1)
            out << " [label=\"" << rep << " (+" << u.class_members(c).size() - 1 << ")\"]";
        out << ";\n";
    }
    for (const auto& [c, d] : u.hasse_edges())
        out << "  \"" << u.class_rep(c).str() << "\" -> \"" << u.class_rep(d).str() << "\";\n";
    for (const OrderEdge& e : u.rule_edges()) {
        out << "  \"" << u.class_rep(e.from).str() << "\" -> \"" << u.class_rep(e.to).str()
            << "\" [style=dashed, label=\"" << to_string(e.prov)
            << (e.detail.empty() ? "" : " " + e.detail) << (e.strict ? " strict" : "") << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace concordia
