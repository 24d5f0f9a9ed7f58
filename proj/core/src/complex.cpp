#include "concordia/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "concordia/errors.hpp"

namespace concordia {

int BifilteredComplex::width() const {
    int w = 0;
    for (const auto& g : gens_) w = std::max(w, std::abs(g.j - g.i));
    return w;
}

void BifilteredComplex::validate() const {
    for (std::size_t s = 0; s < gens_.size(); ++s) {
        for (const DiffEntry& e : diff_[s]) {
            const Generator& src = gens_[s];
            const Generator& tgt = gens_[static_cast<std::size_t>(e.target)];
            if (e.u_power < 0) throw EngineError("negative u_power in differential");
            int ti = tgt.i - e.u_power, tj = tgt.j - e.u_power;
            if (ti > src.i || tj > src.j || (ti == src.i && tj == src.j))
                throw EngineError("differential entry does not drop the filtration");
            if (tgt.maslov - 2 * e.u_power != src.maslov - 1)
                throw EngineError("differential entry does not drop the grading by one");
        }
    }
    // d^2 = 0: boundary-of-boundary terms must cancel in pairs over F_2.
    for (std::size_t s = 0; s < gens_.size(); ++s) {
        std::map<std::pair<std::int32_t, std::int32_t>, int> count;
        for (const DiffEntry& e : diff_[s])
            for (const DiffEntry& f : diff_[static_cast<std::size_t>(e.target)])
                ++count[{f.target, e.u_power + f.u_power}];
        for (const auto& [key, c] : count)
            if (c % 2 != 0) throw EngineError("d^2 != 0");
    }
}

BifilteredComplex BifilteredComplex::unknot() {
    BifilteredComplex c;
    c.gens_.push_back({0, 0, 0});
    c.diff_.emplace_back();
    return c;
}

BifilteredComplex BifilteredComplex::staircase(const LaurentPoly& alexander) {
    if (alexander.is_zero() || !alexander.is_symmetric() || alexander.value_at_one() != 1)
        throw CertificationError("staircase: polynomial is not in L-space form");
    std::vector<int> sup = alexander.support_descending();
    if (sup.size() % 2 != 1)
        throw CertificationError("staircase: support size must be odd");
    for (std::size_t s = 0; s < sup.size(); ++s)
        if (alexander.coeff(sup[s]) != ((s % 2 == 0) ? 1 : -1))
            throw CertificationError("staircase: coefficients are not alternating +-1");
    if (sup.size() == 1) return unknot();

    // Zigzag from (0, g) to (g, 0). Even generators sit at the outer corners,
    // odd ones at the inner corners. Each odd generator maps to its two even
    // neighbours with a u_power equal to the step length, so both entries drop
    // the filtration and the grading drops by exactly one. This is the unique
    // arrow direction for which C{i >= 0} has its tower bottom in grading 0.
    BifilteredComplex c;
    int i = 0, j = sup[0], maslov = 0;
    c.gens_.push_back({i, j, maslov});
    for (std::size_t s = 1; s < sup.size(); ++s) {
        int step = sup[s - 1] - sup[s];
        if (s % 2 == 1) {
            j -= step;  // descend to an inner corner
            maslov += 1 - 2 * step;
        } else {
            i += step;  // move right to the next outer corner
            maslov += 2 * step - 1;
        }
        c.gens_.push_back({i, j, maslov});
    }
    c.diff_.assign(c.gens_.size(), {});
    for (std::size_t s = 1; s < c.gens_.size(); s += 2) {
        int up = sup[s - 1] - sup[s], right = sup[s] - sup[s + 1];
        c.diff_[s].push_back({static_cast<std::int32_t>(s - 1), up});
        c.diff_[s].push_back({static_cast<std::int32_t>(s + 1), right});
    }
    return c;
}

BifilteredComplex BifilteredComplex::dual() const {
    BifilteredComplex d;
    d.gens_.reserve(gens_.size());
    for (const auto& g : gens_) d.gens_.push_back({-g.i, -g.j, -g.maslov});
    d.diff_.assign(gens_.size(), {});
    for (std::size_t s = 0; s < gens_.size(); ++s)
        for (const DiffEntry& e : diff_[s])
            d.diff_[static_cast<std::size_t>(e.target)].push_back(
                {static_cast<std::int32_t>(s), e.u_power});
    return d;
}

BifilteredComplex BifilteredComplex::tensor(const BifilteredComplex& a,
                                            const BifilteredComplex& b) {
    BifilteredComplex t;
    const std::size_t nb = b.gens_.size();
    t.gens_.reserve(a.gens_.size() * nb);
    t.diff_.reserve(a.gens_.size() * nb);
    for (std::size_t x = 0; x < a.gens_.size(); ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
            t.gens_.push_back({a.gens_[x].i + b.gens_[y].i, a.gens_[x].j + b.gens_[y].j,
                               a.gens_[x].maslov + b.gens_[y].maslov});
            auto& out = t.diff_.emplace_back();
            out.reserve(a.diff_[x].size() + b.diff_[y].size());
            for (const DiffEntry& e : a.diff_[x])
                out.push_back({static_cast<std::int32_t>(e.target * nb + y), e.u_power});
            for (const DiffEntry& e : b.diff_[y])
                out.push_back({static_cast<std::int32_t>(x * nb + e.target), e.u_power});
        }
    }
    return t;
}

BifilteredComplex BifilteredComplex::of_expr(const KnotExpr& e, std::size_t max_generators) {
    std::vector<BifilteredComplex> factors;
    std::size_t total = 1;
    for (const auto& [a, m] : e.terms()) {
        BifilteredComplex base = staircase(certify(a));
        if (m < 0) base = base.dual();
        for (long long copy = 0; copy < (m < 0 ? -m : m); ++copy) {
            total *= base.size();
            if (total > max_generators)
                throw BudgetError("expression tensor complex exceeds the generator limit");
            factors.push_back(base);
        }
    }
    BifilteredComplex acc = unknot();
    for (const auto& f : factors) acc = tensor(acc, f);
    return acc;
}

}  // namespace concordia
