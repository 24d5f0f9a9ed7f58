#include "concordia/engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <queue>

#include "concordia/errors.hpp"
#include "concordia/gf2.hpp"
#include "concordia/parallel.hpp"

namespace concordia {

VSequence::VSequence(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty() || values_.back() != 0)
        throw EngineError("V-sequence must end with 0");
    for (std::size_t k = 1; k < values_.size(); ++k)
        if (values_[k] > values_[k - 1]) throw EngineError("V-sequence must be non-increasing");
    for (std::size_t k = 0; k + 1 < values_.size(); ++k)
        if (values_[k] <= 0) throw EngineError("V-sequence is zero before its end");
}

int VSequence::v(int k) const {
    if (k < 0) throw std::out_of_range("V_k requires k >= 0");
    return k < static_cast<int>(values_.size()) ? values_[static_cast<std::size_t>(k)] : 0;
}

namespace {

// The truncated model: one cell per (generator, U-level) with level in [0, D];
// level l of generator g stands for the translate U^{cap(g)-l}*g where
// cap(g) = max(i_g, j_g - k). Arrows always drop the grading by exactly one.
struct Model {
    std::vector<int> grading;                     // per cell
    std::vector<std::vector<std::int32_t>> out;   // boundary targets
    int min_grading = 0, max_grading = 0;

    void finish_gradings() {
        min_grading = std::numeric_limits<int>::max();
        max_grading = std::numeric_limits<int>::min();
        for (int g : grading) {
            min_grading = std::min(min_grading, g);
            max_grading = std::max(max_grading, g);
        }
    }
};

Model build_model(const BifilteredComplex& c, int k, int depth) {
    const auto& gens = c.generators();
    const std::size_t levels = static_cast<std::size_t>(depth) + 1;
    Model m;
    m.grading.resize(gens.size() * levels);
    m.out.resize(gens.size() * levels);
    std::vector<int> cap(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
        cap[g] = std::max(gens[g].i, gens[g].j - k);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t l = 0; l < levels; ++l) {
            std::size_t cell = g * levels + l;
            m.grading[cell] = gens[g].maslov - 2 * (cap[g] - static_cast<int>(l));
            for (const DiffEntry& e : c.differential()[g]) {
                int delta = e.u_power + cap[g] - cap[static_cast<std::size_t>(e.target)];
                if (delta < 0) throw EngineError("filtration level rises along the differential");
                if (static_cast<int>(l) - delta < 0) continue;  // falls out of the quotient
                m.out[cell].push_back(static_cast<std::int32_t>(
                    static_cast<std::size_t>(e.target) * levels +
                    (l - static_cast<std::size_t>(delta))));
            }
            std::sort(m.out[cell].begin(), m.out[cell].end());
        }
    }
    m.finish_gradings();
    return m;
}

// Mapping cone of U^m on the model: a second ("top") copy shifted so that the cone
// differential sends top(g,l) to top boundary entries plus bottom(g,l-m).
Model build_cone(const Model& b, std::size_t gens, std::size_t levels, int m) {
    const std::size_t n = b.grading.size();
    Model cone;
    cone.grading.resize(2 * n);
    cone.out.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        cone.grading[i] = b.grading[i];
        cone.out[i] = b.out[i];
        cone.grading[n + i] = b.grading[i] - 2 * m + 1;
        cone.out[n + i].reserve(b.out[i].size() + 1);
        for (std::int32_t t : b.out[i])
            cone.out[n + i].push_back(static_cast<std::int32_t>(n) + t);
        std::size_t l = i % levels;
        if (l >= static_cast<std::size_t>(m))
            cone.out[n + i].push_back(static_cast<std::int32_t>(i - static_cast<std::size_t>(m)));
        std::sort(cone.out[n + i].begin(), cone.out[n + i].end());
    }
    (void)gens;
    cone.finish_gradings();
    return cone;
}

// Per-grading homology dimensions, indexed from min_grading.
struct Dims {
    int min_grading = 0;
    std::vector<int> counts;
    int at(int g) const {
        int k = g - min_grading;
        return (k >= 0 && k < static_cast<int>(counts.size())) ? counts[static_cast<std::size_t>(k)]
                                                               : 0;
    }
};

// Sparse Gaussian elimination in adjacency form: repeatedly cancels an arrow x->y,
// correcting a->b for the remaining sources a of y and targets b of x. Free
// cancellations (no correction terms) drain through a worklist; the rest go
// through a lazy min-heap keyed by the Markowitz fill estimate. Dims are only
// reported once the live-arrow count reaches zero; a budget overrun reports
// failure instead of a half-reduced complex.
class SparseReducer {
public:
    SparseReducer(const Model& m, std::uint64_t budget)
        : out_(m.out), grading_(m.grading), budget_(budget) {
        const std::size_t n = out_.size();
        alive_.assign(n, 1);
        in_.resize(n);
        for (std::size_t x = 0; x < n; ++x) {
            arrows_ += out_[x].size();
            for (std::int32_t y : out_[x]) in_[static_cast<std::size_t>(y)].push_back(static_cast<std::int32_t>(x));
        }
        for (auto& v : in_) std::sort(v.begin(), v.end());
        queued_.assign(n, 0);
        for (std::size_t x = 0; x < n; ++x) push(static_cast<std::int32_t>(x));
    }

    std::optional<Dims> run(int min_grading, int max_grading) {
        while (arrows_ > 0) {
            if (!drain()) return std::nullopt;
            if (arrows_ == 0) break;
            if (!cancel_cheapest()) return std::nullopt;
        }
        Dims d;
        d.min_grading = min_grading;
        d.counts.assign(static_cast<std::size_t>(max_grading - min_grading) + 1, 0);
        for (std::size_t x = 0; x < alive_.size(); ++x)
            if (alive_[x]) ++d.counts[static_cast<std::size_t>(grading_[x] - min_grading)];
        return d;
    }

private:
    static bool toggle(std::vector<std::int32_t>& v, std::int32_t x) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        if (it != v.end() && *it == x) {
            v.erase(it);
            return false;
        }
        v.insert(it, x);
        return true;
    }
    static void erase_known(std::vector<std::int32_t>& v, std::int32_t x) {
        v.erase(std::lower_bound(v.begin(), v.end(), x));
    }

    void push(std::int32_t x) {
        if (!queued_[static_cast<std::size_t>(x)]) {
            queued_[static_cast<std::size_t>(x)] = 1;
            queue_.push_back(x);
        }
    }

    // Best pivot from source x: the target with the fewest other sources.
    std::int32_t pick_target(std::int32_t x) const {
        std::int32_t best = -1;
        std::size_t best_in = std::numeric_limits<std::size_t>::max();
        for (std::int32_t y : out_[static_cast<std::size_t>(x)]) {
            std::size_t sz = in_[static_cast<std::size_t>(y)].size();
            if (sz < best_in) {
                best_in = sz;
                best = y;
            }
        }
        return best;
    }

    std::uint64_t cost_of(std::int32_t x, std::int32_t y) const {
        return static_cast<std::uint64_t>(out_[static_cast<std::size_t>(x)].size() - 1) *
               static_cast<std::uint64_t>(in_[static_cast<std::size_t>(y)].size() - 1);
    }

    bool drain() {
        while (!queue_.empty()) {
            std::int32_t x = queue_.front();
            queue_.pop_front();
            queued_[static_cast<std::size_t>(x)] = 0;
            if (!alive_[static_cast<std::size_t>(x)] || out_[static_cast<std::size_t>(x)].empty())
                continue;
            std::int32_t y = pick_target(x);
            std::uint64_t c = cost_of(x, y);
            if (c == 0) {
                cancel(x, y);
                if (ops_ > budget_) return false;
            } else {
                heap_.push({c, x});
            }
        }
        return true;
    }

    // Pops candidates until one still matches its key; stale entries are
    // reinserted at their current cost. Cancels exactly one arrow.
    bool cancel_cheapest() {
        for (;;) {
            if (heap_.empty()) {  // rebuild after the lazy entries went stale
                ops_ += out_.size();
                for (std::size_t x = 0; x < out_.size(); ++x)
                    if (alive_[x] && !out_[x].empty())
                        heap_.push({cost_of(static_cast<std::int32_t>(x),
                                            pick_target(static_cast<std::int32_t>(x))),
                                    static_cast<std::int32_t>(x)});
                if (heap_.empty()) throw EngineError("live arrows missing from the worklist");
            }
            Candidate top = heap_.top();
            heap_.pop();
            std::int32_t x = top.x;
            if (!alive_[static_cast<std::size_t>(x)] || out_[static_cast<std::size_t>(x)].empty())
                continue;
            std::int32_t y = pick_target(x);
            std::uint64_t c = cost_of(x, y);
            if (c > top.cost) {
                heap_.push({c, x});
                continue;
            }
            cancel(x, y);
            return ops_ <= budget_;
        }
    }

    void cancel(std::int32_t x, std::int32_t y) {
        auto& in_y = in_[static_cast<std::size_t>(y)];
        auto& out_x = out_[static_cast<std::size_t>(x)];
        std::vector<std::int32_t> sources;  // in(y) \ {x}
        sources.reserve(in_y.size() - 1);
        for (std::int32_t a : in_y)
            if (a != x) sources.push_back(a);
        std::vector<std::int32_t> targets;  // out(x) \ {y}
        targets.reserve(out_x.size() - 1);
        for (std::int32_t b : out_x)
            if (b != y) targets.push_back(b);

        alive_[static_cast<std::size_t>(x)] = 0;
        alive_[static_cast<std::size_t>(y)] = 0;
        ops_ += static_cast<std::uint64_t>(sources.size()) * targets.size() + 16;
        arrows_ -= in_[static_cast<std::size_t>(x)].size() +
                   out_[static_cast<std::size_t>(y)].size() + sources.size() + targets.size() + 1;

        for (std::int32_t c : in_[static_cast<std::size_t>(x)]) {
            erase_known(out_[static_cast<std::size_t>(c)], x);
            push(c);
        }
        for (std::int32_t z : out_[static_cast<std::size_t>(y)])
            erase_known(in_[static_cast<std::size_t>(z)], y);
        for (std::int32_t a : sources) erase_known(out_[static_cast<std::size_t>(a)], y);
        for (std::int32_t b : targets) erase_known(in_[static_cast<std::size_t>(b)], x);

        for (std::int32_t a : sources) {
            for (std::int32_t b : targets) {
                if (toggle(out_[static_cast<std::size_t>(a)], b)) {
                    toggle(in_[static_cast<std::size_t>(b)], a);
                    ++arrows_;
                } else {
                    erase_known(in_[static_cast<std::size_t>(b)], a);
                    --arrows_;
                }
                ops_ += 1;
            }
            push(a);
        }
        for (std::int32_t b : targets) {
            for (std::int32_t c : in_[static_cast<std::size_t>(b)]) push(c);
            ops_ += in_[static_cast<std::size_t>(b)].size();
        }
        in_[static_cast<std::size_t>(x)].clear();
        out_[static_cast<std::size_t>(x)].clear();
        in_[static_cast<std::size_t>(y)].clear();
        out_[static_cast<std::size_t>(y)].clear();
    }

    struct Candidate {
        std::uint64_t cost;
        std::int32_t x;
        bool operator<(const Candidate& o) const { return cost > o.cost; }  // min-heap
    };

    std::vector<std::vector<std::int32_t>> out_, in_;
    std::vector<int> grading_;
    std::vector<char> alive_;
    std::vector<char> queued_;
    std::deque<std::int32_t> queue_;
    std::priority_queue<Candidate> heap_;
    std::uint64_t arrows_ = 0;
    std::uint64_t ops_ = 0, budget_;
};

// Per-grading bit-packed elimination: h_g = n_g - rank d_g - rank d_{g+1}.
Dims dense_dims(const Model& m) {
    const int span = m.max_grading - m.min_grading + 1;
    std::vector<std::vector<std::int32_t>> cells(static_cast<std::size_t>(span));
    std::vector<std::int32_t> index(m.grading.size());
    for (std::size_t x = 0; x < m.grading.size(); ++x) {
        auto& bucket = cells[static_cast<std::size_t>(m.grading[x] - m.min_grading)];
        index[x] = static_cast<std::int32_t>(bucket.size());
        bucket.push_back(static_cast<std::int32_t>(x));
    }
    std::vector<std::size_t> rank(static_cast<std::size_t>(span) + 1, 0);
    parallel_for(static_cast<std::size_t>(span), [&](std::size_t gi) {
        if (gi == 0 || cells[gi].empty() || cells[gi - 1].empty()) return;
        gf2::BitMatrix mat(cells[gi].size(), cells[gi - 1].size());
        for (std::size_t r = 0; r < cells[gi].size(); ++r)
            for (std::int32_t t : m.out[static_cast<std::size_t>(cells[gi][r])])
                mat.set(r, static_cast<std::size_t>(index[static_cast<std::size_t>(t)]));
        rank[gi] = mat.rank_destructive();
    });
    Dims d;
    d.min_grading = m.min_grading;
    d.counts.resize(static_cast<std::size_t>(span));
    for (std::size_t gi = 0; gi < static_cast<std::size_t>(span); ++gi)
        d.counts[gi] = static_cast<int>(cells[gi].size() - rank[gi] -
                                        (gi + 1 < static_cast<std::size_t>(span) ? rank[gi + 1] : 0));
    return d;
}

Dims dims_of(const Model& m, HomologyBackend backend) {
    if (backend == HomologyBackend::kDense) return dense_dims(m);
    std::uint64_t budget = 200'000'000ull + static_cast<std::uint64_t>(m.out.size()) * 3000ull;
    auto sparse = SparseReducer(m, budget).run(m.min_grading, m.max_grading);
    if (sparse) return *sparse;
    if (backend == HomologyBackend::kSparse)
        throw EngineError("sparse reduction exceeded its operation budget");
    return dense_dims(m);
}

// One extraction at a fixed depth: homology dims of the model and of cone(U^{D/2}),
// then the long-exact-sequence recurrence recovers the rank of U^{D/2} on homology
// per grading; -2*V_k is the lowest grading where that rank is positive.
int extract_vk(const BifilteredComplex& c, int k, int depth, HomologyBackend backend) {
    const std::size_t levels = static_cast<std::size_t>(depth) + 1;
    const int m = depth / 2;
    Model model = build_model(c, k, depth);
    Dims h = dims_of(model, backend);
    Model cone = build_cone(model, c.size(), levels, m);
    Dims hc = dims_of(cone, backend);

    int d_prev = 0;
    int bottom = std::numeric_limits<int>::max();
    for (int g = std::min(model.min_grading, cone.min_grading);
         g <= std::max(model.max_grading, cone.max_grading); ++g) {
        int d = h.at(g) + h.at(g + 2 * m - 1) - hc.at(g) - d_prev;
        if (d < 0) throw EngineError("inconsistent U-rank bookkeeping");
        if (d > 0 && bottom == std::numeric_limits<int>::max()) bottom = g;
        d_prev = d;
    }
    if (bottom == std::numeric_limits<int>::max())
        throw EngineError("no U-tower detected in the truncated model");
    if (bottom > 0 || bottom % 2 != 0)
        throw EngineError("U-tower bottom grading is not a non-positive even integer");
    return -bottom / 2;
}

}  // namespace

int v_k(const BifilteredComplex& c, int k, HomologyBackend backend) {
    if (k < 0) throw std::invalid_argument("v_k requires k >= 0");
    const int depth = 2 * (c.width() + k + 4);
    int a = extract_vk(c, k, depth, backend);
    int b = extract_vk(c, k, depth + 4, backend);
    if (a != b)
        throw EngineError("V_" + std::to_string(k) + " did not stabilize across depths " +
                          std::to_string(depth) + " and " + std::to_string(depth + 4));
    return a;
}

VSequence v_sequence(const BifilteredComplex& c, HomologyBackend backend) {
    std::vector<int> values;
    const int cap = c.width() + 1;
    for (int k = 0;; ++k) {
        if (k > cap) throw EngineError("V-sequence failed to reach zero by the width bound");
        values.push_back(v_k(c, k, backend));
        if (values.back() == 0) break;
    }
    return VSequence(std::move(values));
}

int v_k_of(const KnotExpr& e, int k) { return v_k(BifilteredComplex::of_expr(e), k); }

VSequence v_sequence_of(const KnotExpr& e) { return v_sequence(BifilteredComplex::of_expr(e)); }

int nu_plus(const BifilteredComplex& c) {
    if (v_k(c, 0) == 0) return 0;
    // V is non-increasing and V_width = 0: binary search for the first zero.
    int lo = 0, hi = c.width();
    if (v_k(c, hi) != 0) throw EngineError("V_k nonzero at the width bound");
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (v_k(c, mid) == 0 ? hi : lo) = mid;
    }
    return hi;
}

int nu_plus(const KnotExpr& e) {
    if (e.is_identity()) return 0;
    return nu_plus(BifilteredComplex::of_expr(e));
}

long long tau_additive(const KnotExpr& e) {
    long long tau = 0;
    for (const auto& [a, m] : e.terms()) tau += m * genus(a);
    return tau;
}

}  // namespace concordia
