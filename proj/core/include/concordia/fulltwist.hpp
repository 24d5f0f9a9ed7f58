#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "concordia/engine.hpp"
#include "concordia/knotexpr.hpp"

namespace concordia {

// The V-values forced on a knot bounding a disk in punctured -CP^2 whose class is
// n times the generator: (k, required V_k) pairs, non-increasing in k, ending at 0.
struct DiskClassConstraints {
    int n;
    std::vector<std::pair<int, long long>> required;
};

DiskClassConstraints cp2_constraints(int n);

// Exact test of a V-sequence against cp2_constraints(n). On failure, `witness_k`
// is the first index where the sequence misses its required value.
struct DiskClassVerdict {
    bool consistent;
    int witness_k = -1;
    long long required = 0, actual = 0;
};

DiskClassVerdict check_disk_class(const VSequence& v, int n);

// Closed interval of allowed nu+ values; `hi` absent means bounded below only.
struct NuInterval {
    long long lo = 0;
    std::optional<long long> hi;

    bool contains(long long v) const { return v >= lo && (!hi || v <= *hi); }
};

// Allowed range of nu+(J # -K) when J arises from K by a positive full twist with
// n-linking: [0,0] for n = 0, [(n-1)(n-2)/2, n(n-1)/2] otherwise.
NuInterval thm1_interval(int n);

// Allowed range of nu+(J) itself, given nu+(K) and nu+(-K): [0, nuK] for n = 0,
// [max(0, (n-1)(n-2)/2 - nuMirrorK), n(n-1)/2 + nuK] otherwise.
NuInterval thm2_interval(int n, long long nuK, long long nuMirrorK);

// Joint obstruction for "`to` arises from `from` by a positive full twist with
// n-linking": nu+(to # -from) against thm1_interval(n), and the V-sequence of the
// difference against the exact disk-class constraints. Either failure obstructs.
struct FullTwistReport {
    int n;
    long long nu_diff;
    NuInterval interval;
    bool interval_ok;
    DiskClassVerdict cp2;
    bool obstructed;
};

FullTwistReport obstruct_full_twist(const KnotExpr& from, const KnotExpr& to, int n);

}  // namespace concordia
