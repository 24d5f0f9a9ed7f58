#include "concordia/fulltwist.hpp"

#include <stdexcept>

namespace concordia {

DiskClassConstraints cp2_constraints(int n) {
    if (n < 0) throw std::invalid_argument("linking number must be non-negative");
    DiskClassConstraints c{n, {}};
    if (n == 0) {
        c.required.emplace_back(0, 0);
    } else if (n % 2 == 1) {
        long long h = (n - 1) / 2;
        for (long long j = 0; j <= h; ++j)
            c.required.emplace_back(static_cast<int>(n * j), (h - j) * (h - j + 1) / 2);
    } else {
        long long h = n / 2;
        for (long long j = 0; j < h; ++j)
            c.required.emplace_back(static_cast<int>(h + n * j), (h - j) * (h - j - 1) / 2);
    }
    return c;
}

DiskClassVerdict check_disk_class(const VSequence& v, int n) {
    for (const auto& [k, val] : cp2_constraints(n).required)
        if (v.v(k) != val) return {false, k, val, v.v(k)};
    return {true};
}

NuInterval thm1_interval(int n) {
    if (n < 0) throw std::invalid_argument("linking number must be non-negative");
    if (n == 0) return {0, 0};
    return {static_cast<long long>(n - 1) * (n - 2) / 2, static_cast<long long>(n) * (n - 1) / 2};
}

NuInterval thm2_interval(int n, long long nuK, long long nuMirrorK) {
    if (n < 0) throw std::invalid_argument("linking number must be non-negative");
    if (n == 0) return {0, nuK};
    long long lo = static_cast<long long>(n - 1) * (n - 2) / 2 - nuMirrorK;
    return {std::max(0ll, lo), static_cast<long long>(n) * (n - 1) / 2 + nuK};
}

FullTwistReport obstruct_full_twist(const KnotExpr& from, const KnotExpr& to, int n) {
    VSequence v = v_sequence_of(to - from);
    FullTwistReport r{n, v.nu_plus(), thm1_interval(n), false, check_disk_class(v, n), false};
    r.interval_ok = r.interval.contains(r.nu_diff);
    r.obstructed = !r.interval_ok || !r.cp2.consistent;
    return r;
}

}  // namespace concordia
