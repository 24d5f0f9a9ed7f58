#pragma once

#include <vector>

#include "concordia/complex.hpp"

namespace concordia {

// The V-sequence of a knot: V_0 >= V_1 >= ... >= V_nu = 0, stored up to the first
// zero. v(k) = 0 for k beyond the stored range; nu_plus() is the first zero index.
class VSequence {
public:
    explicit VSequence(std::vector<int> values);
    const std::vector<int>& values() const { return values_; }
    int v(int k) const;
    int nu_plus() const { return static_cast<int>(values_.size()) - 1; }
    bool operator==(const VSequence&) const = default;

private:
    std::vector<int> values_;
};

enum class HomologyBackend {
    kAuto,    // sparse cancellation, dense elimination as fallback
    kSparse,  // sparse cancellation only (throws if the operation budget trips)
    kDense,   // per-grading bit-packed Gaussian elimination
};

// Correction term V_k, k >= 0: the quotient complex of translates U^n*g with
// max(i-n, j-n-k) >= 0 is truncated to depth D = 2*(G+k+4) U-levels (G = width),
// its homology is computed over F_2, and -2*V_k is read off as the bottom grading
// of the classes still in the image of U^{D/2}. The result must agree when
// recomputed at depth D+4; anything else throws EngineError.
int v_k(const BifilteredComplex& c, int k, HomologyBackend backend = HomologyBackend::kAuto);

// V_0, V_1, ... up to and including the first zero.
VSequence v_sequence(const BifilteredComplex& c,
                     HomologyBackend backend = HomologyBackend::kAuto);

int v_k_of(const KnotExpr& e, int k);
VSequence v_sequence_of(const KnotExpr& e);

// Smallest k with V_k = 0, by binary search over the non-increasing V-sequence.
int nu_plus(const BifilteredComplex& c);
int nu_plus(const KnotExpr& e);

// tau is additive under connected sum and equals the genus on certified atoms,
// negated under mirroring: sum of multiplicity * genus over terms.
long long tau_additive(const KnotExpr& e);

}  // namespace concordia
