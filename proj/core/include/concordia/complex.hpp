#pragma once

#include <cstdint>
#include <vector>

#include "concordia/knotexpr.hpp"

namespace concordia {

// A free, reduced model of a knot's full chain complex over F_2[U,U^-1], recorded by
// one basis element per U-orbit. A generator g sits at filtration position
// (i_g, j_g) with homological grading maslov_g; the translate U^n*g sits at
// (i_g-n, j_g-n) with grading maslov_g-2n. A differential entry (target, u_power)
// means U^{u_power}*target appears in the boundary of the source.
struct Generator {
    int i, j, maslov;
};

struct DiffEntry {
    std::int32_t target;
    std::int32_t u_power;
    bool operator==(const DiffEntry&) const = default;
};

class BifilteredComplex {
public:
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<std::vector<DiffEntry>>& differential() const { return diff_; }
    std::size_t size() const { return gens_.size(); }

    // Largest |j-i| over generators: the total-genus scale of the complex.
    int width() const;

    // Checks d^2 = 0 and that every differential entry drops the filtration
    // componentwise (one coordinate strictly) and the grading by exactly one,
    // after the U-shift. Throws EngineError on violation.
    void validate() const;

    // Staircase model of a positive L-space knot read off its Alexander polynomial:
    // for support exponents n_0 > ... > n_{2m}, the generators zigzag from (0, n_0)
    // to (n_0, 0); each odd (inner corner) generator maps to its two even
    // neighbours with u_power equal to the corresponding step length. Gradings are
    // normalized so the first generator sits in grading 0 and every arrow drops
    // the grading by one after the U-shift; with this choice the i >= 0 tower of
    // the unreduced theory bottoms out in grading 0, as it must for a knot in the
    // 3-sphere. Throws CertificationError when the polynomial is not in staircase
    // form.
    static BifilteredComplex staircase(const LaurentPoly& alexander);
    static BifilteredComplex staircase(const LSpaceCertificate& cert) {
        return staircase(cert.alexander);
    }

    // The one-generator complex of the unknot.
    static BifilteredComplex unknot();

    // Mirror: positions and gradings negate, the differential transposes.
    BifilteredComplex dual() const;

    // Connected sum: positions and gradings add, the differential obeys the
    // Leibniz rule (u_powers add along each factor's entries).
    static BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b);

    // Tensor of staircases/duals over the expression's terms (|m| copies each).
    // Requires every atom to certify; guards total size against `max_generators`.
    static BifilteredComplex of_expr(const KnotExpr& e, std::size_t max_generators = 1u << 22);

private:
    std::vector<Generator> gens_;
    std::vector<std::vector<DiffEntry>> diff_;
};

}  // namespace concordia
