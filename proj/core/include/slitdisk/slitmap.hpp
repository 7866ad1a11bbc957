#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slitdisk/point.hpp"

namespace slitdisk {

// One elementary step of the slit-disk-to-disk chain.
struct ChainStep {
    enum class Kind {
        negate,         // z -> -z
        sqrt_principal, // z -> principal sqrt (cut along (-inf, 0], sqrt(1) = 1)
        mul_i,          // z -> i z
        add,            // z -> z + shift
        reciprocal,     // z -> 1/z
        square,         // z -> z^2
        cayley          // z -> (z - i)/(z + i), upper half plane -> disk
    };
    Kind kind;
    cplx shift{0.0, 0.0};
    const char* branch;  // branch convention, empty for single-valued steps
    const char* domain;  // name of the region the step consumes
};

// The explicit conformal equivalence between the slit disk D - [0,1) and D,
// as an ordered list of elementary maps with recorded branch conventions and
// source regions.  forward() composes the steps; inverse() unwinds them in
// reverse, selecting square-root branches by membership in the recorded
// region.
class ConformalChain {
public:
    static const ConformalChain& standard();

    std::size_t size() const { return steps_.size(); }
    const ChainStep& step(std::size_t i) const { return steps_[i]; }

    cplx forward_step(std::size_t i, cplx z) const;
    cplx inverse_step(std::size_t i, cplx w) const;

    // Compose steps [first, last) forward, or unwind them in reverse order.
    cplx forward_range(std::size_t first, std::size_t last, cplx z) const;
    cplx inverse_range(std::size_t first, std::size_t last, cplx w) const;

    cplx forward(cplx z) const { return forward_range(0, size(), z); }
    cplx inverse(cplx w) const { return inverse_range(0, size(), w); }

    // Membership in the source region of step i (i == size() addresses the
    // final codomain, the unit disk), with closure tolerance tol.
    bool region_contains(std::size_t i, cplx z, double tol) const;
    const char* region_name(std::size_t i) const;

    // Sampled-grid validation: every intermediate value stays in its declared
    // region and inverse(forward(z)) returns to z.
    struct Validation {
        bool ok = false;
        double max_roundtrip_err = 0.0;
        double max_region_violation = 0.0;
    };
    Validation validate(int grid, double tol) const;

private:
    explicit ConformalChain(std::vector<ChainStep> steps) : steps_(std::move(steps)) {}
    std::vector<ChainStep> steps_;
};

// First leg of the chain: i sqrt(-z) + 1, branch with sqrt(1) = 1, taking the
// slit disk onto the half-disk {|w - 1| < 1, Im w > 0}.  Points on [0, 1)
// raise a domain error; the boundary corner z = -1 is admitted when flagged.
cplx half_disk_leg(const DiskPoint& z);

// Second leg: ((1/w - 1/2)^2 + i)/((1/w - 1/2)^2 - i), half-disk onto the
// unit disk.  Inputs within 1e-9 of the half-disk edge are admitted and
// produce boundary-flagged output.
DiskPoint disk_leg(cplx w);

// Full map g: slit disk -> disk.  Inputs anchored at 1 route through an
// exact deviation-form branch whose output is anchored at +1 (approach from
// below the slit) or -1 (from above), preserving relative accuracy for
// deviations far below double resolution.
Point slit_to_disk(const Point& z);

// Inverse map h: disk -> slit disk, by unwinding the chain with explicit
// elementary inverses.  Inputs anchored at +-1 use exact deviation algebra;
// outputs within 1/2 of 1 are emitted anchored at 1 through the identity
// 1 - h = -8iv/(1 - 2iv)^2 with v = sqrt(i(1 + z)/(1 - z)).
Point disk_to_slit(const Point& z);

// The printed one-shot formula ((2 lambda - 1)/(2 lambda + 1))^2 with
// lambda = sqrt(-i R(z)) on the branch cut along [0, +inf) normalized by
// sqrt(-1) = -i.  Two candidate ratios R are kept because the source for the
// formula garbles the ratio; select_closed_form_ratio picks the one agreeing
// with the composition-based map.
enum class ClosedFormRatio {
    one_plus_over_one_minus, // R(z) = (1 + z)/(1 - z)
    shifted                  // R(z) = (z + 1)/(z - 1)
};
cplx closed_form_slit_map(cplx z, ClosedFormRatio ratio);
cplx closed_form_slit_map(cplx z); // the selected candidate

struct RatioSelection {
    ClosedFormRatio selected = ClosedFormRatio::one_plus_over_one_minus;
    double err_selected = 0.0;
    double err_rejected = 0.0;
    bool unique = false; // exactly one candidate within tolerance
};
RatioSelection select_closed_form_ratio(int grid, double tol);

// Radial limit of h at a boundary point: h(r zeta) along r = 1 - 2^{-j},
// j <= 48, declared converged when successive values differ by < 1e-6.
cplx radial_limit_slit_map(cplx zeta, bool* converged);

struct RadialLimit {
    cplx zeta;
    cplx limit;
    bool converged = false;
};

struct BoundaryTrace {
    std::vector<RadialLimit> points;
    std::vector<cplx> preimages_of_one; // sampled zeta with limit within 1e-4 of 1
    bool found_zero_preimage = false;
    cplx zero_preimage{0.0, 0.0}; // refined boundary preimage of 0
    double zero_preimage_limit_abs = 0.0;
    int slit_hits = 0;        // sampled limits sitting on [0, 1)
    bool slit_double_cover = false; // the slit-arc profile dips once and rises
};

// Samples equispaced boundary points (the samples count should be even so
// that +-1 are hit exactly), estimates radial limits of h, identifies the
// preimages of 1, the arc covering the slit twice, and refines the unique
// boundary preimage of 0.
BoundaryTrace boundary_trace(int samples);

} // namespace slitdisk
