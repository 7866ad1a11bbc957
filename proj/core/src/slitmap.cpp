#include "slitdisk/slitmap.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>

#include "slitdisk/errors.hpp"

namespace slitdisk {

namespace {

constexpr double kRegionTol = 1e-9;
const cplx kI(0.0, 1.0);

// How far outside the closed region a value sits (0 when inside); the slit
// exclusions are binary because sampled grids never land on them exactly.
double region_violation(std::size_t i, cplx z) {
    const double outside_disk = std::max(0.0, std::abs(z) - 1.0);
    switch (i) {
    case 0:
        if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() < 1.0)
            return 1.0;
        return outside_disk;
    case 1:
        if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() > -1.0)
            return 1.0;
        return outside_disk;
    case 2:
        return outside_disk + std::max(0.0, -z.real());
    case 3:
        return outside_disk + std::max(0.0, -z.imag());
    case 4:
        return std::max(0.0, std::abs(z - 1.0) - 1.0) + std::max(0.0, -z.imag());
    case 5:
        return std::max(0.0, 0.5 - z.real()) + std::max(0.0, z.imag());
    case 6:
        return std::max(0.0, -z.real()) + std::max(0.0, z.imag());
    case 7:
        return std::max(0.0, -z.real()) + std::max(0.0, -z.imag());
    case 8:
        return std::max(0.0, -z.imag());
    default:
        return outside_disk;
    }
}

} // namespace

const ConformalChain& ConformalChain::standard() {
    using K = ChainStep::Kind;
    static const ConformalChain chain(std::vector<ChainStep>{
        {K::negate, {0.0, 0.0}, "", "slit disk"},
        {K::sqrt_principal, {0.0, 0.0}, "cut (-inf,0], sqrt(1)=1", "disk minus (-1,0]"},
        {K::mul_i, {0.0, 0.0}, "", "right half-disk"},
        {K::add, {1.0, 0.0}, "", "upper half-disk"},
        {K::reciprocal, {0.0, 0.0}, "", "half-disk at 1"},
        {K::add, {-0.5, 0.0}, "", "quarter-plane Re>1/2, Im<0"},
        {K::mul_i, {0.0, 0.0}, "", "fourth quadrant"},
        {K::square, {0.0, 0.0}, "inverse branch kept in the first quadrant", "first quadrant"},
        {K::cayley, {0.0, 0.0}, "", "upper half plane"},
    });
    return chain;
}

cplx ConformalChain::forward_step(std::size_t i, cplx z) const {
    switch (steps_[i].kind) {
    case ChainStep::Kind::negate:
        return -z;
    case ChainStep::Kind::sqrt_principal:
        return std::sqrt(z);
    case ChainStep::Kind::mul_i:
        return kI * z;
    case ChainStep::Kind::add:
        return z + steps_[i].shift;
    case ChainStep::Kind::reciprocal:
        if (z == cplx(0.0, 0.0))
            throw BranchError("conformal chain: forward step through a pole");
        return 1.0 / z;
    case ChainStep::Kind::square:
        return z * z;
    case ChainStep::Kind::cayley:
        return (z - kI) / (z + kI);
    }
    throw DomainError("conformal chain: unknown step");
}

cplx ConformalChain::inverse_step(std::size_t i, cplx w) const {
    switch (steps_[i].kind) {
    case ChainStep::Kind::negate:
        return -w;
    case ChainStep::Kind::sqrt_principal:
        return w * w;
    case ChainStep::Kind::mul_i:
        return -kI * w;
    case ChainStep::Kind::add:
        return w - steps_[i].shift;
    case ChainStep::Kind::reciprocal:
        if (w == cplx(0.0, 0.0))
            throw BranchError("conformal chain: inverse step through a pole");
        return 1.0 / w;
    case ChainStep::Kind::square: {
        const cplx r = std::sqrt(w);
        const double tol = kRegionTol * (1.0 + std::abs(r));
        auto in_source = [&](cplx c) {
            return region_violation(i, c) <= tol;
        };
        if (in_source(r))
            return r;
        if (in_source(-r))
            return -r;
        throw BranchError("conformal chain: inverse square root left its region");
    }
    case ChainStep::Kind::cayley:
        if (w == cplx(1.0, 0.0))
            throw BranchError("conformal chain: inverse Cayley at the pole");
        return kI * (1.0 + w) / (1.0 - w);
    }
    throw DomainError("conformal chain: unknown step");
}

cplx ConformalChain::forward_range(std::size_t first, std::size_t last, cplx z) const {
    for (std::size_t i = first; i < last; ++i)
        z = forward_step(i, z);
    return z;
}

cplx ConformalChain::inverse_range(std::size_t first, std::size_t last, cplx w) const {
    for (std::size_t i = last; i > first; --i)
        w = inverse_step(i - 1, w);
    return w;
}

bool ConformalChain::region_contains(std::size_t i, cplx z, double tol) const {
    return region_violation(i, z) <= tol;
}

const char* ConformalChain::region_name(std::size_t i) const {
    if (i < steps_.size())
        return steps_[i].domain;
    return "unit disk";
}

ConformalChain::Validation ConformalChain::validate(int grid, double tol) const {
    Validation v;
    if (grid < 4)
        throw DomainError("chain validation: grid too coarse");
    for (int p = 1; p <= grid; ++p) {
        const double rho = 0.95 * static_cast<double>(p) / (grid + 1);
        for (int q = 1; q <= grid; ++q) {
            const double th =
                2.0 * std::numbers::pi * static_cast<double>(q) / (grid + 1);
            const cplx z0 = std::polar(rho, th);
            cplx z = z0;
            for (std::size_t i = 0; i < steps_.size(); ++i) {
                v.max_region_violation =
                    std::max(v.max_region_violation, region_violation(i, z));
                z = forward_step(i, z);
            }
            v.max_region_violation = std::max(
                v.max_region_violation, region_violation(steps_.size(), z));
            const cplx back = inverse(z);
            v.max_roundtrip_err = std::max(v.max_roundtrip_err, std::abs(back - z0));
        }
    }
    v.ok = v.max_roundtrip_err <= tol && v.max_region_violation <= kRegionTol;
    return v;
}

cplx half_disk_leg(const DiskPoint& z) {
    const double mod = std::abs(z.value);
    if (mod >= 1.0 && !(z.boundary && mod <= 1.0 + 1e-12))
        throw DomainError("half_disk_leg: point outside the disk");
    if (z.value.imag() == 0.0 && z.value.real() >= 0.0 && z.value.real() < 1.0)
        throw DomainError("half_disk_leg: point on the slit [0,1)");
    return kI * std::sqrt(-z.value) + 1.0;
}

DiskPoint disk_leg(cplx w) {
    const double edge_dist = 1.0 - std::abs(w - 1.0);
    if (edge_dist < -1e-9 || w.imag() < -1e-9)
        throw DomainError("disk_leg: point outside the half-disk");
    const bool boundary = edge_dist <= 1e-9 || w.imag() <= 1e-9;
    if (w == cplx(0.0, 0.0))
        return DiskPoint{cplx(1.0, 0.0), true}; // corner maps to 1 in the limit
    const cplx u = 1.0 / w - 0.5;
    const cplx t = u * u;
    if (t == kI)
        throw DomainError("disk_leg: pole of the Moebius step");
    return DiskPoint{(t + kI) / (t - kI), boundary};
}

namespace {

// g on inputs anchored at 1: z = 1 - delta with delta carried exactly.  The
// first leg sends z to delta/(1 + sqrt(1 - delta)) (approach from below the
// slit, Im delta > 0, near the corner 0) or to 2 minus that (from above,
// near the corner 2); the second leg is algebraically collapsed so the
// output deviation from +-1 never suffers cancellation.
Point slit_to_disk_deviation(cplx delta, bool boundary) {
    const cplx root = std::sqrt(1.0 - delta); // Re > 0 since Re delta <= 1/2
    const cplx nu = delta / (1.0 + root);
    if (delta.imag() > 0.0) {
        const cplx u = (2.0 - nu) / (2.0 * nu);
        const cplx t = u * u;
        return Point::from_one(-2.0 * kI / (t - kI), boundary);
    }
    const cplx u = nu / (2.0 * (2.0 - nu));
    const cplx t = u * u;
    return Point::from_minus_one(2.0 * t / (t - kI), boundary);
}

// Square root selected in the closed first quadrant (relative tolerance);
// the Cayley lift guarantees Im s >= 0 up to rounding for interior inputs.
cplx sqrt_in_first_quadrant(cplx s) {
    const cplx r = std::sqrt(s);
    const double tol = 1e-9 * (1.0 + std::abs(r));
    if (r.real() >= -tol && r.imag() >= -tol)
        return r;
    if (-r.real() >= -tol && -r.imag() >= -tol)
        return -r;
    throw BranchError("disk_to_slit: square root left the first quadrant");
}

} // namespace

Point slit_to_disk(const Point& z0) {
    const Point z = z0.reanchored();
    z.require_interior("slit_to_disk");
    if (z.anchor() == 1.0) {
        const cplx delta = z.one_minus();
        if (delta.imag() == 0.0) {
            if (delta.real() >= 0.0)
                throw DomainError("slit_to_disk: point on the slit [0,1)");
            throw DomainError("slit_to_disk: point outside the disk");
        }
        return slit_to_disk_deviation(delta, z.boundary_allowed());
    }
    const DiskPoint image =
        disk_leg(half_disk_leg(DiskPoint{z.value(), z.boundary_allowed()}));
    return Point::regular(image.value, image.boundary);
}

Point disk_to_slit(const Point& z0) {
    const Point z = z0.reanchored();
    z.require_interior("disk_to_slit");
    cplx s;
    if (z.anchor() == 1.0) {
        const cplx gamma = z.one_minus();
        if (gamma == cplx(0.0, 0.0))
            return Point::from_one(cplx(0.0, 0.0), true); // h(1) = 1
        s = kI * (2.0 - gamma) / gamma;
    } else if (z.anchor() == -1.0) {
        const cplx gamma = z.offset(); // 1 + z, exact for this anchor
        if (gamma == cplx(0.0, 0.0))
            return Point::from_one(cplx(0.0, 0.0), true); // h(-1) = 1
        s = kI * gamma / (2.0 - gamma);
    } else {
        s = kI * (1.0 + z.value()) / (1.0 - z.value());
    }
    const cplx v = sqrt_in_first_quadrant(s);
    const cplx d = 1.0 - 2.0 * kI * v; // Re >= 1: no cancellation
    const cplx dev = -8.0 * kI * v / (d * d);
    if (std::abs(dev) <= 0.5)
        return Point::from_one(dev, z.boundary_allowed());
    return Point::regular(1.0 - dev, z.boundary_allowed());
}

cplx closed_form_slit_map(cplx z, ClosedFormRatio ratio) {
    if (z == cplx(1.0, 0.0))
        throw DomainError("closed_form_slit_map: pole of the ratio at z = 1");
    const cplx R = (ratio == ClosedFormRatio::one_plus_over_one_minus)
                       ? (1.0 + z) / (1.0 - z)
                       : (z + 1.0) / (z - 1.0);
    const cplx x = -kI * R;
    if (x.imag() == 0.0 && x.real() >= 0.0)
        throw BranchError("closed_form_slit_map: value on the branch cut [0,+inf)");
    double alpha = std::arg(x);
    if (alpha <= 0.0)
        alpha += 2.0 * std::numbers::pi;
    // cut along [0,+inf) with sqrt(-1) = -i: take the root in the lower half.
    const cplx lambda = std::polar(std::sqrt(std::abs(x)),
                                   0.5 * alpha + std::numbers::pi);
    const cplx q = (2.0 * lambda - 1.0) / (2.0 * lambda + 1.0);
    return q * q;
}

cplx closed_form_slit_map(cplx z) {
    return closed_form_slit_map(z, ClosedFormRatio::one_plus_over_one_minus);
}

RatioSelection select_closed_form_ratio(int grid, double tol) {
    if (grid < 4)
        throw DomainError("select_closed_form_ratio: grid too coarse");
    double err[2] = {0.0, 0.0};
    const ClosedFormRatio cands[2] = {ClosedFormRatio::one_plus_over_one_minus,
                                      ClosedFormRatio::shifted};
    for (int p = 0; p < grid; ++p) {
        const double rho = 0.9 * (p + 0.5) / grid;
        for (int q = 0; q < grid; ++q) {
            const double th = 2.0 * std::numbers::pi * (q + 0.5) / grid;
            const cplx z = std::polar(rho, th);
            const cplx ref = disk_to_slit(Point::regular(z)).value();
            for (int c = 0; c < 2; ++c)
                err[c] = std::max(err[c],
                                  std::abs(closed_form_slit_map(z, cands[c]) - ref));
        }
    }
    RatioSelection sel;
    const int best = (err[0] <= err[1]) ? 0 : 1;
    sel.selected = cands[best];
    sel.err_selected = err[best];
    sel.err_rejected = err[1 - best];
    sel.unique = sel.err_selected <= tol && sel.err_rejected > tol;
    return sel;
}

namespace {

cplx radial_limit_point(const std::function<Point(int)>& point_at, bool* converged) {
    // h - 1 shrinks like sqrt(1 - r) near the preimages of 1, so the ladder
    // needs to reach 2^-48 before successive steps drop under 1e-6 at -1.
    cplx prev = disk_to_slit(point_at(1)).value();
    for (int j = 2; j <= 48; ++j) {
        const cplx cur = disk_to_slit(point_at(j)).value();
        if (std::abs(cur - prev) < 1e-6) {
            if (converged)
                *converged = true;
            return cur;
        }
        prev = cur;
    }
    if (converged)
        *converged = false;
    return prev;
}

} // namespace

cplx radial_limit_slit_map(cplx zeta, bool* converged) {
    if (std::abs(std::abs(zeta) - 1.0) > 1e-12)
        throw DomainError("radial_limit_slit_map: zeta must be unimodular");
    if (zeta == cplx(1.0, 0.0))
        return radial_limit_point(
            [](int j) { return Point::from_one(std::ldexp(1.0, -j), true); },
            converged);
    if (zeta == cplx(-1.0, 0.0))
        return radial_limit_point(
            [](int j) { return Point::from_minus_one(cplx(std::ldexp(1.0, -j), 0.0), true); },
            converged);
    const double th = std::arg(zeta);
    return radial_limit_point(
        [th](int j) {
            return Point::regular(std::polar(1.0 - std::ldexp(1.0, -j), th));
        },
        converged);
}

namespace {

double boundary_modulus_near(double theta) {
    const double r = 1.0 - std::ldexp(1.0, -36);
    return std::abs(disk_to_slit(Point::regular(std::polar(r, theta))).value());
}

} // namespace

BoundaryTrace boundary_trace(int samples) {
    if (samples < 16)
        throw DomainError("boundary_trace: need at least 16 samples");
    if (samples % 2 != 0)
        ++samples; // even counts hit both +1 and -1 exactly
    BoundaryTrace tr;
    tr.points.reserve(static_cast<std::size_t>(samples));
    std::vector<std::pair<double, double>> slit_profile; // (theta, t on slit)
    for (int k = 0; k < samples; ++k) {
        const double th = 2.0 * std::numbers::pi * k / samples;
        cplx zeta;
        if (k == 0)
            zeta = cplx(1.0, 0.0);
        else if (2 * k == samples)
            zeta = cplx(-1.0, 0.0);
        else
            zeta = std::polar(1.0, th);
        RadialLimit rl;
        rl.zeta = zeta;
        rl.limit = radial_limit_slit_map(zeta, &rl.converged);
        if (std::abs(rl.limit - 1.0) <= 1e-4)
            tr.preimages_of_one.push_back(zeta);
        if (std::abs(rl.limit.imag()) <= 1e-6 && rl.limit.real() >= -1e-6 &&
            rl.limit.real() < 1.0) {
            ++tr.slit_hits;
            slit_profile.emplace_back(th, rl.limit.real());
        }
        tr.points.push_back(rl);
    }

    // Double cover of the slit: along the covering arc the slit coordinate
    // must fall to a single interior minimum and rise again.
    if (slit_profile.size() >= 3) {
        std::size_t imin = 0;
        for (std::size_t i = 1; i < slit_profile.size(); ++i)
            if (slit_profile[i].second < slit_profile[imin].second)
                imin = i;
        if (imin > 0 && imin + 1 < slit_profile.size()) {
            bool mono = true;
            for (std::size_t i = 1; i <= imin; ++i)
                mono = mono && slit_profile[i].second <= slit_profile[i - 1].second + 1e-9;
            for (std::size_t i = imin + 1; i < slit_profile.size(); ++i)
                mono = mono && slit_profile[i].second >= slit_profile[i - 1].second - 1e-9;
            tr.slit_double_cover = mono;
        }
        // Refine the minimum to locate the boundary preimage of 0.
        const double step = 2.0 * std::numbers::pi / samples;
        double a = slit_profile[imin].first - step;
        double b = slit_profile[imin].first + step;
        constexpr double kInvPhi = 0.6180339887498949;
        double x1 = b - kInvPhi * (b - a);
        double x2 = a + kInvPhi * (b - a);
        double f1 = boundary_modulus_near(x1);
        double f2 = boundary_modulus_near(x2);
        for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
            if (f1 <= f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - kInvPhi * (b - a);
                f1 = boundary_modulus_near(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + kInvPhi * (b - a);
                f2 = boundary_modulus_near(x2);
            }
        }
        const double th_star = 0.5 * (a + b);
        tr.zero_preimage = std::polar(1.0, th_star);
        tr.zero_preimage_limit_abs = boundary_modulus_near(th_star);
        tr.found_zero_preimage = tr.zero_preimage_limit_abs < 1e-4;
    }
    return tr;
}

} // namespace slitdisk
