#include "slitdisk/hyperbolic.hpp"

#include <cmath>
#include <numbers>

namespace slitdisk {

double pseudo_distance(const Point& z0, const Point& w0) {
    const Point z = z0.reanchored();
    const Point w = w0.reanchored();
    z.require_interior("pseudo_distance");
    w.require_interior("pseudo_distance");
    const cplx num = point_diff(z, w);
    const cplx den = one_minus_conj_mul(z, w);
    return std::abs(num) / std::abs(den);
}

double pseudo_distance_deviation(const BoundaryDeviation& d1,
                                 const BoundaryDeviation& d2) {
    return pseudo_distance(Point(d1), Point(d2));
}

cplx mobius(cplx a, cplx z) {
    if (std::abs(a) >= 1.0)
        throw DomainError("mobius: |a| must be < 1");
    return (a - z) / (1.0 - std::conj(a) * z);
}

double normalized_arg(cplx z) {
    double t = std::arg(z);
    if (t < 0.0) t += 2.0 * std::numbers::pi;
    if (t >= 2.0 * std::numbers::pi) t = 0.0;
    return t;
}

} // namespace slitdisk
