#pragma once

#include "slitdisk/point.hpp"

namespace slitdisk {

// Pseudo-hyperbolic distance d(z, w) = |z - w| / |1 - conj(z) w| on the
// unit disk.  Accepts any mix of ordinary and deviation-represented points;
// both arguments are re-anchored so that points near +-1 lose nothing.
double pseudo_distance(const Point& z, const Point& w);

// Same metric with both points given as deviations from 1:
//   d(1 - d1, 1 - d2) = |d1 - d2| / |d1 + conj(d2) - conj(d2) d1|.
// Valid (and accurate) for arbitrarily small deviations.
double pseudo_distance_deviation(const BoundaryDeviation& d1,
                                 const BoundaryDeviation& d2);

// Disk automorphism phi_a(z) = (a - z)/(1 - conj(a) z).  An involution:
// phi_a(phi_a(z)) = z, phi_a(a) = 0, phi_a(0) = a.
cplx mobius(cplx a, cplx z);

// Argument normalized to [0, 2*pi); values that round to 2*pi map to 0.
double normalized_arg(cplx z);

} // namespace slitdisk
