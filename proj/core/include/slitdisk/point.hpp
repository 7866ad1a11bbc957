#pragma once

#include <complex>
#include <cstdlib>
#include <string>

#include "slitdisk/errors.hpp"

namespace slitdisk {

using cplx = std::complex<double>;

// Evaluation points live in (or on) the closed unit disk.  Points within
// roughly 1e-8 of the boundary point 1 (or -1) cannot be stored accurately
// as a raw complex value, so a point is represented as
//
//     value = anchor + offset,   anchor in {0, +1, -1}.
//
// anchor 0 is an ordinary complex value.  anchor +1 stores z = 1 - delta
// with offset = -delta; the deviation delta is kept at full relative
// precision however small it is (the probe scales here go down to
// 1/20! ~ 4e-19 and products of such).  anchor -1 is the mirror case used
// by approach paths that converge to -1.
class Point {
public:
    Point() : anchor_(0.0), offset_(0.0) {}

    // Ordinary interior point (or boundary point if flagged).
    static Point regular(cplx z, bool boundary = false) {
        Point p;
        p.anchor_ = 0.0;
        p.offset_ = z;
        p.boundary_ = boundary;
        return p;
    }

    // z = 1 - delta.
    static Point from_one(cplx delta, bool boundary = false) {
        Point p;
        p.anchor_ = 1.0;
        p.offset_ = -delta;
        p.boundary_ = boundary;
        return p;
    }

    // z = -1 + offset.
    static Point from_minus_one(cplx offset, bool boundary = false) {
        Point p;
        p.anchor_ = -1.0;
        p.offset_ = offset;
        p.boundary_ = boundary;
        return p;
    }

    double anchor() const { return anchor_; }
    cplx offset() const { return offset_; }
    bool boundary_allowed() const { return boundary_; }

    // Collapses to a raw complex value; loses the deviation once it drops
    // below one ulp of the anchor.  Fine for display, wrong for evaluation.
    cplx value() const { return cplx(anchor_, 0.0) + offset_; }

    // 1 - z without cancellation for anchor +1 (exact) and anchor -1.
    // For anchor 0 this subtracts directly; by the representation contract
    // raw points keep |1 - z| >= ~1e-8, where direct subtraction is exact
    // in each component (Sterbenz) or harmless.
    cplx one_minus() const { return cplx(1.0 - anchor_, 0.0) - offset_; }

    // 1 - |z|^2, the quantity every metric/denominator needs.  Expanding
    // around the anchor avoids the catastrophic 1 - |1-delta|^2 form:
    //   1 - |a + o|^2 = (1 - a^2) - 2 a Re(o) - |o|^2,  a real.
    double one_minus_abs_sq() const {
        const double a = anchor_;
        return (1.0 - a * a) - 2.0 * a * offset_.real() - std::norm(offset_);
    }

    // 1 - |z|, stable near either unimodular anchor.
    double one_minus_abs() const {
        const double q = one_minus_abs_sq();
        return q / (1.0 + std::abs(value()));
    }

    bool is_interior() const { return one_minus_abs_sq() > 0.0; }
    bool is_anchored() const { return anchor_ != 0.0; }

    void require_interior(const char* who) const {
        if (boundary_) {
            if (one_minus_abs_sq() < -1e-12)
                throw DomainError(std::string(who) + ": point outside the closed disk");
            return;
        }
        if (!is_interior())
            throw DomainError(std::string(who) + ": point not inside the unit disk");
    }

    // A raw point with Re z in [0.5, 1] satisfies the Sterbenz condition, so
    // 1 - z is exact componentwise and the point can be re-anchored at +1
    // without losing a bit (mirror case at -1).  Metric denominators call
    // this first; it is what keeps the raw and deviation representations in
    // agreement down to |1 - z| ~ 1e-8.
    Point reanchored() const {
        if (anchor_ != 0.0) return *this;
        if (offset_.real() >= 0.5)
            return from_one(cplx(1.0 - offset_.real(), -offset_.imag()), boundary_);
        if (offset_.real() <= -0.5)
            return from_minus_one(cplx(offset_.real() + 1.0, offset_.imag()), boundary_);
        return *this;
    }

private:
    double anchor_;
    cplx offset_;
    bool boundary_ = false;
};

// Spec-facing aliases.  DiskPoint is an ordinary stored point;
// BoundaryDeviation is the z = 1 - delta representation.
struct DiskPoint {
    cplx value;
    bool boundary = false;
    operator Point() const { return Point::regular(value, boundary); }
};

struct BoundaryDeviation {
    cplx delta;
    operator Point() const { return Point::from_one(delta); }
};

// z - w at full precision across all anchor combinations: the anchor
// difference is an exact small integer and the offsets subtract without
// cancellation against it.
inline cplx point_diff(const Point& z, const Point& w) {
    return cplx(z.anchor() - w.anchor(), 0.0) + (z.offset() - w.offset());
}

// 1 - conj(z) w without forming conj(z)*w near 1.  With z = az + oz and
// w = aw + ow (anchors real):
//   1 - conj(z) w = (1 - az aw) - (az ow + conj(oz) aw + conj(oz) ow)
// and 1 - az aw is an exact integer in {0, 1, 2}.
inline cplx one_minus_conj_mul(const Point& z, const Point& w) {
    const double az = z.anchor(), aw = w.anchor();
    const cplx oz = std::conj(z.offset()), ow = w.offset();
    return cplx(1.0 - az * aw, 0.0) - (az * ow + oz * aw + oz * ow);
}

} // namespace slitdisk
