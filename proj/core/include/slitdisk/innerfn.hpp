#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slitdisk/point.hpp"

namespace slitdisk {

struct SingularAtom {
    cplx eta;    // unimodular support point
    double mass; // >= 0; zero mass acts as the identity factor
};

// Product of atomic singular inner factors exp(-t (1 + conj(eta) z)/(1 - conj(eta) z)).
class SingularInner {
public:
    SingularInner() = default;
    static SingularInner single(cplx eta, double mass);

    void add_atom(cplx eta, double mass);
    const std::vector<SingularAtom>& atoms() const { return atoms_; }
    double total_mass() const;

private:
    std::vector<SingularAtom> atoms_;
};

// Certified-by-construction evaluation: anchored inputs whose anchor equals
// an atom's support point go through the exact identity
// (1 + z)/(1 - z) = (2 - delta)/delta with delta the stored deviation, so
// the wild exponent near the atom keeps full relative accuracy.  Deep decay
// underflows to +0, which downstream comparisons treat as a true zero.
cplx singular_eval(const SingularInner& S, const Point& z);

// Exact real part of -(1 + z)/(1 - z) at z = 1 - eps e^{i theta}:
// -(2 eps cos theta - eps^2)/eps^2.  This is the per-unit-mass exponent that
// drives the non-tangential decay of a boundary atom.
double radial_real_part(double eps, double theta);

// Pointwise decay envelope for a unit-mass atom over the aperture |theta| <= theta0:
// |S_1(1 - eps e^{i theta})| <= exp(-2 cos(theta0)/eps + 1).
double decay_envelope(double eps, double theta0);

// A non-tangential approach path to a boundary point: points
// eta (1 - eps_k e^{i theta_k}) with |theta_k| <= aperture.  Points targeting
// eta = +-1 are emitted in deviation form.
struct ApproachPath {
    cplx eta;
    double aperture = 0.0;
    std::vector<double> epsilons;
    std::vector<double> angles;
    std::vector<Point> points;
};

// Validates the schedules (eps strictly decreasing and positive, every angle
// within the aperture, every point interior) and builds the path.  A single
// angle is broadcast over the whole epsilon schedule.
ApproachPath make_path(cplx eta, double aperture,
                       const std::vector<double>& eps_schedule,
                       const std::vector<double>& theta_schedule);

// min |f| over the trailing tail_fraction of the path: a desk-scale estimate
// of liminf |f| along the approach.
double nontangential_inf(const std::function<cplx(const Point&)>& f,
                         const ApproachPath& path, double tail_fraction = 0.5);

// CSV rows "eps,theta,abs,arg" (with header) profiling f along the path.
std::string path_profile_csv(const std::function<cplx(const Point&)>& f,
                             const ApproachPath& path);

} // namespace slitdisk
