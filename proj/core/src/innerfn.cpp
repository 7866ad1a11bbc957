#include "slitdisk/innerfn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "slitdisk/errors.hpp"

namespace slitdisk {

SingularInner SingularInner::single(cplx eta, double mass) {
    SingularInner s;
    s.add_atom(eta, mass);
    return s;
}

void SingularInner::add_atom(cplx eta, double mass) {
    if (std::abs(std::abs(eta) - 1.0) > 1e-12)
        throw DomainError("singular inner: atom support must be unimodular");
    if (mass < 0.0)
        throw DomainError("singular inner: atom mass must be nonnegative");
    atoms_.push_back(SingularAtom{eta, mass});
}

double SingularInner::total_mass() const {
    double t = 0.0;
    for (const auto& a : atoms_)
        t += a.mass;
    return t;
}

cplx singular_eval(const SingularInner& S, const Point& z0) {
    const Point z = z0.reanchored();
    z.require_interior("singular_eval");
    cplx exponent(0.0, 0.0);
    for (const auto& atom : S.atoms()) {
        if (atom.mass == 0.0)
            continue;
        // conj(eta) * anchor is exact (anchor in {0, +-1}); when the anchor
        // equals the support point, 1 - ea vanishes exactly and the quotient
        // reduces to the deviation identity (2 - delta)/delta.
        const cplx etac = std::conj(atom.eta);
        const cplx ea = etac * z.anchor();
        const cplx eo = etac * z.offset();
        const cplx den = (1.0 - ea) - eo;
        const cplx num = (1.0 + ea) + eo;
        if (den == cplx(0.0, 0.0))
            throw DomainError("singular_eval: evaluation at an atom support point");
        exponent += -atom.mass * num / den;
    }
    return std::exp(exponent);
}

double radial_real_part(double eps, double theta) {
    if (!(eps > 0.0))
        throw DomainError("radial_real_part: eps must be positive");
    if (!(std::abs(theta) < std::acos(-1.0) / 2.0))
        throw DomainError("radial_real_part: |theta| must be below pi/2");
    if (!(2.0 * std::cos(theta) > eps))
        throw DomainError("radial_real_part: 1 - eps e^{i theta} is not interior");
    return -(2.0 * eps * std::cos(theta) - eps * eps) / (eps * eps);
}

double decay_envelope(double eps, double theta0) {
    return std::exp(-2.0 * std::cos(theta0) / eps + 1.0);
}

ApproachPath make_path(cplx eta, double aperture,
                       const std::vector<double>& eps_schedule,
                       const std::vector<double>& theta_schedule) {
    if (std::abs(std::abs(eta) - 1.0) > 1e-12)
        throw DomainError("make_path: target must be a boundary point");
    if (!(aperture > 0.0 && aperture < std::acos(-1.0) / 2.0))
        throw DomainError("make_path: aperture must lie in (0, pi/2)");
    if (eps_schedule.empty())
        throw DomainError("make_path: empty epsilon schedule");
    if (theta_schedule.empty())
        throw DomainError("make_path: empty angle schedule");
    if (theta_schedule.size() != 1 && theta_schedule.size() != eps_schedule.size())
        throw DomainError("make_path: angle schedule length mismatch");

    ApproachPath path;
    path.eta = eta;
    path.aperture = aperture;
    path.epsilons = eps_schedule;
    path.angles.reserve(eps_schedule.size());
    path.points.reserve(eps_schedule.size());
    double prev = 2.0;
    for (std::size_t k = 0; k < eps_schedule.size(); ++k) {
        const double eps = eps_schedule[k];
        if (!(eps > 0.0 && eps < prev))
            throw DomainError("make_path: epsilons must be positive and strictly decreasing");
        prev = eps;
        const double theta =
            (theta_schedule.size() == 1) ? theta_schedule[0] : theta_schedule[k];
        if (std::abs(theta) > aperture + 1e-15)
            throw DomainError("make_path: angle outside the aperture");
        if (!(2.0 * std::cos(theta) > eps))
            throw DomainError("make_path: path point leaves the disk");
        path.angles.push_back(theta);
        const cplx dev = std::polar(eps, theta);
        if (eta == cplx(1.0, 0.0))
            path.points.push_back(Point::from_one(dev));
        else if (eta == cplx(-1.0, 0.0))
            path.points.push_back(Point::from_minus_one(-dev));
        else
            path.points.push_back(Point::regular(eta * (1.0 - dev)));
    }
    return path;
}

double nontangential_inf(const std::function<cplx(const Point&)>& f,
                         const ApproachPath& path, double tail_fraction) {
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
        throw DomainError("nontangential_inf: tail fraction must lie in (0, 1]");
    const std::size_t n = path.points.size();
    const std::size_t tail =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(tail_fraction * n)));
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t k = n - tail; k < n; ++k)
        lo = std::min(lo, std::abs(f(path.points[k])));
    return lo;
}

std::string path_profile_csv(const std::function<cplx(const Point&)>& f,
                             const ApproachPath& path) {
    std::ostringstream out;
    out << "eps,theta,abs,arg\n";
    char buf[160];
    for (std::size_t k = 0; k < path.points.size(); ++k) {
        const cplx v = f(path.points[k]);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n",
                      path.epsilons[k], path.angles[k], std::abs(v), std::arg(v));
        out << buf;
    }
    return out.str();
}

} // namespace slitdisk
