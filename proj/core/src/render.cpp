#include "slitdisk/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "slitdisk/blaschke.hpp"
#include "slitdisk/counterexample.hpp"
#include "slitdisk/errors.hpp"
#include "slitdisk/hyperbolic.hpp"
#include "slitdisk/slitmap.hpp"

namespace slitdisk {

namespace {

struct Viewport {
    double x_lo, x_hi, y_lo, y_hi;
};

Viewport viewport_for(const std::string& region) {
    if (region == "disk" || region == "slit-disk")
        return {-1.05, 1.05, -1.05, 1.05};
    if (region == "half-disk")
        return {-0.05, 2.05, -0.05, 1.05};
    if (region == "near-1")
        return {0.70, 1.02, -0.16, 0.16};
    throw DomainError("render: unknown region '" + region + "'");
}

// Membership test for the pixel mask; half_px thickens the slit so it shows
// up as a line instead of a measure-zero set.
bool in_region(const std::string& region, cplx z, double half_px) {
    if (region == "disk" || region == "near-1")
        return std::abs(z) < 1.0;
    if (region == "slit-disk")
        return std::abs(z) < 1.0 &&
               !(std::abs(z.imag()) <= half_px && z.real() >= 0.0 && z.real() < 1.0);
    if (region == "half-disk")
        return std::abs(z - cplx(1.0, 0.0)) < 1.0 && z.imag() > 0.0;
    throw DomainError("render: unknown region '" + region + "'");
}

void hue_to_rgb(double hue, double value, int rgb[3]) {
    // hue in [0,1), value in [0,1]; full saturation wheel
    const double h6 = hue * 6.0;
    const int sector = std::min(5, static_cast<int>(h6));
    const double f = h6 - sector;
    const double q = value * (1.0 - f);
    const double t = value * f;
    double r = 0.0, g = 0.0, b = 0.0;
    switch (sector) {
    case 0: r = value; g = t; break;
    case 1: r = q; g = value; break;
    case 2: g = value; b = t; break;
    case 3: g = q; b = value; break;
    case 4: r = t; b = value; break;
    default: r = value; b = q; break;
    }
    rgb[0] = static_cast<int>(std::lround(255.0 * r));
    rgb[1] = static_cast<int>(std::lround(255.0 * g));
    rgb[2] = static_cast<int>(std::lround(255.0 * b));
}

} // namespace

std::vector<std::string> render_targets() {
    return {"phi1", "phi2", "g", "h", "B", "phi"};
}

std::vector<std::string> render_regions(const std::string& target) {
    if (target == "phi1" || target == "g")
        return {"slit-disk", "near-1"};
    if (target == "phi2")
        return {"half-disk"};
    if (target == "h" || target == "B" || target == "phi")
        return {"disk", "near-1"};
    throw DomainError("render: unknown target '" + target + "'");
}

bool render_region_ok(const std::string& target, const std::string& region) {
    const auto allowed = render_regions(target);
    return std::find(allowed.begin(), allowed.end(), region) != allowed.end();
}

std::string render_ppm(const std::string& target, const std::string& region,
                       int res, const RunConfig& cfg) {
    if (res < 8 || res > 4096)
        throw DomainError("render: resolution must be in [8, 4096]");
    if (!render_region_ok(target, region))
        throw DomainError("render: target '" + target + "' does not accept region '" +
                          region + "'");

    std::function<cplx(cplx)> f;
    BlaschkeProduct B;
    Counterexample cx;
    const double coarse_tol = 1e-9;
    if (target == "phi1") {
        f = [](cplx z) { return ConformalChain::standard().forward_range(0, 4, z); };
    } else if (target == "phi2") {
        f = [](cplx z) { return ConformalChain::standard().forward_range(4, 9, z); };
    } else if (target == "g") {
        f = [](cplx z) { return slit_to_disk(Point::regular(z)).value(); };
    } else if (target == "h") {
        f = [](cplx z) { return disk_to_slit(Point::regular(z)).value(); };
    } else if (target == "B") {
        B = factorial_blaschke(cfg.a, cfg.n_max, true);
        f = [&B, coarse_tol](cplx z) {
            return eval(B, Point::regular(z), coarse_tol);
        };
    } else if (target == "phi") {
        cx = build_counterexample(cfg.a, cfg.n_max, cfg.eval_tol);
        f = [&cx](cplx z) { return phi_eval(cx, Point::regular(z)); };
    } else {
        throw DomainError("render: unknown target '" + target + "'");
    }

    const Viewport vp = viewport_for(region);
    const double dx = (vp.x_hi - vp.x_lo) / res;
    const double dy = (vp.y_hi - vp.y_lo) / res;
    const double half_px = 0.5 * std::max(dx, dy);

    std::string out;
    out.reserve(static_cast<std::size_t>(res) * res * 12 + 32);
    char head[48];
    std::snprintf(head, sizeof head, "P3\n%d %d\n255\n", res, res);
    out += head;
    char line[32];
    for (int row = 0; row < res; ++row) {
        const double y = vp.y_hi - (row + 0.5) * dy;
        for (int col = 0; col < res; ++col) {
            const double x = vp.x_lo + (col + 0.5) * dx;
            const cplx z(x, y);
            int rgb[3] = {0, 0, 0};
            if (in_region(region, z, half_px)) {
                bool have = false;
                cplx v;
                try {
                    v = f(z);
                    have = std::isfinite(v.real()) && std::isfinite(v.imag());
                } catch (const Error&) {
                    have = false;
                }
                if (have) {
                    const double m = std::abs(v);
                    const double bright = m / (1.0 + m);
                    const double hue = normalized_arg(v) / (2.0 * std::numbers::pi);
                    hue_to_rgb(std::min(hue, 0.999999999), bright, rgb);
                }
            }
            std::snprintf(line, sizeof line, "%d %d %d\n", rgb[0], rgb[1], rgb[2]);
            out += line;
        }
    }
    return out;
}

} // namespace slitdisk
