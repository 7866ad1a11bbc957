#pragma once

#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "slitdisk/point.hpp"

namespace slitdisk {

// Resolved run configuration.  Every threshold the verification suite
// compares against lives here, so re-pinning a constant touches data, not
// check code.  The file format is flat "[section]" + "key = value" text
// parsed by parse_into; complex values are written "re,im".
struct RunConfig {
    // [run]
    unsigned long seed = 0;
    std::string output_dir = "out";

    // [counterexample]
    cplx a{0.0, 0.5};
    int n_max = 12;
    double eval_tol = 1e-9;
    double zero_radius = 0.995;
    int path_k_lo = 3;
    int path_k_hi = 12;
    double floor_min = 0.01;
    double control_decay_max = 1e-6;

    // [metric]
    int metric_samples = 10000;
    double metric_radius = 0.99;
    double metric_tol = 1e-12;
    double deviation_tol = 1e-10;

    // [thin]
    int thin_k_lo = 10;
    int thin_k_hi = 30;
    int thin_window = 60;
    int thin_prefix_m = 9;
    double delta_k10_min = 0.6538;
    double delta_k30_min = 0.8731;

    // [hoffman]
    double hoffman_half = 0.014671073764252387;
    double hoffman_tol = 1e-3;

    // [slit]
    double theta1 = 0.78539816339744831; // pi/4
    int slit_m_lo = 3;
    int slit_m_hi = 20;
    double slit_c = 0.21473222073055014;
    double slit_c_tol = 1e-4;
    double slit_floor_min = 0.01;
    double diagonal_tol = 1e-4;

    // [map]
    int map_samples = 10000;
    double roundtrip_tol = 1e-9;
    double radial_tol = 1e-4;
    double closed_form_tol = 1e-8;
    int boundary_samples = 64;

    // [lemma25]
    int lemma_n_max = 12;
    int lemma_w_samples = 20;
    int segment_max = 4;
    double w_min_abs = 0.02;

    // [remark26]  (defaults 0.5 e^{3i pi/4} and 0.6 e^{2i pi/3})
    cplx variant_a1{-std::numbers::sqrt2 / 4.0, std::numbers::sqrt2 / 4.0};
    cplx variant_a2{-0.3, 0.3 * std::numbers::sqrt3};

    // Ordered (section.key, formatted value) pairs: the canonical flat view
    // used for the config echo in reports and for writing cfg files.
    std::vector<std::pair<std::string, std::string>> entries() const;

    // Render as a cfg file (sections in canonical order).
    std::string to_text() const;

    // Apply "key = value" assignments from cfg text; unknown keys and
    // malformed values are domain errors, so configs cannot silently rot.
    void parse_into(const std::string& text);

    static RunConfig load_file(const std::string& path);
    void validate() const;
};

} // namespace slitdisk
