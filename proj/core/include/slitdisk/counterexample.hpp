#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slitdisk/blaschke.hpp"
#include "slitdisk/config.hpp"
#include "slitdisk/report.hpp"
#include "slitdisk/slitmap.hpp"

namespace slitdisk {

// The assembled map under study: phi = B o h, with B the thin Blaschke
// product carrying one free zero a plus the boundary-marching real zeros,
// h the disk -> slit-disk map, and b = g(a) the designated zero of phi.
struct Counterexample {
    cplx a{0.0, 0.0};
    BlaschkeProduct B;
    Point b = Point::regular(cplx(0.0, 0.0));
    double tol = 1e-9;
};

// Rejects real or exterior a; certifies |phi(b)| <= tol before returning.
Counterexample build_counterexample(cplx a, int n_max, double tol);

cplx phi_eval(const Counterexample& cx, const Point& z);

// Zeros of B o h strictly inside |z| = radius by the argument principle:
// the log-derivative of B is analytic, h' comes from central differences,
// and nodes double until the estimate settles on an integer.
int composed_zero_count(const BlaschkeProduct& B, double radius,
                        std::size_t start_nodes = 2048,
                        std::size_t max_nodes = std::size_t(1) << 16,
                        double margin = 1e-6, double tol = 1e-12);

int phi_zero_count(const Counterexample& cx, double radius);

// Pairwise rotation-stability of the deviation metric plus the separation
// products for a rotated copy of a real zero schedule; the quantitative
// content of replacing the factorial schedule by any thin one.
struct ThinGeneralization {
    double min_pair_slack = 0.0;     // min over pairs of d_rotated - d_plain
    double min_product_slack = 0.0;  // min over m of rotated - plain product
    double min_plain_product = 0.0;
    double min_rotated_product = 0.0;
    bool pass = false;
};
ThinGeneralization thin_generalization(const std::vector<double>& eps_seq,
                                       double theta, double tol);

// Check suites.  Each appends named, anchored records to the report; a
// record never passes by default when evaluation throws.
void check_metric(const RunConfig& cfg, VerificationReport& rep);
void check_thin(const RunConfig& cfg, VerificationReport& rep);
void check_hoffman(const RunConfig& cfg, VerificationReport& rep);
void check_slit_floor(const RunConfig& cfg, VerificationReport& rep);
void check_products(const RunConfig& cfg, VerificationReport& rep);
void check_map(const RunConfig& cfg, VerificationReport& rep);
void check_singular(const RunConfig& cfg, VerificationReport& rep);
void check_counterexample_core(const RunConfig& cfg, VerificationReport& rep);
void check_lemma25(const RunConfig& cfg, VerificationReport& rep);
void check_remark26(const RunConfig& cfg, VerificationReport& rep);
void check_thin_general(const RunConfig& cfg, VerificationReport& rep);

// Run one named group ("thin", "hoffman", "slit-floor", "products", "map",
// "counterexample", "lemma25", "remark26", "thin-general", or "all").
// Returns the group names executed; unknown selectors are domain errors.
std::vector<std::string> run_checks(const std::string& selector,
                                    const RunConfig& cfg,
                                    VerificationReport& rep);

// Deterministic CSV companions for the report: approach-path profiles of
// phi along both probe paths, the boundary trace of h, and the angled
// slit-probe floor values.  Returned as (filename, content).
std::vector<std::pair<std::string, std::string>>
export_profiles(const RunConfig& cfg);

} // namespace slitdisk
