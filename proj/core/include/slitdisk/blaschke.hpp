#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "slitdisk/point.hpp"

namespace slitdisk {

// A zero sequence for a Blaschke product: an explicit head (1-based slots)
// plus an optional factorial tail rule generating zeros 1 - 1/n! forever.
// Head zeros close to 1 are stored as deviations; the tail is never
// materialized beyond what a certified truncation asks for.
class ZeroSequence {
public:
    static ZeroSequence from_points(std::vector<Point> head);

    // Slot 1 holds a, slot n (2 <= n <= n_max) holds 1 - 1/n!; with_tail
    // records the factorial rule from n_max + 1 on.
    static ZeroSequence factorial(cplx a, int n_max, bool with_tail = true);

    // Slot n holds 1 - ratio^n (real zeros marching to 1 geometrically).
    static ZeroSequence geometric(double ratio, int count);

    std::size_t head_size() const { return head_.size(); }
    bool infinite() const { return has_tail_; }
    int tail_start() const { return tail_start_; }

    // 1-based slot access; generates tail zeros on demand.
    Point zero(std::size_t slot) const;
    double one_minus_abs(std::size_t slot) const;

    // Upper bound on sum_{slot > n} (1 - |z_slot|) contributed by the tail
    // rule (0 for finite sequences).  This is the quantity the truncation
    // certificate consumes.
    double tail_sum_bound(std::size_t after_slot) const;

    // Text form: one "re im" line per head zero, then optionally
    // "tail factorial <start>".  Head zeros whose deviation is below
    // representable resolution cannot be written and raise a domain error.
    std::string to_text() const;
    static ZeroSequence from_text(const std::string& text);

    void validate() const;

private:
    std::vector<Point> head_;
    bool has_tail_ = false;
    int tail_start_ = 0;
};

struct BlaschkeProduct {
    ZeroSequence zeros;
    double tol = 1e-12; // default certified truncation tolerance
};

// 1/n! as a correctly rounded double; raises a truncation error once n!
// leaves the normal range (n > 165).
double inv_factorial(int n);

// Convenience: the thin product with one free zero a and factorial slit
// zeros 1 - 1/n! (tail rule recorded beyond n_max).
BlaschkeProduct factorial_blaschke(cplx a, int n_max, bool with_tail = true);

// Partial Blaschke condition sum over slots 1..N.
double blaschke_condition_partial(const ZeroSequence& seq, std::size_t N);

// Certified evaluation of the (possibly infinite) normalized product
//
//   B(z) = prod_n (|z_n|/z_n) (z_n - z)/(1 - conj(z_n) z),
//
// zeros at the origin contributing a bare factor z.  For the factorial tail
// the truncation error is controlled through the exact per-factor identity
//
//   |1 - b_w(z)| = (1-|w|) |w + |w| z| / (|w| |1 - conj(w) z|)
//                <= (1-|w|) (1+|z|) / (1-|z|)  =:  (1-|w|) C(z)
//
// (constant exactly 1), so the omitted tail T satisfies
// |T - 1| <= exp(C(z) * S) - 1 with S the tail sum bound; factors are
// consumed until that is <= tol.  Validated empirically against
// high-precision partial products in the tests.
cplx eval(const BlaschkeProduct& B, const Point& z, double tol);
inline cplx eval(const BlaschkeProduct& B, const Point& z) { return eval(B, z, B.tol); }

// B'(z)/B(z) = sum_n (|z_n|^2 - 1) / ((z_n - z)(1 - conj(z_n) z)), with
// +1/z for zeros at the origin.  Truncated with a certified tail bound.
// Raises a pole error at a zero of B.
cplx log_derivative(const BlaschkeProduct& B, const Point& z, double tol);

// Separation product delta_k = prod_{j != k, j <= window} d(z_k, z_j).
double thin_delta(const ZeroSequence& seq, std::size_t k, std::size_t window);

// Ratios c_n = (1 - |z_n|)/(1 - |z_{n-1}|) for n = 2..N.
std::vector<double> ratio_sequence(const ZeroSequence& seq, std::size_t N);

// (prod_{j>=1} (1 - c^j)/(1 + c^j))^2: the classical lower bound for the
// separation products of a zero sequence whose ratios stay <= c.
double hoffman_bound(double c);

// Finite-prefix times Hoffman-tail lower bound for thin_delta(k):
//   prod_{j <= m, j != k} d(z_k, z_j) * hoffman_bound(sup_{j >= m+1} c_j),
// valid for k > m.  The sup is 1/(m+1) for the factorial rule and is
// computed from the materialized ratios otherwise.
double thin_delta_lower_bound(const ZeroSequence& seq, std::size_t k,
                              std::size_t m, std::size_t window);

// min over m in [m_lo, m_hi] of |B(1 - (1/m!) e^{i theta1})|, evaluated in
// deviation arithmetic.
struct SlitFloor {
    double min_modulus = 0.0;
    int arg_min_m = 0;
    std::vector<double> values; // indexed m_lo..m_hi
};
SlitFloor slit_angle_floor(const BlaschkeProduct& B, double theta1,
                           int m_lo, int m_hi, double tol = 1e-12);

// prod_{k >= 2} (1 - 1/k!)/(1 + 1/k!); factors are consumed until the
// remaining tail moves the value by < 1e-18 relative.
double slit_constant_c();

// Number of t in [0, t_max] with B(t) = w, located by scanning a dense grid
// of |B(t) - w| and refining each local minimum by golden-section search.
struct SegmentCount {
    int count = 0;
    bool resolution_warning = false; // two candidates within one grid step
    std::vector<double> roots;
};
SegmentCount segment_preimage_count(const BlaschkeProduct& B, cplx w,
                                    std::size_t grid_points = 10000,
                                    double match_tol = 1e-8);

// Crossing count of the unwrapped argument of f: [0,1] -> C\{0} through
// target_arg (mod 2pi).  A constant-argument f sitting on the target is
// reported as interval attainment instead of a count.
struct ArgAttainment {
    int count = 0;
    bool interval_attainment = false;
    std::vector<double> crossings;
};
ArgAttainment arg_attainment_count(const std::function<cplx(double)>& f,
                                   double target_arg,
                                   std::size_t grid_points = 4096);

// (1/2 pi i) contour integral of B'/(B - w) over |z| = radius by the
// trapezoid rule, doubling nodes until the estimate moves by < 0.01 and
// then requiring it to sit within 0.1 of an integer.
int count_zeros_argument_principle(const BlaschkeProduct& B, cplx w,
                                   double radius,
                                   std::size_t start_nodes = 1024,
                                   std::size_t max_nodes = std::size_t(1) << 17,
                                   double margin = 1e-6);

} // namespace slitdisk
