#include "slitdisk/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "slitdisk/hyperbolic.hpp"

namespace slitdisk {

namespace {

constexpr int kMaxFactorialIndex = 165;

} // namespace

// 1/n! for n = 0..kMaxFactorialIndex (all normal doubles).
double inv_factorial(int n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(kMaxFactorialIndex + 1);
        long double f = 1.0L;
        t[0] = 1.0;
        for (int i = 1; i <= kMaxFactorialIndex; ++i) {
            f *= i;
            t[i] = static_cast<double>(1.0L / f);
        }
        return t;
    }();
    if (n < 0 || n > kMaxFactorialIndex)
        throw TruncationError("factorial index out of certified range");
    return table[static_cast<std::size_t>(n)];
}

namespace {

// One normalized factor (|w|/w)(w - z)/(1 - conj(w) z); w = 0 gives z.
cplx factor(const Point& zero, const Point& p) {
    if (zero.anchor() == 0.0 && zero.offset() == cplx(0.0, 0.0))
        return p.value();
    const cplx num = point_diff(zero, p);
    const cplx den = one_minus_conj_mul(zero, p);
    cplx rot(1.0, 0.0);
    if (!(zero.anchor() == 1.0 && zero.offset().imag() == 0.0)) {
        const cplx zv = zero.value();
        rot = std::abs(zv) / zv;
    }
    return rot * num / den;
}

cplx log_term(const Point& zero, const Point& p) {
    if (zero.anchor() == 0.0 && zero.offset() == cplx(0.0, 0.0)) {
        const cplx zv = p.value();
        if (zv == cplx(0.0, 0.0))
            throw PoleError("log_derivative: evaluation at a zero of B");
        return 1.0 / zv;
    }
    const cplx d1 = point_diff(zero, p);
    if (d1 == cplx(0.0, 0.0))
        throw PoleError("log_derivative: evaluation at a zero of B");
    const cplx d2 = one_minus_conj_mul(zero, p);
    return -zero.one_minus_abs_sq() / (d1 * d2);
}

// (1 + |z|)/(1 - |z|) computed through 1 - |z|^2.
double truncation_constant(const Point& z) {
    const double q = z.one_minus_abs_sq();
    if (q <= 0.0)
        return std::numeric_limits<double>::infinity();
    const double onep = 1.0 + std::min(std::abs(z.value()), 1.0);
    return onep * onep / q;
}

} // namespace

ZeroSequence ZeroSequence::from_points(std::vector<Point> head) {
    ZeroSequence s;
    s.head_ = std::move(head);
    s.validate();
    return s;
}

ZeroSequence ZeroSequence::factorial(cplx a, int n_max, bool with_tail) {
    if (std::abs(a) >= 1.0)
        throw DomainError("factorial zeros: |a| must be < 1");
    if (n_max < 2)
        throw DomainError("factorial zeros: n_max must be >= 2");
    ZeroSequence s;
    s.head_.push_back(Point::regular(a));
    for (int n = 2; n <= n_max; ++n)
        s.head_.push_back(Point::from_one(inv_factorial(n)));
    s.has_tail_ = with_tail;
    s.tail_start_ = n_max + 1;
    return s;
}

ZeroSequence ZeroSequence::geometric(double ratio, int count) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw DomainError("geometric zeros: ratio must be in (0,1)");
    if (count < 1)
        throw DomainError("geometric zeros: count must be >= 1");
    ZeroSequence s;
    double eps = 1.0;
    for (int n = 1; n <= count; ++n) {
        eps *= ratio;
        s.head_.push_back(Point::from_one(eps));
    }
    return s;
}

Point ZeroSequence::zero(std::size_t slot) const {
    if (slot == 0)
        throw DomainError("zero sequence slots are 1-based");
    if (slot <= head_.size())
        return head_[slot - 1];
    if (!has_tail_)
        throw DomainError("zero slot beyond materialized range and no tail rule");
    const std::size_t idx = static_cast<std::size_t>(tail_start_) + (slot - head_.size() - 1);
    return Point::from_one(inv_factorial(static_cast<int>(idx)));
}

double ZeroSequence::one_minus_abs(std::size_t slot) const {
    const Point z = zero(slot);
    // Deviation-stored real zeros give 1 - |1 - eps| = eps exactly.
    if (z.anchor() == 1.0 && z.offset().imag() == 0.0)
        return -z.offset().real();
    return z.one_minus_abs();
}

double ZeroSequence::tail_sum_bound(std::size_t after_slot) const {
    if (!has_tail_)
        return 0.0;
    std::size_t first_omitted;
    if (after_slot < head_.size())
        first_omitted = static_cast<std::size_t>(tail_start_);
    else
        first_omitted =
            static_cast<std::size_t>(tail_start_) + (after_slot - head_.size());
    const int n = static_cast<int>(first_omitted);
    // sum_{m >= n} 1/m! <= (1/n!) (1 + 1/n)   (geometric domination)
    return inv_factorial(n) * (1.0 + 1.0 / n);
}

void ZeroSequence::validate() const {
    for (std::size_t i = 0; i < head_.size(); ++i) {
        if (head_[i].one_minus_abs_sq() <= 0.0)
            throw DomainError("zero sequence: zero outside the open disk");
    }
    if (has_tail_ && tail_start_ < 2)
        throw DomainError("zero sequence: tail rule must start at index >= 2");
}

std::string ZeroSequence::to_text() const {
    std::ostringstream out;
    char buf[80];
    for (const Point& z : head_) {
        if (z.is_anchored() && std::abs(z.offset()) < 1e-15)
            throw DomainError("zero sequence text: head zero too close to the "
                              "boundary anchor to serialize; use the tail rule");
        const cplx v = z.value();
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.real(), v.imag());
        out << buf;
    }
    if (has_tail_)
        out << "tail factorial " << tail_start_ << "\n";
    return out.str();
}

ZeroSequence ZeroSequence::from_text(const std::string& text) {
    ZeroSequence s;
    std::istringstream in(text);
    std::string line;
    bool saw_tail = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "tail") {
            std::string kind;
            int start = 0;
            if (!(ls >> kind >> start) || kind != "factorial" || start < 2)
                throw DomainError("zero sequence text: bad tail rule line");
            s.has_tail_ = true;
            s.tail_start_ = start;
            saw_tail = true;
            continue;
        }
        if (saw_tail)
            throw DomainError("zero sequence text: zeros after the tail rule");
        double re = 0.0, im = 0.0;
        try {
            re = std::stod(first);
        } catch (const std::exception&) {
            throw DomainError("zero sequence text: bad zero line");
        }
        if (!(ls >> im))
            throw DomainError("zero sequence text: bad zero line");
        s.head_.push_back(Point::regular(cplx(re, im)).reanchored());
    }
    s.validate();
    return s;
}

BlaschkeProduct factorial_blaschke(cplx a, int n_max, bool with_tail) {
    return BlaschkeProduct{ZeroSequence::factorial(a, n_max, with_tail), 1e-12};
}

double blaschke_condition_partial(const ZeroSequence& seq, std::size_t N) {
    double s = 0.0;
    for (std::size_t n = 1; n <= N; ++n)
        s += seq.one_minus_abs(n);
    return s;
}

cplx eval(const BlaschkeProduct& B, const Point& z0, double tol) {
    const Point z = z0.reanchored();
    z.require_interior("eval");
    cplx prod(1.0, 0.0);
    const std::size_t head = B.zeros.head_size();
    for (std::size_t slot = 1; slot <= head; ++slot)
        prod *= factor(B.zeros.zero(slot), z);
    if (!B.zeros.infinite())
        return prod;

    if (tol <= 0.0)
        throw DomainError("eval: tolerance must be positive");
    const double C = truncation_constant(z);
    if (!std::isfinite(C))
        throw TruncationError("eval: cannot certify an infinite product on the boundary");
    std::size_t slot = head;
    for (;;) {
        const double S = B.zeros.tail_sum_bound(slot);
        const double x = C * S;
        const double err = (x > 40.0) ? std::numeric_limits<double>::infinity()
                                      : std::expm1(x);
        if (err <= tol)
            return prod;
        ++slot;
        prod *= factor(B.zeros.zero(slot), z); // throws past the factorial range
    }
}

cplx log_derivative(const BlaschkeProduct& B, const Point& z0, double tol) {
    const Point z = z0.reanchored();
    z.require_interior("log_derivative");
    cplx sum(0.0, 0.0);
    const std::size_t head = B.zeros.head_size();
    for (std::size_t slot = 1; slot <= head; ++slot)
        sum += log_term(B.zeros.zero(slot), z);
    if (!B.zeros.infinite())
        return sum;

    const double q = z.one_minus_abs_sq();
    if (q <= 0.0)
        throw TruncationError("log_derivative: cannot certify on the boundary");
    const double g1 = std::abs(z.one_minus());
    std::size_t slot = head;
    for (;;) {
        // Tail terms with eps_n <= g1/2 obey
        //   |term| <= 2 eps_n / (|delta - eps_n| |1 - z_n z|)
        //          <= 2 eps_n / ((g1/2)(q/4)) = 16 eps_n / (g1 q),
        // using Re(delta) >= q/2 for interior points.
        const double next_eps = -B.zeros.zero(slot + 1).offset().real();
        const double S = B.zeros.tail_sum_bound(slot);
        if (next_eps <= 0.5 * g1) {
            const double bound = 16.0 * S / (g1 * q);
            if (bound <= tol * (1.0 + std::abs(sum)))
                return sum;
        }
        ++slot;
        sum += log_term(B.zeros.zero(slot), z);
    }
}

double thin_delta(const ZeroSequence& seq, std::size_t k, std::size_t window) {
    if (k < 1 || k > window)
        throw DomainError("thin_delta: need 1 <= k <= window");
    if (!seq.infinite() && window > seq.head_size())
        throw DomainError("thin_delta: window beyond materialized range and no tail rule");
    const Point zk = seq.zero(k);
    double prod = 1.0;
    for (std::size_t j = 1; j <= window; ++j) {
        if (j == k)
            continue;
        prod *= pseudo_distance(zk, seq.zero(j));
    }
    return prod;
}

std::vector<double> ratio_sequence(const ZeroSequence& seq, std::size_t N) {
    if (N < 2)
        throw DomainError("ratio_sequence: need N >= 2");
    std::vector<double> out;
    out.reserve(N - 1);
    double prev = seq.one_minus_abs(1);
    for (std::size_t n = 2; n <= N; ++n) {
        const double cur = seq.one_minus_abs(n);
        if (prev <= 0.0)
            throw DomainError("ratio_sequence: zero on the boundary");
        out.push_back(cur / prev);
        prev = cur;
    }
    return out;
}

double hoffman_bound(double c) {
    if (!(c > 0.0 && c < 1.0))
        throw DomainError("hoffman_bound: need 0 < c < 1");
    double prod = 1.0;
    double p = 1.0;
    for (;;) {
        p *= c;
        if (p < 1e-18)
            break;
        prod *= (1.0 - p) / (1.0 + p);
        if (prod * prod < 1e-300)
            return 0.0;
    }
    return prod * prod;
}

double thin_delta_lower_bound(const ZeroSequence& seq, std::size_t k,
                              std::size_t m, std::size_t window) {
    if (!(m >= 1 && k > m))
        throw DomainError("thin_delta_lower_bound: need k > m >= 1");
    const Point zk = seq.zero(k);
    double prefix = 1.0;
    for (std::size_t j = 1; j <= m; ++j) {
        if (j == k)
            continue;
        prefix *= pseudo_distance(zk, seq.zero(j));
    }
    double csup = 0.0;
    const std::size_t hi = std::max(window, m + 2);
    double prev = seq.one_minus_abs(m);
    for (std::size_t j = m + 1; j <= hi; ++j) {
        const double cur = seq.one_minus_abs(j);
        csup = std::max(csup, cur / prev);
        prev = cur;
    }
    if (seq.infinite())
        csup = std::max(csup, 1.0 / static_cast<double>(m + 1));
    return prefix * hoffman_bound(csup);
}

SlitFloor slit_angle_floor(const BlaschkeProduct& B, double theta1,
                           int m_lo, int m_hi, double tol) {
    if (m_lo < 2 || m_hi < m_lo)
        throw DomainError("slit_angle_floor: need 2 <= m_lo <= m_hi");
    SlitFloor out;
    out.min_modulus = std::numeric_limits<double>::infinity();
    for (int m = m_lo; m <= m_hi; ++m) {
        const cplx delta = inv_factorial(m) * std::polar(1.0, theta1);
        const double v = std::abs(eval(B, Point::from_one(delta), tol));
        out.values.push_back(v);
        if (v < out.min_modulus) {
            out.min_modulus = v;
            out.arg_min_m = m;
        }
    }
    return out;
}

double slit_constant_c() {
    double prod = 1.0;
    for (int k = 2;; ++k) {
        const double x = inv_factorial(k);
        if (x < 1e-18)
            return prod;
        prod *= (1.0 - x) / (1.0 + x);
    }
}

namespace {

// Golden-section minimization of f on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 90 && (b - a) > 1e-17 * std::max(1.0, std::abs(b)); ++it) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 <= f2) ? x1 : x2;
}

} // namespace

SegmentCount segment_preimage_count(const BlaschkeProduct& B, cplx w,
                                    std::size_t grid_points, double match_tol) {
    if (grid_points < 16)
        throw DomainError("segment_preimage_count: grid too coarse");
    // Segment endpoint: the largest real zero 1 - eps_min in the head.
    double eps_min = 1.0;
    bool have_real = false;
    for (std::size_t s = 1; s <= B.zeros.head_size(); ++s) {
        const Point z = B.zeros.zero(s);
        if (z.anchor() == 1.0 && z.offset().imag() == 0.0) {
            have_real = true;
            eps_min = std::min(eps_min, -z.offset().real());
        }
    }
    const double t_max = have_real ? 1.0 - eps_min : 0.999999;

    auto dist = [&](double t) {
        return std::abs(eval(B, Point::regular(cplx(t, 0.0)), 1e-12) - w);
    };
    const std::size_t n = grid_points;
    const double step = t_max / static_cast<double>(n - 1);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i)
        vals[i] = dist(step * static_cast<double>(i));

    SegmentCount out;
    for (std::size_t i = 0; i < n; ++i) {
        const bool left_ok = (i == 0) || vals[i] <= vals[i - 1];
        const bool right_ok = (i + 1 == n) || vals[i] <= vals[i + 1];
        if (!(left_ok && right_ok))
            continue;
        const double lo = (i == 0) ? 0.0 : step * static_cast<double>(i - 1);
        const double hi = (i + 1 == n) ? t_max : step * static_cast<double>(i + 1);
        const double t_star = golden_min(dist, lo, hi);
        if (dist(t_star) <= match_tol)
            out.roots.push_back(t_star);
    }
    std::sort(out.roots.begin(), out.roots.end());
    std::vector<double> kept;
    for (double r : out.roots) {
        if (!kept.empty() && r - kept.back() < step) {
            out.resolution_warning = true;
            continue;
        }
        kept.push_back(r);
    }
    out.roots = std::move(kept);
    out.count = static_cast<int>(out.roots.size());
    return out;
}

ArgAttainment arg_attainment_count(const std::function<cplx(double)>& f,
                                   double target_arg, std::size_t grid_points) {
    if (grid_points < 8)
        throw DomainError("arg_attainment_count: grid too coarse");
    const double two_pi = 2.0 * std::numbers::pi;
    const std::size_t n = grid_points;
    std::vector<double> phi(n), ts(n);
    double prev_raw = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        ts[i] = t;
        const cplx v = f(t);
        if (std::abs(v) < 1e-15)
            throw DomainError("arg_attainment_count: f vanishes on [0,1]");
        const double raw = std::arg(v);
        if (i == 0) {
            phi[0] = normalized_arg(v);
        } else {
            double d = raw - prev_raw;
            while (d > std::numbers::pi) d -= two_pi;
            while (d <= -std::numbers::pi) d += two_pi;
            phi[i] = phi[i - 1] + d;
        }
        prev_raw = raw;
    }
    const auto [mn_it, mx_it] = std::minmax_element(phi.begin(), phi.end());
    const double mn = *mn_it, mx = *mx_it;

    ArgAttainment out;
    if (mx - mn < 1e-12) {
        double gap = std::fmod(std::abs(phi[0] - target_arg), two_pi);
        gap = std::min(gap, two_pi - gap);
        out.interval_attainment = gap < 1e-9;
        return out;
    }
    const long q_lo = static_cast<long>(std::ceil((mn - target_arg) / two_pi - 1e-12));
    const long q_hi = static_cast<long>(std::floor((mx - target_arg) / two_pi + 1e-12));
    for (long q = q_lo; q <= q_hi; ++q) {
        const double level = target_arg + two_pi * static_cast<double>(q);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double s0 = phi[i] - level, s1 = phi[i + 1] - level;
            if (s0 == 0.0) {
                if (i == 0 || (phi[i - 1] - level) != 0.0) {
                    ++out.count;
                    out.crossings.push_back(ts[i]);
                }
            } else if (s0 * s1 < 0.0) {
                ++out.count;
                out.crossings.push_back(ts[i] + (ts[i + 1] - ts[i]) * s0 / (s0 - s1));
            }
        }
        if ((phi[n - 1] - level) == 0.0) {
            ++out.count;
            out.crossings.push_back(ts[n - 1]);
        }
    }
    std::sort(out.crossings.begin(), out.crossings.end());
    return out;
}

int count_zeros_argument_principle(const BlaschkeProduct& B, cplx w,
                                   double radius, std::size_t start_nodes,
                                   std::size_t max_nodes, double margin) {
    if (!(radius > 0.0 && radius < 1.0))
        throw DomainError("count_zeros_argument_principle: radius must be in (0,1)");
    auto estimate = [&](std::size_t nodes) {
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < nodes; ++i) {
            const double th =
                2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(nodes);
            const cplx z = std::polar(radius, th);
            const Point p = Point::regular(z);
            const cplx Bv = eval(B, p, 1e-12);
            const cplx den = Bv - w;
            if (std::abs(den) < margin)
                throw QuadratureError("count_zeros_argument_principle: contour passes "
                                      "within the safety margin of a solution");
            const cplx L = log_derivative(B, p, 1e-12);
            acc += z * L * Bv / den;
        }
        return acc / static_cast<double>(nodes);
    };
    cplx prev = estimate(start_nodes);
    for (std::size_t nodes = start_nodes * 2; nodes <= max_nodes; nodes *= 2) {
        const cplx cur = estimate(nodes);
        if (std::abs(cur - prev) < 0.01) {
            const double rounded = std::round(cur.real());
            if (std::abs(cur - cplx(rounded, 0.0)) > 0.1)
                throw QuadratureError("count_zeros_argument_principle: integral not "
                                      "near an integer");
            return static_cast<int>(rounded);
        }
        prev = cur;
    }
    throw QuadratureError("count_zeros_argument_principle: node doubling did not "
                          "stabilize");
}

} // namespace slitdisk
