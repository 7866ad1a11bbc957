#pragma once

#include <complex>
#include <random>

namespace slitdisk {

// Deterministic sampler.  mt19937_64's output sequence is fixed by the
// standard, and the uint64 -> double mapping below is explicit, so the same
// seed produces the same samples on every platform (std::uniform_real_distribution
// is implementation-defined and deliberately avoided).
class SampleRng {
public:
    explicit SampleRng(unsigned long long seed) : eng_(seed) {}

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Uniform on the disk of radius rmax (area measure), by rejection from
    // the enclosing square.  Deterministic: consumes engine output only
    // through unit().
    std::complex<double> in_disk(double rmax) {
        for (;;) {
            const double x = 2.0 * unit() - 1.0;
            const double y = 2.0 * unit() - 1.0;
            if (x * x + y * y < 1.0)
                return {rmax * x, rmax * y};
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace slitdisk
