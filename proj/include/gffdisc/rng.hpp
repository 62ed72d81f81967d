#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gffdisc {

// Counter-based stream splitting: stream k of a master seed is an independent
// mt19937_64 seeded through SplitMix64, so results do not depend on how samples
// are scheduled across workers.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s = a ^ (index * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
}

// Uniform/normal draws are generated from the engine's portable raw output
// rather than std::*_distribution (whose sequences are implementation-defined).
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    double uniform() {  // in [0,1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double c = std::cos(2.0 * M_PI * u2), s = std::sin(2.0 * M_PI * u2);
        spare_ = r * s;
        have_spare_ = true;
        return r * c;
    }

    // integer in [0, n), n >= 1
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;  // rejection for exact uniformity
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= threshold) return r % n;
        }
    }

    long poisson(double mean) {
        // Knuth product method below 30, normal-refined inversion is not needed
        // at the intensities this project uses; use exponential spacing above.
        if (mean <= 0.0) return 0;
        if (mean < 30.0) {
            double l = std::exp(-mean), p = 1.0;
            long k = 0;
            do {
                ++k;
                p *= uniform();
            } while (p > l);
            return k - 1;
        }
        // sum of exponentials
        double t = 0.0;
        long k = -1;
        while (t < mean) {
            double u;
            do { u = uniform(); } while (u <= 0.0);
            t += -std::log(u);
            ++k;
        }
        return k;
    }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline RngStream derive_stream(std::uint64_t master, std::uint64_t task_index) {
    return RngStream(substream_seed(master, task_index));
}

}  // namespace gffdisc
