// Counter-based splittable RNG. Draws are a pure function of
// (seed, stream, counter), so parallel or reordered sampling is
// reproducible from the recorded seed alone.

#pragma once

#include <cmath>
#include <cstdint>

namespace zec {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream), counter_(0) {}

    Rng split(std::uint64_t stream) const { return Rng(seed_, stream); }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        std::uint64_t x = splitmix64(seed_ ^ splitmix64(stream_ ^ 0xa5a5a5a5a5a5a5a5ULL));
        return splitmix64(x ^ splitmix64(counter_++));
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard normal via Box-Muller
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double(), u2 = next_double();
        while (u1 <= 1e-300) u1 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // uniform integer in [lo, hi] inclusive
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t seed_, stream_, counter_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace zec
