#ifndef HARDYLINE_RNG_HPP
#define HARDYLINE_RNG_HPP

#include <cstdint>
#include <vector>

namespace hardyline {

// splitmix64 (Steele/Lea/Flood). The documented deterministic generator
// behind every seeded suite: identical seed, identical stream, everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // inclusive range; modulo bias is irrelevant for test-vector shapes
    long uniform_int(long lo, long hi) {
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// Random finitely supported sequence u with u[0] = u_0 = 0 and entries in
// [-1, 1]. Support starts at an index >= min_start (use 2 for H_0^2 vectors).
inline std::vector<double> random_sequence(SplitMix64& rng, long min_start = 1,
                                           long max_start = 24, long max_len = 40) {
    long first = rng.uniform_int(min_start, max_start);
    long len = rng.uniform_int(1, max_len);
    std::vector<double> u(std::size_t(first + len), 0.0);
    for (long i = first; i < first + len; ++i) u[std::size_t(i)] = rng.uniform(-1.0, 1.0);
    // keep at least one entry away from zero so quotients stay well-posed
    if (u[std::size_t(first)] == 0.0) u[std::size_t(first)] = 0.5;
    return u;
}

} // namespace hardyline

#endif
