#ifndef MOTKIT_COMMON_HPP
#define MOTKIT_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace mot {

// Thrown when a solver or training step produces non-finite values.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, int iteration = -1)
        : std::runtime_error(what), iteration_(iteration) {}
    int iteration() const { return iteration_; }

private:
    int iteration_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Seeded RNG with hand-rolled transforms. std::mt19937_64 output is fixed by
// the standard; the distribution transforms are ours so that byte-identical
// outputs per seed hold across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) : gen_(seed) {}

    // uniform in [0,1)
    double uniform() {
        return (gen_() >> 11) * (1.0 / 9007199254740992.0);  // 53-bit mantissa
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    int uniform_int(int n) {
        return n <= 1 ? 0 : static_cast<int>(gen_() % static_cast<uint64_t>(n));
    }

    // standard normal via Box-Muller
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 1e-300) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    uint64_t raw() { return gen_(); }

    // derive an independent stream (for per-component seeding)
    Rng fork() { return Rng(gen_() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace mot

#endif
