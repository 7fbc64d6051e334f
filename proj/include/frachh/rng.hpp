#pragma once

#include <cstdint>
#include <random>

namespace frachh {

// std::mt19937_64 output is fixed by the standard, but the standard
// distributions are not, so uniforms are derived from the raw bits to keep
// seeded corpora identical across standard libraries.
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    std::mt19937_64 engine_;
};

} // namespace frachh
