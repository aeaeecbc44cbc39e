#pragma once
#include <cstdint>
#include <random>

namespace ugcduo {

/// Uniform double in [0,1) from the generator's top 53 bits. Distribution
/// classes are implementation-defined, so seeded output would differ across
/// standard libraries; this mapping is bit-stable everywhere.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

} // namespace ugcduo
