#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace rdo {

/// Deterministic random stream keyed by (seed, index, purpose).
///
/// Every consumer of randomness derives its own stream from the run seed and
/// an index (the evaluation number, the seed of a property-test case, ...), so
/// draws never depend on the order in which independent work is scheduled.
/// Only integer output of the engine is used; the floating point conversions
/// below are spelled out so results are bit-identical across standard
/// library implementations.
class Stream {
public:
    /// Purposes keep sibling streams of the same index apart.
    enum class Purpose : std::uint32_t {
        generic = 0,
        initial_design = 1,
        sampling = 2,
        proposal = 3,
        acceptance = 4,
    };

    explicit Stream(std::uint64_t seed, std::uint64_t index = 0,
                    Purpose purpose = Purpose::generic);

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on the open interval (0, 1).
    double uniform_open() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

    /// Standard normal draw by inversion.
    double normal();

    /// Unbiased integer in [0, n).
    std::size_t below(std::size_t n);

private:
    std::mt19937_64 engine_;
};

}  // namespace rdo
