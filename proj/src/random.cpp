#include "rdo/random.hpp"

#include <limits>

#include "rdo/normal.hpp"

namespace rdo {
namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index, std::uint32_t purpose) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      purpose};
    return std::mt19937_64(seq);
}

}  // namespace

Stream::Stream(std::uint64_t seed, std::uint64_t index, Purpose purpose)
    : engine_(make_engine(seed, index, static_cast<std::uint32_t>(purpose))) {}

double Stream::normal() { return inverse_normal_cdf(uniform_open()); }

std::size_t Stream::below(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    // Reject the top partial bucket.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

}  // namespace rdo
