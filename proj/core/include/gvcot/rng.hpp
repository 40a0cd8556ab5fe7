#pragma once

#include <cstdint>
#include <string_view>

namespace gvcot {

/// Counter-based deterministic RNG (SplitMix64 core). Identical seeds yield
/// identical streams; split() derives an independent substream from a label
/// without disturbing the parent. Cheap to copy, no global state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(seed) {}

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi);
    /// Standard normal via Box-Muller (two uniforms per draw).
    double normal();

    /// Independent substream labelled by a string. Does not advance this
    /// stream's counter.
    Rng split(std::string_view label) const;
    /// Independent substream labelled by an integer (e.g. a row index).
    Rng split(std::uint64_t label) const;

    std::uint64_t seed() const { return key_; }

private:
    Rng(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace gvcot
