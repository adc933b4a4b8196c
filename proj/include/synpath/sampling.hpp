#pragma once

#include "synpath/graph.hpp"

#include <cstdint>

namespace synpath {

// SplitMix64 (Steele, Lea, Flood 2014). fork() derives an independent
// stream, so batch item i can be generated without touching item i-1.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform();  // [0, 1), 53-bit resolution
    SplitMix64 fork(std::uint64_t stream) const;

private:
    std::uint64_t state_;
};

struct SampleOptions {
    bool balanced = false;  // K_{N,N}: shift party two onto party one's mean
    double radius = 0.0;    // > 0: shrink towards the mean so max|x - mean| < radius
};

// Uniform in [0,1]^V, each party sorted ascending, then the options applied.
Configuration sample_configuration(const GraphSpec& spec, SplitMix64& rng, const SampleOptions& opts = {});

}  // namespace synpath
