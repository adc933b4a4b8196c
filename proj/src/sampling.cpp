#include "synpath/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace synpath {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SplitMix64 SplitMix64::fork(std::uint64_t stream) const {
    SplitMix64 mixer(state_ ^ (stream * 0xD1B54A32D192ED03ULL));
    return SplitMix64(mixer.next());
}

Configuration sample_configuration(const GraphSpec& spec, SplitMix64& rng, const SampleOptions& opts) {
    std::vector<double> v(spec.vertex_count());
    for (auto& x : v) x = rng.uniform();
    if (spec.family == Family::CompleteN) {
        std::sort(v.begin(), v.end());
    } else {
        std::sort(v.begin(), v.begin() + spec.n);
        std::sort(v.begin() + spec.n, v.end());
        if (opts.balanced) {
            double m1 = 0, m2 = 0;
            for (int i = 0; i < spec.n; ++i) {
                m1 += v[i];
                m2 += v[spec.n + i];
            }
            const double shift = (m1 - m2) / spec.n;
            for (int i = 0; i < spec.n; ++i) v[spec.n + i] += shift;
        }
    }
    if (opts.radius > 0) {
        double mean = 0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double spread = 0;
        for (double x : v) spread = std::max(spread, std::abs(x - mean));
        if (spread >= opts.radius) {
            const double scale = 0.999 * opts.radius / spread;
            for (auto& x : v) x = mean + (x - mean) * scale;
        }
    }
    return Configuration(spec, std::move(v));
}

}  // namespace synpath
