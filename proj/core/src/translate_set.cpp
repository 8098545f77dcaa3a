#include "framekit/translate_set.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

void check_points(const std::vector<double>& points) {
    if (points.empty()) {
        throw ConfigError("translate set: no points");
    }
    for (double p : points) {
        if (!std::isfinite(p)) throw ConfigError("translate set: non-finite point");
    }
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw ConfigError("translate set: duplicate point " + std::to_string(sorted[i]));
        }
    }
}

} // namespace

TranslateSet::TranslateSet(std::vector<double> points, std::string provenance,
                           std::optional<std::uint64_t> seed)
    : points_(std::move(points)), provenance_(std::move(provenance)), seed_(seed) {
    check_points(points_);
}

TranslateSet TranslateSet::explicit_points(std::vector<double> points) {
    return {std::move(points), "explicit", std::nullopt};
}

TranslateSet TranslateSet::lattice(double step, int count, double origin) {
    if (count < 1) throw ConfigError("translate set: count must be >= 1");
    if (step == 0.0) throw ConfigError("translate set: lattice step must be nonzero");
    std::vector<double> pts(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        pts[static_cast<std::size_t>(k)] = origin + static_cast<double>(k) * step;
    }
    return {std::move(pts), "lattice(step=" + std::to_string(step) + ")", std::nullopt};
}

TranslateSet TranslateSet::jittered_lattice(double step, int count, double max_jitter,
                                            std::uint64_t seed, double origin) {
    if (count < 1) throw ConfigError("translate set: count must be >= 1");
    if (step == 0.0) throw ConfigError("translate set: lattice step must be nonzero");
    if (max_jitter < 0.0) throw ConfigError("translate set: jitter must be nonnegative");
    if (max_jitter >= 0.5 * std::abs(step)) {
        throw ConfigError("translate set: jitter must stay below step/2 to keep points distinct");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-max_jitter, max_jitter);
    std::vector<double> pts(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        pts[static_cast<std::size_t>(k)] = origin + static_cast<double>(k) * step + jitter(rng);
    }
    return {std::move(pts),
            "jittered_lattice(step=" + std::to_string(step) +
                ", jitter=" + std::to_string(max_jitter) + ", seed=" + std::to_string(seed) + ")",
            seed};
}

} // namespace framekit
