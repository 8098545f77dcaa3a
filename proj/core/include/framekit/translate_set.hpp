#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace framekit {

/// Finite point sequence Lambda = {lambda_k} along which the generator is
/// shifted. Points must be pairwise distinct; provenance is kept for reports.
class TranslateSet {
public:
    static TranslateSet explicit_points(std::vector<double> points);

    /// lambda_k = origin + k * step, k = 0..count-1.
    static TranslateSet lattice(double step, int count, double origin = 0.0);

    /// Lattice plus i.i.d. uniform jitter in [-max_jitter, max_jitter], drawn
    /// from a generator seeded with `seed`; reproducible by construction.
    static TranslateSet jittered_lattice(double step, int count, double max_jitter,
                                         std::uint64_t seed, double origin = 0.0);

    std::span<const double> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const std::string& provenance() const { return provenance_; }
    std::optional<std::uint64_t> seed() const { return seed_; }

private:
    TranslateSet(std::vector<double> points, std::string provenance,
                 std::optional<std::uint64_t> seed);

    std::vector<double> points_;
    std::string provenance_;
    std::optional<std::uint64_t> seed_;
};

} // namespace framekit
