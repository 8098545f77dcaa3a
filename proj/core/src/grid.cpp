#include "framekit/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "framekit/errors.hpp"

namespace framekit {

BoundedSet::BoundedSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    if (intervals_.empty()) {
        throw ConfigError("bounded set: interval list is empty");
    }
    std::sort(intervals_.begin(), intervals_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& iv = intervals_[i];
        if (!(iv.hi > iv.lo) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
            throw ConfigError("bounded set: interval [" + std::to_string(iv.lo) + ", " +
                              std::to_string(iv.hi) + "] has no positive length");
        }
        if (i > 0 && intervals_[i - 1].hi >= iv.lo) {
            throw ConfigError("bounded set: intervals overlap or touch near " +
                              std::to_string(iv.lo));
        }
    }
}

double BoundedSet::measure() const {
    double m = 0.0;
    for (const auto& iv : intervals_) m += iv.length();
    return m;
}

bool BoundedSet::contains(double omega) const {
    for (const auto& iv : intervals_) {
        if (omega >= iv.lo && omega <= iv.hi) return true;
    }
    return false;
}

Interval BoundedSet::hull() const {
    return {intervals_.front().lo, intervals_.back().hi};
}

FrequencyGrid::FrequencyGrid(BoundedSet set, std::vector<double> points,
                             std::vector<double> weights, bool restricted)
    : set_(std::move(set)),
      points_(std::move(points)),
      weights_(std::move(weights)),
      restricted_(restricted) {}

bool FrequencyGrid::same_as(const FrequencyGrid& other) const {
    if (this == &other) return true;
    return points_ == other.points_ && weights_ == other.weights_;
}

std::uint64_t FrequencyGrid::content_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const std::vector<double>& v) {
        const auto* bytes = reinterpret_cast<const unsigned char*>(v.data());
        for (std::size_t i = 0; i < v.size() * sizeof(double); ++i) {
            h ^= bytes[i];
            h *= 0x100000001b3ULL;
        }
    };
    mix(points_);
    mix(weights_);
    return h;
}

GridPtr build_grid(const BoundedSet& set, int nodes_per_unit) {
    if (nodes_per_unit < 1) {
        throw ConfigError("grid: nodes_per_unit must be >= 1, got " +
                          std::to_string(nodes_per_unit));
    }
    std::vector<double> points;
    std::vector<double> weights;
    for (const auto& iv : set.intervals()) {
        const double len = iv.length();
        // ceil with a guard against one-past rounding of npu * len.
        const auto n = std::max<long long>(
            1, static_cast<long long>(std::ceil(nodes_per_unit * len - 1e-9)));
        const double h = len / static_cast<double>(n);
        for (long long k = 0; k < n; ++k) {
            points.push_back(iv.lo + (static_cast<double>(k) + 0.5) * h);
            weights.push_back(h);
        }
    }
    return GridPtr(new FrequencyGrid(set, std::move(points), std::move(weights), false));
}

GridRestriction restrict_grid(const GridPtr& grid, const std::vector<bool>& keep) {
    if (static_cast<Eigen::Index>(keep.size()) != grid->size()) {
        throw GridMismatchError("restrict_grid: mask length does not match grid size");
    }
    std::vector<Eigen::Index> indices;
    std::vector<double> points;
    std::vector<double> weights;
    for (Eigen::Index n = 0; n < grid->size(); ++n) {
        if (keep[static_cast<std::size_t>(n)]) {
            indices.push_back(n);
            points.push_back(grid->points()[static_cast<std::size_t>(n)]);
            weights.push_back(grid->weights()[static_cast<std::size_t>(n)]);
        }
    }
    if (indices.empty()) {
        throw PreconditionError("restrict_grid: mask keeps no nodes");
    }
    if (static_cast<Eigen::Index>(indices.size()) == grid->size()) {
        return {grid, std::move(indices)};
    }
    GridPtr sub(new FrequencyGrid(grid->set(), std::move(points), std::move(weights), true));
    return {std::move(sub), std::move(indices)};
}

GridVector::GridVector(GridPtr grid, Eigen::VectorXcd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_) {
        throw GridMismatchError("grid vector: null grid");
    }
    if (values_.size() != grid_->size()) {
        throw GridMismatchError("grid vector: value count " + std::to_string(values_.size()) +
                                " does not match grid size " + std::to_string(grid_->size()));
    }
}

std::complex<double> inner_product(const GridVector& f, const GridVector& g) {
    if (!f.grid()->same_as(*g.grid())) {
        throw GridMismatchError("inner_product: vectors live on different grids");
    }
    const auto w = f.grid()->weight_vector();
    return (f.values().array() * g.values().array().conjugate() * w.array().cast<std::complex<double>>())
        .sum();
}

double grid_norm(const GridVector& f) {
    const auto w = f.grid()->weight_vector();
    return std::sqrt((f.values().array().abs2() * w.array()).sum());
}

GridVector exponential_vector(double lambda, const GridPtr& grid) {
    Eigen::VectorXcd v(grid->size());
    const auto pts = grid->points();
    for (Eigen::Index n = 0; n < grid->size(); ++n) {
        const double phase = -2.0 * std::numbers::pi * lambda * pts[static_cast<std::size_t>(n)];
        v[n] = std::polar(1.0, phase);
    }
    return {grid, std::move(v)};
}

} // namespace framekit
