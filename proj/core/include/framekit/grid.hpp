#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace framekit {

/// Closed interval [lo, hi] on the frequency axis.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
};

/// A bounded frequency set E given as a finite union of disjoint closed
/// intervals, sorted by left endpoint. Membership and measure are exact.
class BoundedSet {
public:
    /// Validates and normalizes (sorts) the interval list.
    /// Throws ConfigError on empty input, degenerate or overlapping intervals.
    explicit BoundedSet(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const { return intervals_; }
    double measure() const;
    bool contains(double omega) const;

    /// Smallest interval [lo, hi] containing E.
    Interval hull() const;

private:
    std::vector<Interval> intervals_;
};

class FrequencyGrid;
using GridPtr = std::shared_ptr<const FrequencyGrid>;
struct GridRestriction;

/// Midpoint quadrature grid over a BoundedSet: the finite-dimensional stand-in
/// for L2(E). Each interval [a,b] carries N = ceil(nodes_per_unit * (b-a))
/// nodes at a + (n + 1/2) h with uniform weight h = (b-a)/N.
///
/// Grids are immutable and shared by pointer; vectors carry their grid and
/// cross-grid arithmetic is an error.
class FrequencyGrid {
public:
    const BoundedSet& set() const { return set_; }
    std::span<const double> points() const { return points_; }
    std::span<const double> weights() const { return weights_; }
    Eigen::Index size() const { return static_cast<Eigen::Index>(points_.size()); }

    /// Weights as an Eigen map, for assembling weighted matrix products.
    Eigen::Map<const Eigen::VectorXd> weight_vector() const {
        return {weights_.data(), static_cast<Eigen::Index>(weights_.size())};
    }

    /// True if the other grid is the same object or node/weight-identical.
    bool same_as(const FrequencyGrid& other) const;

    /// FNV-1a hash of the node and weight bytes; reproducibility fingerprint.
    std::uint64_t content_hash() const;

    /// True for grids produced by restrict_grid (node subset of a parent grid).
    bool restricted() const { return restricted_; }

    friend GridPtr build_grid(const BoundedSet& set, int nodes_per_unit);
    friend struct GridRestriction;
    friend GridRestriction restrict_grid(const GridPtr& grid, const std::vector<bool>& keep);

private:
    FrequencyGrid(BoundedSet set, std::vector<double> points, std::vector<double> weights,
                  bool restricted);

    BoundedSet set_;
    std::vector<double> points_;
    std::vector<double> weights_;
    bool restricted_ = false;
};

/// Builds the midpoint grid. nodes_per_unit >= 1, else ConfigError.
GridPtr build_grid(const BoundedSet& set, int nodes_per_unit);

/// Node subset of a parent grid (same weights, same ambient set), together
/// with the parent indices of the kept nodes. Used to restrict systems to
/// the support of a generator.
struct GridRestriction {
    GridPtr grid;
    std::vector<Eigen::Index> indices; // positions of kept nodes in the parent
};

/// Keeps exactly the nodes with keep[n] == true. Throws PreconditionError if
/// none survive; returns the parent unchanged (empty index map unused) if all do.
GridRestriction restrict_grid(const GridPtr& grid, const std::vector<bool>& keep);

/// Complex samples on a FrequencyGrid; one value per node.
class GridVector {
public:
    GridVector(GridPtr grid, Eigen::VectorXcd values);

    const GridPtr& grid() const { return grid_; }
    const Eigen::VectorXcd& values() const { return values_; }
    Eigen::VectorXcd& values() { return values_; }
    Eigen::Index size() const { return values_.size(); }

private:
    GridPtr grid_;
    Eigen::VectorXcd values_;
};

/// Weighted inner product sum_n h_n F(w_n) conj(G(w_n)); linear in F.
/// Throws GridMismatchError when F and G live on different grids.
std::complex<double> inner_product(const GridVector& f, const GridVector& g);

/// Weighted L2 norm sqrt(<F, F>).
double grid_norm(const GridVector& f);

/// Samples of e_lambda(w) = exp(-2 pi i lambda w) at the grid nodes.
GridVector exponential_vector(double lambda, const GridPtr& grid);

} // namespace framekit
