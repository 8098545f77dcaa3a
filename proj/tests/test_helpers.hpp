#pragma once

// Shared fixtures and independent oracles for the unit tests. Oracles here
// recompute expected values from first principles (direct summation, dense
// eigensolvers) so they stay independent of the library code paths they check.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "framekit/generator.hpp"
#include "framekit/grid.hpp"
#include "framekit/operators.hpp"
#include "framekit/translate_set.hpp"

namespace fkt {

using cxd = std::complex<double>;

inline framekit::GridPtr unit_grid(int nodes_per_unit = 64) {
    return framekit::build_grid(framekit::BoundedSet({{-0.5, 0.5}}), nodes_per_unit);
}

inline Eigen::VectorXcd random_complex(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = cxd{gauss(rng), gauss(rng)};
    return v;
}

inline framekit::GridVector random_grid_vector(const framekit::GridPtr& grid,
                                               std::mt19937_64& rng) {
    return {grid, random_complex(grid->size(), rng)};
}

/// Brute-force Gram oracle: entry (k, l) = <T_{lambda_k} phi, T_{lambda_l} phi>
/// computed as the grid inner product of the enveloped exponentials.
inline Eigen::MatrixXcd brute_force_gram(const framekit::Generator& g,
                                         const framekit::TranslateSet& lambda) {
    const auto k_count = static_cast<Eigen::Index>(lambda.size());
    std::vector<framekit::GridVector> cols;
    cols.reserve(static_cast<std::size_t>(k_count));
    for (Eigen::Index k = 0; k < k_count; ++k) {
        framekit::GridVector e =
            framekit::exponential_vector(lambda.points()[static_cast<std::size_t>(k)], g.grid());
        Eigen::VectorXcd v = g.hat_phi().values().array() * e.values().array();
        cols.emplace_back(g.grid(), std::move(v));
    }
    Eigen::MatrixXcd gram(k_count, k_count);
    for (Eigen::Index k = 0; k < k_count; ++k) {
        for (Eigen::Index l = 0; l < k_count; ++l) {
            gram(k, l) = framekit::inner_product(cols[static_cast<std::size_t>(k)],
                                                 cols[static_cast<std::size_t>(l)]);
        }
    }
    return gram;
}

/// Eigenvalues of a Hermitian matrix, ascending; the tests' spectral oracle.
inline Eigen::VectorXd eig_oracle(const Eigen::MatrixXcd& m) {
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m).eigenvalues();
}

/// Wraps arbitrary frequency-domain vectors as a finite system, so generic
/// operations (bounds, canonical duals) can be applied to dual systems too.
inline framekit::SystemMatrices system_from_vectors(
    const framekit::GridPtr& grid, const std::vector<framekit::GridVector>& vectors) {
    const Eigen::VectorXd root_h = grid->weight_vector().array().sqrt();
    Eigen::MatrixXcd d(grid->size(), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        d.col(static_cast<Eigen::Index>(k)) =
            root_h.array().cast<cxd>() * vectors[k].values().array();
    }
    framekit::SystemMatrices sys;
    sys.grid = grid;
    sys.tag = "wrapped";
    sys.frame_op = d * d.adjoint();
    sys.gram = d.adjoint() * d;
    sys.synthesis = std::move(d);
    return sys;
}

} // namespace fkt
