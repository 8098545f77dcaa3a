#pragma once

// Internal helpers around the Hermitian eigendecomposition: rank-cutoff
// pseudo-inverses and functional calculus on the span. Not installed.

#include <functional>

#include <Eigen/Dense>

#include "framekit/errors.hpp"

namespace framekit::detail {

struct HermitianEigen {
    Eigen::VectorXd eigenvalues; // ascending
    Eigen::MatrixXcd vectors;
    double abs_cutoff = 0.0;     // eigenvalues <= abs_cutoff count as zero modes

    Eigen::Index rank() const {
        Eigen::Index r = 0;
        for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
            if (eigenvalues[i] > abs_cutoff) ++r;
        }
        return r;
    }

    /// V f(lambda) V^H with f applied above the cutoff and 0 below it.
    Eigen::MatrixXcd apply(const std::function<double(double)>& f) const {
        Eigen::VectorXd mapped = Eigen::VectorXd::Zero(eigenvalues.size());
        for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
            if (eigenvalues[i] > abs_cutoff) mapped[i] = f(eigenvalues[i]);
        }
        return vectors * mapped.asDiagonal() * vectors.adjoint();
    }

    Eigen::MatrixXcd pseudo_inverse() const {
        return apply([](double x) { return 1.0 / x; });
    }

    Eigen::MatrixXcd pseudo_inverse_sqrt() const {
        return apply([](double x) { return 1.0 / std::sqrt(x); });
    }

    /// Orthogonal projector onto the span (eigenvectors above the cutoff).
    Eigen::MatrixXcd span_projector() const {
        return apply([](double) { return 1.0; });
    }
};

/// Eigendecomposition of a Hermitian PSD matrix with a relative rank cutoff:
/// abs_cutoff = rank_cutoff_rel * max eigenvalue.
inline HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m, double rank_cutoff_rel) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw PreconditionError("hermitian eigendecomposition failed to converge");
    }
    HermitianEigen out;
    out.eigenvalues = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
    const double top = out.eigenvalues.size() > 0 ? out.eigenvalues.maxCoeff() : 0.0;
    out.abs_cutoff = rank_cutoff_rel * std::max(top, 0.0);
    return out;
}

} // namespace framekit::detail
