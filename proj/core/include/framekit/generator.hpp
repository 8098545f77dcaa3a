#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "framekit/grid.hpp"

namespace framekit {

// Frequency-domain generator shapes. Every shape is sampled at the grid
// nodes; nothing is band-extended outside E.

/// hat_phi = indicator of [lo, hi].
struct IndicatorShape {
    double lo = -0.5;
    double hi = 0.5;
};

/// hat_phi = triangle max(0, 1 - |w|/width).
struct FejerShape {
    double width = 0.5;
};

/// Raised-cosine spectrum with roll-off beta in [0, 1] and unit symbol rate;
/// flat up to (1-beta)/2, cosine taper up to (1+beta)/2.
struct RaisedCosineShape {
    double beta = 0.5;
};

/// hat_phi = exp(-w^2 / (2 sigma^2)), truncated to E by sampling.
struct TruncatedGaussianShape {
    double sigma = 1.0;
};

/// Explicit complex samples, one per grid node.
struct TableShape {
    Eigen::VectorXcd samples;
};

using GeneratorKind = std::variant<IndicatorShape, FejerShape, RaisedCosineShape,
                                   TruncatedGaussianShape, TableShape>;

std::string kind_name(const GeneratorKind& kind);

/// Evaluation mode for the transform of the pseudo-Gramian.
enum class TransformMode { analytic, quadrature };

/// A bandlimited generator held as frequency samples hat_phi on a grid, with
/// closed forms attached where the shape admits them. The support mask marks
/// nodes with |hat_phi| above the resolved threshold; the reciprocal
/// convention (1/psi on the support, 0 off it) is applied through that mask.
class Generator {
public:
    const GridVector& hat_phi() const { return hat_phi_; }
    const GridPtr& grid() const { return hat_phi_.grid(); }
    const std::vector<bool>& support_mask() const { return support_mask_; }
    const GeneratorKind& kind() const { return kind_; }

    /// Absolute support threshold actually used (relative input * max |hat_phi|).
    double eps_supp() const { return eps_supp_; }

    /// Squared grid norm of the generator, sum_n h_n |hat_phi_n|^2.
    double norm_squared() const { return norm_squared_; }

    /// Number of nodes on the support mask.
    Eigen::Index support_size() const { return support_size_; }

    /// True when the mask covers every grid node.
    bool support_covers_grid() const { return support_size_ == hat_phi_.size(); }

    bool has_analytic_phi_hat_transform() const;

    friend Generator make_generator(const GeneratorKind& kind, const GridPtr& grid,
                                    double eps_supp_rel);

private:
    Generator(GeneratorKind kind, GridVector hat_phi, double eps_supp_rel);

    GeneratorKind kind_;
    GridVector hat_phi_;
    std::vector<bool> support_mask_;
    double eps_supp_ = 0.0;
    double norm_squared_ = 0.0;
    Eigen::Index support_size_ = 0;
};

/// Samples the shape at the grid nodes and resolves the support mask with
/// threshold eps_supp_rel * max |hat_phi|. Throws ConfigError on invalid
/// parameters or an (effectively) zero generator.
Generator make_generator(const GeneratorKind& kind, const GridPtr& grid,
                         double eps_supp_rel = 1e-12);

/// Pointwise |hat_phi|^2; real and nonnegative, zero exactly off the samples.
GridVector pseudo_gramian(const Generator& g);

/// Transform of the pseudo-Gramian at x: integral of |hat_phi|^2(w) e^{-2 pi i x w} dw.
/// Quadrature mode sums over the grid; analytic mode evaluates the closed form
/// (available for indicator and triangle shapes) and throws UnsupportedModeError
/// otherwise.
std::complex<double> phi_hat_transform(const Generator& g, double x, TransformMode mode);

} // namespace framekit
