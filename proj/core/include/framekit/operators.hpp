#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "framekit/generator.hpp"
#include "framekit/grid.hpp"
#include "framekit/translate_set.hpp"

namespace framekit {

/// Pointwise multiplication by a fixed symbol psi on a grid. The operator norm
/// equals max_n |psi(w_n)|; ess_inf/ess_sup are taken over the support mask,
/// and the pseudo-inverse multiplies by 1/psi on the mask and 0 off it.
class MultiplicationOperator {
public:
    /// eps_supp is the absolute threshold defining the mask |psi| > eps_supp.
    MultiplicationOperator(GridVector symbol, double eps_supp);

    const GridVector& symbol() const { return symbol_; }
    const std::vector<bool>& mask() const { return mask_; }
    double ess_inf() const { return ess_inf_; }   // p over the mask
    double ess_sup() const { return ess_sup_; }   // P over the mask
    double operator_norm() const { return op_norm_; }
    bool mask_covers_grid() const { return mask_size_ == symbol_.size(); }

    GridVector apply(const GridVector& f) const;
    GridVector apply_pseudo_inverse(const GridVector& f) const;

    /// The symbol of the pseudo-inverse operator (1/psi on mask, 0 off).
    Eigen::VectorXcd pseudo_inverse_symbol() const;

private:
    GridVector symbol_;
    std::vector<bool> mask_;
    double ess_inf_ = 0.0;
    double ess_sup_ = 0.0;
    double op_norm_ = 0.0;
    Eigen::Index mask_size_ = 0;
};

/// Synthesis/analysis/frame/Gram matrices of a finite system in the weighted
/// grid basis. Rows of the synthesis matrix are scaled by sqrt(h_n) so that
/// Euclidean products of columns equal grid inner products; the analysis
/// matrix is the conjugate transpose of the synthesis matrix.
struct SystemMatrices {
    GridPtr grid;
    std::vector<double> lambdas;
    std::string tag;              // "exponentials" or "translates"
    Eigen::MatrixXcd synthesis;   // N x K, sqrt(h)-scaled columns
    Eigen::MatrixXcd frame_op;    // N x N, D D^H
    Eigen::MatrixXcd gram;        // K x K, D^H D

    Eigen::Index node_count() const { return synthesis.rows(); }
    Eigen::Index system_size() const { return synthesis.cols(); }
    Eigen::MatrixXcd analysis() const { return synthesis.adjoint(); }

    /// Recovers column k as an unscaled GridVector (divides the sqrt(h) row scaling).
    GridVector column(Eigen::Index k) const;
};

/// System {e_{lambda_k} restricted to the grid}.
SystemMatrices exponential_system(const TranslateSet& lambda, const GridPtr& grid);

/// Translate system in its frequency-domain representation: column k holds
/// hat_phi .* e_{lambda_k}, i.e. the transform of the shift by lambda_k.
SystemMatrices translate_system(const Generator& g, const TranslateSet& lambda);

/// Residuals of the operator identities tying the translate system to the
/// exponential system through multiplication by hat_phi:
///   (i)   D_phi = M_{hat_phi} D_e
///   (ii)  C_phi = C_e M_{conj hat_phi}
///   (iii) S_phi = M_{hat_phi} S_e M_{conj hat_phi}
///   (iv)  G_phi = C_e M_{Phi} D_e
///   (v)   D_e = M_{1/hat_phi} D_phi
///   (vi)  C_e = C_phi M_{(conj hat_phi)^dagger}
///   (vii) G_e = C_phi M_{1/Phi} D_phi
/// Identities (v)-(vii) need |hat_phi| bounded below; when the support mask
/// does not cover the grid they are evaluated on the restriction to the mask
/// (restricted_to_support = true). Residuals are Frobenius norms, which bound
/// the operator norm from above.
struct FactorizationReport {
    std::map<std::string, double> residuals;
    std::map<std::string, std::string> skipped; // identity -> reason
    bool restricted_to_support = false;

    double max_residual() const;
};

FactorizationReport verify_factorizations(const Generator& g, const TranslateSet& lambda);

} // namespace framekit
