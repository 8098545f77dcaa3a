#pragma once

#include <Eigen/Dense>

#include "framekit/certificate.hpp"
#include "framekit/generator.hpp"
#include "framekit/translate_set.hpp"

namespace framekit {

/// Gram matrix of a translate system, entries[k][l] = <T_{lambda_k} phi, T_{lambda_l} phi>,
/// generated from the transform of the pseudo-Gramian at the point differences.
/// Hermitian by construction (upper triangle computed, mirror conjugated).
struct GramMatrix {
    Eigen::MatrixXcd entries;
    TransformMode mode = TransformMode::quadrature;
    std::string system_tag = "translates";
};

/// Assembles entries[k][l] = phi_hat_transform(g, lambda_k - lambda_l, mode).
/// Propagates UnsupportedModeError from analytic mode.
GramMatrix gram_matrix(const Generator& g, const TranslateSet& lambda, TransformMode mode);

/// Schur-test Bessel sufficiency: R = max_k sum_l |G_kl| is a Bessel bound for
/// the truncated system; always passes and records R (and bounds the largest
/// Gram eigenvalue from above).
Certificate schur_bessel_certificate(const Generator& g, const TranslateSet& lambda);

/// Necessary-condition diagnostic: Q = max_k sum_l |G_kl|^2. Finite instances
/// always satisfy it; the value is the content.
Certificate bessel_necessary_check(const Generator& g, const TranslateSet& lambda);

/// Diagonal-dominance Riesz sufficiency: passes iff ||phi||^2 > max_j sum_{l != j} |G_jl|,
/// recording the Gershgorin interval [D - S_off, D + S_off] as Riesz bound
/// estimates. Throws PreconditionError for a zero generator.
Certificate riesz_diagonal_dominance(const Generator& g, const TranslateSet& lambda);

} // namespace framekit
