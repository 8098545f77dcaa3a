#pragma once

#include <vector>

#include "framekit/certificate.hpp"
#include "framekit/operators.hpp"

namespace framekit {

/// Optimal frame bounds of a finite system on its span, read off the nonzero
/// Gram spectrum. Every finite system is a frame sequence of its span; the
/// constants are the content.
struct FrameBounds {
    double a_opt = 0.0;               // smallest eigenvalue above the cutoff
    double b_opt = 0.0;               // largest eigenvalue
    Eigen::Index rank = 0;            // eigenvalues above the cutoff
    double rank_cutoff = 0.0;         // absolute cutoff used
    std::vector<double> spectrum;     // all Gram eigenvalues, ascending
};

/// Eigenvalues of the Gram matrix with relative cutoff rank_cutoff_rel * b_opt.
/// Throws PreconditionError when everything falls below the cutoff.
FrameBounds frame_bounds(const SystemMatrices& sys, double rank_cutoff_rel = 1e-10);

/// Bessel-bound transfer between the exponential and the translate system:
/// B_phi <= B_e * P always, and B_e <= B_phi / p when Phi is bounded below on
/// the whole grid (p = min over E of Phi); otherwise that direction is skipped.
Certificate bound_transfer_check(const Generator& g, const TranslateSet& lambda,
                                 double rank_cutoff_rel = 1e-10, double slack_tol = 1e-10);

/// Lower-bound sandwich p * A_e <= A_phi <= P * A_e with the exponential
/// system restricted to the support of hat_phi and p, P the extremes of the
/// pseudo-Gramian on that support. Throws PreconditionError when the support
/// mask is empty.
Certificate bound_sandwich_check(const Generator& g, const TranslateSet& lambda,
                                 double rank_cutoff_rel = 1e-10, double slack_tol = 1e-10);

/// Certifies the numerically checkable shadow of the three-way equivalence
/// between exponential-system and translate-system frame properties: evaluates
/// condition (c) "p <= Phi <= P on the support" with the finite-model floor
/// p >= condition_floor * P, and when it holds compares span ranks and checks
/// the bound sandwich. When (c) fails the verdict is inconclusive and the
/// worst node is named. The minimum of Phi over all of E is recorded alongside
/// the support minimum, since the two differ exactly when the mask is proper.
Certificate equivalence_certificate(const Generator& g, const TranslateSet& lambda,
                                    double rank_cutoff_rel = 1e-10,
                                    double condition_floor = 1e-6,
                                    double slack_tol = 1e-10);

/// Finite-model exactness (minimality): the Gram matrix has full rank K above
/// the cutoff. Verdict fail reports the rank deficiency.
Certificate exactness_check(const SystemMatrices& sys, double rank_cutoff_rel = 1e-10);

/// Exactness transfer: the translate system is exact iff the exponential
/// system is, provided Phi is bounded below on E. Skipped (inconclusive) when
/// the support mask is proper.
Certificate exactness_transfer_check(const Generator& g, const TranslateSet& lambda,
                                     double rank_cutoff_rel = 1e-10);

} // namespace framekit
