#pragma once

#include <map>
#include <string>
#include <vector>

#include "framekit/generator.hpp"
#include "framekit/operators.hpp"

namespace framekit {

enum class DualKind { canonical_dual, canonical_tight };
enum class DualMethod { explicit_formula, pseudo_inverse_oracle };

/// A dual (or canonical tight) companion system: K frequency-domain vectors on
/// the source grid, spanning the same space as the source system.
struct DualSystem {
    std::vector<GridVector> vectors;
    DualKind kind = DualKind::canonical_dual;
    DualMethod method = DualMethod::pseudo_inverse_oracle;
    std::string source_tag;

    /// True when the exponential system on the support of hat_phi spans the
    /// whole restricted space. The explicit frequency-domain dual formula is
    /// the canonical dual exactly in that case; otherwise it is a dual, and
    /// the pseudo-inverse route is the canonical one.
    bool exponentials_complete = true;

    /// Scaled synthesis matrix of the dual system (sqrt(h)-scaled columns).
    Eigen::MatrixXcd synthesis() const;
};

/// Canonical dual of an arbitrary finite system: columns S^+ psi_k with the
/// pseudo-inverse taken above the relative rank cutoff.
DualSystem canonical_dual(const SystemMatrices& sys, double rank_cutoff_rel = 1e-10);

/// Canonical dual of the translate system. The explicit route computes
/// (hat_phi / Phi) times the canonical dual exponentials of the system
/// restricted to the support of hat_phi, zero off the support; the oracle
/// route applies the pseudo-inverse of the translate frame operator column by
/// column. Throws PreconditionError when the support mask is empty.
DualSystem canonical_dual_translates(const Generator& g, const TranslateSet& lambda,
                                     DualMethod method, double rank_cutoff_rel = 1e-10);

/// When the exponential system is a tight frame of the whole support space
/// (complete, with B_e - A_e within tight_tol relative), the canonical dual is
/// again a translate system; this returns its generator, hat_theta =
/// (1 / A_e) / conj(hat_phi) on the support and zero off it. Throws
/// PreconditionError (with the measured bounds) when tightness or completeness
/// fails.
Generator tight_dual_generator(const Generator& g, const TranslateSet& lambda,
                               double tight_tol = 1e-8, double rank_cutoff_rel = 1e-10);

/// Inverse square root of the frame operator on the span (eigenvalues mapped
/// to 1/sqrt above the cutoff, 0 below).
Eigen::MatrixXcd inv_sqrt_frame_operator(const SystemMatrices& sys,
                                         double rank_cutoff_rel = 1e-10);

/// Residuals of the closed forms available for special instances:
///  - "tight_frame_operator": S_phi = M_{A_e Phi} when the exponential system
///    is tight on the full grid;
///  - "inv_sqrt_unimodular": S_phi^{-1/2} = M_{hat_phi} S_e^{-1/2} M_{conj hat_phi}
///    when Phi = 1 on the grid;
///  - "inv_sqrt_tight": S_phi^{-1/2} = M_{(sqrt(A_e) |hat_phi|)^dagger} in the
///    tight case.
/// Hypotheses that fail are reported in `skipped` with the measured constants.
struct ClosedFormChecks {
    std::map<std::string, double> residuals;
    std::map<std::string, std::string> skipped;
};

ClosedFormChecks verify_dual_closed_forms(const Generator& g, const TranslateSet& lambda,
                                          double rank_cutoff_rel = 1e-10,
                                          double tight_tol = 1e-8);

/// Canonical Parseval companion of the translate system:
/// hat_theta#_k = (hat_phi / sqrt(Phi)) * (S_e^{-1/2} e_{lambda_k}) on the
/// support, 0 off it, with the exponential system restricted to the support.
/// Requires that restricted system to span the whole restricted space; throws
/// PreconditionError otherwise.
DualSystem parseval_system(const Generator& g, const TranslateSet& lambda,
                           double rank_cutoff_rel = 1e-10);

/// Residuals of the dual-operator identities
///   D_theta = M_{hat_phi / Phi} D~_e   and   C_theta = C~_e M_{conj(hat_phi) / Phi},
/// with theta the pseudo-inverse-route canonical dual and D~_e/C~_e the
/// synthesis/analysis matrices of the canonical dual exponentials on the
/// support. The multiplier of the analysis identity carries the conjugate of
/// hat_phi (for real-valued generators the two multipliers coincide).
struct DualOperatorReport {
    std::map<std::string, double> residuals;
    bool exponentials_complete = true;
};

DualOperatorReport dual_operator_identities(const Generator& g, const TranslateSet& lambda,
                                            double rank_cutoff_rel = 1e-10);

} // namespace framekit
