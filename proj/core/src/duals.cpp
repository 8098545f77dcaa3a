#include "framekit/duals.hpp"

#include <cmath>

#include "framekit/bounds.hpp"
#include "framekit/errors.hpp"
#include "spectral.hpp"

namespace framekit {

namespace {

Eigen::VectorXd sqrt_weights(const FrequencyGrid& grid) {
    return grid.weight_vector().array().sqrt();
}

GridVector unscale_column(const GridPtr& grid, const Eigen::VectorXcd& col) {
    const Eigen::VectorXd root_h = sqrt_weights(*grid);
    Eigen::VectorXcd v = col.array() / root_h.array().cast<std::complex<double>>();
    return {grid, std::move(v)};
}

std::vector<GridVector> unscale_columns(const GridPtr& grid, const Eigen::MatrixXcd& m) {
    std::vector<GridVector> out;
    out.reserve(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index k = 0; k < m.cols(); ++k) out.push_back(unscale_column(grid, m.col(k)));
    return out;
}

// Support-restricted exponential machinery shared by the dual constructions.
struct SupportContext {
    GridRestriction restriction;
    SystemMatrices sys_e;           // exponential system on the restricted grid
    detail::HermitianEigen eig_s;   // eigendecomposition of its frame operator
    bool complete = false;          // restricted exponentials span the restricted space
};

SupportContext support_context(const Generator& g, const TranslateSet& lambda,
                               double rank_cutoff_rel) {
    SupportContext ctx{restrict_grid(g.grid(), g.support_mask()), {}, {}, false};
    ctx.sys_e = exponential_system(lambda, ctx.restriction.grid);
    ctx.eig_s = detail::hermitian_eigen(ctx.sys_e.frame_op, rank_cutoff_rel);
    ctx.complete = ctx.eig_s.rank() == ctx.restriction.grid->size();
    return ctx;
}

// Lifts column vectors from the restricted grid back to the full grid (zero off
// the support) and applies a pointwise multiplier given on the restricted nodes.
Eigen::MatrixXcd embed_scaled_columns(const Eigen::MatrixXcd& cols,
                                      const Eigen::VectorXcd& multiplier,
                                      const std::vector<Eigen::Index>& indices,
                                      Eigen::Index full_size) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(full_size, cols.cols());
    for (Eigen::Index i = 0; i < cols.rows(); ++i) {
        out.row(indices[static_cast<std::size_t>(i)]) = multiplier[i] * cols.row(i);
    }
    return out;
}

Eigen::VectorXcd restrict_values(const Eigen::VectorXcd& full,
                                 const std::vector<Eigen::Index>& indices) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(indices.size()));
    for (std::size_t i = 0; i < indices.size(); ++i) out[static_cast<Eigen::Index>(i)] = full[indices[i]];
    return out;
}

} // namespace

Eigen::MatrixXcd DualSystem::synthesis() const {
    if (vectors.empty()) return {};
    const GridPtr& grid = vectors.front().grid();
    const Eigen::VectorXd root_h = sqrt_weights(*grid);
    Eigen::MatrixXcd d(grid->size(), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        d.col(static_cast<Eigen::Index>(k)) =
            root_h.array().cast<std::complex<double>>() * vectors[k].values().array();
    }
    return d;
}

DualSystem canonical_dual(const SystemMatrices& sys, double rank_cutoff_rel) {
    const detail::HermitianEigen eig = detail::hermitian_eigen(sys.frame_op, rank_cutoff_rel);
    if (eig.rank() == 0) {
        throw PreconditionError("canonical_dual: zero system (no spectrum above cutoff)");
    }
    const Eigen::MatrixXcd dual_cols = eig.pseudo_inverse() * sys.synthesis;
    DualSystem out;
    out.vectors = unscale_columns(sys.grid, dual_cols);
    out.kind = DualKind::canonical_dual;
    out.method = DualMethod::pseudo_inverse_oracle;
    out.source_tag = sys.tag;
    return out;
}

DualSystem canonical_dual_translates(const Generator& g, const TranslateSet& lambda,
                                     DualMethod method, double rank_cutoff_rel) {
    if (g.support_size() == 0) {
        throw PreconditionError(
            "canonical_dual_translates: hat_phi has empty support, hypothesis p > 0 fails");
    }
    if (method == DualMethod::pseudo_inverse_oracle) {
        DualSystem out = canonical_dual(translate_system(g, lambda), rank_cutoff_rel);
        out.source_tag = "translates";
        const SupportContext ctx = support_context(g, lambda, rank_cutoff_rel);
        out.exponentials_complete = ctx.complete;
        return out;
    }

    const SupportContext ctx = support_context(g, lambda, rank_cutoff_rel);
    // Canonical dual exponentials on the support, then the pointwise factor
    // hat_phi / Phi = 1 / conj(hat_phi) lifts them to the dual translates.
    const Eigen::MatrixXcd dual_e_cols = ctx.eig_s.pseudo_inverse() * ctx.sys_e.synthesis;
    const Eigen::VectorXcd hat_sub =
        restrict_values(g.hat_phi().values(), ctx.restriction.indices);
    const Eigen::VectorXcd factor = hat_sub.conjugate().cwiseInverse();
    const Eigen::MatrixXcd lifted = embed_scaled_columns(
        dual_e_cols, factor, ctx.restriction.indices, g.grid()->size());

    DualSystem out;
    // Restricted and full grid share the weights on the support, so the
    // sqrt(h) scaling cancels consistently when unscaling on the full grid.
    out.vectors = unscale_columns(g.grid(), lifted);
    out.kind = DualKind::canonical_dual;
    out.method = DualMethod::explicit_formula;
    out.source_tag = "translates";
    out.exponentials_complete = ctx.complete;
    return out;
}

Generator tight_dual_generator(const Generator& g, const TranslateSet& lambda,
                               double tight_tol, double rank_cutoff_rel) {
    const SupportContext ctx = support_context(g, lambda, rank_cutoff_rel);
    if (!ctx.complete) {
        // equal bounds on a strict subspace are a tight frame *sequence* only;
        // the reciprocal formula needs a tight frame of the whole support space
        throw PreconditionError(
            "tight_dual_generator: exponential system spans a strict subspace of the "
            "support, so it is no tight frame of it");
    }
    const FrameBounds fb = frame_bounds(ctx.sys_e, rank_cutoff_rel);
    if (fb.b_opt - fb.a_opt > tight_tol * fb.b_opt) {
        throw PreconditionError("tight_dual_generator: exponential system is not tight (A_e = " +
                                std::to_string(fb.a_opt) + ", B_e = " + std::to_string(fb.b_opt) +
                                ")");
    }
    const double a_e = 0.5 * (fb.a_opt + fb.b_opt);
    Eigen::VectorXcd theta = Eigen::VectorXcd::Zero(g.grid()->size());
    const Eigen::VectorXcd& hat = g.hat_phi().values();
    for (Eigen::Index n = 0; n < theta.size(); ++n) {
        if (g.support_mask()[static_cast<std::size_t>(n)]) {
            theta[n] = 1.0 / (a_e * std::conj(hat[n]));
        }
    }
    return make_generator(TableShape{std::move(theta)}, g.grid());
}

Eigen::MatrixXcd inv_sqrt_frame_operator(const SystemMatrices& sys, double rank_cutoff_rel) {
    return detail::hermitian_eigen(sys.frame_op, rank_cutoff_rel).pseudo_inverse_sqrt();
}

ClosedFormChecks verify_dual_closed_forms(const Generator& g, const TranslateSet& lambda,
                                          double rank_cutoff_rel, double tight_tol) {
    ClosedFormChecks out;
    const SystemMatrices sys_e = exponential_system(lambda, g.grid());
    const SystemMatrices sys_phi = translate_system(g, lambda);
    const Eigen::VectorXcd& hat = g.hat_phi().values();
    const Eigen::VectorXd density = hat.array().abs2();

    const FrameBounds fb_e = frame_bounds(sys_e, rank_cutoff_rel);
    const bool tight = fb_e.b_opt - fb_e.a_opt <= tight_tol * fb_e.b_opt;
    const bool complete_on_grid =
        fb_e.rank == g.grid()->size(); // tight *frame of L2(E)* needs completeness
    const std::string tight_reason = "exponential system not tight on the grid (A_e = " +
                                     std::to_string(fb_e.a_opt) +
                                     ", B_e = " + std::to_string(fb_e.b_opt) + ")";

    if (tight && complete_on_grid) {
        const double a_e = 0.5 * (fb_e.a_opt + fb_e.b_opt);
        const Eigen::VectorXcd symbol =
            (a_e * density.array()).cast<std::complex<double>>().matrix();
        out.residuals["tight_frame_operator"] =
            (sys_phi.frame_op - Eigen::MatrixXcd(symbol.asDiagonal())).norm();

        Eigen::VectorXcd inv_sqrt_symbol = Eigen::VectorXcd::Zero(hat.size());
        for (Eigen::Index n = 0; n < hat.size(); ++n) {
            if (g.support_mask()[static_cast<std::size_t>(n)]) {
                inv_sqrt_symbol[n] = 1.0 / std::sqrt(a_e * density[n]);
            }
        }
        out.residuals["inv_sqrt_tight"] =
            (inv_sqrt_frame_operator(sys_phi, rank_cutoff_rel) -
             Eigen::MatrixXcd(inv_sqrt_symbol.asDiagonal()))
                .norm();
    } else {
        out.skipped["tight_frame_operator"] = tight_reason;
        out.skipped["inv_sqrt_tight"] = tight_reason;
    }

    const double unimodular_dev = (density.array() - 1.0).abs().maxCoeff();
    if (unimodular_dev <= tight_tol) {
        const Eigen::VectorXcd hat_conj = hat.conjugate();
        const Eigen::MatrixXcd lhs = inv_sqrt_frame_operator(sys_phi, rank_cutoff_rel);
        const Eigen::MatrixXcd rhs = hat.asDiagonal() *
                                     inv_sqrt_frame_operator(sys_e, rank_cutoff_rel) *
                                     hat_conj.asDiagonal();
        out.residuals["inv_sqrt_unimodular"] = (lhs - rhs).norm();
    } else {
        out.skipped["inv_sqrt_unimodular"] =
            "Phi deviates from 1 by " + std::to_string(unimodular_dev);
    }
    return out;
}

DualSystem parseval_system(const Generator& g, const TranslateSet& lambda,
                           double rank_cutoff_rel) {
    if (g.support_size() == 0) {
        throw PreconditionError("parseval_system: hat_phi has empty support");
    }
    const SupportContext ctx = support_context(g, lambda, rank_cutoff_rel);
    if (!ctx.complete) {
        throw PreconditionError(
            "parseval_system: exponential system spans a strict subspace of the support "
            "(rank " +
            std::to_string(ctx.eig_s.rank()) + " of " +
            std::to_string(ctx.restriction.grid->size()) +
            "); the hypothesis 'frame of the whole support space' fails");
    }
    // Canonical tight exponentials on the support, then the unit-modulus factor
    // hat_phi / sqrt(Phi) = hat_phi / |hat_phi| carries tightness over.
    const Eigen::MatrixXcd tight_cols = ctx.eig_s.pseudo_inverse_sqrt() * ctx.sys_e.synthesis;
    const Eigen::VectorXcd hat_sub =
        restrict_values(g.hat_phi().values(), ctx.restriction.indices);
    const Eigen::VectorXcd phase =
        (hat_sub.array() / hat_sub.array().abs().cast<std::complex<double>>()).matrix();
    const Eigen::MatrixXcd lifted =
        embed_scaled_columns(tight_cols, phase, ctx.restriction.indices, g.grid()->size());

    DualSystem out;
    out.vectors = unscale_columns(g.grid(), lifted);
    out.kind = DualKind::canonical_tight;
    out.method = DualMethod::explicit_formula;
    out.source_tag = "translates";
    out.exponentials_complete = true;
    return out;
}

DualOperatorReport dual_operator_identities(const Generator& g, const TranslateSet& lambda,
                                            double rank_cutoff_rel) {
    DualOperatorReport out;
    // Left side: canonical dual through the translate frame operator.
    const DualSystem dual = canonical_dual_translates(
        g, lambda, DualMethod::pseudo_inverse_oracle, rank_cutoff_rel);
    const Eigen::MatrixXcd d_theta = dual.synthesis();
    out.exponentials_complete = dual.exponentials_complete;

    // Right side: canonical dual exponentials on the support, lifted by the
    // multiplier hat_phi / Phi (and its conjugate for the analysis identity).
    const SupportContext ctx = support_context(g, lambda, rank_cutoff_rel);
    const Eigen::MatrixXcd dual_e_cols = ctx.eig_s.pseudo_inverse() * ctx.sys_e.synthesis;
    const Eigen::VectorXcd hat_sub =
        restrict_values(g.hat_phi().values(), ctx.restriction.indices);
    const Eigen::VectorXcd factor = hat_sub.conjugate().cwiseInverse(); // hat_phi / Phi
    const Eigen::MatrixXcd rhs_d = embed_scaled_columns(
        dual_e_cols, factor, ctx.restriction.indices, g.grid()->size());

    out.residuals["D_theta"] = (d_theta - rhs_d).norm();

    // C_theta = C~_e M_{conj(hat_phi) / Phi}, assembled through the analysis
    // route (C~_e = D~_e^H with the pseudo-inverse applied on the right).
    const Eigen::MatrixXcd dual_e_rows = ctx.sys_e.synthesis.adjoint() * ctx.eig_s.pseudo_inverse();
    Eigen::MatrixXcd rhs_c =
        Eigen::MatrixXcd::Zero(d_theta.cols(), g.grid()->size());
    for (Eigen::Index i = 0; i < dual_e_rows.cols(); ++i) {
        rhs_c.col(ctx.restriction.indices[static_cast<std::size_t>(i)]) =
            std::conj(factor[i]) * dual_e_rows.col(i);
    }
    out.residuals["C_theta"] = (d_theta.adjoint() - rhs_c).norm();
    return out;
}

} // namespace framekit
