#include "framekit/bounds.hpp"

#include <cmath>
#include <limits>

#include "framekit/errors.hpp"
#include "spectral.hpp"

namespace framekit {

FrameBounds frame_bounds(const SystemMatrices& sys, double rank_cutoff_rel) {
    const detail::HermitianEigen eig = detail::hermitian_eigen(sys.gram, rank_cutoff_rel);
    FrameBounds out;
    out.spectrum.assign(eig.eigenvalues.data(), eig.eigenvalues.data() + eig.eigenvalues.size());
    out.rank_cutoff = eig.abs_cutoff;
    out.rank = eig.rank();
    if (out.rank == 0) {
        throw PreconditionError("frame_bounds: all Gram eigenvalues fall below the cutoff");
    }
    out.b_opt = eig.eigenvalues[eig.eigenvalues.size() - 1];
    out.a_opt = eig.eigenvalues[eig.eigenvalues.size() - out.rank];
    return out;
}

namespace {

// Extremes of the pseudo-Gramian: over the support mask and over the whole grid.
struct PhiExtremes {
    double p_support = 0.0;
    double p_grid = 0.0;
    double p_max = 0.0;
    Eigen::Index argmin_support = -1;
};

PhiExtremes phi_extremes(const Generator& g) {
    const Eigen::VectorXd density = g.hat_phi().values().array().abs2();
    PhiExtremes out;
    out.p_grid = std::numeric_limits<double>::infinity();
    out.p_support = std::numeric_limits<double>::infinity();
    for (Eigen::Index n = 0; n < density.size(); ++n) {
        out.p_grid = std::min(out.p_grid, density[n]);
        out.p_max = std::max(out.p_max, density[n]);
        if (g.support_mask()[static_cast<std::size_t>(n)] && density[n] < out.p_support) {
            out.p_support = density[n];
            out.argmin_support = n;
        }
    }
    return out;
}

SystemMatrices masked_exponential_system(const Generator& g, const TranslateSet& lambda) {
    const GridRestriction r = restrict_grid(g.grid(), g.support_mask());
    return exponential_system(lambda, r.grid);
}

} // namespace

Certificate bound_transfer_check(const Generator& g, const TranslateSet& lambda,
                                 double rank_cutoff_rel, double slack_tol) {
    const FrameBounds be = frame_bounds(exponential_system(lambda, g.grid()), rank_cutoff_rel);
    const FrameBounds bp = frame_bounds(translate_system(g, lambda), rank_cutoff_rel);
    const PhiExtremes ext = phi_extremes(g);

    Certificate cert;
    cert.name = "bound_transfer";
    cert.inequality = "B_phi <= B_e * P; B_e <= B_phi / p when p = min_E Phi > 0";
    cert.truncation_size = static_cast<int>(lambda.size());
    cert.constants["B_e"] = be.b_opt;
    cert.constants["B_phi"] = bp.b_opt;
    cert.constants["P"] = ext.p_max;
    cert.constants["p"] = ext.p_grid;

    const bool upper_ok = bp.b_opt <= be.b_opt * ext.p_max + slack_tol;
    bool lower_ok = true;
    // Below the support threshold the reciprocal convention treats Phi as zero,
    // so the reverse transfer is only claimed when the mask covers the grid.
    if (g.support_covers_grid() && ext.p_grid > 0.0) {
        lower_ok = ext.p_grid * be.b_opt <= bp.b_opt + slack_tol;
    } else {
        cert.detail = "reverse direction skipped: Phi vanishes on part of E";
        cert.constants["p"] = 0.0;
    }
    cert.verdict = (upper_ok && lower_ok) ? Certificate::Verdict::pass
                                          : Certificate::Verdict::fail;
    return cert;
}

Certificate bound_sandwich_check(const Generator& g, const TranslateSet& lambda,
                                 double rank_cutoff_rel, double slack_tol) {
    const PhiExtremes ext = phi_extremes(g);
    if (g.support_size() == 0 || !(ext.p_support > 0.0)) {
        throw PreconditionError(
            "bound_sandwich_check: pseudo-Gramian is not bounded below on its support");
    }
    const FrameBounds ae = frame_bounds(masked_exponential_system(g, lambda), rank_cutoff_rel);
    const FrameBounds ap = frame_bounds(translate_system(g, lambda), rank_cutoff_rel);

    Certificate cert;
    cert.name = "bound_sandwich";
    cert.inequality = "p * A_e <= A_phi <= P * A_e on the support of hat_phi";
    cert.truncation_size = static_cast<int>(lambda.size());
    cert.constants["A_e"] = ae.a_opt;
    cert.constants["A_phi"] = ap.a_opt;
    cert.constants["p"] = ext.p_support;
    cert.constants["P"] = ext.p_max;
    cert.constants["slack_lower"] = ap.a_opt - ext.p_support * ae.a_opt;
    cert.constants["slack_upper"] = ext.p_max * ae.a_opt - ap.a_opt;
    const bool ok = ext.p_support * ae.a_opt <= ap.a_opt + slack_tol &&
                    ap.a_opt <= ext.p_max * ae.a_opt + slack_tol;
    cert.verdict = ok ? Certificate::Verdict::pass : Certificate::Verdict::fail;
    return cert;
}

Certificate equivalence_certificate(const Generator& g, const TranslateSet& lambda,
                                    double rank_cutoff_rel, double condition_floor,
                                    double slack_tol) {
    const PhiExtremes ext = phi_extremes(g);
    Certificate cert;
    cert.name = "equivalence";
    cert.inequality =
        "condition (c): p >= condition_floor * P on supp(hat_phi); "
        "then rank(G_e|supp) = rank(G_phi) and the bound sandwich holds";
    cert.truncation_size = static_cast<int>(lambda.size());
    cert.constants["p_support"] = ext.p_support;
    cert.constants["p_grid"] = g.support_covers_grid() ? ext.p_grid : 0.0;
    cert.constants["P"] = ext.p_max;
    cert.constants["condition_floor"] = condition_floor;

    if (!(ext.p_support >= condition_floor * ext.p_max)) {
        cert.verdict = Certificate::Verdict::inconclusive;
        cert.constants["violating_node"] = static_cast<double>(ext.argmin_support);
        cert.detail =
            "condition (c) fails at node " + std::to_string(ext.argmin_support) +
            " (omega = " +
            std::to_string(g.grid()->points()[static_cast<std::size_t>(ext.argmin_support)]) +
            "): Phi decays below the floor, no two-sided bound on the support";
        return cert;
    }

    const FrameBounds fe = frame_bounds(masked_exponential_system(g, lambda), rank_cutoff_rel);
    const FrameBounds fp = frame_bounds(translate_system(g, lambda), rank_cutoff_rel);
    cert.constants["rank_e"] = static_cast<double>(fe.rank);
    cert.constants["rank_phi"] = static_cast<double>(fp.rank);
    const bool ranks_equal = fe.rank == fp.rank;
    const bool sandwich = ext.p_support * fe.a_opt <= fp.a_opt + slack_tol &&
                          fp.a_opt <= ext.p_max * fe.a_opt + slack_tol;
    cert.constants["A_e"] = fe.a_opt;
    cert.constants["A_phi"] = fp.a_opt;
    if (ranks_equal && sandwich) {
        cert.verdict = Certificate::Verdict::pass;
    } else {
        cert.verdict = Certificate::Verdict::fail;
        cert.detail = ranks_equal ? "bound sandwich violated" : "span ranks differ";
    }
    return cert;
}

Certificate exactness_check(const SystemMatrices& sys, double rank_cutoff_rel) {
    const FrameBounds fb = frame_bounds(sys, rank_cutoff_rel);
    const auto k_count = sys.system_size();
    Certificate cert;
    cert.name = "exactness_" + sys.tag;
    cert.inequality = "rank(G) = K (no element of the system is removable)";
    cert.truncation_size = static_cast<int>(k_count);
    cert.constants["rank"] = static_cast<double>(fb.rank);
    cert.constants["K"] = static_cast<double>(k_count);
    cert.constants["deficiency"] = static_cast<double>(k_count - fb.rank);
    cert.verdict =
        (fb.rank == k_count) ? Certificate::Verdict::pass : Certificate::Verdict::fail;
    if (fb.rank < k_count) {
        cert.detail = std::to_string(k_count - fb.rank) + " zero mode(s) at cutoff " +
                      std::to_string(fb.rank_cutoff);
    }
    return cert;
}

Certificate exactness_transfer_check(const Generator& g, const TranslateSet& lambda,
                                     double rank_cutoff_rel) {
    Certificate cert;
    cert.name = "exactness_transfer";
    cert.inequality =
        "exact(translates) => exact(exponentials); equivalence when Phi is bounded below on E";
    cert.truncation_size = static_cast<int>(lambda.size());
    const Certificate exact_e =
        exactness_check(exponential_system(lambda, g.grid()), rank_cutoff_rel);
    const Certificate exact_phi = exactness_check(translate_system(g, lambda), rank_cutoff_rel);
    cert.constants["rank_e"] = exact_e.constants.at("rank");
    cert.constants["rank_phi"] = exact_phi.constants.at("rank");
    if (g.support_covers_grid()) {
        cert.verdict = (exact_e.passed() == exact_phi.passed()) ? Certificate::Verdict::pass
                                                                : Certificate::Verdict::fail;
        return cert;
    }
    // Phi vanishes on part of E: only the forward implication is claimed (the
    // converse needs the lower bound).
    if (exact_phi.passed() && !exact_e.passed()) {
        cert.verdict = Certificate::Verdict::fail;
        cert.detail = "exact translates with inexact exponentials";
    } else {
        cert.verdict = Certificate::Verdict::pass;
        cert.detail = exact_phi.passed()
                          ? "one-sided check only: Phi vanishes on part of E"
                          : "vacuous: translates are not exact; converse needs Phi bounded below";
    }
    return cert;
}

} // namespace framekit
