#include "framekit/operators.hpp"

#include <cmath>
#include <limits>

#include "framekit/errors.hpp"

namespace framekit {

MultiplicationOperator::MultiplicationOperator(GridVector symbol, double eps_supp)
    : symbol_(std::move(symbol)) {
    const Eigen::VectorXd mag = symbol_.values().array().abs();
    mask_.resize(static_cast<std::size_t>(mag.size()));
    ess_inf_ = std::numeric_limits<double>::infinity();
    for (Eigen::Index n = 0; n < mag.size(); ++n) {
        const bool on = mag[n] > eps_supp;
        mask_[static_cast<std::size_t>(n)] = on;
        if (on) {
            ++mask_size_;
            ess_inf_ = std::min(ess_inf_, mag[n]);
            ess_sup_ = std::max(ess_sup_, mag[n]);
        }
        op_norm_ = std::max(op_norm_, mag[n]);
    }
    if (mask_size_ == 0) ess_inf_ = 0.0;
}

GridVector MultiplicationOperator::apply(const GridVector& f) const {
    if (!f.grid()->same_as(*symbol_.grid())) {
        throw GridMismatchError("multiplication operator: argument lives on another grid");
    }
    Eigen::VectorXcd v = symbol_.values().array() * f.values().array();
    return {f.grid(), std::move(v)};
}

Eigen::VectorXcd MultiplicationOperator::pseudo_inverse_symbol() const {
    Eigen::VectorXcd inv = Eigen::VectorXcd::Zero(symbol_.size());
    for (Eigen::Index n = 0; n < symbol_.size(); ++n) {
        if (mask_[static_cast<std::size_t>(n)]) inv[n] = 1.0 / symbol_.values()[n];
    }
    return inv;
}

GridVector MultiplicationOperator::apply_pseudo_inverse(const GridVector& f) const {
    if (!f.grid()->same_as(*symbol_.grid())) {
        throw GridMismatchError("multiplication operator: argument lives on another grid");
    }
    Eigen::VectorXcd v = pseudo_inverse_symbol().array() * f.values().array();
    return {f.grid(), std::move(v)};
}

namespace {

Eigen::VectorXd sqrt_weights(const FrequencyGrid& grid) {
    return grid.weight_vector().array().sqrt();
}

SystemMatrices assemble(GridPtr grid, const TranslateSet& lambda, std::string tag,
                        const Eigen::VectorXcd* envelope) {
    const auto n_nodes = grid->size();
    const auto k_count = static_cast<Eigen::Index>(lambda.size());
    const Eigen::VectorXd root_h = sqrt_weights(*grid);

    Eigen::MatrixXcd d(n_nodes, k_count);
    for (Eigen::Index k = 0; k < k_count; ++k) {
        GridVector e = exponential_vector(lambda.points()[static_cast<std::size_t>(k)], grid);
        Eigen::VectorXcd col = e.values();
        if (envelope) col = envelope->array() * col.array();
        d.col(k) = root_h.array().cast<std::complex<double>>() * col.array();
    }

    SystemMatrices sys;
    sys.grid = std::move(grid);
    sys.lambdas.assign(lambda.points().begin(), lambda.points().end());
    sys.tag = std::move(tag);
    sys.frame_op = d * d.adjoint();
    sys.gram = d.adjoint() * d;
    sys.synthesis = std::move(d);
    return sys;
}

} // namespace

GridVector SystemMatrices::column(Eigen::Index k) const {
    const Eigen::VectorXd root_h = sqrt_weights(*grid);
    Eigen::VectorXcd v = synthesis.col(k).array() / root_h.array().cast<std::complex<double>>();
    return {grid, std::move(v)};
}

SystemMatrices exponential_system(const TranslateSet& lambda, const GridPtr& grid) {
    return assemble(grid, lambda, "exponentials", nullptr);
}

SystemMatrices translate_system(const Generator& g, const TranslateSet& lambda) {
    const Eigen::VectorXcd envelope = g.hat_phi().values();
    return assemble(g.grid(), lambda, "translates", &envelope);
}

namespace {

Eigen::MatrixXcd scale_rows(const Eigen::VectorXcd& symbol, const Eigen::MatrixXcd& m) {
    return symbol.asDiagonal() * m;
}

} // namespace

double FactorizationReport::max_residual() const {
    double r = 0.0;
    for (const auto& [name, value] : residuals) r = std::max(r, value);
    return r;
}

FactorizationReport verify_factorizations(const Generator& g, const TranslateSet& lambda) {
    FactorizationReport report;

    const SystemMatrices sys_e = exponential_system(lambda, g.grid());
    const SystemMatrices sys_phi = translate_system(g, lambda);
    const Eigen::VectorXcd hat = g.hat_phi().values();
    const Eigen::VectorXcd hat_conj = hat.conjugate();
    const Eigen::VectorXcd density = hat.array().abs2();

    // Forward identities hold on the full grid with no hypothesis on hat_phi.
    report.residuals["(i)"] = (sys_phi.synthesis - scale_rows(hat, sys_e.synthesis)).norm();
    report.residuals["(ii)"] =
        (sys_phi.analysis() - sys_e.analysis() * hat_conj.asDiagonal()).norm();
    report.residuals["(iii)"] =
        (sys_phi.frame_op -
         scale_rows(hat, sys_e.frame_op * hat_conj.asDiagonal()))
            .norm();
    report.residuals["(iv)"] =
        (sys_phi.gram - sys_e.analysis() * density.asDiagonal() * sys_e.synthesis).norm();

    // Inverse identities need |hat_phi| bounded below. Off the support mask the
    // reciprocal convention zeroes the symbol, so they are checked on the mask;
    // with a full mask that is the whole grid.
    const bool full = g.support_covers_grid();
    GridPtr sub_grid = g.grid();
    Eigen::MatrixXcd d_e = sys_e.synthesis;
    Eigen::MatrixXcd d_phi = sys_phi.synthesis;
    Eigen::VectorXcd hat_sub = hat;
    if (!full) {
        report.restricted_to_support = true;
        const GridRestriction r = restrict_grid(g.grid(), g.support_mask());
        sub_grid = r.grid;
        const auto rows = static_cast<Eigen::Index>(r.indices.size());
        Eigen::MatrixXcd d_e_sub(rows, sys_e.system_size());
        Eigen::MatrixXcd d_phi_sub(rows, sys_phi.system_size());
        Eigen::VectorXcd hat_rows(rows);
        for (Eigen::Index i = 0; i < rows; ++i) {
            d_e_sub.row(i) = sys_e.synthesis.row(r.indices[static_cast<std::size_t>(i)]);
            d_phi_sub.row(i) = sys_phi.synthesis.row(r.indices[static_cast<std::size_t>(i)]);
            hat_rows[i] = hat[r.indices[static_cast<std::size_t>(i)]];
        }
        d_e = std::move(d_e_sub);
        d_phi = std::move(d_phi_sub);
        hat_sub = std::move(hat_rows);
    }
    if (sub_grid->size() == 0) {
        const std::string reason = "support mask keeps no grid node";
        report.skipped["(v)"] = reason;
        report.skipped["(vi)"] = reason;
        report.skipped["(vii)"] = reason;
        return report;
    }

    const Eigen::VectorXcd inv_hat = hat_sub.cwiseInverse();
    const Eigen::VectorXcd inv_hat_conj = hat_sub.conjugate().cwiseInverse();
    const Eigen::VectorXcd inv_density = hat_sub.array().abs2().inverse();

    report.residuals["(v)"] = (d_e - scale_rows(inv_hat, d_phi)).norm();
    report.residuals["(vi)"] =
        (d_e.adjoint() - d_phi.adjoint() * inv_hat_conj.asDiagonal()).norm();
    report.residuals["(vii)"] =
        (d_e.adjoint() * d_e - d_phi.adjoint() * inv_density.asDiagonal() * d_phi).norm();
    return report;
}

} // namespace framekit
