#include "framekit/generator.hpp"

#include <cmath>
#include <numbers>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

constexpr double kPi = std::numbers::pi;

double sample_shape(const IndicatorShape& s, double w) {
    return (w >= s.lo && w <= s.hi) ? 1.0 : 0.0;
}

double sample_shape(const FejerShape& s, double w) {
    return std::max(0.0, 1.0 - std::abs(w) / s.width);
}

double sample_shape(const RaisedCosineShape& s, double w) {
    const double f1 = 0.5 * (1.0 - s.beta);
    const double f2 = 0.5 * (1.0 + s.beta);
    const double a = std::abs(w);
    if (a <= f1) return 1.0;
    if (a >= f2) return 0.0;
    return 0.5 * (1.0 + std::cos(kPi * (a - f1) / s.beta));
}

double sample_shape(const TruncatedGaussianShape& s, double w) {
    return std::exp(-w * w / (2.0 * s.sigma * s.sigma));
}

void validate(const GeneratorKind& kind, const GridPtr& grid) {
    if (const auto* ind = std::get_if<IndicatorShape>(&kind)) {
        if (!(ind->hi > ind->lo)) throw ConfigError("indicator generator: hi must exceed lo");
    } else if (const auto* fj = std::get_if<FejerShape>(&kind)) {
        if (!(fj->width > 0.0)) throw ConfigError("fejer generator: width must be positive");
    } else if (const auto* rc = std::get_if<RaisedCosineShape>(&kind)) {
        if (rc->beta < 0.0 || rc->beta > 1.0)
            throw ConfigError("raised_cosine generator: beta must lie in [0, 1]");
    } else if (const auto* tg = std::get_if<TruncatedGaussianShape>(&kind)) {
        if (!(tg->sigma > 0.0))
            throw ConfigError("truncated_gaussian generator: sigma must be positive");
    } else if (const auto* tb = std::get_if<TableShape>(&kind)) {
        if (tb->samples.size() != grid->size())
            throw ConfigError("table generator: " + std::to_string(tb->samples.size()) +
                              " samples for a grid of size " + std::to_string(grid->size()));
    }
}

Eigen::VectorXcd sample_kind(const GeneratorKind& kind, const GridPtr& grid) {
    if (const auto* tb = std::get_if<TableShape>(&kind)) {
        return tb->samples;
    }
    Eigen::VectorXcd v(grid->size());
    const auto pts = grid->points();
    for (Eigen::Index n = 0; n < grid->size(); ++n) {
        const double w = pts[static_cast<std::size_t>(n)];
        v[n] = std::visit(
            [w](const auto& shape) -> double {
                if constexpr (std::is_same_v<std::decay_t<decltype(shape)>, TableShape>) {
                    return 0.0; // unreachable
                } else {
                    return sample_shape(shape, w);
                }
            },
            kind);
    }
    return v;
}

// sin(pi t) / (pi t), 1 at t = 0.
double sinc(double t) {
    const double a = kPi * t;
    if (std::abs(a) < 1e-8) return 1.0 - a * a / 6.0;
    return std::sin(a) / a;
}

// Closed form of the indicator transform: integral over [lo, hi] of e^{-2 pi i x w}.
std::complex<double> indicator_transform(const IndicatorShape& s, double x) {
    const double len = s.hi - s.lo;
    const double center = 0.5 * (s.lo + s.hi);
    return std::polar(len * sinc(len * x), -2.0 * kPi * x * center);
}

// Closed form for the squared triangle: 2w * integral_0^1 (1-u)^2 cos(a u) du
// with a = 2 pi w x, which evaluates to (4w / a^3) (a - sin a).
double fejer_gramian_transform(const FejerShape& s, double x) {
    const double a = 2.0 * kPi * s.width * x;
    if (std::abs(a) < 1e-3) {
        const double a2 = a * a;
        return 4.0 * s.width * (1.0 / 6.0 - a2 / 120.0 + a2 * a2 / 5040.0);
    }
    return 4.0 * s.width * (a - std::sin(a)) / (a * a * a);
}

} // namespace

std::string kind_name(const GeneratorKind& kind) {
    struct Namer {
        std::string operator()(const IndicatorShape&) const { return "indicator"; }
        std::string operator()(const FejerShape&) const { return "fejer"; }
        std::string operator()(const RaisedCosineShape&) const { return "raised_cosine"; }
        std::string operator()(const TruncatedGaussianShape&) const {
            return "truncated_gaussian";
        }
        std::string operator()(const TableShape&) const { return "table"; }
    };
    return std::visit(Namer{}, kind);
}

Generator::Generator(GeneratorKind kind, GridVector hat_phi, double eps_supp_rel)
    : kind_(std::move(kind)), hat_phi_(std::move(hat_phi)) {
    const Eigen::VectorXd mag = hat_phi_.values().array().abs();
    const double peak = mag.size() > 0 ? mag.maxCoeff() : 0.0;
    eps_supp_ = eps_supp_rel * peak;
    support_mask_.resize(static_cast<std::size_t>(mag.size()));
    for (Eigen::Index n = 0; n < mag.size(); ++n) {
        const bool on = mag[n] > eps_supp_;
        support_mask_[static_cast<std::size_t>(n)] = on;
        if (on) ++support_size_;
    }
    norm_squared_ = std::real(inner_product(hat_phi_, hat_phi_));
}

bool Generator::has_analytic_phi_hat_transform() const {
    return std::holds_alternative<IndicatorShape>(kind_) ||
           std::holds_alternative<FejerShape>(kind_);
}

Generator make_generator(const GeneratorKind& kind, const GridPtr& grid, double eps_supp_rel) {
    if (eps_supp_rel < 0.0) throw ConfigError("generator: eps_supp must be nonnegative");
    validate(kind, grid);
    GridVector hat(grid, sample_kind(kind, grid));
    Generator g(kind, std::move(hat), eps_supp_rel);
    if (!(g.norm_squared() > 0.0) || g.support_size() == 0) {
        throw ConfigError("generator '" + kind_name(kind) + "' is zero on the grid");
    }
    return g;
}

GridVector pseudo_gramian(const Generator& g) {
    Eigen::VectorXcd v = g.hat_phi().values().array().abs2();
    return {g.grid(), std::move(v)};
}

std::complex<double> phi_hat_transform(const Generator& g, double x, TransformMode mode) {
    if (mode == TransformMode::quadrature) {
        const auto& grid = *g.grid();
        const auto pts = grid.points();
        const auto wts = grid.weights();
        const Eigen::VectorXd density = g.hat_phi().values().array().abs2();
        std::complex<double> sum = 0.0;
        for (Eigen::Index n = 0; n < grid.size(); ++n) {
            const auto i = static_cast<std::size_t>(n);
            sum += wts[i] * density[n] * std::polar(1.0, -2.0 * kPi * x * pts[i]);
        }
        return sum;
    }
    if (const auto* ind = std::get_if<IndicatorShape>(&g.kind())) {
        return indicator_transform(*ind, x);
    }
    if (const auto* fj = std::get_if<FejerShape>(&g.kind())) {
        return fejer_gramian_transform(*fj, x);
    }
    throw UnsupportedModeError("phi_hat_transform: no closed form for generator kind '" +
                               kind_name(g.kind()) + "'");
}

} // namespace framekit
