#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "framekit/grid.hpp"

namespace framekit {

/// Numerical tolerances, all overridable from the [tolerances] config section.
struct Tolerances {
    double eps_supp_rel = 1e-12;      // support threshold, relative to max |hat_phi|
    double rank_cutoff_rel = 1e-10;   // span cutoff, relative to the top eigenvalue
    double residual_tol = 1e-10;      // exact-in-model identities must meet this
    double dual_tol = 1e-8;           // dual agreement / reconstruction residuals
    double condition_floor = 1e-6;    // p >= floor * P for condition (c)
    double tight_tol = 1e-8;          // relative B - A gap counted as tight
};

/// [generator] section: kind name plus scalar parameters; table kinds carry
/// explicit samples.
struct GeneratorSpec {
    std::string kind = "indicator";
    std::map<std::string, double> params;
    std::vector<std::complex<double>> table;
};

/// [translates] section.
struct TranslateSpec {
    enum class Type { explicit_points, lattice, jittered_lattice };
    Type type = Type::lattice;
    std::vector<double> points;   // explicit
    double step = 1.0;
    int count = 8;
    double origin = 0.0;
    double jitter = 0.0;
    std::optional<std::uint64_t> seed;
};

/// [signal] section for the reconstruction task.
struct SignalSpec {
    enum class Type { random_span, coefficients, random_grid };
    Type type = Type::random_span;
    std::vector<std::complex<double>> coefficients;
    std::vector<double> eval_points;  // optional time-domain evaluation abscissae
};

/// Parsed experiment description; see the config reference in the README.
struct ExperimentConfig {
    std::vector<Interval> set_intervals;
    int nodes_per_unit = 64;
    GeneratorSpec generator;
    TranslateSpec translates;
    Tolerances tol;
    std::vector<std::string> tasks{"all"};
    std::string report_name = "report.json";
    std::optional<std::string> matrices_dir;
    SignalSpec signal;

    /// Master seed: every random draw (jitter, probe coefficients) derives
    /// from it. Defaults to translates.seed when present, else 0.
    std::uint64_t seed = 0;
};

/// Known task names, in execution order.
const std::vector<std::string>& known_tasks();

/// Parses the sectioned key = value format. Throws ConfigError with the
/// offending line or key on malformed input, unknown sections/keys/tasks,
/// missing seeds for jittered lattices, or non-positive tolerances.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::filesystem::path& path);

} // namespace framekit
