#pragma once

// Seeded instance corpus shared by the acceptance criteria: generator kinds
// crossed with frequency sets and translate densities, reproducible from the
// per-instance seed alone.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "framekit/generator.hpp"
#include "framekit/grid.hpp"
#include "framekit/translate_set.hpp"

namespace fkt {

struct CorpusInstance {
    std::string name;
    framekit::GridPtr grid;
    std::optional<framekit::Generator> generator;
    std::optional<framekit::TranslateSet> translates;
    bool oversampled = false; // K chosen past the support dimension

    const framekit::Generator& g() const { return *generator; }
    const framekit::TranslateSet& lambda() const { return *translates; }
};

inline std::vector<CorpusInstance> build_corpus(int count = 100) {
    using namespace framekit;
    struct SetSpec {
        BoundedSet set;
        int nodes_per_unit;
        double step;
        double jitter;
    };
    const std::vector<SetSpec> sets = {
        {BoundedSet({{-0.5, 0.5}}), 32, 1.0, 0.125},
        {BoundedSet({{-0.375, 0.375}}), 32, 1.0, 0.125},
        {BoundedSet({{0.0, 1.0}, {2.0, 3.0}}), 12, 0.4, 0.05},
    };
    const std::vector<std::string> kinds = {"indicator_full", "indicator_sub", "fejer",
                                            "raised_cosine", "gaussian", "table"};

    std::vector<CorpusInstance> corpus;
    corpus.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const SetSpec& spec = sets[static_cast<std::size_t>(i % 3)];
        const std::string& kind = kinds[static_cast<std::size_t>(i % 6)];
        const std::uint64_t seed = 9000 + static_cast<std::uint64_t>(i);

        CorpusInstance inst;
        inst.grid = build_grid(spec.set, spec.nodes_per_unit);
        const Interval hull = spec.set.hull();

        GeneratorKind gk = IndicatorShape{hull.lo, hull.hi};
        if (kind == "indicator_sub") {
            const double mid = 0.5 * (hull.lo + hull.hi);
            const double quarter = 0.25 * (hull.hi - hull.lo);
            gk = IndicatorShape{mid - quarter, mid + quarter};
            if (spec.set.intervals().size() > 1) {
                gk = IndicatorShape{spec.set.intervals()[0].lo, spec.set.intervals()[0].hi};
            }
        } else if (kind == "fejer") {
            gk = FejerShape{hull.hi > 1.0 ? 4.0 : (hull.hi > 0.4 ? 0.75 : 0.5)};
        } else if (kind == "raised_cosine") {
            gk = RaisedCosineShape{0.5};
        } else if (kind == "gaussian") {
            gk = TruncatedGaussianShape{hull.hi > 1.0 ? 2.0 : 1.0};
        } else if (kind == "table") {
            std::mt19937_64 rng(seed * 3 + 1);
            std::uniform_real_distribution<double> mag(0.5, 1.5);
            std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
            Eigen::VectorXcd samples(inst.grid->size());
            for (Eigen::Index n = 0; n < inst.grid->size(); ++n) {
                samples[n] = std::polar(mag(rng), phase(rng));
            }
            gk = TableShape{std::move(samples)};
        }
        inst.generator = make_generator(gk, inst.grid);

        const auto n_mask = static_cast<int>(inst.generator->support_size());
        inst.oversampled = (i % 2) == 0;
        const int k_count = inst.oversampled ? n_mask + 8 : std::max(4, (n_mask * 3) / 5);
        inst.translates = TranslateSet::jittered_lattice(spec.step, k_count, spec.jitter, seed);
        inst.name = kind + "/set" + std::to_string(i % 3) + "/K" + std::to_string(k_count) +
                    "/seed" + std::to_string(seed);
        corpus.push_back(std::move(inst));
    }
    return corpus;
}

} // namespace fkt
