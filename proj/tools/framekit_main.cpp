#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "framekit/config.hpp"
#include "framekit/errors.hpp"
#include "framekit/runner.hpp"
#include "framekit/version.hpp"

namespace fs = std::filesystem;

namespace {

int run_one(const fs::path& config_path, const fs::path& out_dir,
            const std::optional<std::string>& task) {
    const framekit::ExperimentConfig cfg = framekit::parse_config_file(config_path);
    const framekit::RunResult result = framekit::run(cfg, out_dir, task);
    const auto& summary = result.report.at("summary");
    std::cout << config_path.string() << ": "
              << (result.all_passed ? "PASS" : "FAIL")
              << " (passed " << summary.at("tasks_passed").get<int>()
              << ", failed " << summary.at("tasks_failed").get<int>()
              << ", skipped " << summary.at("tasks_skipped").get<int>() << ")\n";
    return result.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model certificates for systems of irregular translates"};
    app.set_version_flag("--version", framekit::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string task;
    auto* run_cmd = app.add_subcommand("run", "run one experiment configuration");
    run_cmd->add_option("--config", config_path, "experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    run_cmd->add_option("--out", out_dir, "output directory for report and matrices");
    run_cmd->add_option("--task", task, "run a single task instead of the configured list");

    std::string corpus_dir;
    std::string corpus_out;
    auto* corpus_cmd = app.add_subcommand("corpus", "run every *.ini config in a directory");
    corpus_cmd->add_option("--dir", corpus_dir, "directory of config files")
        ->required()
        ->check(CLI::ExistingDirectory);
    corpus_cmd->add_option("--out", corpus_out, "output root (default: alongside configs)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            return run_one(config_path, out_dir,
                           task.empty() ? std::nullopt : std::optional<std::string>(task));
        }

        // Corpus sweep: isolated output directory per config, worst exit wins.
        std::vector<fs::path> configs;
        for (const auto& entry : fs::directory_iterator(corpus_dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".ini") {
                configs.push_back(entry.path());
            }
        }
        std::sort(configs.begin(), configs.end());
        if (configs.empty()) {
            std::cerr << "corpus: no .ini configs in " << corpus_dir << "\n";
            return 2;
        }
        int exit_code = 0;
        for (const auto& cfg_path : configs) {
            const fs::path out = corpus_out.empty()
                                     ? cfg_path.parent_path() / cfg_path.stem()
                                     : fs::path(corpus_out) / cfg_path.stem();
            exit_code = std::max(exit_code, run_one(cfg_path, out, std::nullopt));
        }
        return exit_code;
    } catch (const framekit::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
