#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "framekit/config.hpp"

namespace framekit {

struct RunResult {
    nlohmann::json report;
    bool all_passed = true;

    int exit_code() const { return all_passed ? 0 : 1; }
};

/// Executes the configured tasks in declaration order and assembles the
/// machine-readable report. When out_dir is nonempty the report (and, if
/// configured, CSV matrices) are written beneath it. task_filter restricts the
/// run to a single task name.
///
/// ConfigError propagates to the caller (usage error); numerical precondition
/// failures inside a task are recorded as task-level skips, never crashes.
RunResult run(const ExperimentConfig& cfg, const std::filesystem::path& out_dir = {},
              const std::optional<std::string>& task_filter = std::nullopt);

} // namespace framekit
