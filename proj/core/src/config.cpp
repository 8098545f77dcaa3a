#include "framekit/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "framekit/errors.hpp"

namespace framekit {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (trim(value.substr(used)).empty()) return d;
    } catch (const std::exception&) {
    }
    throw ConfigError("config: key '" + key + "' expects a number, got '" + value + "'");
}

long parse_int(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const long v = std::stol(value, &used);
        if (trim(value.substr(used)).empty()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("config: key '" + key + "' expects an integer, got '" + value + "'");
}

std::vector<std::string> split(const std::string& value, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& value, const std::string& key) {
    std::vector<double> out;
    for (const auto& item : split(value, ',')) out.push_back(parse_double(item, key));
    return out;
}

// Interval lists look like "[-0.5, 0.5]" or "[0,1] [2,3]".
std::vector<Interval> parse_intervals(const std::string& value) {
    std::vector<Interval> out;
    std::size_t pos = 0;
    while ((pos = value.find('[', pos)) != std::string::npos) {
        const auto close = value.find(']', pos);
        if (close == std::string::npos) {
            throw ConfigError("config: unbalanced '[' in intervals: " + value);
        }
        const auto body = split(value.substr(pos + 1, close - pos - 1), ',');
        if (body.size() != 2) {
            throw ConfigError("config: interval needs two endpoints: " +
                              value.substr(pos, close - pos + 1));
        }
        out.push_back({parse_double(body[0], "intervals"), parse_double(body[1], "intervals")});
        pos = close + 1;
    }
    if (out.empty()) throw ConfigError("config: no intervals in '" + value + "'");
    return out;
}

struct RawConfig {
    // section -> key -> value, plus seen-key bookkeeping for error reporting
    std::map<std::string, std::map<std::string, std::string>> sections;
};

RawConfig tokenize(const std::string& text) {
    RawConfig raw;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments (';' or '#') outside of values we care about
        const auto comment = line.find_first_of(";#");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            raw.sections[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || section.empty()) {
            throw ConfigError("config: line " + std::to_string(lineno) +
                              ": expected 'key = value' inside a [section]");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config: line " + std::to_string(lineno) + ": empty key");
        }
        raw.sections[section][key] = value;
    }
    return raw;
}

std::vector<std::complex<double>> zip_complex(const std::vector<double>& re,
                                              const std::vector<double>& im,
                                              const std::string& what) {
    if (!im.empty() && im.size() != re.size()) {
        throw ConfigError("config: " + what + "_im length does not match " + what + "_re");
    }
    std::vector<std::complex<double>> out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
        out[i] = {re[i], im.empty() ? 0.0 : im[i]};
    }
    return out;
}

} // namespace

const std::vector<std::string>& known_tasks() {
    static const std::vector<std::string> tasks = {
        "gram", "certify", "bounds", "factorize", "dual", "parseval", "reconstruct"};
    return tasks;
}

ExperimentConfig parse_config_text(const std::string& text) {
    const RawConfig raw = tokenize(text);
    ExperimentConfig cfg;

    static const std::map<std::string, std::vector<std::string>> known_keys = {
        {"set", {"intervals"}},
        {"grid", {"nodes_per_unit"}},
        {"generator", {"kind", "a", "b", "width", "beta", "sigma", "values_re", "values_im"}},
        {"translates", {"type", "points", "step", "count", "origin", "jitter", "seed"}},
        {"tolerances",
         {"eps_supp", "rank_cutoff", "residual_tol", "dual_tol", "condition_floor",
          "tight_tol"}},
        {"tasks", {"run"}},
        {"output", {"report", "matrices_dir"}},
        {"signal", {"type", "coefficients_re", "coefficients_im", "eval_points"}},
    };
    for (const auto& [section, keys] : raw.sections) {
        const auto it = known_keys.find(section);
        if (it == known_keys.end()) {
            throw ConfigError("config: unknown section [" + section + "]");
        }
        for (const auto& [key, value] : keys) {
            if (std::find(it->second.begin(), it->second.end(), key) == it->second.end()) {
                throw ConfigError("config: unknown key '" + key + "' in [" + section + "]");
            }
        }
    }

    auto get = [&raw](const std::string& section, const std::string& key) {
        const auto sec = raw.sections.find(section);
        if (sec == raw.sections.end()) return std::optional<std::string>{};
        const auto val = sec->second.find(key);
        if (val == sec->second.end()) return std::optional<std::string>{};
        return std::optional<std::string>{val->second};
    };

    if (const auto v = get("set", "intervals")) cfg.set_intervals = parse_intervals(*v);
    if (cfg.set_intervals.empty()) {
        throw ConfigError("config: [set] intervals is required");
    }

    if (const auto v = get("grid", "nodes_per_unit")) {
        cfg.nodes_per_unit = static_cast<int>(parse_int(*v, "nodes_per_unit"));
    }

    if (const auto v = get("generator", "kind")) cfg.generator.kind = *v;
    for (const char* p : {"a", "b", "width", "beta", "sigma"}) {
        if (const auto v = get("generator", p)) cfg.generator.params[p] = parse_double(*v, p);
    }
    {
        std::vector<double> re, im;
        if (const auto v = get("generator", "values_re")) re = parse_double_list(*v, "values_re");
        if (const auto v = get("generator", "values_im")) im = parse_double_list(*v, "values_im");
        if (!re.empty()) cfg.generator.table = zip_complex(re, im, "values");
    }

    if (const auto v = get("translates", "type")) {
        if (*v == "explicit") cfg.translates.type = TranslateSpec::Type::explicit_points;
        else if (*v == "lattice") cfg.translates.type = TranslateSpec::Type::lattice;
        else if (*v == "jittered_lattice")
            cfg.translates.type = TranslateSpec::Type::jittered_lattice;
        else throw ConfigError("config: unknown translates type '" + *v + "'");
    }
    if (const auto v = get("translates", "points"))
        cfg.translates.points = parse_double_list(*v, "points");
    if (const auto v = get("translates", "step"))
        cfg.translates.step = parse_double(*v, "step");
    if (const auto v = get("translates", "count"))
        cfg.translates.count = static_cast<int>(parse_int(*v, "count"));
    if (const auto v = get("translates", "origin"))
        cfg.translates.origin = parse_double(*v, "origin");
    if (const auto v = get("translates", "jitter"))
        cfg.translates.jitter = parse_double(*v, "jitter");
    if (const auto v = get("translates", "seed"))
        cfg.translates.seed = static_cast<std::uint64_t>(parse_int(*v, "seed"));
    if (cfg.translates.type == TranslateSpec::Type::jittered_lattice &&
        !cfg.translates.seed.has_value()) {
        throw ConfigError("config: jittered_lattice requires a seed");
    }
    if (cfg.translates.type == TranslateSpec::Type::explicit_points &&
        cfg.translates.points.empty()) {
        throw ConfigError("config: explicit translates require points");
    }
    cfg.seed = cfg.translates.seed.value_or(0);

    auto positive_tol = [&](const char* key, double& slot) {
        if (const auto v = get("tolerances", key)) {
            const double t = parse_double(*v, key);
            if (!(t > 0.0)) throw ConfigError(std::string("config: tolerance '") + key +
                                              "' must be positive");
            slot = t;
        }
    };
    positive_tol("eps_supp", cfg.tol.eps_supp_rel);
    positive_tol("rank_cutoff", cfg.tol.rank_cutoff_rel);
    positive_tol("residual_tol", cfg.tol.residual_tol);
    positive_tol("dual_tol", cfg.tol.dual_tol);
    positive_tol("condition_floor", cfg.tol.condition_floor);
    positive_tol("tight_tol", cfg.tol.tight_tol);

    if (const auto v = get("tasks", "run")) {
        cfg.tasks = split(*v, ',');
        if (cfg.tasks.empty()) throw ConfigError("config: [tasks] run is empty");
    }
    for (const auto& task : cfg.tasks) {
        if (task == "all") continue;
        const auto& known = known_tasks();
        if (std::find(known.begin(), known.end(), task) == known.end()) {
            throw ConfigError("config: unknown task '" + task + "'");
        }
    }

    if (const auto v = get("output", "report")) cfg.report_name = *v;
    if (const auto v = get("output", "matrices_dir")) cfg.matrices_dir = *v;

    if (const auto v = get("signal", "type")) {
        if (*v == "random_span") cfg.signal.type = SignalSpec::Type::random_span;
        else if (*v == "coefficients") cfg.signal.type = SignalSpec::Type::coefficients;
        else if (*v == "random_grid") cfg.signal.type = SignalSpec::Type::random_grid;
        else throw ConfigError("config: unknown signal type '" + *v + "'");
    }
    {
        std::vector<double> re, im;
        if (const auto v = get("signal", "coefficients_re"))
            re = parse_double_list(*v, "coefficients_re");
        if (const auto v = get("signal", "coefficients_im"))
            im = parse_double_list(*v, "coefficients_im");
        if (!re.empty()) cfg.signal.coefficients = zip_complex(re, im, "coefficients");
    }
    if (cfg.signal.type == SignalSpec::Type::coefficients && cfg.signal.coefficients.empty()) {
        throw ConfigError("config: signal type 'coefficients' requires coefficients_re");
    }
    if (const auto v = get("signal", "eval_points"))
        cfg.signal.eval_points = parse_double_list(*v, "eval_points");

    return cfg;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot open '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

} // namespace framekit
