#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "swarmsim/engine.hpp"

namespace swarmsim {

/// Parses a JSON configuration document. Missing keys take their defaults,
/// unknown keys are rejected, and the result is validated. Throws SimError
/// (Parse or Validation) naming the offending key.
Config parse_config(std::string_view document);

Config load_config(const std::filesystem::path& path);

/// Inverse of parse_config: a document that parses back to `config`.
std::string render_config(const Config& config);

/// Copy of `config` with the dotted `path` set to `value`. Setting
/// weights.w1 (or weights.w2) also sets the complementary weight.
Config with_axis_value(const Config& config, const std::string& path, double value);

/// Seed of replicate `index` under `root`.
inline std::uint64_t replicate_seed(std::uint64_t root, int index) { return root + static_cast<std::uint64_t>(index); }

struct RunRow {
    double axis_value = 0.0;
    int replicate = 0;
    Config config;
    RunResult result;
};

struct MetricSummary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, 0 for a single run
};

struct SummaryRow {
    double axis_value = 0.0;
    int runs = 0;
    MetricSummary steps, tesc, f1, f2, targets_found, alive_fraction, completed, objective;
};

struct ResultTable {
    std::string axis;
    std::vector<RunRow> rows;  // ordered by (axis value, replicate)

    std::vector<SummaryRow> summarize() const;
};

MetricSummary summarize(const std::vector<double>& xs);

/// Runs `spec.replications` seeds per axis value on up to `jobs` threads.
ResultTable sweep(const Config& config, const SweepSpec& spec, unsigned jobs = 1);

void write_raw_csv(const ResultTable& table, std::ostream& os);
void write_summary_csv(const ResultTable& table, std::ostream& os);

/// Writes raw.csv and summary.csv under `dir`, creating it if needed.
void write_results(const ResultTable& table, const std::filesystem::path& dir);

inline constexpr std::string_view kRawCsvHeader =
    "seed,w1,w2,m,n,n_robots,n_targets,r_min,r_t,scenario,steps,tesc,f1,f2,targets_found,alive_fraction,completed";

}  // namespace swarmsim
