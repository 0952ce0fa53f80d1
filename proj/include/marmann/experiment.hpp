#pragma once

#include "marmann/adversarial.hpp"
#include "marmann/marmann.hpp"
#include "marmann/metric.hpp"
#include "marmann/oracle.hpp"
#include "marmann/scale_selection.hpp"

#include <json.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace marmann {

/// Two-label disks of radius `radius` with centers 2*radius + margin apart
/// on a line, labels alternating by disk; then exactly floor(nu* n) labels
/// are flipped, nu* = noise + noise_sqrt_m / sqrt(n_pool).
struct PlantedSpec {
  double margin = 1.0;
  double noise = 0.0;
  double noise_sqrt_m = 0.0;
  std::size_t clusters = 4;
  double radius = 1.0;

  double noise_rate(std::size_t m) const;
  void validate(std::size_t m) const;
};

struct LabeledPoints {
  Eigen::MatrixXd points;
  std::vector<Label> labels;
  std::size_t flipped = 0;
};

/// n points, flipping floor(rate * n) labels.
LabeledPoints sample_planted(const PlantedSpec& spec, std::size_t n, double rate, Rng& rng);
LabeledPool generate_planted(const PlantedSpec& spec, std::size_t m, Rng& rng);

struct FileSpec {
  std::string points;   // point CSV
  std::string matrix;   // or a distance matrix ...
  std::string labels;   // ... with a label file
  Norm norm = Norm::L2;
  bool last_column_label = true;
};

enum class GeneratorKind { Planted, UniformNoisy, Adversarial, File };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Planted;
  PlantedSpec planted;
  UniformNoisyParams uniform;
  AdversarialParams adversarial;
  FileSpec file;
};

/// A pool plus an optional held-out sample from the same source.
struct GeneratedData {
  std::shared_ptr<LabeledPool> pool;
  Eigen::MatrixXd test_points;
  std::vector<Label> test_labels;
};

/// Pool of size m and, for synthetic sources, a fresh 10m test sample drawn
/// from separate streams of (seed, m).  File sources hold out the points not
/// drawn into the pool (point files only).
GeneratedData generate(const GeneratorSpec& spec, std::size_t m, std::uint64_t seed);

enum class Learner { Marmann, PassiveRelabel, PassiveSeparation };

std::string to_string(Learner l);
Learner parse_learner(const std::string& name);

struct ExperimentConfig {
  GeneratorSpec generator;
  std::vector<std::size_t> m;
  double delta = 0.05;
  std::vector<std::uint64_t> seeds;
  std::vector<Learner> learners;
  std::size_t scale_grid = 0;   // quantile grid size, 0 = all candidate scales
  bool g_min = true;            // compute the evaluation-only G_min column
  std::size_t threads = 0;      // 0 = hardware concurrency
  std::filesystem::path out_dir = "results";
  bool traces = false;
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig read_config(const std::filesystem::path& path);

struct ResultRow {
  std::string learner;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  double t_hat = 0.0;
  std::size_t N_hat = 0;
  double emp_error = 0.0;
  double test_error = 0.0;
  double G_hat = 0.0;
  double g_min_ref = 0.0;
  std::size_t unique_labels = 0;
  std::size_t total_requests = 0;
  double wall_time = 0.0;
  bool ok = true;  // false: numeric columns are written as nan
};

struct CellOutcome {
  ResultRow row;
  std::optional<QueryLedger> ledger;       // active runs only
  std::optional<nlohmann::json> trace;
  std::optional<std::string> error;        // set when the cell failed
  std::optional<RunReport> report;         // active runs only
};

/// Every learner of the config on the (m, seed) data set.
std::vector<CellOutcome> run_group(const ExperimentConfig& cfg, std::size_t m, std::uint64_t seed);

struct SuiteResult {
  std::vector<CellOutcome> cells;  // ordered by (m, seed, learner) as configured
};

/// Runs all cells (in parallel across (m, seed) groups) and, when
/// `write` is set, emits results.csv, failures.csv and trace files.
SuiteResult run_suite(const ExperimentConfig& cfg, bool write = true);

void write_results_csv(std::ostream& out, const std::vector<CellOutcome>& cells);
std::string format_row(const ResultRow& r, bool with_wall_time = true);
extern const char* const kResultsHeader;
extern const char* const kResultsSchema;

nlohmann::json trace_to_json(const SearchTrace& trace);
nlohmann::json report_to_json(const RunReport& report, double delta, std::size_t m);

}  // namespace marmann
