#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ggentropy {

// One run of the numerical-study harness. Every output is fully
// determined by this struct plus the library version; the master seed and
// a hash of the configuration are embedded in the output header.
struct ExperimentConfig {
  std::string experiment;  // consistency | misspec | student-t | normality | empirical-pdf
  int dim = 2;
  std::vector<double> s_values;   // data = test shape (consistency, normality, empirical-pdf)
  std::vector<double> s0_values;  // tested shape (misspec, student-t)
  std::vector<double> s1_values;  // data shape (misspec)
  std::vector<double> nu_values;  // data dof (student-t)
  std::vector<std::size_t> n_schedule;
  std::vector<int> k_values;
  std::size_t repetitions = 10;    // M
  std::size_t t_replicates = 200;  // per Shapiro-Wilk batch (normality)
  std::size_t bins = 61;           // histogram bins (empirical-pdf)
  double hist_halfwidth = 4.0;     // histogram range (empirical-pdf)
  bool standardize = true;         // sigma-scaling (empirical-pdf)
  std::uint64_t master_seed = 0;
  int threads = 0;
};

// Long-format result row; empty optionals serialize as empty CSV fields.
// Aggregate rows (mean/variance over the repetitions of one grid point)
// leave `repetition` and `value` empty and fill t_mean / t_var.
struct ExperimentRow {
  std::string experiment;
  int dim = 0;
  std::optional<double> s0;
  std::optional<double> s1;
  std::optional<double> nu;
  std::size_t n = 0;
  std::optional<int> k;
  std::optional<std::size_t> repetition;
  std::optional<double> x;  // bin center (empirical-pdf)
  std::optional<double> value;
  std::optional<double> t_mean;
  std::optional<double> t_var;
};

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

// CSV with provenance header comments; rows are in canonical grid order
// regardless of how many threads produced them.
std::string experiment_csv(const ExperimentConfig& config,
                           const std::vector<ExperimentRow>& rows);

// FNV-1a hash of the canonical serialization, recorded in output headers.
std::uint64_t config_hash(const ExperimentConfig& config);
std::string config_canonical(const ExperimentConfig& config);

// Flat key=value config file, '#' comments. Unknown keys are an error.
ExperimentConfig parse_config_file(const std::string& path);
void apply_config_line(ExperimentConfig& config, const std::string& key,
                       const std::string& value);

}  // namespace ggentropy
