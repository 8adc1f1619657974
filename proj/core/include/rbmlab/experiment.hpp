// rbmlab — numerical laboratory for one-dimensional random band matrices
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbmlab/block_decomp.hpp"
#include "rbmlab/interval.hpp"
#include "rbmlab/localization.hpp"
#include "rbmlab/spectral_stats.hpp"

namespace rbmlab {

enum class ExperimentKind {
  dos,
  les_poisson,
  wegner,
  minami,
  intensity,
  char_exponent,
  gap_ratio,
  block_compare,
  localization,
  phase_diagram,
};

const char* to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

struct GridPoint {
  std::size_t index = 0;
  std::int64_t half_size = 0;
  double alpha = 0.0;
  double center_energy = 0.0;
};

// One experiment = one kind swept over a (N x alpha x E0) grid with a fixed
// trial count. Flags and JSON keys map one to one; every grid entry is
// validated against its consuming module before any work starts.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::dos;

  std::vector<std::int64_t> n_values;
  std::vector<double> alphas;
  std::vector<double> e0_values{0.0};
  std::optional<double> beta;
  double mu = 2.0;
  double delta = 2.0;
  WegnerMode wegner_mode = WegnerMode::strong;

  Interval window{0.0, 1.0};              // I, rescaled units
  Interval energy_range{-0.5, 0.5};       // J (intensity)
  std::int64_t e0_nodes = 16;             // intensity quadrature nodes
  std::vector<double> window_lengths;     // |I|N grid (wegner / minami)
  double s_power = 0.5;                   // fractional exponent s
  double epsilon = 0.0;                   // 0 -> 1/N
  std::vector<std::int64_t> distances;    // localization probe distances
  bool median_of_means = false;
  std::int64_t t_nodes = 64;
  double gap_halfwidth = 0.5;
  std::int64_t bins = 0;                  // dos histogram bins; 0 -> Freedman-Diaconis
  std::optional<Interval> hist_range;

  std::string distribution = "gaussian";
  bool periodic = false;

  std::int64_t trials = 200;
  std::uint64_t master_seed = 0;
  int workers = 0;  // 0 -> hardware concurrency
  std::filesystem::path output = "run";

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  EntryDistribution entry_distribution() const;
  void validate() const;  // throws config_error naming the violated constraint
  std::vector<GridPoint> resolve_grid() const;
  double effective_epsilon(std::int64_t half_size) const {
    return epsilon > 0.0 ? epsilon : 1.0 / static_cast<double>(half_size);
  }
};

struct FileRecord {
  std::string path;  // relative to the run directory
  std::uint64_t bytes = 0;
  std::string fnv1a64_hex;
};

struct ExperimentManifest {
  std::string version;
  std::string seed_rule;
  nlohmann::json config_echo;
  nlohmann::json timings;
  nlohmann::json summary;
  std::vector<FileRecord> files;
  std::int64_t retries = 0;
  std::filesystem::path directory;

  nlohmann::json to_json() const;
};

// Executes grid x trials (trial seed: derive_seed(master_seed, grid_index,
// trial_index); a failed trial retries once with derive_seed(trial_seed, 0, 1)
// and >0.1% retries aborts). Writes raw/*.csv, summary.json and manifest.json
// under config.output; raw outputs are byte-identical for any worker count.
ExperimentManifest run_experiment(const ExperimentConfig& config);

// Accepts either a config document or a manifest (uses its "config" echo).
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace rbmlab
