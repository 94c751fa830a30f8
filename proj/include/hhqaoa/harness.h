// Copyright 2026 The hhqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HHQAOA_HARNESS_H
#define HHQAOA_HARNESS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhqaoa/angles.h"
#include "hhqaoa/instance.h"
#include "hhqaoa/optimize.h"

namespace hhqaoa {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitCapacity = 2, kExitValidation = 3 };

constexpr std::uint64_t kDefaultSampleShots = 20000;
constexpr std::uint64_t kDefaultDistributionShots = 8192;

/// Every experiment is a pure function of this record plus the code version.
struct ExperimentConfig {
    std::string map = "guadalupe-16";
    int ensemble_size = 10;
    std::uint64_t base_seed = 1;
    std::vector<int> p_list = {1, 2, 3, 4, 5};
    /// "builtin" (the embedded transfer table), a path to an angles JSON file,
    /// or "train:<k>" to train on ensemble instance k by basin hopping.
    std::string angle_source = "builtin";
    /// "statevector" or "mps".
    std::string backend = "statevector";
    int chi = 64;
    std::uint64_t shots = kDefaultDistributionShots;
    std::uint64_t sample_seed = 7;
    std::string output_dir = "out";
    int instance_index = 0;
    int statevector_cap = 27;
    /// Exact bounds (and approximation ratios) only up to this many qubits.
    int exact_bounds_cap = 28;
    std::vector<int> chi_list = {16, 32, 64, 128};
    int chi_ref = 512;
    GridAxis landscape_beta{0.0, 1.5707963267948966, 60};
    GridAxis landscape_gamma{0.0, 3.141592653589793, 120};
    /// Refuse landscapes with more points than this.
    int landscape_max_points = 250000;
    int train_iterations = 200;
};

std::string config_to_json(const ExperimentConfig &config);
/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string &path);

/// Seeds are base_seed + index.
IsingInstance ensemble_instance(const ExperimentConfig &config, int index);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view data);

/// CSV text: a "# schema=<name> version=<v> hash=<h>" line, the header, rows.
/// The hash covers the schema name, version and column names.
class CsvTable {
   public:
    CsvTable(std::string schema, std::vector<std::string> columns);

    void add_row(std::vector<std::string> cells);
    std::string str() const;
    std::string schema_hash() const;
    const std::vector<std::vector<std::string>> &rows() const { return rows_; }

   private:
    std::string schema_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

std::string format_double(double v);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string &path, std::string_view contents);

struct ManifestEntry {
    std::string file;
    std::uint64_t seed = 0;
    std::string sha256;
};

struct Manifest {
    std::string map;
    std::uint64_t base_seed = 0;
    std::vector<ManifestEntry> entries;
    std::string hash;  // over the concatenated entry hashes
};

/// <output>/instances/instance_<k>.json plus <output>/manifest.json.
Manifest cmd_generate_ensemble(const ExperimentConfig &config);

/// Exact (or heuristic) extrema of every ensemble instance -> bounds.csv.
CsvTable cmd_solve(const ExperimentConfig &config, bool heuristic);

struct RunRecord {
    int instance_id = 0;
    std::uint64_t seed = 0;
    int p = 0;
    QaoaAngles angles;
    std::string backend;
    int chi = 0;
    double expectation = 0.0;
    std::optional<EnergyBounds> bounds;
    std::optional<double> approximation_ratio;
    double truncation_weight = 0.0;
    /// Filled when shots > 0.
    std::optional<double> sample_mean;
    std::optional<int> sample_min;
    std::map<int, std::uint64_t> histogram;
    double wall_seconds = 0.0;
};

/// Exact bounds when the instance is within exact_bounds_cap, else nothing.
std::optional<EnergyBounds> exact_bounds(const ExperimentConfig &config,
                                         const IsingInstance &instance);

/// One record per angle set, on the configured backend. Samples config.shots
/// shots per record when `with_samples` is set.
std::vector<RunRecord> simulate_runs(const ExperimentConfig &config, const IsingInstance &instance,
                                     int id, const std::vector<QaoaAngles> &angle_sets,
                                     const std::optional<EnergyBounds> &bounds,
                                     bool with_samples);

/// Angles for every p in config.p_list according to config.angle_source.
std::map<int, QaoaAngles> resolve_angles(const ExperimentConfig &config);

/// Single instance (config.instance_index), each p in p_list -> simulate.csv.
CsvTable cmd_simulate(const ExperimentConfig &config);

struct TransferSummary {
    std::vector<int> p_list;
    std::vector<double> mean_expectation;
    int monotone_instances = 0;
    int num_instances = 0;
    /// Instance ids whose expectation failed to strictly decrease somewhere.
    std::vector<int> violations;
    /// Per instance, the p with the lowest expectation.
    std::vector<int> best_p;
};

struct TransferResult {
    std::vector<RunRecord> records;
    TransferSummary summary;
    CsvTable table{"transfer", {}};
};

/// Ensemble x p_list expectations -> transfer.csv and transfer_summary.json.
TransferResult cmd_transfer_experiment(const ExperimentConfig &config);

/// Energy histograms per p for instance config.instance_index -> samples.csv.
/// p = 0 samples the uniform state.
CsvTable cmd_sample_distribution(const ExperimentConfig &config);

struct BondScanResult {
    CsvTable rows{"bond_scan", {}};
    CsvTable summary{"bond_scan_summary", {}};
    /// mean_delta[p][chi]
    std::map<int, std::map<int, double>> mean_delta;
};

/// Per (instance, p, chi) delta E -> bond_scan.csv and bond_scan_summary.csv.
BondScanResult cmd_bond_scan(const ExperimentConfig &config);

struct LandscapeResult {
    Landscape landscape;
    QaoaAngles best_canonical;
    CsvTable table{"landscape", {}};
};

/// p = 1 grid for instance config.instance_index -> landscape.csv, landscape_best.json.
LandscapeResult cmd_landscape(const ExperimentConfig &config);

/// Circuit for instance config.instance_index at the largest p in p_list.
std::string cmd_export_qasm(const ExperimentConfig &config, const std::string &path);

/// Reduced quadratic model of instance config.instance_index as LP text.
std::string cmd_reduce_export(const ExperimentConfig &config, const std::string &path,
                              std::optional<std::int64_t> penalty = std::nullopt);

}  // namespace hhqaoa

#endif
