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

#include "hhqaoa/harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "hhqaoa/circuit.h"
#include "hhqaoa/errors.h"
#include "hhqaoa/graph.h"
#include "hhqaoa/mps.h"
#include "hhqaoa/parallel.h"
#include "hhqaoa/solve.h"
#include "hhqaoa/statevector.h"
#include "json.hpp"

namespace hhqaoa {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kHeuristicRestarts = 64;

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string out_path(const ExperimentConfig &config, const std::string &name) {
    fs::create_directories(config.output_dir);
    return (fs::path(config.output_dir) / name).string();
}

ordered_json axis_json(const GridAxis &a) {
    return ordered_json{{"min", a.min}, {"max", a.max}, {"count", a.count}};
}

GridAxis axis_from(const nlohmann::json &j) {
    GridAxis a;
    a.min = j.at("min").get<double>();
    a.max = j.at("max").get<double>();
    a.count = j.at("count").get<int>();
    return a;
}

void check_config(const ExperimentConfig &c) {
    if (c.ensemble_size < 1) {
        throw ValidationError("ensemble_size must be >= 1");
    }
    if (c.p_list.empty()) {
        throw ValidationError("p_list must not be empty");
    }
    for (int p : c.p_list) {
        if (p < 0) {
            throw ValidationError("p values must be >= 0");
        }
    }
    if (c.backend != "statevector" && c.backend != "mps") {
        throw ValidationError("backend must be 'statevector' or 'mps', got '" + c.backend + "'");
    }
    if (c.chi < 1 || c.chi_ref < 1) {
        throw ValidationError("bond dimensions must be >= 1");
    }
    if (c.instance_index < 0 || c.instance_index >= c.ensemble_size) {
        throw ValidationError("instance_index outside the ensemble");
    }
}

std::vector<int> sorted_p(const ExperimentConfig &config) {
    std::vector<int> p = config.p_list;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

std::string optional_cell(const std::optional<double> &v) {
    return v ? format_double(*v) : std::string();
}

std::vector<QaoaAngles> angle_list(const std::map<int, QaoaAngles> &table,
                                   const std::vector<int> &ps) {
    std::vector<QaoaAngles> out;
    for (int p : ps) {
        out.push_back(table.at(p));
    }
    return out;
}

}  // namespace

std::string config_to_json(const ExperimentConfig &c) {
    ordered_json j;
    j["map"] = c.map;
    j["ensemble_size"] = c.ensemble_size;
    j["base_seed"] = c.base_seed;
    j["p_list"] = c.p_list;
    j["angle_source"] = c.angle_source;
    j["backend"] = c.backend;
    j["chi"] = c.chi;
    j["shots"] = c.shots;
    j["sample_seed"] = c.sample_seed;
    j["output_dir"] = c.output_dir;
    j["instance_index"] = c.instance_index;
    j["statevector_cap"] = c.statevector_cap;
    j["exact_bounds_cap"] = c.exact_bounds_cap;
    j["chi_list"] = c.chi_list;
    j["chi_ref"] = c.chi_ref;
    j["landscape_beta"] = axis_json(c.landscape_beta);
    j["landscape_gamma"] = axis_json(c.landscape_gamma);
    j["landscape_max_points"] = c.landscape_max_points;
    j["train_iterations"] = c.train_iterations;
    return j.dump(2) + "\n";
}

ExperimentConfig config_from_json(std::string_view text, ExperimentConfig c) {
    static const std::set<std::string> known = {
        "map",          "ensemble_size",  "base_seed",       "p_list",
        "angle_source", "backend",        "chi",             "shots",
        "sample_seed",  "output_dir",     "instance_index",  "statevector_cap",
        "exact_bounds_cap", "chi_list",   "chi_ref",         "landscape_beta",
        "landscape_gamma", "landscape_max_points", "train_iterations"};
    try {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_object()) {
            throw ValidationError("config must be a JSON object");
        }
        for (const auto &[key, value] : j.items()) {
            if (!known.count(key)) {
                throw ValidationError("unknown config key '" + key + "'");
            }
        }
        auto take = [&](const char *key, auto &field) {
            if (j.contains(key)) {
                j.at(key).get_to(field);
            }
        };
        take("map", c.map);
        take("ensemble_size", c.ensemble_size);
        take("base_seed", c.base_seed);
        take("p_list", c.p_list);
        take("angle_source", c.angle_source);
        take("backend", c.backend);
        take("chi", c.chi);
        take("shots", c.shots);
        take("sample_seed", c.sample_seed);
        take("output_dir", c.output_dir);
        take("instance_index", c.instance_index);
        take("statevector_cap", c.statevector_cap);
        take("exact_bounds_cap", c.exact_bounds_cap);
        take("chi_list", c.chi_list);
        take("chi_ref", c.chi_ref);
        take("landscape_max_points", c.landscape_max_points);
        take("train_iterations", c.train_iterations);
        if (j.contains("landscape_beta")) {
            c.landscape_beta = axis_from(j.at("landscape_beta"));
        }
        if (j.contains("landscape_gamma")) {
            c.landscape_gamma = axis_from(j.at("landscape_gamma"));
        }
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("bad config: ") + e.what());
    }
    check_config(c);
    return c;
}

ExperimentConfig load_config(const std::string &path) { return config_from_json(read_text(path)); }

IsingInstance ensemble_instance(const ExperimentConfig &config, int index) {
    static thread_local std::map<std::string, HeavyHexGraph> graphs;
    auto it = graphs.find(config.map);
    if (it == graphs.end()) {
        it = graphs.emplace(config.map, load_coupling_map(config.map)).first;
    }
    return generate_instance(it->second, config.base_seed + static_cast<std::uint64_t>(index));
}

Manifest cmd_generate_ensemble(const ExperimentConfig &config) {
    check_config(config);
    Manifest manifest;
    manifest.map = config.map;
    manifest.base_seed = config.base_seed;
    manifest.entries.resize(config.ensemble_size);
    parallel_for(static_cast<std::size_t>(config.ensemble_size), [&](std::size_t k) {
        const IsingInstance inst = ensemble_instance(config, static_cast<int>(k));
        const std::string text = instance_to_json(inst);
        char name[48];
        std::snprintf(name, sizeof name, "instances/instance_%04zu.json", k);
        write_file_atomic(out_path(config, name), text);
        manifest.entries[k] = {name, inst.seed(), sha256_hex(text)};
    });
    std::string all;
    ordered_json files = ordered_json::array();
    for (const ManifestEntry &e : manifest.entries) {
        all += e.sha256;
        files.push_back({{"file", e.file}, {"seed", e.seed}, {"sha256", e.sha256}});
    }
    manifest.hash = sha256_hex(all);
    ordered_json doc;
    doc["map"] = manifest.map;
    doc["base_seed"] = manifest.base_seed;
    doc["size"] = config.ensemble_size;
    doc["hash"] = manifest.hash;
    doc["instances"] = files;
    write_file_atomic(out_path(config, "manifest.json"), doc.dump(2) + "\n");
    return manifest;
}

std::optional<EnergyBounds> exact_bounds(const ExperimentConfig &config,
                                         const IsingInstance &instance) {
    if (instance.num_qubits() > config.exact_bounds_cap) {
        return std::nullopt;
    }
    return brute_force_extrema(instance, config.exact_bounds_cap);
}

CsvTable cmd_solve(const ExperimentConfig &config, bool heuristic) {
    check_config(config);
    const std::size_t n = static_cast<std::size_t>(config.ensemble_size);
    std::vector<EnergyBounds> bounds(n);
    std::vector<std::uint64_t> seeds(n);
    // Enumeration is already split across workers; only the heuristic is
    // parallel at the instance level.
    auto one = [&](std::size_t k) {
        const IsingInstance inst = ensemble_instance(config, static_cast<int>(k));
        seeds[k] = inst.seed();
        bounds[k] = heuristic ? local_search_bound(inst, kHeuristicRestarts, inst.seed())
                              : brute_force_extrema(inst, config.exact_bounds_cap);
    };
    if (heuristic) {
        parallel_for(n, one);
    } else {
        for (std::size_t k = 0; k < n; ++k) {
            one(k);
        }
    }
    CsvTable table("bounds",
                   {"instance_id", "seed", "min_energy", "max_energy", "exact", "argmin"});
    for (std::size_t k = 0; k < n; ++k) {
        table.add_row({std::to_string(k), std::to_string(seeds[k]),
                       std::to_string(bounds[k].min_energy), std::to_string(bounds[k].max_energy),
                       bounds[k].exact ? "1" : "0", bits_from_spins(bounds[k].argmin)});
    }
    write_file_atomic(out_path(config, "bounds.csv"), table.str());
    return table;
}

std::map<int, QaoaAngles> resolve_angles(const ExperimentConfig &config) {
    const std::vector<int> ps = sorted_p(config);
    std::map<int, QaoaAngles> out;
    const std::string &src = config.angle_source;
    if (src == "builtin") {
        for (int p : ps) {
            out[p] = p == 0 ? QaoaAngles{} : transfer_angles(p);
        }
        return out;
    }
    if (src.rfind("train:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(src.substr(6));
        } catch (const std::exception &) {
            throw ValidationError("bad angle source '" + src + "'");
        }
        if (k < 0 || k >= config.ensemble_size) {
            throw ValidationError("training instance outside the ensemble");
        }
        const IsingInstance inst = ensemble_instance(config, k);
        const Objective f = config.backend == "mps" ? mps_objective(inst, config.chi)
                                                    : statevector_objective(inst,
                                                                            config.statevector_cap);
        BasinHoppingOptions opts;
        opts.iterations = config.train_iterations;
        opts.seed = config.base_seed;
        const int p_max = ps.back();
        std::vector<BasinHoppingResult> ladder;
        if (p_max >= 1) {
            ladder = train_angle_ladder(f, p_max, opts);
        }
        for (int p : ps) {
            out[p] = p == 0 ? QaoaAngles{} : ladder[p - 1].angles;
        }
        return out;
    }
    // An angles file: one {p, beta, gamma} object or an array of them.
    const std::string text = read_text(src);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("bad angles file: ") + e.what());
    }
    std::map<int, QaoaAngles> available;
    if (doc.is_array()) {
        for (const auto &item : doc) {
            QaoaAngles a = angles_from_json(item.dump());
            available[a.p()] = a;
        }
    } else {
        QaoaAngles a = angles_from_json(text);
        available[a.p()] = a;
    }
    for (int p : ps) {
        if (p == 0) {
            out[p] = {};
        } else if (auto it = available.find(p); it != available.end()) {
            out[p] = it->second;
        } else {
            throw ValidationError("angles file has no entry for p = " + std::to_string(p));
        }
    }
    return out;
}

std::vector<RunRecord> simulate_runs(const ExperimentConfig &config, const IsingInstance &instance,
                                     int id, const std::vector<QaoaAngles> &angle_sets,
                                     const std::optional<EnergyBounds> &bounds,
                                     bool with_samples) {
    const bool mps = config.backend == "mps";
    std::optional<CostTable> table;
    if (!mps) {
        table = build_cost_table(instance, config.statevector_cap);
    }
    std::vector<RunRecord> records;
    for (const QaoaAngles &angles : angle_sets) {
        const auto start = std::chrono::steady_clock::now();
        RunRecord r;
        r.instance_id = id;
        r.seed = instance.seed();
        r.p = angles.p();
        r.angles = angles;
        r.backend = config.backend;
        r.chi = mps ? config.chi : 0;
        r.bounds = bounds;
        std::optional<SampleSet> samples;
        const std::uint64_t sample_seed = config.sample_seed + static_cast<std::uint64_t>(r.p);
        if (mps) {
            MpsOptions options;
            options.chi_max = config.chi;
            const MpsState state = run_qaoa_mps(instance, angles, options);
            r.expectation = mps_expectation(state, instance);
            r.truncation_weight = state.truncation_weight();
            if (with_samples && config.shots > 0) {
                samples = mps_sample(state, instance, config.shots, sample_seed);
            }
        } else {
            const StateVector state = run_qaoa(*table, angles);
            r.expectation = expectation(state, *table);
            if (with_samples && config.shots > 0) {
                samples = sample(state, instance, config.shots, sample_seed);
            }
        }
        if (bounds && bounds->exact) {
            r.approximation_ratio = approximation_ratio(r.expectation, *bounds);
        }
        if (samples) {
            r.sample_mean = samples->mean_energy;
            r.sample_min = samples->min_energy;
            r.histogram = samples->energy_histogram;
        }
        r.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

CsvTable run_table(const std::string &schema) {
    return CsvTable(schema, {"instance_id", "seed", "p", "backend", "chi", "expectation",
                             "min_energy", "max_energy", "approximation_ratio",
                             "truncation_weight", "sample_mean", "sample_min", "beta", "gamma"});
}

std::string joined(const std::vector<double> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ";" : "") + format_double(v[i]);
    }
    return s;
}

void add_run_row(CsvTable &table, const RunRecord &r) {
    const bool exact = r.bounds && r.bounds->exact;
    table.add_row({std::to_string(r.instance_id), std::to_string(r.seed), std::to_string(r.p),
                   r.backend, r.chi ? std::to_string(r.chi) : "", format_double(r.expectation),
                   exact ? std::to_string(r.bounds->min_energy) : "",
                   exact ? std::to_string(r.bounds->max_energy) : "",
                   optional_cell(r.approximation_ratio), format_double(r.truncation_weight),
                   optional_cell(r.sample_mean),
                   r.sample_min ? std::to_string(*r.sample_min) : "", joined(r.angles.beta),
                   joined(r.angles.gamma)});
}

void write_timing(const ExperimentConfig &config, const std::string &name,
                  const std::vector<RunRecord> &records) {
    ordered_json t = ordered_json::array();
    for (const RunRecord &r : records) {
        t.push_back({{"instance_id", r.instance_id}, {"p", r.p}, {"wall_seconds", r.wall_seconds}});
    }
    write_file_atomic(out_path(config, name), t.dump(2) + "\n");
}

}  // namespace

CsvTable cmd_simulate(const ExperimentConfig &config) {
    check_config(config);
    const IsingInstance inst = ensemble_instance(config, config.instance_index);
    const std::vector<int> ps = sorted_p(config);
    const auto table = resolve_angles(config);
    const auto records = simulate_runs(config, inst, config.instance_index, angle_list(table, ps),
                                       exact_bounds(config, inst), true);
    CsvTable csv = run_table("simulate");
    for (const RunRecord &r : records) {
        add_run_row(csv, r);
    }
    write_file_atomic(out_path(config, "simulate.csv"), csv.str());
    write_timing(config, "simulate_timing.json", records);
    return csv;
}

TransferResult cmd_transfer_experiment(const ExperimentConfig &config) {
    check_config(config);
    const std::vector<int> ps = sorted_p(config);
    const std::vector<QaoaAngles> sets = angle_list(resolve_angles(config), ps);
    const std::size_t n = static_cast<std::size_t>(config.ensemble_size);
    std::vector<std::vector<RunRecord>> per(n);
    parallel_for(n, [&](std::size_t k) {
        const IsingInstance inst = ensemble_instance(config, static_cast<int>(k));
        per[k] = simulate_runs(config, inst, static_cast<int>(k), sets, exact_bounds(config, inst),
                               false);
    });

    TransferResult result;
    result.table = run_table("transfer");
    TransferSummary &s = result.summary;
    s.p_list = ps;
    s.mean_expectation.assign(ps.size(), 0.0);
    s.num_instances = static_cast<int>(n);
    std::vector<double> mean_ratio(ps.size(), 0.0);
    bool all_ratios = true;
    for (std::size_t k = 0; k < n; ++k) {
        bool monotone = true;
        std::size_t best = 0;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const RunRecord &r = per[k][i];
            add_run_row(result.table, r);
            result.records.push_back(r);
            s.mean_expectation[i] += r.expectation / static_cast<double>(n);
            if (r.approximation_ratio) {
                mean_ratio[i] += *r.approximation_ratio / static_cast<double>(n);
            } else {
                all_ratios = false;
            }
            if (i > 0 && !(r.expectation < per[k][i - 1].expectation)) {
                monotone = false;
            }
            if (r.expectation < per[k][best].expectation) {
                best = i;
            }
        }
        if (monotone) {
            ++s.monotone_instances;
        } else {
            s.violations.push_back(static_cast<int>(k));
        }
        s.best_p.push_back(ps[best]);
    }

    ordered_json doc;
    doc["schema"] = "transfer_summary";
    doc["version"] = 1;
    doc["map"] = config.map;
    doc["base_seed"] = config.base_seed;
    doc["backend"] = config.backend;
    doc["p_list"] = ps;
    doc["mean_expectation"] = s.mean_expectation;
    if (all_ratios) {
        doc["mean_approximation_ratio"] = mean_ratio;
    }
    doc["num_instances"] = s.num_instances;
    doc["monotone_instances"] = s.monotone_instances;
    doc["all_strictly_decreasing"] = s.violations.empty();
    doc["violations"] = s.violations;
    doc["best_p"] = s.best_p;
    write_file_atomic(out_path(config, "transfer.csv"), result.table.str());
    write_file_atomic(out_path(config, "transfer_summary.json"), doc.dump(2) + "\n");
    write_timing(config, "transfer_timing.json", result.records);
    return result;
}

CsvTable cmd_sample_distribution(const ExperimentConfig &config) {
    check_config(config);
    if (config.shots == 0) {
        throw ValidationError("shots must be positive");
    }
    const IsingInstance inst = ensemble_instance(config, config.instance_index);
    std::optional<EnergyBounds> bounds = exact_bounds(config, inst);
    if (!bounds) {
        bounds = local_search_bound(inst, kHeuristicRestarts, inst.seed());
    }
    const std::vector<int> ps = sorted_p(config);
    const auto records = simulate_runs(config, inst, config.instance_index,
                                       angle_list(resolve_angles(config), ps), bounds, true);
    CsvTable csv("samples", {"p", "energy", "count", "frequency", "mean_energy", "min_sampled",
                             "ground_energy", "ground_exact", "shots"});
    for (const RunRecord &r : records) {
        for (const auto &[energy, count] : r.histogram) {
            csv.add_row({std::to_string(r.p), std::to_string(energy), std::to_string(count),
                         format_double(static_cast<double>(count) /
                                       static_cast<double>(config.shots)),
                         optional_cell(r.sample_mean), std::to_string(*r.sample_min),
                         std::to_string(bounds->min_energy), bounds->exact ? "1" : "0",
                         std::to_string(config.shots)});
        }
    }
    write_file_atomic(out_path(config, "samples.csv"), csv.str());
    return csv;
}

BondScanResult cmd_bond_scan(const ExperimentConfig &config) {
    check_config(config);
    if (config.chi_list.empty()) {
        throw ValidationError("chi_list must not be empty");
    }
    const std::vector<int> ps = sorted_p(config);
    const auto table = resolve_angles(config);
    const std::size_t n = static_cast<std::size_t>(config.ensemble_size);
    std::vector<std::vector<std::vector<BondScanRow>>> scans(n);
    std::vector<std::uint64_t> seeds(n);
    parallel_for(n, [&](std::size_t k) {
        const IsingInstance inst = ensemble_instance(config, static_cast<int>(k));
        seeds[k] = inst.seed();
        for (int p : ps) {
            scans[k].push_back(bond_dimension_error_scan(inst, table.at(p), config.chi_list,
                                                         config.chi_ref));
        }
    });

    BondScanResult result;
    result.rows = CsvTable("bond_scan", {"instance_id", "seed", "chi", "chi_ref", "p", "energy",
                                         "delta_e", "truncation_weight"});
    result.summary = CsvTable("bond_scan_summary",
                              {"p", "chi", "mean_delta_e", "min_delta_e", "max_delta_e"});
    std::map<int, std::map<int, std::vector<double>>> deltas;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (const BondScanRow &row : scans[k][i]) {
                result.rows.add_row({std::to_string(k), std::to_string(seeds[k]),
                                     std::to_string(row.chi), std::to_string(config.chi_ref),
                                     std::to_string(ps[i]), format_double(row.energy),
                                     format_double(row.delta_e),
                                     format_double(row.truncation_weight)});
                deltas[ps[i]][row.chi].push_back(row.delta_e);
            }
        }
    }
    for (const auto &[p, by_chi] : deltas) {
        for (const auto &[chi, values] : by_chi) {
            double sum = 0.0;
            for (double v : values) {
                sum += v;
            }
            const double mean = sum / static_cast<double>(values.size());
            const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
            result.mean_delta[p][chi] = mean;
            result.summary.add_row({std::to_string(p), std::to_string(chi), format_double(mean),
                                    format_double(*lo), format_double(*hi)});
        }
    }
    write_file_atomic(out_path(config, "bond_scan.csv"), result.rows.str());
    write_file_atomic(out_path(config, "bond_scan_summary.csv"), result.summary.str());
    return result;
}

LandscapeResult cmd_landscape(const ExperimentConfig &config) {
    check_config(config);
    const long long points = static_cast<long long>(config.landscape_beta.count) *
                             static_cast<long long>(config.landscape_gamma.count);
    if (points > config.landscape_max_points) {
        throw CapacityError("landscape of " + std::to_string(points) + " points exceeds cap " +
                            std::to_string(config.landscape_max_points));
    }
    const IsingInstance inst = ensemble_instance(config, config.instance_index);
    const Objective f = config.backend == "mps"
                            ? mps_objective(inst, config.chi)
                            : statevector_objective(inst, config.statevector_cap);
    LandscapeResult result;
    result.landscape = grid_search(config.landscape_beta, config.landscape_gamma, f);
    const Landscape &land = result.landscape;
    result.best_canonical = canonicalize_angles({{land.best_beta}, {land.best_gamma}});
    result.table = CsvTable("landscape", {"beta", "gamma", "mean_energy"});
    for (std::size_t i = 0; i < land.beta_axis.size(); ++i) {
        for (std::size_t j = 0; j < land.gamma_axis.size(); ++j) {
            result.table.add_row({format_double(land.beta_axis[i]),
                                  format_double(land.gamma_axis[j]),
                                  format_double(land.at(i, j))});
        }
    }
    ordered_json best;
    best["schema"] = "landscape_best";
    best["version"] = 1;
    best["instance_id"] = config.instance_index;
    best["seed"] = inst.seed();
    best["best_beta"] = land.best_beta;
    best["best_gamma"] = land.best_gamma;
    best["best_energy"] = land.best_energy;
    best["canonical_beta"] = result.best_canonical.beta[0];
    best["canonical_gamma"] = result.best_canonical.gamma[0];
    write_file_atomic(out_path(config, "landscape.csv"), result.table.str());
    write_file_atomic(out_path(config, "landscape_best.json"), best.dump(2) + "\n");
    return result;
}

std::string cmd_export_qasm(const ExperimentConfig &config, const std::string &path) {
    check_config(config);
    const IsingInstance inst = ensemble_instance(config, config.instance_index);
    const int p = sorted_p(config).back();
    const QaoaAngles angles = resolve_angles(config).at(p);
    const std::string text = circuit_to_qasm(build_qaoa_circuit(inst, angles));
    if (!path.empty()) {
        write_file_atomic(path, text);
    }
    return text;
}

std::string cmd_reduce_export(const ExperimentConfig &config, const std::string &path,
                              std::optional<std::int64_t> penalty) {
    check_config(config);
    const IsingInstance inst = ensemble_instance(config, config.instance_index);
    const std::string text = quadratic_model_to_lp(reduce_order(inst, penalty).model);
    if (!path.empty()) {
        write_file_atomic(path, text);
    }
    return text;
}

}  // namespace hhqaoa
