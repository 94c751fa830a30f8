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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hhqaoa/errors.h"
#include "hhqaoa/harness.h"

namespace {

using hhqaoa::ExperimentConfig;

// Flags shared by every subcommand. A --config file is read first and then
// any flag given explicitly overrides it.
struct Overrides {
    std::string config_path;
    std::optional<std::string> map;
    std::optional<int> size;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<int>> p_list;
    std::optional<std::string> angles;
    std::optional<std::string> backend;
    std::optional<int> chi;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> sample_seed;
    std::optional<std::string> out;
    std::optional<int> instance;
    std::optional<std::vector<int>> chi_list;
    std::optional<int> chi_ref;
    std::optional<int> beta_count;
    std::optional<int> gamma_count;
    std::optional<int> max_points;
    std::optional<int> exact_cap;
    bool dump_config = false;

    void attach(CLI::App *cmd) {
        cmd->add_option("--config", config_path, "JSON experiment config");
        cmd->add_option("--map", map, "built-in map name or coupling-map JSON path");
        cmd->add_option("--size", size, "ensemble size");
        cmd->add_option("--seed", seed, "base seed; instance k uses seed + k");
        cmd->add_option("--p", p_list, "round counts")->delimiter(',');
        cmd->add_option("--angles", angles, "builtin | <angles.json> | train:<k>");
        cmd->add_option("--backend", backend, "statevector | mps")
            ->check(CLI::IsMember({"statevector", "mps"}));
        cmd->add_option("--chi", chi, "MPS bond dimension");
        cmd->add_option("--shots", shots, "shots per sampled run");
        cmd->add_option("--sample-seed", sample_seed, "sampler seed");
        cmd->add_option("--out", out, "output directory");
        cmd->add_option("--instance", instance, "ensemble index for single-instance commands");
        cmd->add_option("--chi-list", chi_list, "bond dimensions to scan")->delimiter(',');
        cmd->add_option("--chi-ref", chi_ref, "reference bond dimension");
        cmd->add_option("--beta-count", beta_count, "landscape beta grid points");
        cmd->add_option("--gamma-count", gamma_count, "landscape gamma grid points");
        cmd->add_option("--max-points", max_points, "landscape size cap");
        cmd->add_option("--exact-cap", exact_cap, "largest qubit count solved exactly");
        cmd->add_flag("--dump-config", dump_config, "print the effective config and exit");
    }

    ExperimentConfig resolve() const {
        ExperimentConfig c = config_path.empty() ? ExperimentConfig{}
                                                 : hhqaoa::load_config(config_path);
        auto set = [](auto &field, const auto &opt) {
            if (opt) {
                field = *opt;
            }
        };
        set(c.map, map);
        set(c.ensemble_size, size);
        set(c.base_seed, seed);
        set(c.p_list, p_list);
        set(c.angle_source, angles);
        set(c.backend, backend);
        set(c.chi, chi);
        set(c.shots, shots);
        set(c.sample_seed, sample_seed);
        set(c.output_dir, out);
        set(c.instance_index, instance);
        set(c.chi_list, chi_list);
        set(c.chi_ref, chi_ref);
        set(c.landscape_beta.count, beta_count);
        set(c.landscape_gamma.count, gamma_count);
        set(c.landscape_max_points, max_points);
        set(c.exact_bounds_cap, exact_cap);
        // Round-trip to run the same validation a config file gets.
        return hhqaoa::config_from_json(hhqaoa::config_to_json(c));
    }
};

void print_csv(const hhqaoa::CsvTable &table) { std::cout << table.str(); }

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"QAOA experiments on heavy-hex higher-order Ising models"};
    app.require_subcommand(1);
    Overrides o;

    auto *generate = app.add_subcommand("generate", "write an instance ensemble and manifest");
    auto *solve = app.add_subcommand("solve", "exact or heuristic energy bounds");
    auto *simulate = app.add_subcommand("simulate", "expectation of one instance per p");
    auto *landscape = app.add_subcommand("landscape", "p = 1 energy landscape grid");
    auto *transfer = app.add_subcommand("transfer", "fixed-angle transfer over the ensemble");
    auto *sample = app.add_subcommand("sample", "sampled energy histograms per p");
    auto *bond = app.add_subcommand("bond-scan", "MPS energy error versus bond dimension");
    auto *qasm = app.add_subcommand("export-qasm", "OpenQASM 2.0 circuit for one instance");
    auto *reduce = app.add_subcommand("reduce-export", "reduced quadratic model as LP text");
    for (CLI::App *cmd : {generate, solve, simulate, landscape, transfer, sample, bond, qasm, reduce}) {
        o.attach(cmd);
    }

    bool exact = false;
    bool heuristic = false;
    auto *exact_flag = solve->add_flag("--exact", exact, "brute-force enumeration (default)");
    solve->add_flag("--heuristic", heuristic, "multi-start local search")->excludes(exact_flag);
    std::string simulate_qasm;
    simulate->add_option("--export-qasm", simulate_qasm, "also write the circuit for max p");
    std::string qasm_out;
    qasm->add_option("-o,--output", qasm_out, "output path (stdout if omitted)");
    std::string lp_out;
    std::optional<std::int64_t> penalty;
    reduce->add_option("-o,--output", lp_out, "output path (stdout if omitted)");
    reduce->add_option("--penalty", penalty, "penalty weight (default 1 + sum |coefficients|)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? hhqaoa::kExitOk : hhqaoa::kExitValidation;
    }

    try {
        const ExperimentConfig config = o.resolve();
        if (o.dump_config) {
            std::cout << hhqaoa::config_to_json(config);
            return hhqaoa::kExitOk;
        }
        if (generate->parsed()) {
            const hhqaoa::Manifest m = hhqaoa::cmd_generate_ensemble(config);
            std::cout << m.entries.size() << " instances, manifest hash " << m.hash << "\n";
        } else if (solve->parsed()) {
            print_csv(hhqaoa::cmd_solve(config, heuristic));
        } else if (simulate->parsed()) {
            print_csv(hhqaoa::cmd_simulate(config));
            if (!simulate_qasm.empty()) {
                hhqaoa::cmd_export_qasm(config, simulate_qasm);
            }
        } else if (landscape->parsed()) {
            const hhqaoa::LandscapeResult r = hhqaoa::cmd_landscape(config);
            std::printf("best beta=%.6f gamma=%.6f energy=%.10g (canonical beta=%.6f gamma=%.6f)\n",
                        r.landscape.best_beta, r.landscape.best_gamma, r.landscape.best_energy,
                        r.best_canonical.beta[0], r.best_canonical.gamma[0]);
        } else if (transfer->parsed()) {
            const hhqaoa::TransferResult r = hhqaoa::cmd_transfer_experiment(config);
            for (std::size_t i = 0; i < r.summary.p_list.size(); ++i) {
                std::printf("p=%d mean_expectation=%.10g\n", r.summary.p_list[i],
                            r.summary.mean_expectation[i]);
            }
            std::printf("strictly decreasing: %d/%d instances\n", r.summary.monotone_instances,
                        r.summary.num_instances);
        } else if (sample->parsed()) {
            print_csv(hhqaoa::cmd_sample_distribution(config));
        } else if (bond->parsed()) {
            print_csv(hhqaoa::cmd_bond_scan(config).summary);
        } else if (qasm->parsed()) {
            const std::string text = hhqaoa::cmd_export_qasm(config, qasm_out);
            if (qasm_out.empty()) {
                std::cout << text;
            }
        } else if (reduce->parsed()) {
            const std::string text = hhqaoa::cmd_reduce_export(config, lp_out, penalty);
            if (lp_out.empty()) {
                std::cout << text;
            }
        }
    } catch (const hhqaoa::CapacityError &e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return hhqaoa::kExitCapacity;
    } catch (const hhqaoa::ValidationError &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return hhqaoa::kExitValidation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return hhqaoa::kExitFailure;
    }
    return hhqaoa::kExitOk;
}
