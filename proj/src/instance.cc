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

#include "hhqaoa/instance.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hhqaoa/errors.h"
#include "hhqaoa/rng.h"
#include "json.hpp"

namespace hhqaoa {

namespace {

void check_coefficients(const std::vector<int> &values, size_t expected, const char *what) {
    if (values.size() != expected) {
        throw ValidationError(std::string(what) + " coefficient count " +
                              std::to_string(values.size()) + " != " + std::to_string(expected));
    }
    for (int d : values) {
        if (d != 1 && d != -1) {
            throw ValidationError(std::string(what) + " coefficient " + std::to_string(d) +
                                  " is not +-1");
        }
    }
}

Term make_term(std::initializer_list<int> sites, int coeff) {
    Term t;
    t.order = 0;
    for (int s : sites) {
        t.sites[t.order++] = s;
    }
    std::sort(t.sites.begin(), t.sites.begin() + t.order);
    t.coeff = coeff;
    return t;
}

std::vector<int> parse_key(std::string_view key) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= key.size()) {
        size_t dash = key.find('-', pos);
        if (dash == std::string_view::npos) {
            dash = key.size();
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(key.data() + pos, key.data() + dash, value);
        if (ec != std::errc() || ptr != key.data() + dash) {
            throw ValidationError("bad coefficient key '" + std::string(key) + "'");
        }
        parts.push_back(value);
        pos = dash + 1;
    }
    return parts;
}

int coefficient_value(const nlohmann::json &v) {
    if (!v.is_number_integer()) {
        throw ValidationError("coefficient values must be integers");
    }
    return v.get<int>();
}

}  // namespace

IsingInstance::IsingInstance(HeavyHexGraph graph, std::vector<int> linear,
                             std::vector<int> quadratic, std::vector<int> cubic,
                             std::uint64_t seed)
    : graph_(std::move(graph)),
      linear_(std::move(linear)),
      quadratic_(std::move(quadratic)),
      cubic_(std::move(cubic)),
      seed_(seed) {
    check_coefficients(linear_, graph_.num_nodes(), "linear");
    check_coefficients(quadratic_, graph_.edges().size(), "quadratic");
    check_coefficients(cubic_, graph_.w_set().size(), "cubic");
    terms_.reserve(linear_.size() + quadratic_.size() + cubic_.size());
    for (int v = 0; v < graph_.num_nodes(); ++v) {
        terms_.push_back(make_term({v}, linear_[v]));
    }
    for (size_t k = 0; k < quadratic_.size(); ++k) {
        const Edge &e = graph_.edges()[k];
        terms_.push_back(make_term({e.u, e.v}, quadratic_[k]));
    }
    for (size_t k = 0; k < cubic_.size(); ++k) {
        const CubicSite &c = graph_.w_set()[k];
        terms_.push_back(make_term({c.l, c.n1, c.n2}, cubic_[k]));
    }
}

IsingInstance IsingInstance::negated() const {
    auto flip = [](std::vector<int> v) {
        for (int &d : v) {
            d = -d;
        }
        return v;
    };
    return IsingInstance(graph_, flip(linear_), flip(quadratic_), flip(cubic_), seed_);
}

IsingInstance generate_instance(const HeavyHexGraph &graph, std::uint64_t seed) {
    Xoshiro256StarStar rng(seed);
    std::vector<int> linear(graph.num_nodes());
    for (int &d : linear) {
        d = rng.coin();
    }
    std::vector<int> quadratic(graph.edges().size());
    for (int &d : quadratic) {
        d = rng.coin();
    }
    std::vector<int> cubic(graph.w_set().size());
    for (int &d : cubic) {
        d = rng.coin();
    }
    return IsingInstance(graph, std::move(linear), std::move(quadratic), std::move(cubic), seed);
}

int evaluate_cost(const IsingInstance &instance, std::span<const Spin> z) {
    if (static_cast<int>(z.size()) != instance.num_qubits()) {
        throw ValidationError("spin vector length " + std::to_string(z.size()) +
                              " != qubit count " + std::to_string(instance.num_qubits()));
    }
    int total = 0;
    for (const Term &t : instance.terms()) {
        int product = t.coeff;
        for (int s : t.support()) {
            product *= z[s];
        }
        total += product;
    }
    return total;
}

int cost_parity(const IsingInstance &instance) { return instance.num_terms() % 2; }

std::vector<Spin> spins_from_index(std::uint64_t index, int num_qubits) {
    std::vector<Spin> z(num_qubits);
    for (int q = 0; q < num_qubits; ++q) {
        z[q] = ((index >> q) & 1) ? -1 : +1;
    }
    return z;
}

std::vector<Spin> spins_from_bits(std::string_view bits) {
    std::vector<Spin> z(bits.size());
    for (size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] != '0' && bits[q] != '1') {
            throw ValidationError("bitstring must contain only 0 and 1");
        }
        z[q] = bits[q] == '1' ? -1 : +1;
    }
    return z;
}

std::string bits_from_spins(std::span<const Spin> z) {
    std::string bits(z.size(), '0');
    for (size_t q = 0; q < z.size(); ++q) {
        if (z[q] < 0) {
            bits[q] = '1';
        }
    }
    return bits;
}

double approximation_ratio(double energy, const EnergyBounds &bounds) {
    if (bounds.max_energy <= bounds.min_energy) {
        throw ValidationError("approximation ratio undefined for a degenerate spectrum");
    }
    return (bounds.max_energy - energy) / static_cast<double>(bounds.max_energy - bounds.min_energy);
}

IncrementalCost::IncrementalCost(const IsingInstance &instance)
    : terms_(instance.terms()), z_(instance.num_qubits(), +1) {
    int n = instance.num_qubits();
    offsets_.assign(n + 1, 0);
    for (const Term &t : terms_) {
        for (int s : t.support()) {
            ++offsets_[s + 1];
        }
    }
    for (int q = 0; q < n; ++q) {
        offsets_[q + 1] += offsets_[q];
    }
    incident_.resize(offsets_[n]);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (int k = 0; k < static_cast<int>(terms_.size()); ++k) {
        for (int s : terms_[k].support()) {
            incident_[fill[s]++] = k;
        }
    }
    reset(0);
}

void IncrementalCost::reset(std::uint64_t index) {
    for (size_t q = 0; q < z_.size(); ++q) {
        z_[q] = ((index >> q) & 1) ? -1 : +1;
    }
    cost_ = 0;
    for (const Term &t : terms_) {
        int product = t.coeff;
        for (int s : t.support()) {
            product *= z_[s];
        }
        cost_ += product;
    }
}

void IncrementalCost::reset(std::span<const Spin> z) {
    if (z.size() != z_.size()) {
        throw ValidationError("spin vector length does not match the instance");
    }
    std::copy(z.begin(), z.end(), z_.begin());
    cost_ = 0;
    for (const Term &t : terms_) {
        int product = t.coeff;
        for (int s : t.support()) {
            product *= z_[s];
        }
        cost_ += product;
    }
}

int IncrementalCost::flip_delta(int qubit) const {
    int delta = 0;
    for (int k = offsets_[qubit]; k < offsets_[qubit + 1]; ++k) {
        const Term &t = terms_[incident_[k]];
        int product = t.coeff;
        for (int s : t.support()) {
            product *= z_[s];
        }
        delta -= 2 * product;
    }
    return delta;
}

void IncrementalCost::flip(int qubit) {
    cost_ += flip_delta(qubit);
    z_[qubit] = static_cast<Spin>(-z_[qubit]);
}

std::string instance_to_json(const IsingInstance &instance) {
    const HeavyHexGraph &g = instance.graph();
    nlohmann::ordered_json doc;
    doc["map"] = g.name();
    doc["seed"] = instance.seed();
    nlohmann::ordered_json linear = nlohmann::ordered_json::object();
    for (int v = 0; v < g.num_nodes(); ++v) {
        linear[std::to_string(v)] = instance.linear()[v];
    }
    nlohmann::ordered_json quadratic = nlohmann::ordered_json::object();
    for (size_t k = 0; k < g.edges().size(); ++k) {
        const Edge &e = g.edges()[k];
        quadratic[std::to_string(e.u) + "-" + std::to_string(e.v)] = instance.quadratic()[k];
    }
    nlohmann::ordered_json cubic = nlohmann::ordered_json::object();
    for (size_t k = 0; k < g.w_set().size(); ++k) {
        const CubicSite &c = g.w_set()[k];
        cubic[std::to_string(c.l) + "-" + std::to_string(c.n1) + "-" + std::to_string(c.n2)] =
            instance.cubic()[k];
    }
    doc["linear"] = std::move(linear);
    doc["quadratic"] = std::move(quadratic);
    doc["cubic"] = std::move(cubic);
    return doc.dump(1) + "\n";
}

IsingInstance instance_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError(std::string("instance is not valid JSON: ") + e.what());
    }
    try {
        std::string name = doc.value("map", std::string("custom"));
        auto seed = doc.at("seed").get<std::uint64_t>();
        const auto &linear_obj = doc.at("linear");
        int n = static_cast<int>(linear_obj.size());
        std::vector<int> linear(n, 0);
        std::vector<bool> seen(n, false);
        for (const auto &[key, value] : linear_obj.items()) {
            auto parts = parse_key(key);
            if (parts.size() != 1 || parts[0] < 0 || parts[0] >= n || seen[parts[0]]) {
                throw ValidationError("linear keys must be the nodes 0..n-1, got '" + key + "'");
            }
            seen[parts[0]] = true;
            linear[parts[0]] = coefficient_value(value);
        }

        std::vector<std::pair<int, int>> edge_pairs;
        std::vector<std::pair<Edge, int>> quad_entries;
        for (const auto &[key, value] : doc.at("quadratic").items()) {
            auto parts = parse_key(key);
            if (parts.size() != 2) {
                throw ValidationError("quadratic key '" + key + "' must be i-j");
            }
            edge_pairs.emplace_back(parts[0], parts[1]);
            quad_entries.push_back({Edge{std::min(parts[0], parts[1]), std::max(parts[0], parts[1])},
                                    coefficient_value(value)});
        }
        HeavyHexGraph graph = HeavyHexGraph::from_edges(name, n, edge_pairs);
        std::vector<int> quadratic(graph.edges().size(), 0);
        for (const auto &[edge, d] : quad_entries) {
            quadratic[graph.edge_index(edge.u, edge.v)] = d;
        }

        std::vector<int> cubic(graph.w_set().size(), 0);
        std::vector<bool> cubic_seen(cubic.size(), false);
        const auto &cubic_obj = doc.at("cubic");
        for (const auto &[key, value] : cubic_obj.items()) {
            auto parts = parse_key(key);
            if (parts.size() != 3) {
                throw ValidationError("cubic key '" + key + "' must be l-n1-n2");
            }
            CubicSite site{parts[0], std::min(parts[1], parts[2]), std::max(parts[1], parts[2])};
            const auto &w = graph.w_set();
            auto it = std::lower_bound(w.begin(), w.end(), site);
            if (it == w.end() || *it != site) {
                throw ValidationError("cubic key '" + key + "' is not in the derived W set");
            }
            size_t k = it - w.begin();
            cubic_seen[k] = true;
            cubic[k] = coefficient_value(value);
        }
        if (std::find(cubic_seen.begin(), cubic_seen.end(), false) != cubic_seen.end()) {
            throw ValidationError("cubic coefficients missing for part of the W set");
        }
        return IsingInstance(std::move(graph), std::move(linear), std::move(quadratic),
                             std::move(cubic), seed);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed instance: ") + e.what());
    }
}

IsingInstance load_instance(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read instance file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return instance_from_json(buffer.str());
}

}  // namespace hhqaoa
