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
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hhqaoa/circuit.h"
#include "hhqaoa/errors.h"

namespace hhqaoa {

namespace {

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

// Parses "q[<k>]" at the front of s and advances past it.
int parse_qubit(std::string_view &s, int n) {
    s = trim(s);
    if (!starts_with(s, "q[")) {
        throw ValidationError("expected qubit reference in '" + std::string(s) + "'");
    }
    auto close = s.find(']');
    if (close == std::string_view::npos) {
        throw ValidationError("unterminated qubit reference");
    }
    std::string digits(s.substr(2, close - 2));
    char *end = nullptr;
    long q = std::strtol(digits.c_str(), &end, 10);
    if (digits.empty() || *end != '\0' || q < 0 || q >= n) {
        throw ValidationError("bad qubit index '" + digits + "'");
    }
    s.remove_prefix(close + 1);
    return static_cast<int>(q);
}

double parse_angle(std::string_view &s) {
    s = trim(s);
    if (!starts_with(s, "(")) {
        throw ValidationError("expected '(' before angle");
    }
    auto close = s.find(')');
    if (close == std::string_view::npos) {
        throw ValidationError("unterminated angle");
    }
    std::string text(s.substr(1, close - 1));
    char *end = nullptr;
    double a = std::strtod(text.c_str(), &end);
    if (text.empty() || *end != '\0') {
        throw ValidationError("bad angle '" + text + "'");
    }
    s.remove_prefix(close + 1);
    return a;
}

void expect_end(std::string_view s) {
    if (trim(s) != ";") {
        throw ValidationError("expected ';' at end of statement");
    }
}

}  // namespace

std::string circuit_to_qasm(const QaoaCircuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n"
        << "include \"qelib1.inc\";\n"
        << "qreg q[" << circuit.num_qubits << "];\n"
        << "creg c[" << circuit.num_qubits << "];\n";
    std::size_t next_boundary = 0;
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        while (next_boundary < circuit.round_boundaries.size() &&
               circuit.round_boundaries[next_boundary] == i) {
            out << "barrier q;\n";
            ++next_boundary;
        }
        const Gate &g = circuit.gates[i];
        switch (g.kind) {
            case GateKind::kH:
                out << "h q[" << g.q0 << "];\n";
                break;
            case GateKind::kCX:
                out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
            case GateKind::kRZ:
                out << "rz(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
                break;
            case GateKind::kRX:
                out << "rx(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
                break;
            case GateKind::kMeasureAll:
                out << "measure q -> c;\n";
                break;
        }
    }
    return out.str();
}

QaoaCircuit parse_qasm(std::string_view text) {
    QaoaCircuit circuit;
    circuit.num_qubits = -1;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || starts_with(line, "//") || starts_with(line, "OPENQASM") ||
            starts_with(line, "include")) {
            continue;
        }
        try {
            if (starts_with(line, "qreg q[")) {
                std::string digits(line.substr(7, line.find(']') - 7));
                circuit.num_qubits = std::stoi(digits);
                continue;
            }
            if (starts_with(line, "creg")) {
                continue;
            }
            if (circuit.num_qubits < 0) {
                throw ValidationError("gate before qreg declaration");
            }
            const int n = circuit.num_qubits;
            if (line == "barrier q;") {
                circuit.round_boundaries.push_back(circuit.gates.size());
            } else if (line == "measure q -> c;") {
                circuit.gates.push_back({GateKind::kMeasureAll});
            } else if (starts_with(line, "h ")) {
                std::string_view rest = line.substr(2);
                int q = parse_qubit(rest, n);
                expect_end(rest);
                circuit.gates.push_back({GateKind::kH, q});
            } else if (starts_with(line, "cx ")) {
                std::string_view rest = line.substr(3);
                int c = parse_qubit(rest, n);
                rest = trim(rest);
                if (!starts_with(rest, ",")) {
                    throw ValidationError("expected ',' in cx");
                }
                rest.remove_prefix(1);
                int t = parse_qubit(rest, n);
                expect_end(rest);
                circuit.gates.push_back({GateKind::kCX, c, t});
            } else if (starts_with(line, "rz") || starts_with(line, "rx")) {
                GateKind kind = line[1] == 'z' ? GateKind::kRZ : GateKind::kRX;
                std::string_view rest = line.substr(2);
                double a = parse_angle(rest);
                int q = parse_qubit(rest, n);
                expect_end(rest);
                circuit.gates.push_back({kind, q, -1, a});
            } else {
                throw ValidationError("unsupported statement '" + std::string(line) + "'");
            }
        } catch (const std::logic_error &e) {
            throw ValidationError("qasm line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (circuit.num_qubits < 0) {
        throw ValidationError("qasm text has no qreg declaration");
    }
    return circuit;
}

void export_circuit_text(const QaoaCircuit &circuit, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << circuit_to_qasm(circuit);
    if (!out) {
        throw std::runtime_error("write to " + path + " failed");
    }
}

}  // namespace hhqaoa
