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

// LP files written here look like
//
//   \ reduced quadratic binary model
//   Minimize
//    obj: + 3 x0 - 2 x1 + [ + 8 x0 * x1 ] / 2 + 5
//   Binaries
//    x0 x1
//   End
//
// Quadratic coefficients inside the brackets are doubled because of the
// trailing "/ 2". The parser accepts exactly this subset.

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "hhqaoa/errors.h"
#include "hhqaoa/solve.h"

namespace hhqaoa {

namespace {

std::string signed_coeff(std::int64_t c) {
    return (c < 0 ? "- " : "+ ") + std::to_string(c < 0 ? -c : c);
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto comment = line.find('\\');
        if (comment != std::string::npos) {
            line.erase(comment);
        }
        std::istringstream words(line);
        std::string w;
        while (words >> w) {
            tokens.push_back(w);
        }
    }
    return tokens;
}

[[noreturn]] void fail(const std::string &why) {
    throw ValidationError("LP parse error: " + why);
}

bool parse_int(const std::string &s, std::int64_t &out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string quadratic_model_to_lp(const QuadraticModel &model) {
    std::ostringstream out;
    out << "\\ reduced quadratic binary model: " << model.num_vars() << " binaries\n";
    out << "Minimize\n obj:";
    bool any = false;
    for (int i = 0; i < model.num_vars(); ++i) {
        if (model.linear[i] != 0) {
            out << ' ' << signed_coeff(model.linear[i]) << ' ' << model.names[i];
            any = true;
        }
    }
    if (!model.quadratic.empty()) {
        out << " + [";
        for (const QuadraticTerm &t : model.quadratic) {
            out << ' ' << signed_coeff(2 * t.coeff) << ' ' << model.names[t.i] << " * "
                << model.names[t.j];
        }
        out << " ] / 2";
        any = true;
    }
    if (model.offset != 0 || !any) {
        out << ' ' << signed_coeff(model.offset);
    }
    out << "\nBinaries\n";
    if (model.num_vars() > 0) {
        for (int i = 0; i < model.num_vars(); ++i) {
            out << ' ' << model.names[i];
        }
        out << '\n';
    }
    out << "End\n";
    return out.str();
}

QuadraticModel parse_lp_model(std::string_view text) {
    const std::vector<std::string> tok = tokenize(text);
    std::size_t pos = 0;
    if (pos >= tok.size() || tok[pos] != "Minimize") {
        fail("expected 'Minimize'");
    }
    ++pos;
    if (pos < tok.size() && tok[pos] == "obj:") {
        ++pos;
    }

    // Objective pieces keyed by names until the Binaries section resolves them.
    std::int64_t offset = 0;
    std::map<std::string, std::int64_t> lin;
    std::map<std::pair<std::string, std::string>, std::int64_t> quad;
    bool in_bracket = false;
    while (pos < tok.size() && tok[pos] != "Binaries" && tok[pos] != "End") {
        const std::string &t = tok[pos];
        if (t == "[") {
            in_bracket = true;
            ++pos;
            continue;
        }
        if (t == "]") {
            if (pos + 2 >= tok.size() || tok[pos + 1] != "/" || tok[pos + 2] != "2") {
                fail("expected '] / 2'");
            }
            in_bracket = false;
            pos += 3;
            continue;
        }
        if (t != "+" && t != "-") {
            fail("expected sign, got '" + t + "'");
        }
        const std::int64_t sign = t == "-" ? -1 : 1;
        ++pos;
        if (pos >= tok.size()) {
            fail("dangling sign");
        }
        if (tok[pos] == "[") {
            continue;
        }
        std::int64_t c = 0;
        if (!parse_int(tok[pos], c)) {
            fail("expected integer coefficient, got '" + tok[pos] + "'");
        }
        ++pos;
        const bool has_var = pos < tok.size() && !tok[pos].empty() &&
                             (std::isalpha(static_cast<unsigned char>(tok[pos][0])) != 0) &&
                             tok[pos] != "Binaries" && tok[pos] != "End";
        if (!has_var) {
            if (in_bracket) {
                fail("constant inside quadratic brackets");
            }
            offset += sign * c;
            continue;
        }
        std::string a = tok[pos++];
        if (in_bracket) {
            if (pos + 1 >= tok.size() || tok[pos] != "*") {
                fail("expected '*' in quadratic term");
            }
            std::string b = tok[pos + 1];
            pos += 2;
            if (c % 2 != 0) {
                fail("odd bracketed coefficient");
            }
            if (b < a) {
                std::swap(a, b);
            }
            quad[{a, b}] += sign * c / 2;
        } else {
            lin[a] += sign * c;
        }
    }
    if (in_bracket) {
        fail("unterminated quadratic brackets");
    }
    QuadraticModel model;
    model.offset = offset;
    if (pos < tok.size() && tok[pos] == "Binaries") {
        ++pos;
        while (pos < tok.size() && tok[pos] != "End") {
            model.names.push_back(tok[pos++]);
        }
    }
    if (pos >= tok.size() || tok[pos] != "End") {
        fail("expected 'End'");
    }
    std::map<std::string, int> index;
    for (int i = 0; i < model.num_vars(); ++i) {
        if (!index.emplace(model.names[i], i).second) {
            fail("duplicate binary '" + model.names[i] + "'");
        }
    }
    auto lookup = [&](const std::string &name) {
        auto it = index.find(name);
        if (it == index.end()) {
            fail("undeclared variable '" + name + "'");
        }
        return it->second;
    };
    model.linear.assign(model.num_vars(), 0);
    for (const auto &[name, c] : lin) {
        model.linear[lookup(name)] += c;
    }
    std::map<std::pair<int, int>, std::int64_t> by_index;
    for (const auto &[names, c] : quad) {
        int i = lookup(names.first);
        int j = lookup(names.second);
        if (i == j) {
            model.linear[i] += c;
        } else {
            by_index[{std::min(i, j), std::max(i, j)}] += c;
        }
    }
    for (const auto &[key, c] : by_index) {
        if (c != 0) {
            model.quadratic.push_back({key.first, key.second, c});
        }
    }
    return model;
}

void export_quadratic_model(const QuadraticModel &model, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << quadratic_model_to_lp(model);
    if (!out) {
        throw std::runtime_error("write to " + path + " failed");
    }
}

}  // namespace hhqaoa
