// Copyright 2026 The MQC Authors
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

#include "mqc/model_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace mqc {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        if (pos >= line.size() || line[pos] == '#') {
            break;
        }
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r' && line[end] != '#') {
            ++end;
        }
        fields.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return fields;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn &&fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        fn(++line_no, text.substr(pos, end - pos));
        pos = end + 1;
    }
}

std::optional<double> to_real(std::string_view field) {
    double value = 0.0;
    const char *first = field.data();
    const char *last = field.data() + field.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::optional<long long> to_integer(std::string_view field) {
    long long value = 0;
    const char *first = field.data();
    const char *last = field.data() + field.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        return std::nullopt;
    }
    return value;
}

Index to_index(std::string_view field, std::size_t n, std::size_t line_no) {
    auto value = to_integer(field);
    if (!value) {
        throw ParseError(line_no, "bad index '" + std::string(field) + "'");
    }
    if (*value < 0 || static_cast<unsigned long long>(*value) >= n) {
        throw ParseError(line_no, "index " + std::string(field) + " out of range for " + std::to_string(n) + " variables");
    }
    return static_cast<Index>(*value);
}

double require_real(std::string_view field, std::size_t line_no) {
    auto value = to_real(field);
    if (!value) {
        throw ParseError(line_no, "bad number '" + std::string(field) + "'");
    }
    return *value;
}

template <typename Model>
std::string serialize_common(const char *header, const Model &model, std::size_t n) {
    std::string out = std::string(header) + " " + std::to_string(n) + "\n";
    if (model.offset() != 0.0) {
        out += "offset " + format_real(model.offset()) + "\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (model.linear(i) != 0.0) {
            out += "v " + std::to_string(i) + " " + format_real(model.linear(i)) + "\n";
        }
    }
    for (const auto &c : model.couplers()) {
        out += "c " + std::to_string(c.i) + " " + std::to_string(c.j) + " " + format_real(c.weight) + "\n";
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {
}

AnyModel parse_model(std::string_view text) {
    std::optional<ModelKind> kind;
    std::size_t n = 0;
    double offset = 0.0;
    bool have_offset = false;
    std::vector<double> linear;
    std::vector<std::uint8_t> have_linear;
    std::vector<Coupler> couplers;
    std::vector<std::size_t> coupler_lines;
    std::size_t last_line = 0;

    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        last_line = line_no;
        auto fields = split_fields(line);
        if (fields.empty()) {
            return;
        }
        const auto &tag = fields[0];
        if (!kind) {
            if ((tag != "ising" && tag != "qubo") || fields.size() != 2) {
                throw ParseError(line_no, "expected header 'ising N' or 'qubo N'");
            }
            auto count = to_integer(fields[1]);
            if (!count || *count < 1 || *count > static_cast<long long>(UINT32_MAX)) {
                throw ParseError(line_no, "bad variable count '" + std::string(fields[1]) + "'");
            }
            kind = tag == "ising" ? ModelKind::ising : ModelKind::qubo;
            n = static_cast<std::size_t>(*count);
            linear.assign(n, 0.0);
            have_linear.assign(n, 0);
            return;
        }
        if (tag == "offset") {
            if (fields.size() != 2) {
                throw ParseError(line_no, "expected 'offset X'");
            }
            if (have_offset) {
                throw ParseError(line_no, "duplicate offset");
            }
            offset = require_real(fields[1], line_no);
            have_offset = true;
        } else if (tag == "v") {
            if (fields.size() != 3) {
                throw ParseError(line_no, "expected 'v I A'");
            }
            Index i = to_index(fields[1], n, line_no);
            if (have_linear[i]) {
                throw ParseError(line_no, "duplicate linear term for variable " + std::to_string(i));
            }
            linear[i] = require_real(fields[2], line_no);
            have_linear[i] = 1;
        } else if (tag == "c") {
            if (fields.size() != 4) {
                throw ParseError(line_no, "expected 'c I J B'");
            }
            Index i = to_index(fields[1], n, line_no);
            Index j = to_index(fields[2], n, line_no);
            if (i == j) {
                throw ParseError(line_no, "self coupler on variable " + std::to_string(i));
            }
            if (i > j) {
                throw ParseError(line_no, "coupler indices must satisfy I < J");
            }
            couplers.push_back({i, j, require_real(fields[3], line_no)});
            coupler_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(tag) + "'");
        }
    });

    if (!kind) {
        throw ParseError(last_line, "missing header");
    }

    // Duplicates are reported with the line of the later declaration.
    std::vector<std::size_t> order(couplers.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return couplers[x].i != couplers[y].i ? couplers[x].i < couplers[y].i : couplers[x].j < couplers[y].j;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto &prev = couplers[order[k - 1]];
        const auto &cur = couplers[order[k]];
        if (prev.i == cur.i && prev.j == cur.j) {
            throw ParseError(
                coupler_lines[order[k]],
                "duplicate coupler (" + std::to_string(cur.i) + ", " + std::to_string(cur.j) + ")");
        }
    }

    if (*kind == ModelKind::ising) {
        return IsingModel(n, std::move(linear), std::move(couplers), offset);
    }
    return QuboModel(n, std::move(linear), std::move(couplers), offset);
}

std::string serialize_model(const IsingModel &model) {
    return serialize_common("ising", model, model.num_qubits());
}

std::string serialize_model(const QuboModel &model) {
    return serialize_common("qubo", model, model.num_vars());
}

std::string serialize_model(const AnyModel &model) {
    return std::visit([](const auto &m) { return serialize_model(m); }, model);
}

ModelKind kind_of(const AnyModel &model) {
    return std::holds_alternative<IsingModel>(model) ? ModelKind::ising : ModelKind::qubo;
}

std::size_t num_variables(const AnyModel &model) {
    if (const auto *ising = std::get_if<IsingModel>(&model)) {
        return ising->num_qubits();
    }
    return std::get<QuboModel>(model).num_vars();
}

std::vector<Sample> parse_samples(std::string_view text, std::size_t num_variables, ModelKind kind) {
    std::vector<Sample> samples;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        auto fields = split_fields(line);
        if (fields.empty()) {
            return;
        }
        if (fields.size() != num_variables) {
            throw ParseError(
                line_no,
                "sample has " + std::to_string(fields.size()) + " values, expected " + std::to_string(num_variables));
        }
        std::vector<std::int8_t> spins;
        spins.reserve(fields.size());
        for (auto field : fields) {
            auto value = to_integer(field);
            if (kind == ModelKind::ising) {
                if (!value || (*value != 1 && *value != -1)) {
                    throw ParseError(line_no, "spin value '" + std::string(field) + "' is not -1 or +1");
                }
                spins.push_back(static_cast<std::int8_t>(*value));
            } else {
                if (!value || (*value != 0 && *value != 1)) {
                    throw ParseError(line_no, "binary value '" + std::string(field) + "' is not 0 or 1");
                }
                spins.push_back(*value ? 1 : -1);
            }
        }
        samples.emplace_back(std::move(spins));
    });
    return samples;
}

std::string serialize_samples(std::span<const Sample> samples, ModelKind kind) {
    std::string out;
    for (const auto &sample : samples) {
        for (std::size_t i = 0; i < sample.size(); ++i) {
            if (i) {
                out += ' ';
            }
            if (kind == ModelKind::ising) {
                out += sample[i] > 0 ? "1" : "-1";
            } else {
                out += sample[i] > 0 ? '1' : '0';
            }
        }
        out += '\n';
    }
    return out;
}

std::string format_real(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) {
        throw std::runtime_error("failed to format real value");
    }
    return std::string(buffer, ptr);
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace mqc
