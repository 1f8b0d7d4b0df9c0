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

#ifndef MQC_MODEL_IO_H
#define MQC_MODEL_IO_H

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mqc/model.h"

namespace mqc {

// Model text format, one directive per line:
//
//   ising N | qubo N     header, must come first
//   offset X             optional, at most once
//   v I A                linear coefficient of variable I
//   c I J B              coupler between I < J
//   # ...                comment (also allowed after a directive)
//
// Samples text format: one sample per line, N whitespace-separated values
// from {-1, +1} for Ising models or {0, 1} for QUBO models.

enum class ModelKind { ising, qubo };

using AnyModel = std::variant<IsingModel, QuboModel>;

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string &message);
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

AnyModel parse_model(std::string_view text);

/// Canonical text: header, offset if nonzero, nonzero linear terms in index
/// order, then every stored coupler in (i, j) order. Reals are written in
/// shortest round-trip form so parse(serialize(m)) == m exactly.
std::string serialize_model(const IsingModel &model);
std::string serialize_model(const QuboModel &model);
std::string serialize_model(const AnyModel &model);

ModelKind kind_of(const AnyModel &model);
std::size_t num_variables(const AnyModel &model);

/// Reads samples, converting binary values to spins for QUBO input.
std::vector<Sample> parse_samples(std::string_view text, std::size_t num_variables, ModelKind kind);
std::string serialize_samples(std::span<const Sample> samples, ModelKind kind);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view content);

}  // namespace mqc

#endif
