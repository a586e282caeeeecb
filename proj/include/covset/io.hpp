// Copyright 2026 The covset Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats shared by the library, the C API and the CLI.
//
// Covering set:  {"q", "lambda", "mu", "method", "size", "elements"}
// Search row:    {"q", "lambda", "mu", "omega", "exact", "lower_bound",
//                 "construction_size", "nodes"}
// Density CSV:   threshold,count,normalizer,ratio
//
// Reals are printed with 6 significant digits; key order is fixed.

#ifndef COVSET_IO_HPP
#define COVSET_IO_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "covset/construct.hpp"
#include "covset/cover.hpp"
#include "covset/density.hpp"
#include "covset/search.hpp"

namespace covset {

std::string format_real(double v);

struct SetDocument {
  ErrorSpec spec;
  CoveringSet set;
};

std::string set_to_json(const ErrorSpec& spec, const CoveringSet& s);

/// Construction output: the set document plus "is_covering", and for the
/// interval construction "interval_len", "interval_size", "residual_size".
std::string construction_to_json(const ErrorSpec& spec, const CoveringSet& s,
                                 bool is_covering,
                                 const IntervalResidual* interval = nullptr);

/// Parses a set document. Unknown keys are ignored, "method" defaults to
/// explicit, and "size" (if present) must match the element list. Throws
/// Error(parse_error) or the ErrorSpec/CoveringSet validation errors.
SetDocument set_from_json(std::string_view text);

std::string report_to_json(const ErrorSpec& spec, const CoverageReport& r);

std::string omega_to_json(const ErrorSpec& spec, const OmegaResult& r,
                          std::uint64_t construction_size);
std::string omega_csv_header();
std::string omega_to_csv_row(const ErrorSpec& spec, const OmegaResult& r,
                             std::uint64_t construction_size);

/// Mertens rows carry an extra trailing "product" column.
std::string density_to_csv(std::span<const DensityRecord> rows);
std::string density_to_json(std::span<const DensityRecord> rows);

}  // namespace covset

#endif  // COVSET_IO_HPP
