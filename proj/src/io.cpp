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

#include "covset/io.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "covset/error.hpp"
#include "json.hpp"

namespace covset {

namespace {

using Json = nlohmann::ordered_json;

// Round-trips through the 6-digit text so JSON shows the same digits as CSV.
double rounded(double v) { return std::stod(format_real(v)); }

Json set_object(const ErrorSpec& spec, const CoveringSet& s) {
  Json j;
  j["q"] = spec.q();
  j["lambda"] = spec.lambda();
  j["mu"] = spec.mu();
  j["method"] = std::string(to_string(s.method()));
  j["size"] = s.size();
  j["elements"] = std::vector<Residue>(s.elements().begin(), s.elements().end());
  return j;
}

std::uint64_t require_uint(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw Error(ErrorCode::parse_error, std::string("missing key \"") + key + "\"");
  }
  const Json& v = doc.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::parse_error,
                std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

Json density_row(const DensityRecord& r) {
  Json j;
  j["threshold"] = r.threshold;
  j["count"] = r.count;
  j["normalizer"] = rounded(r.normalizer);
  j["ratio"] = rounded(r.ratio);
  if (r.product) j["product"] = rounded(*r.product);
  return j;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string set_to_json(const ErrorSpec& spec, const CoveringSet& s) {
  return set_object(spec, s).dump();
}

std::string construction_to_json(const ErrorSpec& spec, const CoveringSet& s,
                                 bool is_covering,
                                 const IntervalResidual* interval) {
  Json j = set_object(spec, s);
  j["is_covering"] = is_covering;
  if (interval != nullptr) {
    j["interval_len"] = interval->interval_len;
    j["interval_size"] = interval->interval_size;
    j["residual_size"] = interval->residual_size;
  }
  return j.dump();
}

SetDocument set_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::parse_error, "expected a JSON object");
  const ErrorSpec spec(require_uint(doc, "q"), require_uint(doc, "lambda"),
                       require_uint(doc, "mu"));
  if (!doc.contains("elements") || !doc.at("elements").is_array()) {
    throw Error(ErrorCode::parse_error, "\"elements\" must be an array");
  }
  std::vector<Residue> elements;
  for (const auto& e : doc.at("elements")) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
      throw Error(ErrorCode::parse_error, "elements must be non-negative integers");
    }
    const auto v = e.get<std::uint64_t>();
    if (v >= spec.q()) {
      throw Error(ErrorCode::out_of_range,
                  "element " + std::to_string(v) + " is not a residue modulo " +
                      std::to_string(spec.q()));
    }
    elements.push_back(static_cast<Residue>(v));
  }
  if (doc.contains("size") && require_uint(doc, "size") != elements.size()) {
    throw Error(ErrorCode::parse_error, "\"size\" does not match the element count");
  }
  Method method = Method::explicit_set;
  if (doc.contains("method")) {
    if (!doc.at("method").is_string()) {
      throw Error(ErrorCode::parse_error, "\"method\" must be a string");
    }
    method = method_from_string(doc.at("method").get<std::string>());
  }
  return {spec, CoveringSet(spec.q(), std::move(elements), method)};
}

std::string report_to_json(const ErrorSpec& spec, const CoverageReport& r) {
  Json j;
  j["q"] = spec.q();
  j["lambda"] = spec.lambda();
  j["mu"] = spec.mu();
  j["covered_count"] = r.covered_count;
  j["missing"] = r.missing;
  j["is_covering"] = r.is_covering;
  j["product_count"] = r.product_count;
  j["is_packing"] = r.is_packing;
  return j.dump();
}

std::string omega_to_json(const ErrorSpec& spec, const OmegaResult& r,
                          std::uint64_t construction_size) {
  Json j;
  j["q"] = spec.q();
  j["lambda"] = spec.lambda();
  j["mu"] = spec.mu();
  j["omega"] = r.value;
  j["exact"] = r.exact;
  j["lower_bound"] = r.lower_bound;
  j["construction_size"] = construction_size;
  j["nodes"] = r.nodes_explored;
  j["witness"] = std::vector<Residue>(r.witness.elements().begin(),
                                      r.witness.elements().end());
  return j.dump();
}

std::string omega_csv_header() {
  return "q,lambda,mu,omega,exact,lower_bound,construction_size,nodes";
}

std::string omega_to_csv_row(const ErrorSpec& spec, const OmegaResult& r,
                             std::uint64_t construction_size) {
  return std::to_string(spec.q()) + "," + std::to_string(spec.lambda()) + "," +
         std::to_string(spec.mu()) + "," + std::to_string(r.value) + "," +
         (r.exact ? "true" : "false") + "," + std::to_string(r.lower_bound) +
         "," + std::to_string(construction_size) + "," +
         std::to_string(r.nodes_explored);
}

std::string density_to_csv(std::span<const DensityRecord> rows) {
  const bool mertens = !rows.empty() && rows.front().product.has_value();
  std::string out = "threshold,count,normalizer,ratio";
  if (mertens) out += ",product";
  out += "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.threshold) + "," + std::to_string(r.count) + "," +
           format_real(r.normalizer) + "," + format_real(r.ratio);
    if (mertens) out += "," + format_real(r.product.value_or(0.0));
    out += "\n";
  }
  return out;
}

std::string density_to_json(std::span<const DensityRecord> rows) {
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(density_row(r));
  return arr.dump();
}

}  // namespace covset
