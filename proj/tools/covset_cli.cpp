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

// covset: command-line front end over the C API.
//
// Exit codes: 0 success (or verified covering), 1 semantic failure (not a
// covering set, inexact result under --require-exact, internal error),
// 2 usage or validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covset/covset.h"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { covset_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct SetDeleter {
  void operator()(covset_set* s) const { covset_set_destroy(s); }
};
using SetPtr = std::unique_ptr<covset_set, SetDeleter>;

struct OmegaDeleter {
  void operator()(covset_omega* r) const { covset_omega_destroy(r); }
};
using OmegaPtr = std::unique_ptr<covset_omega, OmegaDeleter>;

struct TableDeleter {
  void operator()(covset_table* t) const { covset_table_destroy(t); }
};
using TablePtr = std::unique_ptr<covset_table, TableDeleter>;

// Thrown to unwind with a specific exit code after printing a diagnostic.
struct Exit {
  int code;
};

void check(covset_status status) {
  if (status == COVSET_OK) return;
  std::cerr << "covset: " << covset_status_name(status) << ": "
            << covset_last_error() << "\n";
  throw Exit{status == COVSET_ERR_INTERNAL ? kSemantic : kUsage};
}

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      std::cerr << "covset: cannot open " << path << " for writing\n";
      throw Exit{kUsage};
    }
    out << text;
  }
};

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

struct SpecArgs {
  std::uint64_t q = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;
};

void add_spec(CLI::App* cmd, SpecArgs& spec, bool required = true) {
  auto* q = cmd->add_option("--q", spec.q, "modulus q (< 2^31)");
  auto* l = cmd->add_option("--lambda", spec.lambda, "largest positive magnitude");
  cmd->add_option("--mu", spec.mu, "largest negative magnitude (default 0)");
  if (required) {
    q->required();
    l->required();
  }
}

struct LimitArgs {
  std::uint64_t max_q = 0;
  std::uint64_t max_r = 0;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  bool force = false;

  covset_limits resolve() const {
    covset_limits limits;
    covset_limits_default(&limits);
    if (max_q != 0) limits.max_q = max_q;
    if (max_r != 0) limits.max_r = max_r;
    if (nodes != 0) limits.node_budget = nodes;
    limits.time_budget_seconds = seconds;
    if (force) {
      limits.max_q = UINT64_C(1) << 31;
      limits.max_r = UINT64_C(1) << 31;
    }
    return limits;
  }
};

void add_limits(CLI::App* cmd, LimitArgs& limits) {
  cmd->add_option("--max-q", limits.max_q, "exact-search modulus cap (default 64)");
  cmd->add_option("--max-r", limits.max_r, "subset-size cap for nu (default 6)");
  cmd->add_option("--limit-nodes", limits.nodes, "branch-and-bound node budget");
  cmd->add_option("--time-limit", limits.seconds, "wall-clock budget in seconds");
  cmd->add_flag("--force", limits.force, "lift the q and r caps");
}

std::vector<std::uint32_t> parse_elements(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (item.front() == '-') throw std::invalid_argument("negative");
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || used == 0 || v > UINT32_MAX) {
      std::cerr << "covset: malformed element '" << item << "'\n";
      throw Exit{kUsage};
    }
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "covset: cannot read " << path << "\n";
    throw Exit{kUsage};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// interval == 0 with use_interval selects the default interval length.
int run_construct(const SpecArgs& spec, bool use_interval, std::uint64_t interval,
                  const Output& out) {
  covset_set* raw = nullptr;
  covset_interval_info info{};
  if (use_interval) {
    check(covset_construct_interval(spec.q, spec.lambda, spec.mu, interval, &raw, &info));
  } else {
    check(covset_construct(spec.q, spec.lambda, spec.mu, &raw));
  }
  SetPtr set(raw);
  covset_report report{};
  check(covset_verify(spec.q, spec.lambda, spec.mu, set.get(), &report, nullptr));
  char* json = nullptr;
  check(covset_construction_to_json(set.get(), spec.lambda, spec.mu,
                                    use_interval ? &info : nullptr, &json));
  out.write(with_newline(CString(json).get()));
  if (!report.is_covering) {
    std::cerr << "covset: internal error: construction failed verification\n";
    return kSemantic;
  }
  return kOk;
}

int run_verify(SpecArgs spec, const std::string& file, const std::string& elements,
               const Output& out) {
  covset_set* raw = nullptr;
  if (!file.empty()) {
    const std::string text = read_file(file);
    check(covset_set_from_json(text.c_str(), &spec.q, &spec.lambda, &spec.mu, &raw));
  } else {
    if (spec.q == 0) {
      std::cerr << "covset: verify needs --file or --q/--lambda/--elements\n";
      throw Exit{kUsage};
    }
    const auto values = parse_elements(elements);
    check(covset_set_create(spec.q, values.data(), values.size(), &raw));
  }
  SetPtr set(raw);
  covset_report report{};
  char* json = nullptr;
  check(covset_verify(spec.q, spec.lambda, spec.mu, set.get(), &report, &json));
  out.write(with_newline(CString(json).get()));
  return report.is_covering ? kOk : kSemantic;
}

int run_omega(const SpecArgs& spec, const LimitArgs& limit_args, bool greedy,
              bool require_exact, const std::string& format, const Output& out) {
  covset_omega* raw = nullptr;
  if (greedy) {
    check(covset_omega_greedy(spec.q, spec.lambda, spec.mu, &raw));
  } else {
    const covset_limits limits = limit_args.resolve();
    check(covset_omega_exact(spec.q, spec.lambda, spec.mu, &limits, &raw));
  }
  OmegaPtr result(raw);
  char* text = nullptr;
  if (format == "csv") {
    check(covset_omega_to_csv(result.get(), 1, &text));
  } else {
    check(covset_omega_to_json(result.get(), &text));
  }
  out.write(with_newline(CString(text).get()));
  if (require_exact && !covset_omega_is_exact(result.get())) return kSemantic;
  return kOk;
}

int run_nu(const SpecArgs& spec, std::uint64_t r, const LimitArgs& limit_args,
           const std::string& format, const Output& out) {
  const covset_limits limits = limit_args.resolve();
  std::uint64_t nu = 0;
  check(covset_nu_exact(spec.q, spec.lambda, spec.mu, r, &limits, &nu));
  if (format == "csv") {
    out.write("q,lambda,mu,r,nu\n" + std::to_string(spec.q) + "," +
              std::to_string(spec.lambda) + "," + std::to_string(spec.mu) + "," +
              std::to_string(r) + "," + std::to_string(nu) + "\n");
    return kOk;
  }
  nlohmann::ordered_json j;
  j["q"] = spec.q;
  j["lambda"] = spec.lambda;
  j["mu"] = spec.mu;
  j["r"] = r;
  j["nu"] = nu;
  out.write(j.dump() + "\n");
  return kOk;
}

int run_theta(const SpecArgs& spec, const LimitArgs& limit_args,
              const std::string& format, const Output& out) {
  const covset_limits limits = limit_args.resolve();
  std::uint64_t theta = 0;
  covset_set* raw = nullptr;
  check(covset_theta_exact(spec.q, spec.lambda, spec.mu, &limits, &theta, &raw));
  SetPtr witness(raw);
  std::vector<std::uint32_t> elems(covset_set_size(witness.get()));
  covset_set_elements(witness.get(), elems.data(), elems.size());
  if (format == "csv") {
    out.write("q,lambda,mu,theta\n" + std::to_string(spec.q) + "," +
              std::to_string(spec.lambda) + "," + std::to_string(spec.mu) + "," +
              std::to_string(theta) + "\n");
    return kOk;
  }
  nlohmann::ordered_json j;
  j["q"] = spec.q;
  j["lambda"] = spec.lambda;
  j["mu"] = spec.mu;
  j["theta"] = theta;
  j["witness"] = elems;
  out.write(j.dump() + "\n");
  return kOk;
}

int run_delta(const SpecArgs& spec, std::uint64_t g, const std::string& format,
              const Output& out) {
  std::uint64_t root = g;
  if (root == 0) check(covset_primitive_root(spec.q, &root));
  std::uint64_t delta = 0, bound = 0;
  check(covset_delta_run(spec.q, root, spec.lambda, spec.mu, &delta, &bound));
  if (format == "csv") {
    out.write("p,g,lambda,mu,delta,implied_bound\n" + std::to_string(spec.q) + "," +
              std::to_string(root) + "," + std::to_string(spec.lambda) + "," +
              std::to_string(spec.mu) + "," + std::to_string(delta) + "," +
              std::to_string(bound) + "\n");
    return kOk;
  }
  nlohmann::ordered_json j;
  j["p"] = spec.q;
  j["g"] = root;
  j["lambda"] = spec.lambda;
  j["mu"] = spec.mu;
  j["delta"] = delta;
  j["implied_bound"] = bound;
  out.write(j.dump() + "\n");
  return kOk;
}

int run_density(const std::string& mode, const std::vector<std::uint64_t>& thresholds,
                const std::string& format, const Output& out) {
  covset_density_mode m = COVSET_DENSITY_Q4;
  if (mode == "Q4") {
    m = COVSET_DENSITY_Q4;
  } else if (mode == "N") {
    m = COVSET_DENSITY_N;
  } else if (mode == "rho") {
    m = COVSET_DENSITY_RHO;
  } else if (mode == "mertens") {
    m = COVSET_DENSITY_MERTENS;
  }
  covset_table* raw = nullptr;
  check(covset_density(m, thresholds.data(), thresholds.size(), &raw));
  TablePtr table(raw);
  char* text = nullptr;
  if (format == "json") {
    check(covset_table_to_json(table.get(), &text));
  } else {
    check(covset_table_to_csv(table.get(), &text));
  }
  out.write(with_newline(CString(text).get()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering sets for limited-magnitude errors in Z_q"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--out", out.path, "write results to this file instead of stdout");

  SpecArgs spec;
  LimitArgs limits;
  std::string format = "json";
  const std::vector<std::string> formats{"json", "csv"};

  auto* construct = app.add_subcommand("construct", "build an explicit covering set");
  add_spec(construct, spec);
  std::uint64_t interval = 0;
  construct->add_option("--interval", interval,
                        "use the interval-plus-residual construction with S0 = {1..L}")
      ->check(CLI::PositiveNumber);
  bool interval_default = false;
  construct->add_flag("--interval-default", interval_default,
                      "interval construction with L = ceil(q / sqrt(max(lambda, mu)))");

  auto* verify = app.add_subcommand("verify", "check a candidate covering set");
  add_spec(verify, spec, false);
  std::string file, elements;
  verify->add_option("--file", file, "covering-set JSON document (e.g. construct output)");
  verify->add_option("--elements", elements, "comma-separated residues");

  auto* omega = app.add_subcommand("omega", "minimum covering size by exact search");
  add_spec(omega, spec);
  add_limits(omega, limits);
  bool greedy = false, require_exact = false;
  omega->add_flag("--greedy", greedy, "greedy upper bound instead of exact search");
  omega->add_flag("--require-exact", require_exact, "exit 1 if the budget ran out");
  omega->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* nu = app.add_subcommand("nu", "best coverage by r residues");
  add_spec(nu, spec);
  add_limits(nu, limits);
  std::uint64_t r = 0;
  nu->add_option("--r", r, "subset size")->required();
  nu->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* theta = app.add_subcommand("theta", "largest packing set");
  add_spec(theta, spec);
  add_limits(theta, limits);
  theta->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* delta = app.add_subcommand("delta", "primitive-root run length bound");
  add_spec(delta, spec);
  std::uint64_t g = 0;
  delta->add_option("--g", g, "primitive root (default: smallest)");
  delta->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* density = app.add_subcommand("density", "order-of-2 density tables");
  std::string mode;
  std::vector<std::uint64_t> thresholds;
  density->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"Q4", "N", "rho", "mertens"}));
  density->add_option("--thresholds", thresholds, "ascending thresholds")
      ->required()
      ->delimiter(',');
  std::string density_format = "csv";
  density->add_option("--format", density_format)->check(CLI::IsMember(formats));

  auto* sweep = app.add_subcommand("sweep", "compare bounds across a range of q");
  std::uint64_t from = 2, to = 2;
  std::string lambda_rule = "1", mu_rule = "0";
  bool primes_only = false, no_exact = false;
  sweep->add_option("--from", from, "first q")->required();
  sweep->add_option("--to", to, "last q")->required();
  sweep->add_option("--lambda-rule", lambda_rule, "k | sqrt | a/b (ceil(a q / b))");
  sweep->add_option("--mu-rule", mu_rule, "k | sqrt | a/b");
  sweep->add_flag("--primes", primes_only, "only prime q");
  sweep->add_flag("--no-exact", no_exact, "skip the omega_exact column");
  add_limits(sweep, limits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) {
      return run_construct(spec, interval > 0 || interval_default, interval, out);
    }
    if (*verify) return run_verify(spec, file, elements, out);
    if (*omega) return run_omega(spec, limits, greedy, require_exact, format, out);
    if (*nu) return run_nu(spec, r, limits, format, out);
    if (*theta) return run_theta(spec, limits, format, out);
    if (*delta) return run_delta(spec, g, format, out);
    if (*density) return run_density(mode, thresholds, density_format, out);
    if (*sweep) {
      const covset_limits lim = limits.resolve();
      char* csv = nullptr;
      check(covset_sweep_csv(from, to, lambda_rule.c_str(), mu_rule.c_str(),
                             primes_only ? 1 : 0, no_exact ? 0 : 1, &lim, &csv));
      out.write(CString(csv).get());
      return kOk;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kUsage;
}
