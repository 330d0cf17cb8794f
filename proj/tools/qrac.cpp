// Copyright 2026 The qrac Authors
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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrac/qrac.hpp"
#include "qrac/strategy_json.hpp"

namespace {

// Exit codes: 0 ok, 2 usage/parse, 3 invalid strategy, 4 I/O,
// 5 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidStrategy = 3;
constexpr int kExitIo = 4;
constexpr int kExitVerifyFailed = 5;

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Single-line JSON record with every number at 12 significant digits.
class JsonLine {
 public:
  JsonLine& add(const std::string& key, double v) { return raw(key, fmt12(v)); }
  JsonLine& add(const std::string& key, int v) { return raw(key, std::to_string(v)); }
  JsonLine& add(const std::string& key, std::uint64_t v) { return raw(key, std::to_string(v)); }
  JsonLine& add(const std::string& key, bool v) { return raw(key, v ? "true" : "false"); }
  JsonLine& add(const std::string& key, const std::string& v) {
    return raw(key, "\"" + v + "\"");
  }
  JsonLine& raw(const std::string& key, const std::string& rendered) {
    body_ += first_ ? "" : ",";
    body_ += "\"" + key + "\":" + rendered;
    first_ = false;
    return *this;
  }
  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
  bool first_ = true;
};

std::uint64_t parse_seed(const std::string& text) {
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(text, &pos);
  if (pos != text.size()) throw qrac::ValidationError("seed is not an unsigned integer");
  return v;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QRAC_SEED")) {
    try {
      return parse_seed(env);
    } catch (const std::exception&) {
      throw qrac::ValidationError(std::string("QRAC_SEED is not an unsigned integer: \"") +
                                  env + "\"");
    }
  }
  return 0;
}

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw qrac::ValidationError("not a number: \"" + item + "\"");
    }
  }
  return out;
}

int cmd_bound(int n, int m) {
  const qrac::UpperBound b = qrac::upper_bound(n, m);
  JsonLine line;
  line.add("n", n).add("m", m).add("bound", b.value).add("vacuous", b.vacuous);
  std::cout << line.str() << '\n';
  return kExitOk;
}

int cmd_eval(const std::string& path, bool worst, bool xor_worst, bool decompose,
             bool run_simulation, long long trials, std::uint64_t seed) {
  qrac::QracStrategy s;
  try {
    s = qrac::load_strategy(path);
  } catch (const qrac::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON in \"" << path << "\": " << e.what() << '\n';
    return kExitUsage;
  } catch (const qrac::ValidationError& e) {
    std::cerr << "error: invalid strategy: " << e.what() << '\n';
    return kExitInvalidStrategy;
  }
  qrac::EvaluationReport rep;
  try {
    rep = qrac::avg_success_decomposed(s);
  } catch (const qrac::ValidationError& e) {
    std::cerr << "error: invalid strategy: " << e.what() << '\n';
    return kExitInvalidStrategy;
  }
  JsonLine line;
  line.add("n", s.n).add("m", s.m).add("p_avg", rep.p_avg).add("bound", rep.bound);
  line.add("vacuous", rep.bound_vacuous);
  if (worst) line.add("p_worst", rep.p_worst);
  if (xor_worst) line.add("p_xor_worst", qrac::xor_randomized_worst_case(s));
  if (decompose) {
    line.add("s1", rep.s1).add("s2", rep.s2).add("s3", rep.s3).add("s4", rep.s4).add("s5", rep.s5);
    std::string terms = "{";
    for (int x = 0; x < static_cast<int>(rep.t_norms.size()); ++x) {
      terms += (x ? "," : "");
      terms += "\"" + qrac::index_to_bits(x, s.n) + "\":" + fmt12(rep.t_norms[x]);
    }
    terms += "}";
    line.raw("decomposition_terms", terms);
  }
  if (run_simulation) {
    line.add("simulated", qrac::simulate(s, trials, seed));
    line.add("trials", static_cast<std::uint64_t>(trials)).add("seed", seed);
  }
  std::cout << line.str() << '\n';
  return kExitOk;
}

int cmd_optimize(const qrac::SeesawConfig& cfg, const std::string& out_path) {
  const qrac::SeesawTrace trace = qrac::seesaw(cfg);
  try {
    qrac::save_strategy(trace.strategy, out_path);
  } catch (const qrac::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  std::size_t total = 0;
  for (const auto& h : trace.all_histories) total += h.size();
  const qrac::UpperBound b = qrac::upper_bound(cfg.n, cfg.m);
  JsonLine line;
  line.add("n", cfg.n).add("m", cfg.m).add("p", trace.p).add("bound", b.value);
  line.add("gap", b.value - trace.p).add("vacuous", b.vacuous);
  line.add("winner_restart", trace.winner_restart);
  line.add("winner_iterations", static_cast<int>(trace.p_history.size()));
  line.add("total_iterations", static_cast<std::uint64_t>(total));
  line.add("restarts", cfg.restarts).add("seed", cfg.seed).add("out", out_path);
  std::cout << line.str() << '\n';
  return kExitOk;
}

int cmd_construct(int n, int m, const std::string& out_path) {
  const qrac::QracStrategy s = qrac::construct_known(n, m);
  try {
    qrac::save_strategy(s, out_path);
  } catch (const qrac::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  const double p = qrac::avg_success(s);
  const qrac::UpperBound b = qrac::upper_bound(n, m);
  JsonLine line;
  line.add("n", n).add("m", m).add("p", p).add("bound", b.value).add("gap", b.value - p);
  line.add("out", out_path);
  std::cout << line.str() << '\n';
  return kExitOk;
}

int cmd_section(int dim, const std::string& u1_text, const std::string& u2_text, int points,
                const std::string& out_path) {
  const int len = dim * dim - 1;
  std::vector<double> c1 = parse_csv_doubles(u1_text);
  std::vector<double> c2 = parse_csv_doubles(u2_text);
  if (static_cast<int>(c1.size()) != len || static_cast<int>(c2.size()) != len)
    throw qrac::ValidationError("section: --u1/--u2 need exactly " + std::to_string(len) +
                                " comma-separated numbers for --dim " + std::to_string(dim));
  qrac::BlochVector u1(dim, std::move(c1));
  qrac::BlochVector u2(dim, std::move(c2));
  if (std::abs(u1.norm() - 1.0) > 1e-9 || std::abs(u2.norm() - 1.0) > 1e-9 ||
      std::abs(qrac::inner(u1, u2)) > 1e-9)
    throw qrac::ValidationError("section: --u1 and --u2 must be orthonormal within 1e-9");
  // Tighten to working precision so every sampled direction is unit.
  u1 *= 1.0 / u1.norm();
  u2 -= qrac::inner(u1, u2) * u1;
  u2 *= 1.0 / u2.norm();

  if (points < 8) throw qrac::ValidationError("section: --points must be >= 8");
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
    return kExitIo;
  }
  out << "theta,radius\n";
  for (int k = 0; k < points; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / points;
    const qrac::BlochVector dir = std::cos(theta) * u1 + std::sin(theta) * u2;
    out << fmt12(theta) << ',' << fmt12(qrac::boundary_radius(dir)) << '\n';
  }
  const qrac::GeometryConstants g = qrac::geometry_constants(dim);
  out << "# r_N," << fmt12(g.r) << '\n';
  out << "# R_N," << fmt12(g.R) << '\n';
  if (!out) {
    std::cerr << "error: failed while writing \"" << out_path << "\"\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_verify(const std::string& lemma, int dim, int samples, std::uint64_t seed) {
  const qrac::CampaignReport rep = qrac::run_campaign(lemma, dim, samples, seed);
  JsonLine line;
  line.add("lemma", rep.name).add("dim", rep.dim).add("samples", rep.samples);
  line.add("seed", rep.seed).add("tolerance", rep.tolerance);
  line.add("max_violation", rep.max_violation).add("pass", rep.pass);
  std::string comp = "{";
  bool first = true;
  for (const auto& [label, value] : rep.components) {
    comp += (first ? "" : ",");
    comp += "\"" + label + "\":" + fmt12(value);
    first = false;
  }
  comp += "}";
  line.raw("components", comp);
  std::cout << line.str() << '\n';
  return rep.pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bloch-space geometry and quantum random access codes"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const qrac::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  int n = 2, m = 1, dim = 0, points = 256, samples = 1000;
  int restarts = 10, max_iters = 1000;
  double tol = 1e-10;
  long long trials = 0;
  bool worst = false, xor_worst = false, decompose = false;
  std::string strategy_path, out_path, u1_text, u2_text, lemma;

  CLI::App* bound = app.add_subcommand("bound", "Print the success-probability upper bound");
  bound->add_option("--n", n, "number of encoded bits")->required();
  bound->add_option("--m", m, "number of qubits")->required();

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a strategy file");
  eval->add_option("strategy", strategy_path, "strategy JSON file")->required();
  eval->add_flag("--worst-case", worst, "include the worst (x,i) success probability");
  eval->add_flag("--xor-worst-case", xor_worst,
                 "include the worst-case success under a shared XOR mask");
  eval->add_flag("--decompose", decompose, "include the estimate-chain stages and |T_x| terms");
  eval->add_option("--simulate", trials, "Monte-Carlo trial count");
  eval->add_option("--seed", seed, "RNG seed (default: QRAC_SEED or 0)");

  CLI::App* optimize = app.add_subcommand("optimize", "See-saw search for a good strategy");
  optimize->add_option("--n", n, "number of encoded bits")->required();
  optimize->add_option("--m", m, "number of qubits")->required();
  optimize->add_option("--restarts", restarts, "independent random starts");
  optimize->add_option("--max-iters", max_iters, "iteration cap per restart");
  optimize->add_option("--tol", tol, "convergence threshold on the per-iteration gain");
  optimize->add_option("--seed", seed, "RNG seed (default: QRAC_SEED or 0)");
  optimize->add_option("--out", out_path, "output strategy file")->required();

  CLI::App* construct = app.add_subcommand("construct", "Emit a closed-form strategy");
  construct->add_option("--n", n, "number of encoded bits")->required();
  construct->add_option("--m", m, "number of qubits")->required();
  construct->add_option("--out", out_path, "output strategy file")->required();

  CLI::App* section = app.add_subcommand("section", "Export a planar section of Bloch space");
  section->add_option("--dim", dim, "Hilbert-space dimension N")->required();
  section->add_option("--u1", u1_text, "first unit vector, comma-separated")->required();
  section->add_option("--u2", u2_text, "second unit vector, comma-separated")->required();
  section->add_option("--points", points, "number of sampled angles (>= 8)");
  section->add_option("--out", out_path, "output CSV file")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a randomized verification campaign");
  verify->add_option("--lemma", lemma, "campaign name")->required();
  verify->add_option("--dim", dim, "dimension N, or max vector count for mancinska/parseval");
  verify->add_option("--samples", samples, "sample count");
  verify->add_option("--seed", seed, "RNG seed (default: QRAC_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bound) return cmd_bound(n, m);
    if (*eval)
      return cmd_eval(strategy_path, worst, xor_worst, decompose,
                      eval->count("--simulate") > 0, trials, seed);
    if (*optimize) {
      qrac::SeesawConfig cfg;
      cfg.n = n;
      cfg.m = m;
      cfg.restarts = restarts;
      cfg.max_iters = max_iters;
      cfg.conv_tol = tol;
      cfg.seed = seed;
      return cmd_optimize(cfg, out_path);
    }
    if (*construct) return cmd_construct(n, m, out_path);
    if (*section) return cmd_section(dim, u1_text, u2_text, points, out_path);
    if (*verify) return cmd_verify(lemma, dim, samples, seed);
  } catch (const qrac::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qrac::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
