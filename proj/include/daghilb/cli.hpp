// Copyright 2026 The daghilb Authors
//
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

// Command-line driver. Exit codes: 0 success, 1 domain failure (a check
// failed or an input is inadmissible), 2 usage or parse error.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "daghilb/axiomsuite.hpp"
#include "daghilb/colimits.hpp"
#include "daghilb/concat.hpp"
#include "daghilb/fractions.hpp"
#include "daghilb/serialize.hpp"

namespace daghilb {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

struct CliConfig {
  std::string field = "C";
  std::size_t dim_max = 8;
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  std::optional<double> tol_eq;
  bool json = false;
  bool expect_fail = false;
  std::string out;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json(const std::string& path) { return parse_json(read_file(path)); }

inline std::string format_residual(double r) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << r;
  return s.str();
}

inline std::string report_table(const AxiomReport& r) {
  std::size_t width = 2;
  for (const auto& c : r.checks) width = std::max(width, c.id.size());
  std::ostringstream s;
  s << std::left << std::setw(static_cast<int>(width)) << "id" << "  " << std::setw(6) << "result"
    << "  " << std::setw(10) << "worst" << "  " << std::setw(16) << "digest" << "  note\n";
  for (const auto& c : r.checks) {
    const char* verdict = c.skipped ? "skip" : (c.pass ? "pass" : "FAIL");
    s << std::setw(static_cast<int>(width)) << c.id << "  " << std::setw(6) << verdict << "  "
      << std::setw(10) << format_residual(c.worst_residual) << "  " << std::setw(16)
      << c.instance_digest << "  " << c.note << "\n";
  }
  return s.str();
}

inline GenConfig to_gen_config(const CliConfig& c) {
  GenConfig g;
  g.field = field_from_json(c.field);
  g.dim_max = c.dim_max;
  g.trials = c.trials;
  g.seed = c.seed;
  if (c.tol_eq) g.tol_overrides["eq"] = *c.tol_eq;
  if (const char* env = std::getenv("DAGHILB_SEED")) {
    try {
      std::size_t pos = 0;
      g.seed = std::stoull(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError(std::string("DAGHILB_SEED is not an unsigned integer: ") + env);
    }
  }
  g.validate();
  return g;
}

inline void emit(const CliConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + c.out);
  f << text;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

/// Runs a registry; with `expect_fail`, runs the corrupted instances and
/// succeeds only if every check that ran failed.
inline int cmd_suite(const std::vector<CheckSpec>& registry, const CliConfig& c, std::ostream& out) {
  const AxiomReport r = run_registry(registry, detail::to_gen_config(c), c.expect_fail);
  detail::emit(c, c.json ? detail::dump(to_json(r)) : detail::report_table(r), out);
  if (!c.expect_fail) return r.all_pass() ? kExitOk : kExitDomain;
  const bool all_caught = std::all_of(r.checks.begin(), r.checks.end(),
                                      [](const CheckEntry& e) { return e.skipped || !e.pass; });
  return all_caught ? kExitOk : kExitDomain;
}

inline int cmd_axioms(const CliConfig& c, std::ostream& out) { return cmd_suite(axiom_registry(), c, out); }
inline int cmd_lemmas(const CliConfig& c, std::ostream& out) { return cmd_suite(lemma_registry(), c, out); }

inline int cmd_factor(const std::string& path, const CliConfig& c, std::ostream& out) {
  const ConMor t = ConMor::admit(mor_from_json(detail::read_json(path)));
  const Factorization f = factor(t);
  const json residuals = {{"reconstruction", distance(compose(f.k, f.e).mat(), t.mat())},
                          {"isometry", isometry_defect(f.k.mat())},
                          {"rank_e", rank(f.e.mat())},
                          {"dim_e", f.e.cod().dim}};
  if (c.json) {
    detail::emit(c, detail::dump({{"factorization", to_json(f)}, {"residuals", residuals}}), out);
  } else {
    std::ostringstream s;
    s << "dim E            " << f.e.cod().dim << "\n"
      << "|k e - t|        " << detail::format_residual(residuals["reconstruction"]) << "\n"
      << "|k^dag k - I|    " << detail::format_residual(residuals["isometry"]) << "\n"
      << detail::dump(to_json(f));
    detail::emit(c, s.str(), out);
  }
  return kExitOk;
}

inline int cmd_fraction(const std::string& op, const std::vector<std::string>& paths,
                        const CliConfig& c, std::ostream& out) {
  auto need = [&](std::size_t n) {
    if (paths.size() != n) {
      throw CLI::ValidationError("fraction " + op + " takes " + std::to_string(n) + " file(s)");
    }
  };
  json result;
  if (op == "eq") {
    need(2);
    const Fraction a = fraction_from_json(detail::read_json(paths[0]));
    const Fraction b = fraction_from_json(detail::read_json(paths[1]));
    const double r = frac_residual(a, b);
    result = {{"equal", r <= kTol.eq}, {"residual", r}};
    if (!c.json) {
      detail::emit(c, std::string(r <= kTol.eq ? "true" : "false") + "\n", out);
      return kExitOk;
    }
  } else if (op == "compose") {
    need(2);
    result = to_json(frac_compose(fraction_from_json(detail::read_json(paths[0])),
                                  fraction_from_json(detail::read_json(paths[1]))));
  } else if (op == "to-hilb") {
    need(1);
    result = to_json(to_hilb(fraction_from_json(detail::read_json(paths[0]))));
  } else if (op == "from-hilb") {
    need(1);
    result = to_json(from_hilb(mor_from_json(detail::read_json(paths[0]))));
  } else if (op == "roundtrip") {
    need(1);
    result = to_json(to_hilb(from_hilb(mor_from_json(detail::read_json(paths[0])))));
  } else {
    throw CLI::ValidationError("unknown fraction operation '" + op + "'");
  }
  detail::emit(c, detail::dump(result), out);
  return kExitOk;
}

inline int cmd_colimit(const std::string& path, const CliConfig& c, std::ostream& out) {
  const json in = detail::read_json(path);
  if (in.is_object() && in.contains("scalars")) {
    const ChainSpec spec = chain_spec_from_json(in);
    const ScalarChainCocone cc = scalar_chain_cocone(spec);
    if (c.json) {
      json legs = json::array(), steps = json::array();
      for (const auto& l : cc.legs) legs.push_back(to_json(l));
      for (const auto& s : cc.steps) steps.push_back(to_json(s));
      detail::emit(c, detail::dump({{"apex", to_json(spec.base)}, {"legs", legs}, {"steps", steps}}), out);
      return kExitOk;
    }
    std::ostringstream s;
    s << std::left << std::setw(6) << "n" << std::setw(24) << "z_n" << "leg (z_n / sup)\n";
    s << std::setprecision(17);
    for (std::size_t n = 0; n < spec.scalars.size(); ++n) {
      s << std::setw(6) << n + 1 << std::setw(24) << spec.scalars[n] << spec.scalars[n] / spec.sup
        << "\n";
    }
    detail::emit(c, s.str(), out);
    return kExitOk;
  }
  const FiniteColimit colim = finite_colimit(diagram_from_json(in));
  json legs = json::array();
  for (const auto& l : colim.legs) legs.push_back(to_json(l));
  const json result = {{"apex", to_json(colim.apex)}, {"top", colim.diagram.top()}, {"legs", legs}};
  if (c.json) {
    detail::emit(c, detail::dump(result), out);
  } else {
    std::ostringstream s;
    s << "apex  " << to_string(colim.apex) << " (node " << colim.diagram.top() << ")\n"
      << detail::dump(legs);
    detail::emit(c, s.str(), out);
  }
  return kExitOk;
}

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contractions between finite-dimensional Hilbert spaces: constructions and checks",
               "daghilb"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_suite_flags = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "Base field")->check(CLI::IsMember({"R", "C"}));
    sub->add_option("--dim-max", cfg.dim_max, "Largest sampled dimension")->check(CLI::PositiveNumber);
    sub->add_option("--trials", cfg.trials, "Instances per check")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Seed (DAGHILB_SEED takes precedence)");
    sub->add_option("--tol-eq", cfg.tol_eq, "Override the morphism equality tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--expect-fail", cfg.expect_fail,
                  "Run the corrupted instances; succeed only if every check fails");
  };
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Machine-readable output");
    sub->add_option("--out", cfg.out, "Write the report to a file instead of stdout");
  };

  CLI::App* axioms = app.add_subcommand("axioms", "Check the eleven axioms on random instances");
  CLI::App* lemmas = app.add_subcommand("lemmas", "Check the constructive lemmas on random instances");
  for (CLI::App* sub : {axioms, lemmas}) {
    add_suite_flags(sub);
    add_output_flags(sub);
  }

  std::string factor_path;
  CLI::App* factor_cmd = app.add_subcommand("factor", "Epi / dagger-mono factorisation of a morphism");
  factor_cmd->add_option("path", factor_path, "Morphism JSON")->required();
  add_output_flags(factor_cmd);

  std::string frac_op;
  std::vector<std::string> frac_paths;
  CLI::App* fraction = app.add_subcommand("fraction", "Operations on formal fractions");
  fraction->add_option("op", frac_op, "eq | compose | to-hilb | from-hilb | roundtrip")
      ->required()
      ->check(CLI::IsMember({"eq", "compose", "to-hilb", "from-hilb", "roundtrip"}));
  fraction->add_option("paths", frac_paths, "Input JSON files")->required();
  add_output_flags(fraction);

  std::string colimit_path;
  CLI::App* colimit = app.add_subcommand("colimit", "Colimit of a scalar chain or finite diagram");
  colimit->add_option("path", colimit_path, "ChainSpec or diagram JSON")->required();
  add_output_flags(colimit);

  try {
    app.parse(argc, argv);
    if (axioms->parsed()) return cmd_axioms(cfg, out);
    if (lemmas->parsed()) return cmd_lemmas(cfg, out);
    if (factor_cmd->parsed()) return cmd_factor(factor_path, cfg, out);
    if (fraction->parsed()) return cmd_fraction(frac_op, frac_paths, cfg, out);
    if (colimit->parsed()) return cmd_colimit(colimit_path, cfg, out);
    return kExitUsage;
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const Inadmissible& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace daghilb
