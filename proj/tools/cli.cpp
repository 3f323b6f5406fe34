// Copyright 2026 The copsearch Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

#include "copsearch/arena.hpp"
#include "copsearch/certificate.hpp"
#include "copsearch/digraph.hpp"
#include "copsearch/hardproblems.hpp"
#include "copsearch/lab.hpp"
#include "copsearch/solver.hpp"
#include "copsearch/width.hpp"

namespace copsearch::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised inside handlers to leave with a specific exit code.
struct Exit {
  int code;
};

struct Common {
  std::string variant = "visible";
  bool monotone = false;
  std::uint64_t budget = kDefaultTransitionBudget;
  bool json = false;
  std::string emit_cert;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CertificateError("cannot open certificate '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_certificate(const std::string& path, const Certificate& cert,
                       std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write certificate to '" << path << "'\n";
    throw Exit{kUsage};
  }
  f << to_json(cert);
}

Json set_json(VertexSet s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

Json arcs_json(const std::vector<Arc>& arcs) {
  Json a = Json::array();
  for (const Arc& arc : arcs) a.push_back(Json::array({arc.tail, arc.head}));
  return a;
}

std::string arcs_text(const std::vector<Arc>& arcs) {
  std::string s;
  for (const Arc& a : arcs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(a.tail) + "->" + std::to_string(a.head);
  }
  return s;
}

Json provenance(const Digraph& d, const GameVariant& variant) {
  Json j;
  j["version"] = kVersion;
  j["graph_sha256"] = fingerprint(d);
  j["variant"] = variant_name(variant);
  j["extension_variant"] = variant.is_extension();
  return j;
}

void add_common(CLI::App* cmd, Common& c, bool with_variant, bool with_cert) {
  if (with_variant) {
    cmd->add_option("--variant", c.variant,
                    "visible | inert | invisible-fast | visible-scc")
        ->capture_default_str();
    cmd->add_flag("--monotone", c.monotone, "restrict the cops to monotone play");
  }
  cmd->add_option("--budget", c.budget, "arena transition budget per solve")
      ->capture_default_str();
  cmd->add_flag("--json", c.json, "machine-readable output");
  if (with_cert) {
    cmd->add_option("--emit-cert", c.emit_cert, "write the winning strategy here");
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Exact cops-and-robber game solver for digraphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;
  std::string graph_path;
  std::function<int()> action;

  // solve
  int cops = 0;
  auto* solve_cmd = app.add_subcommand("solve", "decide the winner for k cops");
  add_common(solve_cmd, common, true, true);
  solve_cmd->add_option("--cops", cops, "number of cops")->required();
  solve_cmd->add_option("graph", graph_path, "edge-list file")->required();

  // copnum
  auto* copnum_cmd = app.add_subcommand("copnum", "minimal winning cop count");
  add_common(copnum_cmd, common, true, true);
  copnum_cmd->add_option("graph", graph_path, "edge-list file")->required();

  // gap
  auto* gap_cmd = app.add_subcommand("gap", "monotone minus plain cop number");
  add_common(gap_cmd, common, true, false);
  gap_cmd->add_option("graph", graph_path, "edge-list file")->required();

  // width
  std::string measure_name;
  auto* width_cmd = app.add_subcommand("width", "game-characterised width");
  add_common(width_cmd, common, false, true);
  width_cmd->add_option("--measure", measure_name, "dagwidth | kellywidth | dpw")
      ->required()
      ->check(CLI::IsMember({"dagwidth", "kellywidth", "dpw"}));
  width_cmd->add_option("graph", graph_path, "edge-list file")->required();

  // gapscan
  int scan_n = 0;
  bool exhaustive = false;
  int random_count = 0;
  double p = 0.3;
  std::uint64_t seed = 0;
  std::vector<std::string> files;
  std::string format = "csv";
  std::string output;
  std::string cert_dir;
  unsigned threads = 1;
  bool timing = false;
  auto* scan_cmd = app.add_subcommand("gapscan", "scan many graphs for gaps");
  add_common(scan_cmd, common, true, false);
  auto* n_opt = scan_cmd->add_option("--n", scan_n, "vertex count");
  auto* ex_opt = scan_cmd->add_flag("--exhaustive", exhaustive,
                                    "every labeled digraph on n <= 5 vertices");
  auto* rnd_opt = scan_cmd->add_option("--random", random_count,
                                       "number of random digraphs");
  scan_cmd->add_option("--p", p, "arc probability")->capture_default_str();
  scan_cmd->add_option("--seed", seed, "first seed")->capture_default_str();
  auto* files_opt = scan_cmd->add_option("--files", files, "edge-list files");
  scan_cmd->add_option("--format", format, "csv | jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  scan_cmd->add_option("--output", output, "write the report here");
  scan_cmd->add_option("--cert-dir", cert_dir,
                       "write witness certificates here (jsonl only)");
  scan_cmd->add_option("--threads", threads, "worker threads, 0 = all cores")
      ->capture_default_str();
  scan_cmd->add_flag("--timing", timing, "fill runtime_ms (not reproducible)");
  ex_opt->excludes(rnd_opt)->excludes(files_opt);
  rnd_opt->excludes(files_opt);

  // certify
  std::string cert_path;
  auto* certify_cmd = app.add_subcommand("certify", "replay a certificate");
  certify_cmd->add_option("graph", graph_path, "edge-list file")->required();
  certify_cmd->add_option("certificate", cert_path, "certificate JSON")->required();
  certify_cmd->add_flag("--json", common.json, "machine-readable output");

  // hard
  std::string problem;
  std::vector<std::string> hard_files;
  auto* hard_cmd = app.add_subcommand("hard", "exact hard-problem solvers");
  add_common(hard_cmd, common, false, false);
  hard_cmd->add_option("problem", problem, "ham | fvs | fas | mes | report")
      ->required()
      ->check(CLI::IsMember({"ham", "fvs", "fas", "mes", "report"}));
  hard_cmd->add_option("graphs", hard_files, "edge-list file(s)")->required();

  // family
  int family_k = 0;
  auto* family_cmd = app.add_subcommand("family", "print a counterexample graph");
  family_cmd->add_option("--k", family_k, "required gap")->required();
  family_cmd->add_option("--variant", common.variant, "game variant")
      ->capture_default_str();
  family_cmd->add_flag("--json", common.json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    }
    return kUsage;
  }

  SolveOptions solve_options;
  solve_options.max_transitions = common.budget;

  try {
    const GameVariant variant = parse_variant(common.variant);
    validate(variant);

    if (*solve_cmd) {
      const Digraph d = read_edge_list_file(graph_path);
      if (cops < 0 || cops > d.vertex_count()) {
        err << "usage error: --cops must lie in [0, " << d.vertex_count()
            << "]\n";
        return kUsage;
      }
      const Outcome o = solve(d, variant, cops, common.monotone, solve_options);
      const bool cops_win = o.winner == Winner::kCops;
      if (cops_win && !common.emit_cert.empty()) {
        write_certificate(common.emit_cert, *o.certificate, err);
      }
      if (common.json) {
        Json j = provenance(d, variant);
        j["k"] = cops;
        j["monotone"] = common.monotone;
        j["winner"] = cops_win ? "cops" : "robber";
        j["states_explored"] = o.states_explored;
        out << j.dump() << '\n';
      } else {
        out << (cops_win ? "COPS" : "ROBBER") << '\n';
      }
      return kOk;
    }

    if (*copnum_cmd) {
      const Digraph d = read_edge_list_file(graph_path);
      const CopNumberResult r =
          cop_number(d, variant, common.monotone, solve_options);
      if (!common.emit_cert.empty()) {
        write_certificate(common.emit_cert, r.certificate, err);
      }
      if (common.json) {
        Json j = provenance(d, variant);
        j["monotone"] = common.monotone;
        j["copnum"] = r.value;
        j["states_explored"] = r.states_explored;
        out << j.dump() << '\n';
      } else {
        out << r.value << '\n';
      }
      return kOk;
    }

    if (*gap_cmd) {
      const Digraph d = read_edge_list_file(graph_path);
      const GapResult g = gap(d, variant, solve_options);
      if (common.json) {
        Json j = provenance(d, variant);
        j["copnum"] = g.cop_number;
        j["mon_copnum"] = g.monotone_cop_number;
        j["gap"] = g.gap;
        j["ratio"] = format_ratio(g.ratio);
        out << j.dump() << '\n';
      } else {
        out << "copnum " << g.cop_number << " mon_copnum "
            << g.monotone_cop_number << " gap " << g.gap << " ratio "
            << format_ratio(g.ratio) << '\n';
      }
      return kOk;
    }

    if (*width_cmd) {
      const Digraph d = read_edge_list_file(graph_path);
      WidthReport w;
      if (measure_name == "dagwidth") {
        w = dag_width(d, solve_options);
      } else if (measure_name == "kellywidth") {
        w = kelly_width(d, solve_options);
      } else {
        w = directed_path_width(d, solve_options);
      }
      if (!common.emit_cert.empty()) {
        write_certificate(common.emit_cert, w.certificate, err);
      }
      if (common.json) {
        Json j = provenance(d, w.variant);
        j["measure"] = w.measure;
        j["value"] = w.value;
        j["monotone"] = w.monotone;
        j["offset"] = w.offset;
        j["non_monotone_copnum"] = w.non_monotone_cop_number;
        out << j.dump() << '\n';
      } else {
        out << w.value << '\n';
      }
      return kOk;
    }

    if (*scan_cmd) {
      std::vector<ScanInstance> source;
      if (exhaustive) {
        if (n_opt->count() == 0) {
          err << "usage error: --exhaustive needs --n\n";
          return kUsage;
        }
        source = enumeration_source(scan_n);
      } else if (rnd_opt->count() > 0) {
        if (n_opt->count() == 0 || random_count < 0) {
          err << "usage error: --random needs --n and a non-negative count\n";
          return kUsage;
        }
        if (!(p >= 0.0 && p <= 1.0)) {
          err << "usage error: --p must lie in [0, 1]\n";
          return kUsage;
        }
        source = random_source(random_count, scan_n, p, seed);
      } else if (files_opt->count() > 0) {
        source = file_source(files);
      } else {
        err << "usage error: gapscan needs --exhaustive, --random or --files\n";
        return kUsage;
      }
      ScanOptions scan_options;
      scan_options.solve = solve_options;
      scan_options.threads = threads;
      scan_options.timing = timing;
      const GapReport report = gap_scan(source, variant, scan_options);

      std::ofstream file;
      if (!output.empty()) {
        file.open(output, std::ios::binary);
        if (!file) {
          err << "error: cannot write '" << output << "'\n";
          return kUsage;
        }
      }
      std::ostream& sink = output.empty() ? out : file;
      if (common.json || format == "jsonl") {
        write_gap_jsonl(report, sink, cert_dir);
      } else {
        write_gap_csv(report, sink);
        const GapSummary& s = report.summary;
        err << "summary: instances " << s.instances << " solved " << s.solved
            << " budget_exceeded " << s.budget_exceeded << " positive_gaps "
            << s.positive_gaps << " max_gap " << s.max_gap << " max_ratio "
            << format_ratio(s.max_ratio) << '\n';
      }
      return report.summary.budget_exceeded > 0 ? kBudget : kOk;
    }

    if (*certify_cmd) {
      const Digraph d = read_edge_list_file(graph_path);
      const Certificate cert = certificate_from_json(read_file(cert_path));
      const VerifyResult r = verify_certificate(d, cert);
      if (common.json) {
        Json j;
        j["valid"] = r.valid;
        j["diagnostic"] = r.diagnostic;
        out << j.dump() << '\n';
      } else {
        out << (r.valid ? "VALID" : "INVALID") << '\n';
      }
      if (!r.valid) {
        err << "certificate rejected: " << r.diagnostic << '\n';
        return kCertificateInvalid;
      }
      return kOk;
    }

    if (*hard_cmd) {
      if (problem == "report") {
        std::vector<NamedInstance> instances;
        for (const std::string& f : hard_files) {
          instances.push_back({f, read_edge_list_file(f)});
        }
        const auto rows = width_annotated_report(instances, solve_options);
        if (common.json) {
          write_width_report_jsonl(rows, out);
        } else {
          write_width_report_csv(rows, out);
        }
        return kOk;
      }
      if (hard_files.size() != 1) {
        err << "usage error: hard " << problem << " takes exactly one file\n";
        return kUsage;
      }
      const Digraph d = read_edge_list_file(hard_files.front());
      ProblemSolution sol;
      if (problem == "ham") {
        sol = hamiltonian_cycle(d);
      } else if (problem == "fvs") {
        sol = min_feedback_vertex_set(d);
      } else if (problem == "fas") {
        sol = min_feedback_arc_set(d);
      } else {
        sol = min_equivalent_subgraph(d);
      }
      if (common.json) {
        Json j;
        j["version"] = kVersion;
        j["graph_sha256"] = fingerprint(d);
        j["problem"] = sol.problem;
        j["objective"] = sol.objective;
        j["optimal"] = sol.optimal;
        switch (sol.witness_kind) {
          case WitnessKind::kNone: j["witness"] = nullptr; break;
          case WitnessKind::kVertexSet: j["witness"] = set_json(sol.vertex_set); break;
          case WitnessKind::kArcSet: j["witness"] = arcs_json(sol.arc_set); break;
          case WitnessKind::kCycle: j["witness"] = sol.cycle; break;
        }
        out << j.dump() << '\n';
      } else if (problem == "ham") {
        if (sol.objective == 0) {
          out << "none\n";
        } else {
          for (Vertex v : sol.cycle) out << v << ' ';
          out << sol.cycle.front() << '\n';
        }
      } else if (problem == "fvs") {
        out << sol.objective << ' ' << sol.vertex_set.to_string() << '\n';
      } else {
        out << sol.objective << (sol.arc_set.empty() ? "" : " ")
            << arcs_text(sol.arc_set) << '\n';
      }
      return kOk;
    }

    if (*family_cmd) {
      const Digraph d = counterexample_family(family_k, variant);
      if (common.json) {
        Json j = provenance(d, variant);
        j["k"] = family_k;
        j["edge_list"] = to_edge_list(d);
        out << j.dump() << '\n';
      } else {
        out << to_edge_list(d);
      }
      return kOk;
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const UnsupportedVariant& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const GraphError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const CertificateError& e) {
    err << "certificate invalid: " << e.what() << '\n';
    return kCertificateInvalid;
  } catch (const SizeLimitExceeded& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace copsearch::cli
