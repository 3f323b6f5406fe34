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

#include "copsearch/lab.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "copsearch/enumerate.hpp"

namespace copsearch {

std::vector<ScanInstance> enumeration_source(int n) {
  DigraphEnumerator all(n);
  std::vector<ScanInstance> out;
  out.reserve(all.count());
  for (std::uint64_t i = 0; i < all.count(); ++i) {
    out.push_back({"n" + std::to_string(n) + "-" + std::to_string(i), all.at(i)});
  }
  return out;
}

std::vector<ScanInstance> random_source(int count, int n, double p,
                                        std::uint64_t seed) {
  std::vector<ScanInstance> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    out.push_back({"rand-n" + std::to_string(n) + "-s" + std::to_string(s),
                   random_digraph(n, p, s)});
  }
  return out;
}

std::vector<ScanInstance> file_source(const std::vector<std::string>& paths) {
  std::vector<ScanInstance> out;
  for (const std::string& path : paths) {
    out.push_back({path, read_edge_list_file(path)});
  }
  return out;
}

std::string status_name(ScanStatus status) {
  switch (status) {
    case ScanStatus::kOk: return "ok";
    case ScanStatus::kGapVerified: return "gap_verified";
    case ScanStatus::kGapUnverified: return "gap_unverified";
    case ScanStatus::kBudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

std::string format_ratio(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", ratio);
  return buf;
}

namespace {

GapRecord scan_one(const ScanInstance& inst, const GameVariant& variant,
                   const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  GapRecord rec;
  rec.graph_id = inst.id;
  rec.graph_sha256 = fingerprint(inst.graph);
  rec.n = inst.graph.vertex_count();
  rec.m = inst.graph.arc_count();
  rec.variant = variant;
  try {
    GapResult g = gap(inst.graph, variant, options.solve);
    rec.cop_number = g.cop_number;
    rec.monotone_cop_number = g.monotone_cop_number;
    rec.gap = g.gap;
    rec.ratio = g.ratio;
    if (g.gap > 0) {
      const VerifyResult check = verify_certificate(inst.graph, g.plain_certificate);
      const Outcome again =
          solve(inst.graph, variant, g.cop_number, true, options.solve);
      rec.monotone_failure_attested = again.winner == Winner::kRobber;
      rec.witness = std::move(g.plain_certificate);
      if (check.valid && rec.monotone_failure_attested) {
        rec.status = ScanStatus::kGapVerified;
      } else {
        rec.status = ScanStatus::kGapUnverified;
        rec.detail = check.valid ? "monotone solver did not fail at copnum"
                                 : check.diagnostic;
      }
    }
  } catch (const BudgetExceeded& e) {
    rec.status = ScanStatus::kBudgetExceeded;
    rec.detail = e.what();
  }
  if (options.timing) {
    rec.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return rec;
}

}  // namespace

GapSummary summarize(const std::vector<GapRecord>& records) {
  GapSummary s;
  s.instances = records.size();
  for (const GapRecord& r : records) {
    if (r.status == ScanStatus::kBudgetExceeded) {
      ++s.budget_exceeded;
      continue;
    }
    ++s.solved;
    if (r.gap > 0) ++s.positive_gaps;
    s.max_gap = std::max(s.max_gap, r.gap);
    s.max_ratio = std::max(s.max_ratio, r.ratio);
  }
  return s;
}

GapReport gap_scan(const std::vector<ScanInstance>& source,
                   const GameVariant& variant, const ScanOptions& options) {
  validate(variant);
  GapReport report;
  report.records.resize(source.size());
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, source.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < source.size(); i = next++) {
      report.records[i] = scan_one(source[i], variant, options);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  report.summary = summarize(report.records);
  return report;
}

void write_gap_csv(const GapReport& report, std::ostream& out) {
  out << "graph_id,n,m,variant,copnum,mon_copnum,gap,ratio,runtime_ms,status\n";
  for (const GapRecord& r : report.records) {
    const bool solved = r.status != ScanStatus::kBudgetExceeded;
    out << r.graph_id << ',' << r.n << ',' << r.m << ','
        << variant_name(r.variant) << ',';
    if (solved) {
      out << r.cop_number << ',' << r.monotone_cop_number << ',' << r.gap << ','
          << format_ratio(r.ratio) << ',';
    } else {
      out << ",,,,";
    }
    if (r.runtime_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *r.runtime_ms);
      out << buf;
    }
    out << ',' << status_name(r.status) << '\n';
  }
}

void write_gap_jsonl(const GapReport& report, std::ostream& out,
                     const std::string& cert_dir) {
  using Json = nlohmann::ordered_json;
  for (const GapRecord& r : report.records) {
    const bool solved = r.status != ScanStatus::kBudgetExceeded;
    Json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["variant"] = variant_name(r.variant);
    j["copnum"] = solved ? Json(r.cop_number) : Json(nullptr);
    j["mon_copnum"] = solved ? Json(r.monotone_cop_number) : Json(nullptr);
    j["gap"] = solved ? Json(r.gap) : Json(nullptr);
    j["ratio"] = solved ? Json(format_ratio(r.ratio)) : Json(nullptr);
    j["runtime_ms"] = r.runtime_ms ? Json(*r.runtime_ms) : Json(nullptr);
    j["status"] = status_name(r.status);
    j["graph_sha256"] = r.graph_sha256;
    j["extension_variant"] = r.variant.is_extension();
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.witness) {
      j["monotone_failure_attested"] = r.monotone_failure_attested;
      if (!cert_dir.empty()) {
        std::filesystem::create_directories(cert_dir);
        std::string name = r.graph_id;
        for (char& c : name) {
          if (c == '/' || c == '\\') c = '_';
        }
        const std::string path =
            (std::filesystem::path(cert_dir) / (name + ".copnum.json")).string();
        std::ofstream(path) << to_json(*r.witness);
        j["certificate"] = path;
      } else {
        j["certificate"] = nullptr;
      }
    }
    out << j.dump() << '\n';
  }
  const GapSummary& s = report.summary;
  Json summary;
  summary["instances"] = s.instances;
  summary["solved"] = s.solved;
  summary["budget_exceeded"] = s.budget_exceeded;
  summary["positive_gaps"] = s.positive_gaps;
  summary["max_gap"] = s.max_gap;
  summary["max_ratio"] = format_ratio(s.max_ratio);
  summary["version"] = kVersion;
  Json wrapper;
  wrapper["summary"] = std::move(summary);
  out << wrapper.dump() << '\n';
}

}  // namespace copsearch
