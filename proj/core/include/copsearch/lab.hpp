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

#ifndef COPSEARCH_LAB_HPP_
#define COPSEARCH_LAB_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "copsearch/arena.hpp"
#include "copsearch/certificate.hpp"
#include "copsearch/digraph.hpp"
#include "copsearch/solver.hpp"

namespace copsearch {

struct ScanInstance {
  std::string id;
  Digraph graph;
};

// Every labeled digraph on n <= 5 vertices, ids "n<N>-<index>".
std::vector<ScanInstance> enumeration_source(int n);
// `count` graphs random_digraph(n, p, seed + i), ids "rand-n<N>-s<seed+i>".
std::vector<ScanInstance> random_source(int count, int n, double p,
                                        std::uint64_t seed);
// Edge-list files; the id is the path as given.
std::vector<ScanInstance> file_source(const std::vector<std::string>& paths);

enum class ScanStatus {
  kOk,             // gap == 0
  kGapVerified,    // gap > 0 with checked certificate and attestation
  kGapUnverified,  // gap > 0 but a check failed; never expected
  kBudgetExceeded,
};
std::string status_name(ScanStatus status);

struct GapRecord {
  std::string graph_id;
  std::string graph_sha256;
  int n = 0;
  int m = 0;
  GameVariant variant;
  int cop_number = 0;
  int monotone_cop_number = 0;
  int gap = 0;
  double ratio = 1.0;
  std::optional<double> runtime_ms;
  ScanStatus status = ScanStatus::kOk;
  std::string detail;
  // Rows with gap > 0: the non-monotone strategy at k = cop_number, and
  // whether the monotone solver, re-run at that k, reported a robber win.
  std::optional<Certificate> witness;
  bool monotone_failure_attested = false;
};

struct GapSummary {
  std::size_t instances = 0;
  std::size_t solved = 0;
  std::size_t budget_exceeded = 0;
  std::size_t positive_gaps = 0;
  int max_gap = 0;
  double max_ratio = 1.0;
};

struct GapReport {
  std::vector<GapRecord> records;
  GapSummary summary;
};

struct ScanOptions {
  SolveOptions solve;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  // Wall-clock timing makes reports non-reproducible, so it is opt-in.
  bool timing = false;
};

// One record per instance, in source order regardless of thread count.
GapReport gap_scan(const std::vector<ScanInstance>& source,
                   const GameVariant& variant, const ScanOptions& options = {});

GapSummary summarize(const std::vector<GapRecord>& records);

// "graph_id,n,m,variant,copnum,mon_copnum,gap,ratio,runtime_ms,status"
void write_gap_csv(const GapReport& report, std::ostream& out);
// One JSON object per record, then a summary object. When cert_dir is set,
// witness certificates are written there and their paths recorded.
void write_gap_jsonl(const GapReport& report, std::ostream& out,
                     const std::string& cert_dir = "");

// Ratio as printed in reports: fixed, four decimals.
std::string format_ratio(double ratio);

// Known non-monotone instances: member k has monotone cop number at least
// cop number + k. Throws std::invalid_argument for k < 1 and
// std::out_of_range for members not available for the variant.
Digraph counterexample_family(int k, const GameVariant& variant);
// Largest k for which counterexample_family(k, variant) is available
// (0 when none).
int counterexample_family_size(const GameVariant& variant);

}  // namespace copsearch

#endif  // COPSEARCH_LAB_HPP_
