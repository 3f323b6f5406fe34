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

#ifndef COPSEARCH_CERTIFICATE_HPP_
#define COPSEARCH_CERTIFICATE_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "copsearch/arena.hpp"
#include "copsearch/version.hpp"
#include "copsearch/vertex_set.hpp"

namespace copsearch {

// Malformed certificate text, or a certificate presented for the wrong graph.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CertificateKind { kPositional, kSequence };

// One entry of a positional strategy: at `position` the cops move to `next`.
struct StrategyMove {
  VisiblePosition position;
  VertexSet next;
  bool operator==(const StrategyMove&) const = default;
};

// A winning cop strategy. Visible games carry a positional map covering every
// position reachable under the strategy; invisible games carry the sequence
// of cop placements that clears the graph.
struct Certificate {
  std::string tool_version = kVersion;
  GameVariant variant;
  int k = 0;
  bool monotone = false;
  std::string graph_sha256;
  CertificateKind kind = CertificateKind::kPositional;
  // Sorted by (cops in lex_less order, robber).
  std::vector<StrategyMove> positional;
  std::vector<VertexSet> sequence;

  bool operator==(const Certificate&) const = default;
};

// Canonical JSON text (two-space indent, trailing newline). Serializing a
// parsed certificate reproduces the input byte for byte.
std::string to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

}  // namespace copsearch

#endif  // COPSEARCH_CERTIFICATE_HPP_
