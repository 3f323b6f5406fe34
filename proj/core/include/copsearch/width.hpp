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

#ifndef COPSEARCH_WIDTH_HPP_
#define COPSEARCH_WIDTH_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "copsearch/arena.hpp"
#include "copsearch/digraph.hpp"
#include "copsearch/solver.hpp"

namespace copsearch {

// A width measure read off a monotone game: value = cop number + offset.
struct WidthReport {
  std::string measure;
  int value = 0;
  GameVariant variant;
  bool monotone = true;
  int offset = 0;
  // Cop number of the same game without the monotonicity restriction.
  int non_monotone_cop_number = 0;
  Certificate certificate;
};

// Monotone visible-fast cop number.
WidthReport dag_width(const Digraph& d, const SolveOptions& options = {});
// Monotone inert cop number. Reported raw: no -1 normalisation.
WidthReport kelly_width(const Digraph& d, const SolveOptions& options = {});
// Monotone invisible-fast cop number minus one (-1 for the empty graph).
WidthReport directed_path_width(const Digraph& d,
                                const SolveOptions& options = {});

inline constexpr int kTreewidthMaxVertices = 12;

// Exact tree-width of an undirected graph by dynamic programming over
// elimination prefixes. Self-contained: does not touch the game code.
// Returns -1 for the empty graph. Throws SizeLimitExceeded above
// kTreewidthMaxVertices.
int treewidth_exact(int n, const std::vector<UndirectedEdge>& edges);

}  // namespace copsearch

#endif  // COPSEARCH_WIDTH_HPP_
