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

#ifndef COPSEARCH_ARENA_HPP_
#define COPSEARCH_ARENA_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "copsearch/digraph.hpp"
#include "copsearch/vertex_set.hpp"

namespace copsearch {

enum class Visibility { kVisible, kInvisible };
enum class Agility { kFast, kLazy };
enum class Confinement { kReachability, kStrongComponent };

class UnsupportedVariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GameVariant {
  Visibility visibility = Visibility::kVisible;
  Agility agility = Agility::kFast;
  Confinement confinement = Confinement::kReachability;

  // Visible fast robber; monotone cop number is DAG-width.
  static constexpr GameVariant visible() { return {}; }
  // Invisible lazy (inert) robber; monotone cop number is Kelly-width.
  static constexpr GameVariant inert() {
    return {Visibility::kInvisible, Agility::kLazy, Confinement::kReachability};
  }
  // Invisible fast robber; directed path-width game (extension).
  static constexpr GameVariant invisible_fast() {
    return {Visibility::kInvisible, Agility::kFast, Confinement::kReachability};
  }
  // Visible fast robber confined to its strong component (extension).
  static constexpr GameVariant visible_scc() {
    return {Visibility::kVisible, Agility::kFast, Confinement::kStrongComponent};
  }

  bool is_extension() const {
    return *this == invisible_fast() || *this == visible_scc();
  }

  bool operator==(const GameVariant&) const = default;
};

// Throws UnsupportedVariant for visible-lazy and invisible strong-component
// combinations.
void validate(const GameVariant& variant);

// "visible", "inert", "invisible-fast", "visible-scc".
std::string variant_name(const GameVariant& variant);
// Accepts the names above plus "visible-fast" and "invisible-lazy".
GameVariant parse_variant(std::string_view name);

// [V]^{<=k} in lex_less order; exactly sum_{i<=k} C(n, i) sets.
std::vector<VertexSet> cop_moves(int n, int k);

// Squares the robber at r may end on when the cops go from `cops` to `next`.
// Escape paths avoid only the cops that stay put. Empty means capture.
VertexSet robber_options(const Digraph& d, VertexSet cops, VertexSet next,
                         Vertex r,
                         Confinement confinement = Confinement::kReachability);

// Contamination after the cops go from `cops` to `next`.
//   lazy: (R + reach(R & next, cops & next)) - next
//   fast: reach(R, cops & next) - next
VertexSet contaminate(const Digraph& d, VertexSet cops, VertexSet next,
                      VertexSet contaminated, Agility agility);

// Territory available to a visible robber at r while the cops sit on `cops`.
VertexSet robber_space(const Digraph& d, VertexSet cops, Vertex r);

// The robber's territory (or contamination) never grows.
inline bool is_monotone_transition(VertexSet before, VertexSet after) {
  return after.subset_of(before);
}

struct VisiblePosition {
  VertexSet cops;
  Vertex robber = 0;
  bool operator==(const VisiblePosition&) const = default;
};

struct ContaminationState {
  VertexSet cops;
  VertexSet contaminated;
  bool operator==(const ContaminationState&) const = default;
};

struct InitialConfiguration {
  // Visible games: one cop-to-move position per robber start, cops on the
  // empty set. Empty when the graph has no vertices.
  std::vector<VisiblePosition> visible_starts;
  // Invisible games: (empty, V).
  std::optional<ContaminationState> invisible_start;
};

InitialConfiguration initial_state(const Digraph& d, const GameVariant& variant);

}  // namespace copsearch

#endif  // COPSEARCH_ARENA_HPP_
