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

#include "copsearch/arena.hpp"

namespace copsearch {

void validate(const GameVariant& variant) {
  if (variant.visibility == Visibility::kVisible &&
      variant.agility == Agility::kLazy) {
    throw UnsupportedVariant(
        "unsupported variant: a visible lazy robber is not a supported game");
  }
  if (variant.confinement == Confinement::kStrongComponent &&
      !(variant.visibility == Visibility::kVisible &&
        variant.agility == Agility::kFast)) {
    throw UnsupportedVariant(
        "unsupported variant: strong-component confinement requires a "
        "visible fast robber");
  }
}

std::string variant_name(const GameVariant& variant) {
  validate(variant);
  if (variant == GameVariant::visible()) return "visible";
  if (variant == GameVariant::inert()) return "inert";
  if (variant == GameVariant::invisible_fast()) return "invisible-fast";
  return "visible-scc";
}

GameVariant parse_variant(std::string_view name) {
  if (name == "visible" || name == "visible-fast") return GameVariant::visible();
  if (name == "inert" || name == "invisible-lazy") return GameVariant::inert();
  if (name == "invisible-fast") return GameVariant::invisible_fast();
  if (name == "visible-scc") return GameVariant::visible_scc();
  throw UnsupportedVariant("unsupported variant '" + std::string(name) +
                           "' (expected visible, inert, invisible-fast or "
                           "visible-scc)");
}

namespace {

void extend_moves(int n, int k, Vertex from, VertexSet current,
                  std::vector<VertexSet>& out) {
  out.push_back(current);
  if (current.size() == k) return;
  for (Vertex v = from; v < n; ++v) {
    VertexSet next = current;
    next.insert(v);
    extend_moves(n, k, v + 1, next, out);
  }
}

}  // namespace

std::vector<VertexSet> cop_moves(int n, int k) {
  std::vector<VertexSet> out;
  if (k < 0) return out;
  // Depth-first extension by increasing vertex emits lex_less order.
  extend_moves(n, k, 0, {}, out);
  return out;
}

VertexSet robber_options(const Digraph& d, VertexSet cops, VertexSet next,
                         Vertex r, Confinement confinement) {
  const VertexSet blocked = cops & next;
  VertexSet region = reach(d, VertexSet::singleton(r), blocked);
  if (confinement == Confinement::kStrongComponent) {
    region &= reach_backward(d, VertexSet::singleton(r), blocked);
  }
  return region - next;
}

VertexSet contaminate(const Digraph& d, VertexSet cops, VertexSet next,
                      VertexSet contaminated, Agility agility) {
  const VertexSet blocked = cops & next;
  if (agility == Agility::kLazy) {
    const VertexSet threatened = contaminated & next;
    return (contaminated | reach(d, threatened, blocked)) - next;
  }
  return reach(d, contaminated, blocked) - next;
}

VertexSet robber_space(const Digraph& d, VertexSet cops, Vertex r) {
  return reach(d, VertexSet::singleton(r), cops);
}

InitialConfiguration initial_state(const Digraph& d, const GameVariant& variant) {
  validate(variant);
  InitialConfiguration init;
  if (variant.visibility == Visibility::kVisible) {
    for (Vertex r = 0; r < d.vertex_count(); ++r) {
      init.visible_starts.push_back({VertexSet{}, r});
    }
  } else {
    init.invisible_start = ContaminationState{VertexSet{}, d.vertices()};
  }
  return init;
}

}  // namespace copsearch
