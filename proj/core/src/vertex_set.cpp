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

#include "copsearch/vertex_set.hpp"

#include <algorithm>

namespace copsearch {

VertexSet VertexSet::from_vector(const std::vector<Vertex>& vs) {
  VertexSet s;
  for (Vertex v : vs) s.insert(v);
  return s;
}

std::vector<Vertex> VertexSet::to_vector() const {
  return std::vector<Vertex>(begin(), end());
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  // Walk both member lists in ascending order; the first difference decides,
  // and a proper prefix is smaller.
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    int vx = std::countr_zero(x);
    int vy = std::countr_zero(y);
    if (vx != vy) return vx < vy;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

}  // namespace copsearch
