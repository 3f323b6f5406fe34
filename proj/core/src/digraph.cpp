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

#include "copsearch/digraph.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace copsearch {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

Digraph::Digraph(int n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(n), in_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) +
                     " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw GraphError("arc " + std::to_string(a.tail) + " " +
                       std::to_string(a.head) + " has an id outside [0, " +
                       std::to_string(n) + ")");
    }
    if (a.tail == a.head) {
      throw GraphError("self-loop at vertex " + std::to_string(a.tail));
    }
    if (out_[a.tail].contains(a.head)) {
      throw GraphError("duplicate arc " + std::to_string(a.tail) + " " +
                       std::to_string(a.head));
    }
    out_[a.tail].insert(a.head);
    in_[a.head].insert(a.tail);
  }
  std::sort(arcs_.begin(), arcs_.end());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_id(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError(line, "expected a non-negative decimal integer, got '" +
                               std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int declared = -1;
  bool seen_content = false;
  int max_id = -1;
  std::vector<Arc> arcs;
  std::vector<int> arc_line;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto toks = split_ws(line);
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected two fields, got '" +
                                    std::string(line) + "'");
    }
    if (toks[0] == "n") {
      if (seen_content) {
        throw ParseError(line_no, "'n' header must be the first line");
      }
      declared = parse_id(toks[1], line_no);
      if (declared > kMaxVertices) {
        throw ParseError(line_no, "at most " + std::to_string(kMaxVertices) +
                                      " vertices are supported");
      }
      seen_content = true;
      continue;
    }
    seen_content = true;
    Arc a{parse_id(toks[0], line_no), parse_id(toks[1], line_no)};
    if (a.tail == a.head) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(a.tail));
    }
    for (Vertex id : {a.tail, a.head}) {
      if (declared >= 0 && id >= declared) {
        throw ParseError(line_no, "vertex id " + std::to_string(id) +
                                      " not below declared n = " +
                                      std::to_string(declared));
      }
      if (id >= kMaxVertices) {
        throw ParseError(line_no, "vertex id " + std::to_string(id) +
                                      " exceeds the supported maximum");
      }
    }
    max_id = std::max({max_id, a.tail, a.head});
    arcs.push_back(a);
    arc_line.push_back(line_no);
  }
  // Duplicates are reported against the line that repeats an earlier arc.
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return arcs[x] < arcs[y]; });
  int dup_line = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (arcs[order[i]] == arcs[order[i - 1]]) {
      int l = std::max(arc_line[order[i]], arc_line[order[i - 1]]);
      if (dup_line == 0 || l < dup_line) dup_line = l;
    }
  }
  if (dup_line != 0) throw ParseError(dup_line, "duplicate arc");
  int n = declared >= 0 ? declared : max_id + 1;
  return Digraph(n, std::move(arcs));
}

Digraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string to_edge_list(const Digraph& d) {
  std::string out = "n " + std::to_string(d.vertex_count()) + "\n";
  for (const Arc& a : d.arcs()) {
    out += std::to_string(a.tail);
    out += ' ';
    out += std::to_string(a.head);
    out += '\n';
  }
  return out;
}

std::string fingerprint(const Digraph& d) {
  const std::string text = to_edge_list(d);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

VertexSet reach(const Digraph& d, VertexSet sources, VertexSet forbidden) {
  VertexSet seen = sources - forbidden;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= d.out(v);
    next -= forbidden;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

VertexSet reach_backward(const Digraph& d, VertexSet targets,
                         VertexSet forbidden) {
  VertexSet seen = targets - forbidden;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= d.in(v);
    next -= forbidden;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> scc(const Digraph& d) {
  // Tarjan's algorithm, iterative.
  const int n = d.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<VertexSet> classes;
  int counter = 0;
  struct Frame {
    Vertex v;
    VertexSet pending;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call;
    auto open = [&](Vertex v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      call.push_back({v, d.out(v)});
    };
    open(root);
    while (!call.empty()) {
      Frame& f = call.back();
      if (!f.pending.empty()) {
        Vertex w = f.pending.min();
        f.pending.erase(w);
        if (index[w] == -1) {
          open(w);
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        VertexSet cls;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          cls.insert(w);
        } while (w != v);
        classes.push_back(cls);
      }
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
  return classes;
}

bool is_acyclic(const Digraph& d) {
  for (VertexSet cls : scc(d)) {
    if (cls.size() > 1) return false;
  }
  return true;
}

bool is_acyclic_within(const Digraph& d, VertexSet within) {
  // Repeatedly peel vertices with no in-neighbour left inside.
  VertexSet rest = within;
  bool progress = true;
  while (!rest.empty() && progress) {
    progress = false;
    for (Vertex v : rest) {
      if (!d.in(v).intersects(rest)) {
        rest.erase(v);
        progress = true;
      }
    }
  }
  return rest.empty();
}

InducedSubgraph induced_subgraph(const Digraph& d, VertexSet keep) {
  keep &= d.vertices();
  InducedSubgraph result;
  result.original_id = keep.to_vector();
  std::vector<int> new_id(d.vertex_count(), -1);
  for (std::size_t i = 0; i < result.original_id.size(); ++i) {
    new_id[result.original_id[i]] = static_cast<int>(i);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (keep.contains(a.tail) && keep.contains(a.head)) {
      arcs.push_back({new_id[a.tail], new_id[a.head]});
    }
  }
  result.graph = Digraph(static_cast<int>(result.original_id.size()),
                         std::move(arcs));
  return result;
}

Digraph delete_arcs(const Digraph& d, const std::vector<Arc>& remove) {
  std::vector<VertexSet> drop(d.vertex_count());
  for (const Arc& a : remove) {
    if (a.tail < 0 || a.tail >= d.vertex_count() || a.head < 0 ||
        a.head >= d.vertex_count() || !d.has_arc(a.tail, a.head)) {
      throw GraphError("arc " + std::to_string(a.tail) + " " +
                       std::to_string(a.head) + " is not in the digraph");
    }
    drop[a.tail].insert(a.head);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (!drop[a.tail].contains(a.head)) arcs.push_back(a);
  }
  return Digraph(d.vertex_count(), std::move(arcs));
}

Digraph bidirect(int n, const std::vector<UndirectedEdge>& edges) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * edges.size());
  for (const UndirectedEdge& e : edges) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return Digraph(n, std::move(arcs));
}

std::vector<VertexSet> transitive_closure(const Digraph& d) {
  std::vector<VertexSet> rows(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    rows[v] = reach(d, VertexSet::singleton(v), {});
  }
  return rows;
}

Digraph relabel(const Digraph& d, const std::vector<Vertex>& perm) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arcs().size());
  for (const Arc& a : d.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return Digraph(d.vertex_count(), std::move(arcs));
}

}  // namespace copsearch
