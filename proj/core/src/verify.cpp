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

#include <map>
#include <utility>
#include <vector>

#include "copsearch/solver.hpp"

namespace copsearch {

namespace {

VerifyResult fail(std::string why) { return {false, std::move(why)}; }

std::string describe(const VisiblePosition& p) {
  return "position (cops " + p.cops.to_string() + ", robber " +
         std::to_string(p.robber) + ")";
}

VerifyResult verify_positional(const Digraph& d, const Certificate& cert) {
  const int n = d.vertex_count();
  const VertexSet all = d.vertices();
  using Key = std::pair<std::uint64_t, Vertex>;
  std::map<Key, VertexSet> strategy;
  for (const StrategyMove& m : cert.positional) {
    if (!m.position.cops.subset_of(all) || m.position.robber >= n ||
        m.position.cops.contains(m.position.robber)) {
      throw CertificateError("certificate lists an impossible " +
                             describe(m.position));
    }
    if (!strategy.emplace(Key{m.position.cops.bits(), m.position.robber}, m.next)
             .second) {
      throw CertificateError("certificate lists " + describe(m.position) +
                             " twice");
    }
  }

  // Depth-first replay over every robber reply; a position revisited while
  // still on the stack means the robber can evade forever.
  enum class Mark { kOnStack, kDone };
  std::map<Key, Mark> mark;
  struct Frame {
    VisiblePosition pos;
    VertexSet pending;
  };
  for (const VisiblePosition& start :
       initial_state(d, cert.variant).visible_starts) {
    if (mark.count({start.cops.bits(), start.robber})) continue;
    std::vector<Frame> stack;
    auto enter = [&](const VisiblePosition& pos,
                     VertexSet before_space) -> VerifyResult {
      const Key key{pos.cops.bits(), pos.robber};
      auto it = strategy.find(key);
      if (it == strategy.end()) {
        return fail("no cop move given for " + describe(pos));
      }
      const VertexSet next = it->second;
      if (!next.subset_of(all)) {
        return fail("cop move " + next.to_string() + " at " + describe(pos) +
                    " leaves the graph");
      }
      if (next.size() > cert.k) {
        return fail("cop move " + next.to_string() + " at " + describe(pos) +
                    " uses more than " + std::to_string(cert.k) + " cops");
      }
      const VertexSet space = robber_space(d, pos.cops, pos.robber);
      if (cert.monotone && !is_monotone_transition(before_space, space)) {
        return fail("robber territory grows on reaching " + describe(pos));
      }
      mark[key] = Mark::kOnStack;
      stack.push_back({pos, robber_options(d, pos.cops, next, pos.robber,
                                           cert.variant.confinement)});
      return {true, {}};
    };
    if (auto r = enter(start, all); !r) return r;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.pending.empty()) {
        mark[{top.pos.cops.bits(), top.pos.robber}] = Mark::kDone;
        stack.pop_back();
        continue;
      }
      const Vertex reply = top.pending.min();
      top.pending.erase(reply);
      const VisiblePosition from = top.pos;
      const VisiblePosition succ{strategy.at({from.cops.bits(), from.robber}),
                                 reply};
      const auto seen = mark.find({succ.cops.bits(), succ.robber});
      if (seen != mark.end()) {
        if (seen->second == Mark::kOnStack) {
          return fail("robber escapes forever by cycling back to " +
                      describe(succ));
        }
        // Already fully replayed; the containment check is per transition.
        if (cert.monotone &&
            !is_monotone_transition(robber_space(d, from.cops, from.robber),
                                    robber_space(d, succ.cops, succ.robber))) {
          return fail("robber territory grows on reaching " + describe(succ));
        }
        continue;
      }
      if (auto r = enter(succ, robber_space(d, from.cops, from.robber)); !r) {
        return r;
      }
    }
  }
  return {true, {}};
}

VerifyResult verify_sequence(const Digraph& d, const Certificate& cert) {
  const VertexSet all = d.vertices();
  VertexSet cops;
  VertexSet contaminated = all;
  int step = 0;
  for (VertexSet next : cert.sequence) {
    ++step;
    if (!next.subset_of(all)) {
      return fail("step " + std::to_string(step) + " places cops outside the graph");
    }
    if (next.size() > cert.k) {
      return fail("step " + std::to_string(step) + " uses more than " +
                  std::to_string(cert.k) + " cops");
    }
    const VertexSet after =
        contaminate(d, cops, next, contaminated, cert.variant.agility);
    if (cert.monotone && !is_monotone_transition(contaminated, after)) {
      return fail("step " + std::to_string(step) + " recontaminates " +
                  (after - contaminated).to_string());
    }
    cops = next;
    contaminated = after;
  }
  if (!contaminated.empty()) {
    return fail("contamination " + contaminated.to_string() +
                " remains after the last step");
  }
  return {true, {}};
}

}  // namespace

VerifyResult verify_certificate(const Digraph& d, const Certificate& cert) {
  if (cert.graph_sha256 != fingerprint(d)) {
    throw CertificateError("certificate was issued for a different graph");
  }
  validate(cert.variant);
  const bool visible = cert.variant.visibility == Visibility::kVisible;
  if (visible != (cert.kind == CertificateKind::kPositional)) {
    throw CertificateError("certificate kind does not match its variant");
  }
  if (cert.k > d.vertex_count()) {
    return fail("cop budget " + std::to_string(cert.k) +
                " exceeds the vertex count");
  }
  return visible ? verify_positional(d, cert) : verify_sequence(d, cert);
}

}  // namespace copsearch
