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

#ifndef COPSEARCH_VERTEX_SET_HPP_
#define COPSEARCH_VERTEX_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace copsearch {

using Vertex = int;

// Maximum number of vertices supported by every component of the library.
// Game states are pairs of 64-bit words, which keeps hashing and comparison
// to a couple of instructions.
inline constexpr int kMaxVertices = 64;

// A subset of {0, ..., kMaxVertices - 1} stored as a single machine word.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VertexSet singleton(Vertex v) {
    return from_bits(std::uint64_t{1} << v);
  }
  // {0, ..., n-1}
  static constexpr VertexSet full(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet from_vector(const std::vector<Vertex>& vs);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr Vertex min() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSet operator|(VertexSet o) const {
    return from_bits(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return from_bits(bits_ & o.bits_);
  }
  // Set difference.
  constexpr VertexSet operator-(VertexSet o) const {
    return from_bits(bits_ & ~o.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Vertex> to_vector() const;
  // "{0,2,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the ascending member lists, so {} < {0} < {0,1} <
// {1}. This is the canonical order used for cop-move enumeration and for
// tie-breaking in certificates.
bool lex_less(VertexSet a, VertexSet b);

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

}  // namespace copsearch

#endif  // COPSEARCH_VERTEX_SET_HPP_
