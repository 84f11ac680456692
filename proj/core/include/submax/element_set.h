// Copyright 2023 The Authors.
//
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

#ifndef SUBMAX_ELEMENT_SET_H_
#define SUBMAX_ELEMENT_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace submax {

// Objective values in this library are exact integers surfaced through a
// real-valued interface. The extended type keeps integer arithmetic exact
// up to 2^63, which the tight instance family needs for m up to 60.
using Value = long double;

// A subset of a fixed ground set {0, ..., n-1}, stored as a bitset with a
// cached cardinality. Equality and hashing are over the exact bit pattern,
// so a set doubles as a canonical memo key for the counting oracle.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("negative universe");
  }

  int universe_size() const { return n_; }
  int size() const { return card_; }
  bool empty() const { return card_ == 0; }

  bool contains(int e) const {
    check(e);
    return (words_[e >> 6] >> (e & 63)) & 1;
  }

  void add(int e) {
    check(e);
    std::uint64_t& w = words_[e >> 6];
    std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (!(w & bit)) {
      w |= bit;
      ++card_;
    }
  }

  void remove(int e) {
    check(e);
    std::uint64_t& w = words_[e >> 6];
    std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) {
      w &= ~bit;
      --card_;
    }
  }

  ElementSet with(int e) const {
    ElementSet r = *this;
    r.add(e);
    return r;
  }

  ElementSet without(int e) const {
    ElementSet r = *this;
    r.remove(e);
    return r;
  }

  bool subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  ElementSet unite(const ElementSet& other) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
    r.recount();
    return r;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
    r.recount();
    return r;
  }

  ElementSet difference(const ElementSet& other) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~other.words_[i];
    r.recount();
    return r;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(card_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(n_);
    for (std::uint64_t w : words_) {
      h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void check(int e) const {
    if (e < 0 || e >= n_) throw std::out_of_range("element id out of range");
  }
  void recount() {
    card_ = 0;
    for (std::uint64_t w : words_) card_ += std::popcount(w);
  }

  int n_ = 0;
  int card_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace submax

#endif  // SUBMAX_ELEMENT_SET_H_
