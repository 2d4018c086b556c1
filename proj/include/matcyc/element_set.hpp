// Copyright 2026 The Authors.
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

#ifndef MATCYC_ELEMENT_SET_HPP_
#define MATCYC_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace matcyc {

// A subset of a ground set of at most 64 elements. Element e (0-based) is
// printed with label e + 1; all textual forms list labels in ascending order.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kMaxElements = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    explicit Iterator(Word rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Word bits) : bits_(bits) {}

  // {0, ..., n-1}.
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= kMaxElements ? ~Word{0} : (Word{1} << n) - 1);
  }
  static constexpr ElementSet single(int e) { return ElementSet(Word{1} << e); }
  static ElementSet of(std::initializer_list<int> elements);
  // Builds from 1-based labels.
  static ElementSet from_labels(std::initializer_list<int> labels);
  static ElementSet from_labels(const std::vector<int>& labels);

  constexpr Word bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  // Smallest element; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr ElementSet with(int e) const {
    return ElementSet(bits_ | (Word{1} << e));
  }
  constexpr ElementSet without(int e) const {
    return ElementSet(bits_ & ~(Word{1} << e));
  }

  std::vector<int> elements() const;
  std::vector<int> labels() const;

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  Word bits_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const noexcept {
    return std::hash<ElementSet::Word>{}(s.bits());
  }
};

// Lexicographic order on the ascending label lists ({1,2} < {1,3} < {2}).
bool lex_less(ElementSet a, ElementSet b);

// Order used for lattice nodes and reports: by size, then lexicographic.
bool size_lex_less(ElementSet a, ElementSet b);

// "{1,2,3}" / "{}".
std::string format_set(ElementSet s);

// Accepts "1,2,3", "{1,2,3}", "-", "{}" and "" (labels are 1-based).
ElementSet parse_set(std::string_view text);

// Packs the bits of `s` that lie inside `mask` into the low bits, in order.
ElementSet::Word compress(ElementSet s, ElementSet mask);

// Calls fn(subset) for every subset of `s`, in increasing bit order.
template <class Fn>
void for_each_subset(ElementSet s, Fn&& fn) {
  const ElementSet::Word m = s.bits();
  ElementSet::Word sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

// Calls fn(subset) for every k-subset of `s` in lexicographic label order.
// Stops early when fn returns false.
template <class Fn>
bool for_each_subset_of_size(ElementSet s, int k, Fn&& fn) {
  const std::vector<int> elems = s.elements();
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElementSet sub;
    for (int i : idx) sub = sub.with(elems[i]);
    if (!fn(sub)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace matcyc

#endif  // MATCYC_ELEMENT_SET_HPP_
