#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace tightrep {

/// Index of an element in the declared element order of its structure.
using element = std::size_t;

/// Largest structure the library accepts; element sets are 64-bit masks.
inline constexpr std::size_t max_elements = 64;

/// A subset of a structure's elements, iterated in declared order.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = element;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = element;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    element operator*() const { return static_cast<element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(iterator const&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<element> members) {
    for (auto m : members) insert(m);
  }

  /// {0, ..., n-1}
  static constexpr ElementSet first(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static ElementSet of(std::vector<element> const& members) {
    ElementSet s;
    for (auto m : members) s.insert(m);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(element e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }
  constexpr void insert(element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(element e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr ElementSet with(element e) const {
    auto s = *this;
    s.insert(e);
    return s;
  }
  constexpr ElementSet without(element e) const {
    auto s = *this;
    s.erase(e);
    return s;
  }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<element> to_vector() const { return {begin(), end()}; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Graded-lexicographic comparison over declared order: smaller sets first,
/// then lexicographic on the ascending member sequences.
inline bool graded_lex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

/// Calls visit(subset) for every subset of universe in graded-lexicographic
/// order. Stops early and returns false as soon as visit returns false.
template <typename Visit>
bool for_each_subset(ElementSet universe, Visit&& visit) {
  auto const members = universe.to_vector();
  std::size_t const m = members.size();
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= m; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      ElementSet subset;
      for (auto p : pick) subset.insert(members[p]);
      if (!visit(subset)) return false;
      // advance to the next k-combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace tightrep
