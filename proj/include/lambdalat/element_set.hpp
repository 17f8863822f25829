#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace lambdalat {

/// Elements of a finite carrier are dense indices 0..n-1.
using Element = std::size_t;

/// Largest carrier representable by ElementSet.
inline constexpr std::size_t kMaxElements = 32;

/// A subset of a small carrier, stored as a bitmask.
class ElementSet {
 public:
  using Mask = std::uint32_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    explicit iterator(Mask rest) : rest_(rest) {}

    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elements) {
    for (Element x : elements) insert(x);
  }

  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= kMaxElements ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr ElementSet single(Element x) { return ElementSet(Mask{1} << x); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool contains(Element x) const { return (bits_ >> x) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  void insert(Element x) { bits_ |= Mask{1} << x; }
  void erase(Element x) { bits_ &= ~(Mask{1} << x); }

  /// Smallest member; the set must be nonempty.
  Element front() const { return static_cast<Element>(std::countr_zero(bits_)); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

 private:
  Mask bits_ = 0;
};

}  // namespace lambdalat
