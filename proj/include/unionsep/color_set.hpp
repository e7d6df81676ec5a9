#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace unionsep {

using Color = std::uint32_t;

/// Fixed-capacity bitset over the colors 0..kCapacity-1.
///
/// Unions, intersections and cardinalities are a handful of word operations,
/// which is what the enumeration cores spend most of their time on.
class ColorSet {
public:
  static constexpr std::size_t kWords = 4;
  static constexpr Color kCapacity = 64 * kWords;

  constexpr ColorSet() = default;

  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors)
      insert(c);
  }

  template <class Range> static ColorSet from(const Range &colors) {
    ColorSet s;
    for (auto c : colors)
      s.insert(static_cast<Color>(c));
    return s;
  }

  /// {0, 1, ..., count-1}.
  static ColorSet first(Color count) {
    ColorSet s;
    for (Color c = 0; c < count; ++c)
      s.insert(c);
    return s;
  }

  void insert(Color c) {
    check(c);
    words_[c / 64] |= std::uint64_t{1} << (c % 64);
  }

  void erase(Color c) {
    check(c);
    words_[c / 64] &= ~(std::uint64_t{1} << (c % 64));
  }

  bool contains(Color c) const noexcept {
    return c < kCapacity && ((words_[c / 64] >> (c % 64)) & 1U);
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }

  /// Lowest member; kCapacity if empty.
  Color min() const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i])
        return static_cast<Color>(64 * i + std::countr_zero(words_[i]));
    return kCapacity;
  }

  /// Highest member; kCapacity if empty.
  Color max() const noexcept {
    for (std::size_t i = kWords; i-- > 0;)
      if (words_[i])
        return static_cast<Color>(64 * i + 63 - std::countl_zero(words_[i]));
    return kCapacity;
  }

  std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for_each([&](Color c) { out.push_back(c); });
    return out;
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      auto w = words_[i];
      while (w) {
        f(static_cast<Color>(64 * i + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  ColorSet &operator|=(const ColorSet &o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  ColorSet &operator&=(const ColorSet &o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  ColorSet &operator-=(const ColorSet &o) noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ColorSet operator|(ColorSet a, const ColorSet &b) { return a |= b; }
  friend ColorSet operator&(ColorSet a, const ColorSet &b) { return a &= b; }
  friend ColorSet operator-(ColorSet a, const ColorSet &b) { return a -= b; }

  friend std::size_t union_size(const ColorSet &a, const ColorSet &b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < kWords; ++i)
      n += static_cast<std::size_t>(std::popcount(a.words_[i] | b.words_[i]));
    return n;
  }
  friend std::size_t intersection_size(const ColorSet &a, const ColorSet &b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < kWords; ++i)
      n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return n;
  }

  friend bool operator==(const ColorSet &, const ColorSet &) = default;

  /// Orders sets by their sorted member sequences.
  friend bool lex_less(const ColorSet &a, const ColorSet &b) {
    const auto x = a.to_vector();
    const auto y = b.to_vector();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

private:
  static void check(Color c) {
    if (c >= kCapacity)
      throw UsageError("color " + std::to_string(c) + " exceeds capacity " +
                       std::to_string(kCapacity));
  }

  std::array<std::uint64_t, kWords> words_{};
};

} // namespace unionsep
