#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace palinwidth {

using ElementIndex = std::uint32_t;

/// Bit vector over the element indices of one GroupTable.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t universe, std::uint64_t table_id)
      : words_((universe + 63) / 64, 0), universe_(universe), table_id_(table_id) {}

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t table_id() const noexcept { return table_id_; }

  bool contains(ElementIndex i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  // Returns true if i was not already present.
  bool insert(ElementIndex i) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    bool fresh = !(words_[i >> 6] & mask);
    words_[i >> 6] |= mask;
    return fresh;
  }

  void erase(ElementIndex i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept { return count() == 0; }
  bool full() const noexcept { return count() == universe_; }

  ElementSet& operator|=(const ElementSet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    a.check_compatible(b);
    return a.words_ == b.words_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  // Members in increasing index order.
  std::vector<ElementIndex> elements() const {
    std::vector<ElementIndex> out;
    out.reserve(count());
    for_each([&](ElementIndex i) { out.push_back(i); });
    return out;
  }

 private:
  void check_compatible(const ElementSet& other) const {
    if (table_id_ != other.table_id_ || universe_ != other.universe_) {
      throw InvalidArgument("element sets belong to different group tables");
    }
  }

  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
  std::uint64_t table_id_ = 0;
};

}  // namespace palinwidth
