#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace palinwidth {

using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = std::numeric_limits<Point>::max();

/// A bijection of {0, ..., degree-1}; images()[i] is the image of point i.
///
/// Products follow the "apply left operand first" convention, so that
/// evaluating a word left to right is the same as composing its letters in
/// reading order.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) {
        throw InvalidArgument("image list is not a bijection");
      }
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    if (degree == 0 || degree > kMaxDegree) {
      throw InvalidArgument("degree out of range: " + std::to_string(degree));
    }
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  // Trusted construction from images already known to be a bijection.
  static Permutation from_images_unchecked(std::span<const Point> images) {
    Permutation p;
    p.images_.assign(images.begin(), images.end());
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  std::size_t moved_points() const noexcept {
    std::size_t moved = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      moved += images_[i] != i;
    }
    return moved;
  }

  // Nontrivial cycles, each starting at its smallest point, ordered by that
  // point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> result;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      std::vector<Point> cycle;
      for (std::size_t p = start; !seen[p]; p = images_[p]) {
        seen[p] = true;
        cycle.push_back(static_cast<Point>(p));
      }
      result.push_back(std::move(cycle));
    }
    return result;
  }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (const auto& c : cycles()) result = std::lcm(result, c.size());
    return result;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// p then q: result[i] = q[p[i]].
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) +
                          " vs " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[i]];
  return Permutation::from_images_unchecked(images);
}

inline Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[p[i]] = static_cast<Point>(i);
  }
  return Permutation::from_images_unchecked(images);
}

/// Parses disjoint cycles of 1-based points, e.g. "(1 2)(3 4)" or
/// "(1,2,3)". "()" and "id" denote the identity; fixed points may be omitted.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation id = Permutation::identity(degree);
  std::vector<Point> images(id.images().begin(), id.images().end());
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };

  skip_space();
  if (pos == text.size()) throw ParseError("empty permutation", pos);
  if (text.substr(pos, 2) == "id") {
    pos += 2;
    skip_space();
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    return id;
  }

  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<Point> cycle;
    bool closed = false;
    while (pos < text.size()) {
      char ch = text[pos];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        ++pos;
      } else if (ch == ')') {
        ++pos;
        closed = true;
        break;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos;
        std::size_t value = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
          if (value > degree) break;
          ++pos;
        }
        if (value == 0 || value > degree) {
          throw ParseError("point " + std::string(text.substr(start, pos - start + 1)) +
                               " outside 1.." + std::to_string(degree),
                           start);
        }
        if (used[value - 1]) {
          throw ParseError("repeated point " + std::to_string(value), start);
        }
        used[value - 1] = true;
        cycle.push_back(static_cast<Point>(value - 1));
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", pos);
      }
    }
    if (!closed) throw ParseError("unclosed '('", pos);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation::from_images_unchecked(images);
}

/// Inverse of parse_cycles: 1-based, space separated, "()" for the identity.
inline std::string print_cycles(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

}  // namespace palinwidth
