#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace palinwidth {

/// A generator or its formal inverse.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverted() const noexcept {
    return Letter{gen, static_cast<std::int8_t>(-sign)};
  }

  friend bool operator==(const Letter&, const Letter&) = default;

  // Generator index first, positive before negative.
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

/// A formal product of letters. Words are never reduced implicitly.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

  // Shortlex: length first, then letterwise.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end());
  }
};

inline Word operator*(const Word& u, const Word& v) {
  Word w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

inline Word reverse_word(const Word& w) {
  return Word(std::vector<Letter>(w.letters.rbegin(), w.letters.rend()));
}

inline Word invert_word(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(it->inverted());
  }
  return out;
}

inline Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (const Letter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == l.inverted()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

inline bool is_palindrome(const Word& w) {
  return std::equal(w.letters.begin(), w.letters.begin() + w.size() / 2,
                    w.letters.rbegin());
}

/// Labelled generators of a permutation group; labels are the word alphabet.
struct GeneratingSet {
  std::vector<std::string> labels;
  std::vector<Permutation> perms;
  std::size_t degree = 0;

  std::size_t size() const noexcept { return perms.size(); }

  void add(std::string label, Permutation perm) {
    if (perm.degree() != degree) {
      throw InvalidArgument("generator '" + label + "' has degree " +
                            std::to_string(perm.degree()) + ", expected " +
                            std::to_string(degree));
    }
    if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
      throw InvalidArgument("duplicate generator label '" + label + "'");
    }
    labels.push_back(std::move(label));
    perms.push_back(std::move(perm));
  }

  std::ptrdiff_t find_label(std::string_view label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    return it == labels.end() ? -1 : it - labels.begin();
  }

  // `base` if unused, otherwise the first free `base<k>` for k = 1, 2, ...
  std::string fresh_label(const std::string& base) const {
    if (find_label(base) < 0) return base;
    for (std::size_t k = 1;; ++k) {
      std::string candidate = base + std::to_string(k);
      if (find_label(candidate) < 0) return candidate;
    }
  }
};

/// Renders a word as whitespace-separated labels with "^-1" on inverses.
inline std::string format_word(const Word& w, const GeneratingSet& gens) {
  if (w.empty()) return "";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w.letters[i];
    if (l.gen >= gens.size()) {
      throw InvalidArgument("letter outside alphabet");
    }
    if (i) out += ' ';
    out += gens.labels[l.gen];
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

inline Word parse_word(std::string_view text, const GeneratingSet& gens) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '^') {
      ++pos;
    }
    std::string_view label = text.substr(start, pos - start);
    std::int8_t sign = 1;
    if (pos < text.size() && text[pos] == '^') {
      if (text.substr(pos, 3) != "^-1") {
        throw ParseError("expected '^-1'", pos);
      }
      sign = -1;
      pos += 3;
    }
    auto idx = gens.find_label(label);
    if (idx < 0) {
      throw ParseError("unknown generator '" + std::string(label) + "'", start);
    }
    w.letters.push_back(Letter{static_cast<std::uint32_t>(idx), sign});
  }
  return w;
}

}  // namespace palinwidth
