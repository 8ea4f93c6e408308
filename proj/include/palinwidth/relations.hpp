#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "group_table.hpp"
#include "word.hpp"

namespace palinwidth {

inline void check_alphabet(const GeneratingSet& gens, const GroupTable& table) {
  if (gens.size() != table.generator_count()) {
    throw InvalidArgument("generating set has " + std::to_string(gens.size()) +
                          " labels but the table was built from " +
                          std::to_string(table.generator_count()) + " generators");
  }
}

/// Element index of the word, folding transitions left to right from the
/// identity.
inline ElementIndex evaluate(const Word& w, const GroupTable& table) {
  ElementIndex e = GroupTable::kIdentity;
  for (const Letter& l : w.letters) e = table.transition(e, table.letter_row(l));
  return e;
}

inline ElementIndex evaluate(const Word& w, const GeneratingSet& gens,
                             const GroupTable& table) {
  check_alphabet(gens, table);
  return evaluate(w, table);
}

/// Shortest word for e read off the BFS spanning tree.
inline Word canonical_word(ElementIndex e, const GroupTable& table) {
  Word w;
  w.letters.reserve(table.depth(e));
  while (e != GroupTable::kIdentity) {
    auto link = table.parent(e);
    w.letters.push_back(table.letters()[link.letter]);
    e = link.predecessor;
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

/// Rewrites x^-1 as x for generators that are their own inverse. Leaves the
/// value of both the word and its reversal unchanged.
inline Word normalize_involutions(Word w, const GroupTable& table) {
  for (Letter& l : w.letters) {
    if (l.sign < 0 && table.is_self_inverse(l.gen)) l.sign = 1;
  }
  return w;
}

inline constexpr std::size_t kDefaultMaxRelationLen = 12;
inline constexpr std::size_t kDefaultExhaustiveBudget = std::size_t{1} << 21;

/// Freely reduced nonempty relations of length at most max_len, shortlex
/// ordered without duplicates.
///
/// Two sources feed the stream. Every reduced relation up to an exhaustive
/// length is found by depth-first search over the table alphabet; that
/// length is the largest one whose word count fits the budget. Beyond it,
/// the Schreier generators c(u) l c(u l)^-1 of the BFS spanning tree are
/// added. These generate the full relation subgroup, so once the cap admits
/// all of them (covers_schreier()) anything derived from them is exact.
///
/// Letters are drawn from the table alphabet: generators that are their own
/// inverse only occur with positive sign.
class RelationStream {
 public:
  RelationStream(const GroupTable& table, std::size_t max_len,
                 std::size_t exhaustive_budget = kDefaultExhaustiveBudget) {
    if (max_len < 1) throw InvalidArgument("max_len must be at least 1");
    exhaustive_len_ = exhaustive_length(table.letter_count(), max_len, exhaustive_budget);
    collect_exhaustive(table);
    collect_schreier(table, max_len);
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  }

  std::optional<Word> next() {
    if (pos_ >= words_.size()) return std::nullopt;
    return words_[pos_++];
  }

  void restart() noexcept { pos_ = 0; }

  const std::vector<Word>& all() const noexcept { return words_; }
  std::size_t exhaustive_len() const noexcept { return exhaustive_len_; }
  bool covers_schreier() const noexcept { return covers_schreier_; }
  std::size_t longest_schreier() const noexcept { return longest_schreier_; }

 private:
  static std::size_t exhaustive_length(std::size_t letters, std::size_t max_len,
                                       std::size_t budget) {
    std::size_t len = 0;
    std::size_t level = 1;
    std::size_t total = 0;
    while (len < max_len) {
      if (level > budget / std::max<std::size_t>(letters, 1)) break;
      level *= letters;
      if (total + level > budget) break;
      total += level;
      ++len;
    }
    return len;
  }

  void collect_exhaustive(const GroupTable& table) {
    if (exhaustive_len_ == 0) return;
    const auto letters = table.letters();
    std::vector<Letter> prefix;
    std::vector<ElementIndex> values{GroupTable::kIdentity};
    // Iterative DFS; choice[d] is the next letter to try at depth d.
    std::vector<std::uint32_t> choice{0};
    while (!choice.empty()) {
      std::size_t depth = prefix.size();
      std::uint32_t& c = choice.back();
      if (c >= letters.size() || depth >= exhaustive_len_) {
        choice.pop_back();
        if (!prefix.empty()) {
          prefix.pop_back();
          values.pop_back();
        }
        continue;
      }
      Letter l = letters[c++];
      if (!prefix.empty() && prefix.back() == l.inverted()) continue;
      prefix.push_back(l);
      values.push_back(table.transition(values.back(), c - 1));
      if (values.back() == GroupTable::kIdentity) words_.emplace_back(prefix);
      choice.push_back(0);
    }
  }

  void collect_schreier(const GroupTable& table, std::size_t max_len) {
    std::vector<Word> tree(table.order());
    for (ElementIndex u = 0; u < table.order(); ++u) tree[u] = canonical_word(u, table);
    for (ElementIndex u = 0; u < table.order(); ++u) {
      for (std::uint32_t row = 0; row < table.letter_count(); ++row) {
        const Letter l = table.letters()[row];
        Word w = tree[u];
        w.letters.push_back(l);
        w = free_reduce(w * invert_word(tree[table.transition(u, row)]));
        if (w.empty()) continue;
        longest_schreier_ = std::max(longest_schreier_, w.size());
        if (w.size() > max_len) {
          covers_schreier_ = false;
          continue;
        }
        words_.push_back(normalize_involutions(std::move(w), table));
      }
    }
  }

  std::vector<Word> words_;
  std::size_t pos_ = 0;
  std::size_t exhaustive_len_ = 0;
  std::size_t longest_schreier_ = 0;
  bool covers_schreier_ = true;
};

inline std::vector<Word> enumerate_relations(const GeneratingSet& gens,
                                             const GroupTable& table,
                                             std::size_t max_len) {
  check_alphabet(gens, table);
  return RelationStream(table, max_len).all();
}

}  // namespace palinwidth
