#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "errors.hpp"
#include "group_table.hpp"
#include "relations.hpp"
#include "word.hpp"

namespace palinwidth {

enum class SeedKind : std::uint8_t { kWrapped, kEmpty, kLetter };

/// Element-level palindromes: the least set containing the identity and
/// every letter that is closed under m -> l m l.
struct PalindromeData {
  struct Link {
    SeedKind kind = SeedKind::kWrapped;
    std::uint32_t letter_row = GroupTable::kNoLetter;  // wrap letter or seed letter
    ElementIndex parent = GroupTable::kIdentity;       // only for kWrapped
  };

  ElementSet members;
  std::vector<Link> links;               // indexed by element; valid for members
  std::vector<ElementIndex> discovery;   // members in BFS order

  std::size_t size() const { return discovery.size(); }
  bool contains(ElementIndex g) const { return members.contains(g); }
};

inline PalindromeData palindrome_set(const GroupTable& table) {
  PalindromeData data;
  data.members = table.empty_set();
  data.links.resize(table.order());

  auto add = [&](ElementIndex e, PalindromeData::Link link) {
    if (!data.members.insert(e)) return;
    data.links[e] = link;
    data.discovery.push_back(e);
  };

  add(GroupTable::kIdentity, {SeedKind::kEmpty, GroupTable::kNoLetter, GroupTable::kIdentity});
  for (std::uint32_t row = 0; row < table.letter_count(); ++row) {
    add(table.letter_element(row), {SeedKind::kLetter, row, GroupTable::kIdentity});
  }
  for (std::size_t q = 0; q < data.discovery.size(); ++q) {
    ElementIndex m = data.discovery[q];
    for (std::uint32_t row = 0; row < table.letter_count(); ++row) {
      ElementIndex lm = table.multiply(table.letter_element(row), m);
      add(table.transition(lm, row), {SeedKind::kWrapped, row, m});
    }
  }
  return data;
}

inline PalindromeData palindrome_set(const GeneratingSet& gens, const GroupTable& table) {
  check_alphabet(gens, table);
  return palindrome_set(table);
}

/// A palindromic word evaluating to g, rebuilt from the wrap links.
inline Word palindrome_witness(ElementIndex g, const PalindromeData& data,
                               const GroupTable& table) {
  if (g >= data.links.size() || !data.contains(g)) {
    throw InvalidArgument("not a palindrome");
  }
  std::vector<Letter> outer;
  ElementIndex cur = g;
  while (data.links[cur].kind == SeedKind::kWrapped) {
    outer.push_back(table.letters()[data.links[cur].letter_row]);
    cur = data.links[cur].parent;
  }
  Word w(outer);
  if (data.links[cur].kind == SeedKind::kLetter) {
    w.letters.push_back(table.letters()[data.links[cur].letter_row]);
  }
  w.letters.insert(w.letters.end(), outer.rbegin(), outer.rend());
  return w;
}

/// Layered product search W_0 = {e}, W_{i+1} = W_i * P.
struct WidthReport {
  struct Link {
    ElementIndex previous = GroupTable::kIdentity;
    ElementIndex factor = GroupTable::kIdentity;
  };

  std::uint32_t width = 0;
  std::vector<std::size_t> layer_sizes;  // |W_0|, |W_1|, ... (cumulative)
  std::vector<std::uint32_t> layer;      // per element: first i with g in W_i
  std::vector<Link> links;               // per element; unused at the identity
  bool complete = true;
};

/// Layered product BFS of {e} by `factors`. Frontier and factors are scanned
/// in increasing index order; the first product reaching an element supplies
/// its link. If the factors do not generate, the search stops at the
/// subgroup they reach and `complete` is false.
inline WidthReport layered_product(const std::vector<ElementIndex>& factors,
                                   const GroupTable& table) {
  WidthReport r;
  r.layer.assign(table.order(), ~std::uint32_t{0});
  r.links.resize(table.order());
  r.layer[GroupTable::kIdentity] = 0;
  r.layer_sizes.push_back(1);
  std::size_t reached = 1;
  std::vector<ElementIndex> frontier{GroupTable::kIdentity};
  while (reached < table.order()) {
    std::vector<ElementIndex> next;
    const auto depth = static_cast<std::uint32_t>(r.layer_sizes.size());
    for (ElementIndex w : frontier) {
      for (ElementIndex p : factors) {
        ElementIndex x = table.multiply(w, p);
        if (r.layer[x] != ~std::uint32_t{0}) continue;
        r.layer[x] = depth;
        r.links[x] = {w, p};
        next.push_back(x);
      }
    }
    if (next.empty()) break;
    reached += next.size();
    r.layer_sizes.push_back(reached);
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  r.width = static_cast<std::uint32_t>(r.layer_sizes.size() - 1);
  r.complete = reached == table.order();
  return r;
}

inline WidthReport palindromic_width(const PalindromeData& data, const GroupTable& table) {
  return layered_product(data.members.elements(), table);
}

inline WidthReport palindromic_width(const GeneratingSet& gens, const GroupTable& table) {
  return palindromic_width(palindrome_set(gens, table), table);
}

inline std::uint32_t element_width(ElementIndex g, const WidthReport& report) {
  return report.layer.at(g);
}

/// Palindromic factors p_1 ... p_k with g = p_1 * ... * p_k and k minimal.
inline std::vector<ElementIndex> factorization(ElementIndex g, const WidthReport& report) {
  std::vector<ElementIndex> factors;
  while (g != GroupTable::kIdentity) {
    factors.push_back(report.links[g].factor);
    g = report.links[g].previous;
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

// Value of reverse(w) * w.
inline ElementIndex reverse_square(const Word& w, const GroupTable& table) {
  return evaluate(reverse_word(w) * w, table);
}

struct NSubgroup {
  ElementSet members;
  std::size_t relations_scanned = 0;
  // True when the relation cap admitted every Schreier relator.
  bool exact = false;
};

/// Subgroup generated by { reverse(w) w : w a relation of length <= cap },
/// checked normal before returning.
inline NSubgroup n_subgroup_detailed(const GroupTable& table, std::size_t max_relation_len) {
  if (max_relation_len < 2) throw InvalidArgument("max_relation_len must be at least 2");
  RelationStream stream(table, max_relation_len);
  ElementSet values = table.empty_set();
  values.insert(GroupTable::kIdentity);
  for (const Word& w : stream.all()) values.insert(reverse_square(w, table));
  NSubgroup n{subgroup_generated(values, table), stream.all().size(),
              stream.covers_schreier()};
  if (!is_normal(n.members, table)) {
    throw InvariantViolation("reverse-square subgroup is not normal");
  }
  return n;
}

inline ElementSet n_subgroup(const GeneratingSet& gens, const GroupTable& table,
                             std::size_t max_relation_len = kDefaultMaxRelationLen) {
  check_alphabet(gens, table);
  return n_subgroup_detailed(table, max_relation_len).members;
}

struct PropNormalReport {
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool inconclusive = false;  // no relations within the cap
};

/// Samples relations s, t and elements g, and checks as element identities:
///   (rev t)t * (rev s)s == rev(st) st
///   g^-1 (rev t)t g     == (rev u) u  with u = rev(c) t rev(c^-1), c a word for g
/// plus that u is itself a relation. Three checks per sample.
inline PropNormalReport verify_prop_normal(const GroupTable& table, std::size_t sample_count,
                                           std::uint64_t seed,
                                           std::size_t max_relation_len = kDefaultMaxRelationLen) {
  PropNormalReport report;
  RelationStream stream(table, max_relation_len);
  const auto& rels = stream.all();
  if (rels.empty()) {
    report.inconclusive = true;
    return report;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_rel(0, rels.size() - 1);
  std::uniform_int_distribution<ElementIndex> pick_elem(
      0, static_cast<ElementIndex>(table.order() - 1));
  auto check = [&](bool ok) {
    ++report.checks;
    report.failures += !ok;
  };
  for (std::size_t i = 0; i < sample_count; ++i) {
    const Word& s = rels[pick_rel(rng)];
    const Word& t = rels[pick_rel(rng)];
    ElementIndex g = pick_elem(rng);
    ++report.samples;

    ElementIndex lhs = table.multiply(reverse_square(t, table), reverse_square(s, table));
    check(lhs == reverse_square(s * t, table));

    Word c = canonical_word(g, table);
    Word u = reverse_word(c) * t * reverse_word(invert_word(c));
    ElementIndex conj = table.multiply(table.multiply(table.inverse(g), reverse_square(t, table)), g);
    check(conj == reverse_square(u, table));
    check(evaluate(u, table) == GroupTable::kIdentity);
  }
  return report;
}

inline PropNormalReport verify_prop_normal(const GeneratingSet& gens, const GroupTable& table,
                                           std::size_t sample_count, std::uint64_t seed = 0,
                                           std::size_t max_relation_len = kDefaultMaxRelationLen) {
  check_alphabet(gens, table);
  return verify_prop_normal(table, sample_count, seed, max_relation_len);
}

/// Whether g w g^-1 lies in P*P for all g in G and w in P. The conjugates of
/// P are the union of the classes of its members; each one outside P is
/// tested for a factorization p * (p^-1 y) inside P.
inline bool conjugates_in_p2(const PalindromeData& data, const GroupTable& table) {
  ElementSet conjugates = table.empty_set();
  for (ElementIndex w : data.discovery) {
    if (!conjugates.contains(w)) conjugates |= conjugacy_class(w, table);
  }
  const auto& p = data.discovery;
  std::vector<ElementIndex> p_inverse(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) p_inverse[i] = table.inverse(p[i]);
  bool ok = true;
  conjugates.for_each([&](ElementIndex y) {
    if (!ok || data.contains(y)) return;
    bool found = false;
    for (std::size_t i = 0; i < p.size() && !found; ++i) {
      found = data.contains(table.multiply(p_inverse[i], y));
    }
    ok = found;
  });
  return ok;
}

class ProperSubgroupError : public InvalidArgument {
 public:
  explicit ProperSubgroupError(std::size_t subgroup_order)
      : InvalidArgument("proper subgroup: class generates a subgroup of order " +
                        std::to_string(subgroup_order)),
        subgroup_order_(subgroup_order) {}
  std::size_t subgroup_order() const noexcept { return subgroup_order_; }

 private:
  std::size_t subgroup_order_;
};

/// Least m with (C u {e})^m = G.
inline std::uint32_t covering_number(const ElementSet& class_set, const GroupTable& table) {
  ElementSet gen = subgroup_generated(class_set, table);
  if (!gen.full()) throw ProperSubgroupError(gen.count());
  ElementSet with_identity = class_set;
  with_identity.insert(GroupTable::kIdentity);
  return layered_product(with_identity.elements(), table).width;
}

/// One more than the coset bound of a subgroup made of single palindromes.
inline std::uint32_t width_upper_bound_via_subgroup(const ElementSet& sub,
                                                    const PalindromeData& data,
                                                    const GroupTable& table) {
  if (!sub.is_subset_of(data.members)) throw InvalidArgument("subgroup not palindromic");
  return coset_rep_bound(sub, table) + 1;
}

/// Support-size lower bound for alphabets made of one class of involutions:
/// every palindrome is then conjugate to a generator and moves exactly as
/// many points, so g needs at least ceil(moved(g) / moved(generator)) of them.
class InvolutionBound {
 public:
  InvolutionBound(const GroupTable& table) : table_(table) {
    const auto& gens = table.generators();
    for (const auto& g : gens) {
      if (g.order() != 2) throw InvalidArgument("bound inapplicable: generator is not an involution");
    }
    ElementSet cls = conjugacy_class(table.index_of(gens.front()), table);
    for (const auto& g : gens) {
      if (!cls.contains(table.index_of(g))) {
        throw InvalidArgument("bound inapplicable: generators span several classes");
      }
    }
    support_ = gens.front().moved_points();
  }

  std::uint32_t operator()(ElementIndex g) const {
    std::size_t moved = table_.element(g).moved_points();
    return static_cast<std::uint32_t>((moved + support_ - 1) / support_);
  }

  std::size_t generator_support() const noexcept { return support_; }

 private:
  const GroupTable& table_;
  std::size_t support_ = 1;
};

inline std::uint32_t involution_lower_bound(ElementIndex g, const GeneratingSet& gens,
                                            const GroupTable& table) {
  check_alphabet(gens, table);
  return InvolutionBound(table)(g);
}

}  // namespace palinwidth
