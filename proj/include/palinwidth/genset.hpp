#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group_table.hpp"
#include "permutation.hpp"
#include "relations.hpp"
#include "word.hpp"

namespace palinwidth {

/// A generating set together with the table it generates.
struct GroupInstance {
  std::string name;
  GeneratingSet gens;
  GroupTable table;
};

inline GroupInstance make_instance(std::string name, GeneratingSet gens,
                                   std::size_t max_order = kDefaultMaxOrder) {
  GroupTable table = closure(gens, max_order);
  return GroupInstance{std::move(name), std::move(gens), std::move(table)};
}

/// Lowest index pair (i, j), i < j, of generators that do not commute.
inline std::optional<std::pair<std::size_t, std::size_t>> find_noncommuting_pair(
    const GeneratingSet& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (compose(gens.perms[i], gens.perms[j]) != compose(gens.perms[j], gens.perms[i])) {
        return std::pair{i, j};
      }
    }
  }
  return std::nullopt;
}

/// Generating set with (at most one extra generator) plus a relation q whose
/// reversal is not a relation.
struct AugmentationResult {
  GeneratingSet gens_out;
  std::optional<std::string> added;
  std::optional<Word> witness_relation;  // nullopt: none found within cap
  std::optional<GroupTable> rebuilt_table;  // set when a generator was added

  const GroupTable& table_or(const GroupTable& original) const {
    return rebuilt_table ? *rebuilt_table : original;
  }
};

/// First relation in shortlex order whose reversal is not a relation.
inline std::optional<Word> find_irreversible_relation(const GroupTable& table,
                                                      std::size_t max_relation_len) {
  RelationStream stream(table, max_relation_len);
  while (auto q = stream.next()) {
    if (evaluate(reverse_word(*q), table) != GroupTable::kIdentity) return q;
  }
  return std::nullopt;
}

/// Keeps the generators if an existing relation already reverses to a
/// non-relation; otherwise adjoins c = x y for the first non-commuting pair
/// (x, y) and searches again over the extended alphabet.
inline AugmentationResult lemma_augment(const GeneratingSet& gens, const GroupTable& table,
                                        std::size_t max_relation_len = kDefaultMaxRelationLen) {
  check_alphabet(gens, table);
  auto pair = find_noncommuting_pair(gens);
  if (!pair) throw InvalidArgument("lemma inapplicable: generators commute (abelian group)");

  AugmentationResult result;
  result.gens_out = gens;
  if ((result.witness_relation = find_irreversible_relation(table, max_relation_len))) {
    return result;
  }

  std::string label = gens.fresh_label("c");
  result.gens_out.add(label, compose(gens.perms[pair->first], gens.perms[pair->second]));
  result.added = label;
  result.rebuilt_table = closure(result.gens_out, table.order());
  result.witness_relation = find_irreversible_relation(*result.rebuilt_table, max_relation_len);
  return result;
}

/// The conjugacy class of the first involution (in index order), one label
/// per class member. Requires a simple group.
inline GeneratingSet involution_class_genset(const GroupTable& table) {
  if (!is_simple(table)) throw InvalidArgument("not simple or not generating");
  std::optional<ElementIndex> involution;
  for (ElementIndex g = 1; g < table.order() && !involution; ++g) {
    if (table.element_order(g) == 2) involution = g;
  }
  if (!involution) throw InvalidArgument("no involution");
  ElementSet cls = conjugacy_class(*involution, table);
  if (!normal_closure(cls, table).full()) {
    throw InvalidArgument("not simple or not generating");
  }
  GeneratingSet gens;
  gens.degree = table.degree();
  std::size_t k = 0;
  cls.for_each([&](ElementIndex e) { gens.add("x" + std::to_string(++k), table.element(e)); });
  return gens;
}

namespace detail {

inline Permutation cycle_perm(std::size_t degree, std::size_t first, std::size_t last) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = first; i < last; ++i) images[i] = static_cast<Point>(i + 1);
  images[last] = static_cast<Point>(first);
  return Permutation(std::move(images));
}

inline std::optional<std::size_t> parse_uint(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  std::size_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

inline std::size_t modpow(std::size_t b, std::size_t e, std::size_t m) {
  std::size_t r = 1;
  for (b %= m; e; e >>= 1, b = b * b % m) {
    if (e & 1) r = r * b % m;
  }
  return r;
}

}  // namespace detail

/// Parsed catalog name: family letter plus parameter.
struct CatalogSpec {
  enum class Family { kAlternating, kSymmetric, kPsl2, kDihedral, kCyclic };
  Family family;
  std::size_t param;  // n for A/S/C, p for PSL(2,p), group order for D
};

inline CatalogSpec parse_catalog_name(std::string_view name) {
  using F = CatalogSpec::Family;
  auto fail = [&]() -> CatalogSpec {
    throw InvalidArgument("unknown catalog group '" + std::string(name) + "'");
  };
  if (name.starts_with("PSL(2,") && name.ends_with(")")) {
    auto p = detail::parse_uint(name.substr(6, name.size() - 7));
    if (!p || (*p != 5 && *p != 7 && *p != 11 && *p != 13)) return fail();
    return {F::kPsl2, *p};
  }
  if (name.size() < 2) return fail();
  std::string_view digits = name.substr(1);
  if (digits.starts_with("_")) digits.remove_prefix(1);
  auto n = detail::parse_uint(digits);
  if (!n) return fail();
  switch (name.front()) {
    case 'A':
      if (*n < 3 || *n > 10) return fail();
      return {F::kAlternating, *n};
    case 'S':
      if (*n < 2 || *n > 10) return fail();
      return {F::kSymmetric, *n};
    case 'D':
      if (*n < 6 || *n % 2 != 0 || *n > 2000) return fail();
      return {F::kDihedral, *n};
    case 'C':
      if (*n < 1 || *n > 5000) return fail();
      return {F::kCyclic, *n};
    default:
      return fail();
  }
}

/// Catalog groups with their standard generators:
///   An: (1 2 3) and (1 2 ... n) for odd n, (2 3 ... n) for even n
///   Sn: (1 2) and (1 2 ... n)
///   PSL(2,p): x -> x+1 and x -> -1/x on the projective line, infinity last
///   D2m: rotation (1 ... m) and reflection i -> -i (mod m)
///   Cn: (1 2 ... n)
inline GeneratingSet catalog_genset(std::string_view name) {
  using F = CatalogSpec::Family;
  const CatalogSpec spec = parse_catalog_name(name);
  GeneratingSet gens;
  const std::size_t n = spec.param;
  switch (spec.family) {
    case F::kAlternating:
      gens.degree = n;
      gens.add("x", detail::cycle_perm(n, 0, 2));
      if (n > 3) gens.add("y", detail::cycle_perm(n, n % 2 ? 0 : 1, n - 1));
      break;
    case F::kSymmetric:
      gens.degree = n;
      gens.add("x", detail::cycle_perm(n, 0, 1));
      if (n > 2) gens.add("y", detail::cycle_perm(n, 0, n - 1));
      break;
    case F::kPsl2: {
      const std::size_t p = n;
      gens.degree = p + 1;
      std::vector<Point> t(p + 1), s(p + 1);
      for (std::size_t x = 0; x < p; ++x) {
        t[x] = static_cast<Point>((x + 1) % p);
        s[x] = x == 0 ? static_cast<Point>(p)
                      : static_cast<Point>((p - detail::modpow(x, p - 2, p)) % p);
      }
      t[p] = static_cast<Point>(p);
      s[p] = 0;
      gens.add("t", Permutation(std::move(t)));
      gens.add("s", Permutation(std::move(s)));
      break;
    }
    case F::kDihedral: {
      const std::size_t m = n / 2;
      gens.degree = m;
      std::vector<Point> refl(m);
      for (std::size_t i = 0; i < m; ++i) refl[i] = static_cast<Point>((m - i) % m);
      gens.add("r", detail::cycle_perm(m, 0, m - 1));
      gens.add("s", Permutation(std::move(refl)));
      break;
    }
    case F::kCyclic:
      gens.degree = n;
      gens.add("x", n == 1 ? Permutation::identity(1) : detail::cycle_perm(n, 0, n - 1));
      break;
  }
  return gens;
}

inline GroupInstance catalog_group(std::string_view name,
                                   std::size_t max_order = kDefaultMaxOrder) {
  return make_instance(std::string(name), catalog_genset(name), max_order);
}

/// A_n generated by the conjugacy class of (1 2)(3 4).
inline GroupInstance sigma_class_genset(std::size_t n, std::size_t max_order = kDefaultMaxOrder) {
  if (n < 5) throw InvalidArgument("sigma-class generating set needs n >= 5");
  if (n > 10) throw InvalidArgument("sigma-class generating set supports n <= 10");
  GroupInstance an = catalog_group("A" + std::to_string(n), max_order);
  ElementIndex sigma = an.table.index_of(parse_cycles("(1 2)(3 4)", n));
  ElementSet cls = conjugacy_class(sigma, an.table);
  GeneratingSet gens;
  gens.degree = n;
  std::size_t k = 0;
  cls.for_each([&](ElementIndex e) { gens.add("s" + std::to_string(++k), an.table.element(e)); });
  return make_instance("A" + std::to_string(n), std::move(gens), max_order);
}

}  // namespace palinwidth
