#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace palinwidth {

inline constexpr std::size_t kDefaultMaxOrder = 2'000'000;

namespace detail {

inline std::uint64_t hash_points(std::span<const Point> points) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point p : points) {
    h ^= p;
    h *= 0x100000001b3ull;
  }
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 32;
  return h;
}

inline std::uint64_t next_table_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

// Open-addressing index from permutation images to element index. Keys live
// in the owning table's flat point store.
class PermIndex {
 public:
  static constexpr ElementIndex kEmpty = ~ElementIndex{0};

  std::optional<ElementIndex> find(std::span<const Point> key,
                                   const std::vector<Point>& store) const {
    if (slots_.empty()) return std::nullopt;
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash_points(key) & mask;; s = (s + 1) & mask) {
      ElementIndex idx = slots_[s];
      if (idx == kEmpty) return std::nullopt;
      if (std::memcmp(store.data() + std::size_t{idx} * key.size(), key.data(),
                      key.size() * sizeof(Point)) == 0) {
        return idx;
      }
    }
  }

  // idx must not already be present; its key is read from the store.
  void insert(ElementIndex idx, const std::vector<Point>& store,
              std::size_t degree) {
    if ((count_ + 1) * 2 > slots_.size()) grow(store, degree);
    place(idx, store, degree);
    ++count_;
  }

 private:
  void place(ElementIndex idx, const std::vector<Point>& store,
             std::size_t degree) {
    std::size_t mask = slots_.size() - 1;
    std::span<const Point> key(store.data() + std::size_t{idx} * degree, degree);
    std::size_t s = hash_points(key) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = idx;
  }

  void grow(const std::vector<Point>& store, std::size_t degree) {
    std::size_t capacity = slots_.empty() ? 64 : slots_.size() * 2;
    slots_.assign(capacity, kEmpty);
    for (ElementIndex i = 0; i < count_; ++i) place(i, store, degree);
  }

  std::vector<ElementIndex> slots_;
  std::size_t count_ = 0;
};

// Stack buffer for permutation images of small degree.
class Scratch {
 public:
  explicit Scratch(std::size_t n) : size_(n) {
    if (n > inline_.size()) heap_.resize(n);
  }
  Point* data() { return size_ > inline_.size() ? heap_.data() : inline_.data(); }
  std::span<const Point> view() {
    return {size_ > inline_.size() ? heap_.data() : inline_.data(), size_};
  }

 private:
  std::array<Point, 32> inline_{};
  std::vector<Point> heap_;
  std::size_t size_;
};

}  // namespace detail

/// The fully enumerated group generated by a list of permutations.
///
/// Elements are indexed densely in breadth-first order from the identity
/// (index 0), expanding each element by the letters in order. The letter
/// alphabet is each generator followed by its inverse; the inverse letter is
/// omitted for generators that are their own inverse. transition(e, l) is
/// the index of element e times letter l.
class GroupTable {
 public:
  static constexpr ElementIndex kIdentity = 0;
  static constexpr std::uint32_t kNoLetter = ~std::uint32_t{0};

  struct ParentLink {
    ElementIndex predecessor = kIdentity;
    std::uint32_t letter = kNoLetter;  // row index; kNoLetter at the identity
  };

  std::uint64_t id() const noexcept { return id_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return depth_.size(); }

  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t letter_count() const noexcept { return letters_.size(); }

  // Row used for a letter; the inverse of an involution shares its row.
  std::uint32_t letter_row(Letter l) const {
    if (l.gen >= generators_.size()) {
      throw InvalidArgument("letter generator " + std::to_string(l.gen) +
                            " outside alphabet of size " +
                            std::to_string(generators_.size()));
    }
    return l.sign > 0 ? positive_row_[l.gen] : negative_row_[l.gen];
  }

  bool is_self_inverse(std::uint32_t gen) const {
    return positive_row_[gen] == negative_row_[gen];
  }

  ElementIndex letter_element(std::uint32_t row) const {
    return transition(kIdentity, row);
  }

  ElementIndex transition(ElementIndex e, std::uint32_t row) const {
    return transitions_[std::size_t{e} * letters_.size() + row];
  }

  std::uint32_t depth(ElementIndex e) const { return depth_[e]; }
  ParentLink parent(ElementIndex e) const { return parent_[e]; }
  std::uint32_t diameter() const { return depth_.empty() ? 0 : depth_.back(); }

  std::span<const Point> images(ElementIndex e) const {
    return {points_.data() + std::size_t{e} * degree_, degree_};
  }

  Permutation element(ElementIndex e) const {
    return Permutation::from_images_unchecked(images(e));
  }

  std::optional<ElementIndex> find_images(std::span<const Point> images) const {
    if (images.size() != degree_) return std::nullopt;
    return index_.find(images, points_);
  }

  std::optional<ElementIndex> find(const Permutation& p) const {
    return find_images(p.images());
  }

  ElementIndex index_of(const Permutation& p) const {
    if (auto i = find(p)) return *i;
    throw InvalidArgument("permutation " + print_cycles(p) + " is not in the group");
  }

  /// a then b.
  ElementIndex multiply(ElementIndex a, ElementIndex b) const {
    detail::Scratch buf(degree_);
    Point* out = buf.data();
    auto pa = images(a);
    auto pb = images(b);
    for (std::size_t i = 0; i < degree_; ++i) out[i] = pb[pa[i]];
    return lookup(buf.view());
  }

  ElementIndex inverse(ElementIndex a) const {
    detail::Scratch buf(degree_);
    Point* out = buf.data();
    auto pa = images(a);
    for (std::size_t i = 0; i < degree_; ++i) out[pa[i]] = static_cast<Point>(i);
    return lookup(buf.view());
  }

  /// h g h^-1.
  ElementIndex conjugate(ElementIndex h, ElementIndex g) const {
    return multiply(multiply(h, g), inverse(h));
  }

  /// x^-1 g x for the generator with index gen.
  ElementIndex conjugate_by_generator(ElementIndex g, std::uint32_t gen) const {
    detail::Scratch buf(degree_);
    Point* out = buf.data();
    auto pg = images(g);
    const Permutation& x = generators_[gen];
    for (std::size_t i = 0; i < degree_; ++i) out[x[i]] = x[pg[i]];
    return lookup(buf.view());
  }

  std::uint64_t element_order(ElementIndex e) const { return element(e).order(); }

  ElementSet empty_set() const { return ElementSet(order(), id_); }

  ElementSet full_set() const {
    ElementSet s = empty_set();
    for (ElementIndex i = 0; i < order(); ++i) s.insert(i);
    return s;
  }

 private:
  friend GroupTable closure(std::span<const Permutation>, std::size_t);

  ElementIndex lookup(std::span<const Point> images) const {
    if (auto i = index_.find(images, points_)) return *i;
    throw InvariantViolation("product left the enumerated group");
  }

  std::uint64_t id_ = 0;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Letter> letters_;
  std::vector<std::uint32_t> positive_row_;
  std::vector<std::uint32_t> negative_row_;
  std::vector<Point> points_;
  std::vector<ElementIndex> transitions_;
  std::vector<std::uint32_t> depth_;
  std::vector<ParentLink> parent_;
  detail::PermIndex index_;
};

/// Enumerates <generators> by breadth-first search from the identity.
/// Throws CapacityError once more than max_order elements would be needed.
inline GroupTable closure(std::span<const Permutation> generators,
                          std::size_t max_order = kDefaultMaxOrder) {
  if (generators.empty()) throw InvalidArgument("empty generator list");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generators differ in degree");
  }
  if (max_order == 0) throw InvalidArgument("max_order must be positive");

  GroupTable t;
  t.id_ = detail::next_table_id();
  t.degree_ = degree;
  t.generators_.assign(generators.begin(), generators.end());

  std::vector<Permutation> letter_perms;
  for (std::uint32_t g = 0; g < generators.size(); ++g) {
    Permutation inv = inverse(generators[g]);
    t.positive_row_.push_back(static_cast<std::uint32_t>(t.letters_.size()));
    t.letters_.push_back(Letter{g, 1});
    letter_perms.push_back(generators[g]);
    if (inv == generators[g]) {
      t.negative_row_.push_back(t.positive_row_.back());
    } else {
      t.negative_row_.push_back(static_cast<std::uint32_t>(t.letters_.size()));
      t.letters_.push_back(Letter{g, -1});
      letter_perms.push_back(std::move(inv));
    }
  }
  const std::size_t nletters = t.letters_.size();

  auto add = [&](std::span<const Point> images, ElementIndex pred,
                 std::uint32_t letter, std::uint32_t depth) -> ElementIndex {
    if (t.depth_.size() >= max_order) throw CapacityError(max_order, t.depth_.size());
    auto idx = static_cast<ElementIndex>(t.depth_.size());
    t.points_.insert(t.points_.end(), images.begin(), images.end());
    t.depth_.push_back(depth);
    t.parent_.push_back({pred, letter});
    t.index_.insert(idx, t.points_, degree);
    return idx;
  };

  Permutation id = Permutation::identity(degree);
  add(id.images(), GroupTable::kIdentity, GroupTable::kNoLetter, 0);

  detail::Scratch buf(degree);
  for (ElementIndex cur = 0; cur < t.depth_.size(); ++cur) {
    for (std::uint32_t l = 0; l < nletters; ++l) {
      const Permutation& lp = letter_perms[l];
      Point* out = buf.data();
      const Point* src = t.points_.data() + std::size_t{cur} * degree;
      for (std::size_t i = 0; i < degree; ++i) out[i] = lp[src[i]];
      auto found = t.index_.find(buf.view(), t.points_);
      ElementIndex next =
          found ? *found : add(buf.view(), cur, l, t.depth_[cur] + 1);
      t.transitions_.push_back(next);
    }
  }
  return t;
}

inline GroupTable closure(const GeneratingSet& gens,
                          std::size_t max_order = kDefaultMaxOrder) {
  return closure(std::span<const Permutation>(gens.perms), max_order);
}

namespace detail {

// Incrementally grown subgroup; members stay closed under right
// multiplication by every generator added so far.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const GroupTable& table)
      : table_(table), members_(table.empty_set()) {
    members_.insert(GroupTable::kIdentity);
    list_.push_back(GroupTable::kIdentity);
  }

  bool add(ElementIndex s) {
    if (members_.contains(s)) return false;
    gens_.push_back(s);
    const std::size_t old_count = list_.size();
    for (std::size_t i = 0; i < old_count; ++i) push(table_.multiply(list_[i], s));
    for (std::size_t q = old_count; q < list_.size(); ++q) {
      for (ElementIndex g : gens_) push(table_.multiply(list_[q], g));
    }
    return true;
  }

  const ElementSet& members() const { return members_; }
  const std::vector<ElementIndex>& generators() const { return gens_; }
  std::size_t size() const { return list_.size(); }

 private:
  void push(ElementIndex x) {
    if (members_.insert(x)) list_.push_back(x);
  }

  const GroupTable& table_;
  ElementSet members_;
  std::vector<ElementIndex> list_;
  std::vector<ElementIndex> gens_;
};

}  // namespace detail

inline ElementSet subgroup_generated(const ElementSet& seed, const GroupTable& table) {
  detail::SubgroupBuilder b(table);
  seed.for_each([&](ElementIndex s) { b.add(s); });
  return b.members();
}

inline bool is_subgroup(const ElementSet& sub, const GroupTable& table) {
  if (!sub.contains(GroupTable::kIdentity)) return false;
  return subgroup_generated(sub, table) == sub;
}

/// { h g h^-1 : h in G }, found as the orbit of g under conjugation by the
/// generators.
inline ElementSet conjugacy_class(ElementIndex g, const GroupTable& table) {
  ElementSet cls = table.empty_set();
  std::vector<ElementIndex> queue{g};
  cls.insert(g);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::uint32_t x = 0; x < table.generator_count(); ++x) {
      ElementIndex c = table.conjugate_by_generator(queue[q], x);
      if (cls.insert(c)) queue.push_back(c);
    }
  }
  return cls;
}

/// Classes ordered by their smallest element index.
inline std::vector<ElementSet> conjugacy_classes(const GroupTable& table) {
  std::vector<ElementSet> classes;
  ElementSet covered = table.empty_set();
  for (ElementIndex g = 0; g < table.order(); ++g) {
    if (covered.contains(g)) continue;
    classes.push_back(conjugacy_class(g, table));
    covered |= classes.back();
  }
  return classes;
}

/// Smallest normal subgroup containing seed: alternate subgroup closure with
/// conjugating its generators by the group generators until nothing new.
inline ElementSet normal_closure(const ElementSet& seed, const GroupTable& table) {
  detail::SubgroupBuilder b(table);
  seed.for_each([&](ElementIndex s) { b.add(s); });
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    ElementIndex h = b.generators()[i];
    for (std::uint32_t x = 0; x < table.generator_count(); ++x) {
      b.add(table.conjugate_by_generator(h, x));
    }
  }
  return b.members();
}

inline bool is_normal(const ElementSet& sub, const GroupTable& table) {
  detail::SubgroupBuilder b(table);
  sub.for_each([&](ElementIndex s) { b.add(s); });
  if (!sub.contains(GroupTable::kIdentity) || !(b.members() == sub)) {
    throw InvalidArgument("not a subgroup");
  }
  for (ElementIndex h : b.generators()) {
    for (std::uint32_t x = 0; x < table.generator_count(); ++x) {
      if (!sub.contains(table.conjugate_by_generator(h, x))) return false;
    }
  }
  return true;
}

inline bool is_abelian(const GroupTable& table) {
  const auto& gens = table.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    }
  }
  return true;
}

/// True iff every nontrivial element has normal closure equal to the whole
/// group. The trivial group is not simple.
inline bool is_simple(const GroupTable& table) {
  if (table.order() < 2) return false;
  ElementSet covered = table.empty_set();
  covered.insert(GroupTable::kIdentity);
  for (ElementIndex g = 1; g < table.order(); ++g) {
    if (covered.contains(g)) continue;
    ElementSet seed = table.empty_set();
    seed.insert(g);
    if (!normal_closure(seed, table).full()) return false;
    covered |= conjugacy_class(g, table);
  }
  return true;
}

/// Max over left cosets gH of the shortest word length of a coset member.
inline std::uint32_t coset_rep_bound(const ElementSet& sub, const GroupTable& table) {
  if (!is_subgroup(sub, table)) throw InvalidArgument("not a subgroup");
  const auto members = sub.elements();
  ElementSet assigned = table.empty_set();
  std::uint32_t bound = 0;
  // Indices are in BFS order, so the first unassigned element of each coset
  // has minimal depth.
  for (ElementIndex g = 0; g < table.order(); ++g) {
    if (assigned.contains(g)) continue;
    bound = std::max(bound, table.depth(g));
    for (ElementIndex n : members) assigned.insert(table.multiply(g, n));
  }
  return bound;
}

}  // namespace palinwidth
