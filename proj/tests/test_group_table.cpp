#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace palinwidth;

namespace {

ElementSet singleton(const GroupTable& t, ElementIndex e) {
  ElementSet s = t.empty_set();
  s.insert(e);
  return s;
}

ElementSet set_of(const GroupTable& t, std::initializer_list<const char*> cycles) {
  ElementSet s = t.empty_set();
  for (const char* c : cycles) s.insert(t.index_of(parse_cycles(c, t.degree())));
  return s;
}

TEST(Closure, A5MatchesNaiveEnumeration) {
  auto gens = testutil::make_gens(5, {{"x", "(1 2 3 4 5)"}, {"y", "(1 2 3)"}});
  GroupTable t = closure(gens);
  EXPECT_EQ(t.order(), 60u);
  auto naive = oracle::naive_closure(testutil::to_oracle(gens));
  ASSERT_EQ(naive.size(), 60u);
  for (ElementIndex e = 0; e < t.order(); ++e) {
    EXPECT_TRUE(naive.count(testutil::to_oracle(t.element(e))));
  }
}

TEST(Closure, TrivialGroup) {
  std::vector<Permutation> gens{Permutation::identity(3)};
  GroupTable t = closure(gens);
  EXPECT_EQ(t.order(), 1u);
  EXPECT_EQ(t.letter_count(), 1u);
}

TEST(Closure, CapacityError) {
  std::vector<Permutation> gens{parse_cycles("(1 2)", 2)};
  try {
    closure(gens, 1);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.partial_count(), 1u);
  }
}

TEST(Closure, RejectsBadInput) {
  std::vector<Permutation> none;
  EXPECT_THROW(closure(none), InvalidArgument);
  std::vector<Permutation> mixed{Permutation::identity(3), Permutation::identity(4)};
  EXPECT_THROW(closure(mixed), InvalidArgument);
}

TEST(Closure, LetterAlphabetOmitsInvolutionInverses) {
  auto gens = testutil::make_gens(4, {{"x", "(1 2)"}, {"y", "(1 2 3 4)"}});
  GroupTable t = closure(gens);
  ASSERT_EQ(t.letter_count(), 3u);
  EXPECT_EQ(t.letter_row({0, -1}), t.letter_row({0, 1}));
  EXPECT_NE(t.letter_row({1, -1}), t.letter_row({1, 1}));
  EXPECT_THROW(t.letter_row({2, 1}), InvalidArgument);
}

TEST(Closure, TablesAreConsistent) {
  for (const char* name : {"S4", "A5", "PSL(2,7)", "D8", "C6"}) {
    auto g = catalog_group(name);
    const GroupTable& t = g.table;
    EXPECT_TRUE(t.element(0).is_identity());
    for (ElementIndex e = 0; e < t.order(); ++e) {
      for (std::uint32_t l = 0; l < t.letter_count(); ++l) {
        const Letter letter = t.letters()[l];
        Permutation lp = letter.sign > 0 ? t.generators()[letter.gen]
                                         : inverse(t.generators()[letter.gen]);
        EXPECT_EQ(t.element(t.transition(e, l)), compose(t.element(e), lp));
      }
      if (e != 0) {
        auto link = t.parent(e);
        EXPECT_EQ(t.transition(link.predecessor, link.letter), e);
        EXPECT_EQ(t.depth(e), t.depth(link.predecessor) + 1);
      }
    }
    // Each transition column permutes the index set.
    for (std::uint32_t l = 0; l < t.letter_count(); ++l) {
      std::set<ElementIndex> col;
      for (ElementIndex e = 0; e < t.order(); ++e) col.insert(t.transition(e, l));
      EXPECT_EQ(col.size(), t.order());
    }
    // Depths are shortest: no edge shortcuts them.
    for (ElementIndex e = 0; e < t.order(); ++e) {
      for (std::uint32_t l = 0; l < t.letter_count(); ++l) {
        EXPECT_LE(t.depth(t.transition(e, l)), t.depth(e) + 1);
      }
    }
  }
}

TEST(Closure, Deterministic) {
  auto a = catalog_group("PSL(2,11)");
  auto b = catalog_group("PSL(2,11)");
  ASSERT_EQ(a.table.order(), b.table.order());
  for (ElementIndex e = 0; e < a.table.order(); ++e) {
    ASSERT_EQ(a.table.element(e), b.table.element(e));
    for (std::uint32_t l = 0; l < a.table.letter_count(); ++l) {
      ASSERT_EQ(a.table.transition(e, l), b.table.transition(e, l));
    }
  }
}

TEST(Closure, GroupAxiomsOnSmallCatalog) {
  std::mt19937_64 rng(5);
  for (const char* name : {"C6", "D8", "S3", "S4", "A4", "A5", "PSL(2,7)", "D10", "C12"}) {
    auto g = catalog_group(name);
    const GroupTable& t = g.table;
    ASSERT_LE(t.order(), 200u);
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(t.order() - 1));
    for (int i = 0; i < 300; ++i) {
      ElementIndex a = pick(rng), b = pick(rng), c = pick(rng);
      EXPECT_EQ(t.multiply(t.multiply(a, b), c), t.multiply(a, t.multiply(b, c)));
    }
    for (ElementIndex a = 0; a < t.order(); ++a) {
      EXPECT_EQ(t.multiply(a, 0), a);
      EXPECT_EQ(t.multiply(0, a), a);
      EXPECT_EQ(t.multiply(a, t.inverse(a)), 0u);
    }
  }
}

TEST(ElementSetOps, RejectsForeignTable) {
  auto a = catalog_group("C6");
  auto b = catalog_group("C6");
  ElementSet x = a.table.full_set();
  ElementSet y = b.table.full_set();
  EXPECT_THROW(x |= y, InvalidArgument);
  EXPECT_THROW((void)(x == y), InvalidArgument);
}

TEST(ConjugacyClass, Basics) {
  auto a5 = catalog_group("A5");
  const GroupTable& t = a5.table;
  EXPECT_EQ(conjugacy_class(0, t).count(), 1u);

  ElementIndex sigma = t.index_of(parse_cycles("(1 2)(3 4)", 5));
  ElementSet cls = conjugacy_class(sigma, t);
  EXPECT_TRUE(cls.contains(sigma));
  std::size_t oracle_count = 0;
  for (ElementIndex e = 0; e < t.order(); ++e) {
    oracle_count += oracle::cycle_type(testutil::to_oracle(t.element(e))) == std::vector<int>{1, 2, 2};
  }
  EXPECT_EQ(oracle_count, 15u);
  EXPECT_EQ(cls.count(), oracle_count);
  cls.for_each([&](ElementIndex h) {
    for (std::uint32_t x = 0; x < t.generator_count(); ++x) {
      EXPECT_TRUE(cls.contains(t.conjugate_by_generator(h, x)));
    }
  });
  // Agrees with h g h^-1 over all h.
  ElementSet direct = t.empty_set();
  for (ElementIndex h = 0; h < t.order(); ++h) direct.insert(t.conjugate(h, sigma));
  EXPECT_EQ(direct, cls);
}

TEST(ConjugacyClass, PartitionAndDivisibility) {
  for (const char* name : {"S4", "A5", "PSL(2,7)", "D10", "A6"}) {
    auto g = catalog_group(name);
    auto classes = conjugacy_classes(g.table);
    std::size_t total = 0;
    ElementSet seen = g.table.empty_set();
    for (const auto& c : classes) {
      total += c.count();
      EXPECT_EQ(g.table.order() % c.count(), 0u);
      ElementSet overlap = seen;
      overlap &= c;
      EXPECT_TRUE(overlap.empty());
      seen |= c;
    }
    EXPECT_EQ(total, g.table.order());
  }
}

TEST(Subgroups, Generated) {
  auto s4 = catalog_group("S4");
  const GroupTable& t = s4.table;
  EXPECT_EQ(subgroup_generated(singleton(t, 0), t).count(), 1u);
  for (ElementIndex e = 0; e < t.order(); ++e) {
    EXPECT_EQ(subgroup_generated(singleton(t, e), t).count(), t.element_order(e));
  }
  ElementSet gens = t.empty_set();
  for (const auto& g : t.generators()) gens.insert(t.index_of(g));
  EXPECT_TRUE(subgroup_generated(gens, t).full());
}

TEST(Subgroups, NormalClosure) {
  auto a5 = catalog_group("A5");
  EXPECT_EQ(normal_closure(singleton(a5.table, 0), a5.table).count(), 1u);
  ElementIndex sigma = a5.table.index_of(parse_cycles("(1 2)(3 4)", 5));
  EXPECT_EQ(normal_closure(singleton(a5.table, sigma), a5.table).count(), 60u);

  auto s3 = catalog_group("S3");
  ElementIndex r = s3.table.index_of(parse_cycles("(1 2 3)", 3));
  ElementSet nc = normal_closure(singleton(s3.table, r), s3.table);
  EXPECT_EQ(nc, set_of(s3.table, {"()", "(1 2 3)", "(1 3 2)"}));

  // Klein four-group is normal in S4.
  auto s4 = catalog_group("S4");
  ElementIndex k = s4.table.index_of(parse_cycles("(1 2)(3 4)", 4));
  EXPECT_EQ(normal_closure(singleton(s4.table, k), s4.table).count(), 4u);
}

TEST(Subgroups, IsNormal) {
  auto s3 = catalog_group("S3");
  const GroupTable& t = s3.table;
  EXPECT_TRUE(is_normal(singleton(t, 0), t));
  EXPECT_TRUE(is_normal(set_of(t, {"()", "(1 2 3)", "(1 3 2)"}), t));
  EXPECT_FALSE(is_normal(set_of(t, {"()", "(1 2)"}), t));
  EXPECT_THROW(is_normal(set_of(t, {"()", "(1 2)", "(2 3)"}), t), InvalidArgument);

  // Oracle: conjugating (1 2) by (1 2 3) leaves {e, (1 2)}.
  Permutation c = parse_cycles("(1 2 3)", 3);
  Permutation conj = compose(compose(inverse(c), parse_cycles("(1 2)", 3)), c);
  EXPECT_NE(conj, parse_cycles("(1 2)", 3));
  EXPECT_FALSE(conj.is_identity());
}

TEST(Subgroups, IsSimple) {
  EXPECT_TRUE(is_simple(catalog_group("A5").table));
  EXPECT_FALSE(is_simple(catalog_group("S4").table));
  EXPECT_FALSE(is_simple(catalog_group("C4").table));
  EXPECT_TRUE(is_simple(catalog_group("C5").table));  // simple, but abelian
  EXPECT_TRUE(is_abelian(catalog_group("C5").table));
  EXPECT_FALSE(is_simple(catalog_group("C1").table));
}

TEST(Subgroups, SimplicityTable) {
  for (const char* name : {"A5", "A6", "A7", "A8", "PSL(2,5)", "PSL(2,7)", "PSL(2,11)", "PSL(2,13)"}) {
    EXPECT_TRUE(is_simple(catalog_group(name).table)) << name;
  }
  for (const char* name : {"S3", "S4", "S5", "S6", "D6", "D8", "D10", "C6", "C9", "A4"}) {
    EXPECT_FALSE(is_simple(catalog_group(name).table)) << name;
  }
  for (const char* name : {"C2", "C3", "C7"}) {
    auto g = catalog_group(name);
    EXPECT_TRUE(is_simple(g.table)) << name;
    EXPECT_TRUE(is_abelian(g.table)) << name;
  }
}

TEST(Subgroups, CosetRepBound) {
  auto s3 = catalog_group("S3");  // generators (1 2), (1 2 3)
  const GroupTable& t = s3.table;
  EXPECT_EQ(coset_rep_bound(t.full_set(), t), 0u);
  EXPECT_EQ(coset_rep_bound(singleton(t, 0), t), t.diameter());
  ElementSet a3 = set_of(t, {"()", "(1 2 3)", "(1 3 2)"});
  // Oracle: cosets A3 (contains e, depth 0) and (1 2)A3 (contains x, depth 1).
  EXPECT_EQ(t.depth(t.index_of(parse_cycles("(1 2)", 3))), 1u);
  EXPECT_EQ(coset_rep_bound(a3, t), 1u);
  EXPECT_THROW(coset_rep_bound(set_of(t, {"()", "(1 2)", "(2 3)"}), t), InvalidArgument);
}

}  // namespace
