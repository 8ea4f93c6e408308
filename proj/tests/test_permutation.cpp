#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace palinwidth;

namespace {

Permutation perm(std::initializer_list<Point> images) {
  return Permutation(std::vector<Point>(images));
}

TEST(Permutation, ComposeAppliesLeftOperandFirst) {
  // (0 1) then (1 2): 0 -> 1 -> 2, 2 -> 2 -> 1, 1 -> 0 -> 0.
  Permutation p = compose(perm({1, 0, 2}), perm({0, 2, 1}));
  EXPECT_EQ(p, perm({2, 0, 1}));
  EXPECT_EQ(print_cycles(p), "(1 3 2)");
}

TEST(Permutation, IdentityIsNeutral) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    Permutation p = testutil::random_perm(5, rng);
    EXPECT_EQ(compose(Permutation::identity(5), p), p);
    EXPECT_EQ(compose(p, Permutation::identity(5)), p);
  }
}

TEST(Permutation, InverseProperties) {
  EXPECT_EQ(inverse(Permutation::identity(4)), Permutation::identity(4));
  EXPECT_EQ(inverse(perm({1, 2, 0})), perm({2, 0, 1}));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    Permutation p = testutil::random_perm(1 + i % 11, rng);
    EXPECT_EQ(inverse(inverse(p)), p);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_TRUE(compose(inverse(p), p).is_identity());
  }
}

TEST(Permutation, ComposeIsAssociative) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto a = testutil::random_perm(7, rng), b = testutil::random_perm(7, rng),
         c = testutil::random_perm(7, rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(Permutation, DegreeMismatchThrows) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), InvalidArgument);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(perm({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(perm({0, 3, 1}), InvalidArgument);
}

TEST(Permutation, OrderAndMovedPoints) {
  Permutation p = parse_cycles("(1 2)(3 4 5)", 6);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.moved_points(), 5u);
  EXPECT_EQ(Permutation::identity(3).order(), 1u);
}

TEST(ParseCycles, DoubleTransposition) {
  Permutation p = parse_cycles("(1 2)(3 4)", 5);
  EXPECT_EQ(p, perm({1, 0, 3, 2, 4}));
}

TEST(ParseCycles, IdentityForms) {
  EXPECT_EQ(parse_cycles("id", 3), Permutation::identity(3));
  EXPECT_EQ(parse_cycles("()", 3), Permutation::identity(3));
  EXPECT_EQ(parse_cycles("  ( ) ", 3), Permutation::identity(3));
}

TEST(ParseCycles, CommasAndFixedPoints) {
  EXPECT_EQ(parse_cycles("(1,2,3)(4)", 4), perm({1, 2, 0, 3}));
}

TEST(ParseCycles, RepeatedPointIsAnError) {
  try {
    parse_cycles("(1 2)(2 3)", 3);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("repeated point 2"), std::string::npos);
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(ParseCycles, Malformed) {
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("1 2)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 4)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(0 1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 x)", 3), ParseError);
  EXPECT_THROW(parse_cycles("", 3), ParseError);
  EXPECT_THROW(parse_cycles("id x", 3), ParseError);
}

TEST(ParseCycles, RoundTripsPrintedForm) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 3 + static_cast<std::size_t>(i % 10);
    Permutation p = testutil::random_perm(n, rng);
    EXPECT_EQ(parse_cycles(print_cycles(p), n), p);
  }
}

TEST(GensetFile, ParsesLabelsCommentsAndDegree) {
  auto gens = parse_genset(
      "# A5 on five points\n"
      "degree 5\n"
      "\n"
      "x = (1 2)(3 4)   # double transposition\n"
      "y = (1 2 3 4 5)\n");
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens.degree, 5u);
  EXPECT_EQ(gens.labels[0], "x");
  EXPECT_EQ(gens.perms[1], parse_cycles("(1 2 3 4 5)", 5));
  EXPECT_EQ(parse_genset(format_genset(gens)).perms, gens.perms);
}

TEST(GensetFile, Errors) {
  EXPECT_THROW(parse_genset("x = (1 2)\n"), ParseError);
  EXPECT_THROW(parse_genset("degree 3\n"), ParseError);
  EXPECT_THROW(parse_genset("degree 3\nx (1 2)\n"), ParseError);
  EXPECT_THROW(parse_genset("degree 3\nx = (1 2)\nx = (2 3)\n"), ParseError);
  EXPECT_THROW(parse_genset("degree 3\nx = (1 5)\n"), ParseError);
  EXPECT_THROW(parse_genset("degree 0\n"), ParseError);
}

}  // namespace
