#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tmsr;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no tmsr::Error thrown";
  return Errc::parse_error;
}

}  // namespace

TEST(Cyclic, SmallArithmetic) {
  auto z1 = cyclic_group(1);
  EXPECT_EQ(z1.order(), 1u);
  EXPECT_EQ(z1.mul(0, 0), 0u);

  auto z3 = cyclic_group(3);
  EXPECT_EQ(z3.mul(1, 2), 0u);
  EXPECT_EQ(z3.inv(1), 2u);

  EXPECT_EQ(cyclic_group(5).inv(2), 3u);
}

TEST(Cyclic, MatchesModularArithmetic) {
  for (std::size_t n : {1, 2, 7, 15, 41}) {
    auto g = cyclic_group(n);
    for (Element a = 0; a < n; ++a) {
      EXPECT_EQ(g.inv(a), (n - a) % n);
      for (Element b = 0; b < n; ++b) EXPECT_EQ(g.mul(a, b), (a + b) % n);
    }
  }
}

TEST(DirectProduct, Z3SquaredHasExponentThree) {
  auto z3 = cyclic_group(3);
  auto g = direct_product(z3, z3);
  EXPECT_EQ(g.order(), 9u);
  for (Element x = 1; x < 9; ++x) EXPECT_EQ(element_order(g, x), 3u);
  EXPECT_TRUE(is_abelian(g));
}

TEST(DirectProduct, TrivialFactorGivesCopy) {
  auto g = direct_product(cyclic_group(1), cyclic_group(5));
  auto z5 = cyclic_group(5);
  ASSERT_EQ(g.order(), 5u);
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) EXPECT_EQ(g.mul(a, b), z5.mul(a, b));
}

TEST(DirectProduct, IndexingAndOrder15) {
  auto a = cyclic_group(3), b = cyclic_group(5);
  auto g = direct_product(a, b);
  EXPECT_EQ(g.order(), 15u);
  // (1,1) sits at 1*5 + 1; its order is found by repeated multiplication.
  const Element x = 6;
  Element p = x;
  std::size_t t = 1;
  while (p != 0) p = g.mul(p, x), ++t;
  EXPECT_EQ(t, 15u);
  EXPECT_EQ(element_order(g, x), 15u);
  for (Element i = 0; i < 3; ++i)
    for (Element j = 0; j < 5; ++j)
      for (Element k = 0; k < 3; ++k)
        for (Element l = 0; l < 5; ++l)
          EXPECT_EQ(g.mul(i * 5 + j, k * 5 + l), a.mul(i, k) * 5 + b.mul(j, l));
}

TEST(ElementOrder, Examples) {
  auto z9 = cyclic_group(9);
  EXPECT_EQ(element_order(z9, 0), 1u);
  EXPECT_EQ(element_order(z9, 1), 9u);
  EXPECT_EQ(element_order(z9, 3), 3u);
}

TEST(GroupAxioms, InverseIsTwoSided) {
  for (const auto& g : {cyclic_group(9), oracle::nonabelian21(), oracle::z3_cubed()}) {
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.mul(x, g.inv(x)), 0u);
      EXPECT_EQ(g.mul(g.inv(x), x), 0u);
    }
  }
}

TEST(GroupAxioms, OddOrderHasNoInvolutions) {
  for (const auto& g : {cyclic_group(15), oracle::nonabelian21()}) {
    EXPECT_TRUE(has_odd_order(g));
    for (Element x = 1; x < g.order(); ++x) EXPECT_NE(element_order(g, x), 2u);
  }
  EXPECT_FALSE(has_odd_order(cyclic_group(4)));
}

TEST(GroupAxioms, RejectsIdempotentNonIdentity) {
  // Row/column 0 act as identity, but 1*1 = 1.
  std::vector<Element> t = {0, 1, 2, 1, 1, 0, 2, 0, 1};
  EXPECT_EQ(code_of([&] { Group(3, t); }), Errc::not_a_group);
}

TEST(GroupAxioms, RejectsNonAssociativeLoop) {
  // A Latin square with identity 0 that is not associative (order 5 loop).
  std::vector<Element> t = {0, 1, 2, 3, 4,  //
                            1, 0, 3, 4, 2,  //
                            2, 4, 0, 1, 3,  //
                            3, 2, 4, 0, 1,  //
                            4, 3, 1, 2, 0};
  EXPECT_EQ(code_of([&] { Group(5, t); }), Errc::not_a_group);
}

TEST(GroupAxioms, RejectsMissingIdentityAndBadNames) {
  std::vector<Element> constant(9, 0);
  EXPECT_EQ(code_of([&] { Group(3, constant); }), Errc::not_a_group);
  auto z3 = cyclic_group(3);
  EXPECT_EQ(code_of([&] { Group(3, z3.table(), {"e", "a", "a"}); }), Errc::not_a_group);
  EXPECT_EQ(code_of([&] { Group(3, z3.table(), {"e", "a,b", "c"}); }), Errc::not_a_group);
}

TEST(GroupAxioms, IdentityIsMovedToIndexZero) {
  // Z3 with the identity stored at index 2.
  std::vector<Element> t = {1, 2, 0,  //
                            2, 0, 1,  //
                            0, 1, 2};
  Group g(3, t, {"p", "q", "id"});
  EXPECT_EQ(g.name(0), "id");
  EXPECT_EQ(g.mul(0, 1), 1u);
  EXPECT_EQ(g.mul(1, 2), 0u);
}

TEST(Nonabelian21, DataFileMatchesPairModel) {
  auto from_file = parse_cayley_table(oracle::read_file(oracle::data_path("groups/f21.txt")));
  auto model = oracle::nonabelian21();
  ASSERT_EQ(from_file.order(), 21u);
  EXPECT_EQ(from_file.table(), model.table());
  EXPECT_FALSE(is_abelian(from_file));
  EXPECT_EQ(from_file.name(3), "a");
  EXPECT_EQ(from_file.name(1), "b");
  std::size_t order3 = 0, order7 = 0;
  for (Element x = 1; x < 21; ++x) {
    auto o = element_order(from_file, x);
    order3 += o == 3;
    order7 += o == 7;
  }
  EXPECT_EQ(order3, 14u);
  EXPECT_EQ(order7, 6u);
}

TEST(CayleyTable, ParsesSmallTable) {
  auto g = parse_cayley_table("# Z3\n3\n0 1 2\n1 2 0\n2 0 1\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.mul(2, 2), 1u);
}

TEST(CayleyTable, RoundTripIsBitExact) {
  const std::string plain = "3\n0 1 2\n1 2 0\n2 0 1\n";
  EXPECT_EQ(write_cayley_table(parse_cayley_table("# comment\n" + plain)), plain);

  const std::string text = oracle::read_file(oracle::data_path("groups/f21.txt"));
  std::string stripped;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.empty() || line[0] != '#') stripped += line + "\n";
  EXPECT_EQ(write_cayley_table(parse_cayley_table(text)), stripped);

  auto z3 = cyclic_group(3);
  auto z33 = direct_product(direct_product(z3, z3), z3);
  auto back = parse_cayley_table(write_cayley_table(z33));
  EXPECT_EQ(back, z33);
}

TEST(CayleyTable, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_cayley_table(""); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_cayley_table("3\n0 1 2\n1 2 0\n"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_cayley_table("3\n0 1 2\n1 2 x\n2 0 1\n"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_cayley_table("3\n0 1 2\n1 2 0 1\n2 0 1\n"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_cayley_table("2 2\n0 1\n1 0\n"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_cayley_table("3\n0 1 2\n1 1 0\n2 0 1\n"); }), Errc::not_a_group);
  EXPECT_EQ(code_of([] { parse_cayley_table("3\n0 1 2\n1 2 0\n2 0 7\n"); }), Errc::not_a_group);
}

TEST(ElementSetOps, Basics) {
  auto z5 = cyclic_group(5);
  ElementSet s(5, {3, 1, 1});
  EXPECT_EQ(s.members(), (std::vector<Element>{1, 3}));
  EXPECT_EQ(s.inverse(z5).members(), (std::vector<Element>{2, 4}));
  EXPECT_EQ(s.complement().members(), (std::vector<Element>{0, 2, 4}));
  EXPECT_EQ(s.without(1).members(), (std::vector<Element>{3}));
  EXPECT_TRUE(is_tournament_connection_set(z5, ElementSet(5, {1, 2})));
  EXPECT_FALSE(is_tournament_connection_set(z5, ElementSet(5, {1, 4})));
  EXPECT_FALSE(is_tournament_connection_set(z5, ElementSet(5, {1})));
  EXPECT_THROW(ElementSet(5, {5}), Error);
}
