#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace tmsr;

namespace {

/// Order-27 group of exponent 3 that is not abelian: upper unitriangular
/// 3x3 matrices over GF(3), (a, b, c)(a', b', c') = (a + a', b + b', c + c' + ab').
Group heisenberg27() {
  std::vector<Element> t(27 * 27);
  for (int u = 0; u < 27; ++u)
    for (int v = 0; v < 27; ++v) {
      int a = u / 9, b = u / 3 % 3, c = u % 3;
      int a2 = v / 9, b2 = v / 3 % 3, c2 = v % 3;
      t[u * 27 + v] = static_cast<Element>(9 * ((a + a2) % 3) + 3 * ((b + b2) % 3) + (c + c2 + a * b2) % 3);
    }
  return Group(27, std::move(t));
}

/// Same group with element indices shuffled (identity kept at 0).
Group relabelled(const Group& g, unsigned seed) {
  const auto n = g.order();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::mt19937 rng(seed);
  std::shuffle(p.begin() + 1, p.end(), rng);
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[p[a] * n + p[b]] = p[g.mul(a, b)];
  return Group(n, std::move(t));
}

/// First selection in lexicographic order whose Cayley tournament has
/// exactly n automorphisms, decided by brute force over all n! maps.
std::optional<ElementSet> brute_first_trr(const Group& g) {
  auto pairs = inverse_pairs(g);
  const auto k = pairs.size();
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << k); ++sel) {
    std::vector<Element> r;
    for (std::size_t p = 0; p < k; ++p) r.push_back((sel >> (k - 1 - p)) & 1 ? pairs[p].second : pairs[p].first);
    ElementSet s(g.order(), r);
    if (oracle::brute_aut_order(oracle::cayley_matrix(g, {{s}})) == g.order()) return s;
  }
  return std::nullopt;
}

}  // namespace

TEST(InversePairs, Examples) {
  EXPECT_EQ(inverse_pairs(cyclic_group(3)), (std::vector<InversePair>{{1, 2}}));
  EXPECT_EQ(inverse_pairs(cyclic_group(5)), (std::vector<InversePair>{{1, 4}, {2, 3}}));
  try {
    inverse_pairs(cyclic_group(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::even_order);
  }
}

TEST(InversePairs, PartitionNonIdentity) {
  for (const auto& g : {oracle::nonabelian21(), oracle::z3_cubed(), cyclic_group(15)}) {
    std::vector<int> seen(g.order(), 0);
    for (auto [a, b] : inverse_pairs(g)) {
      EXPECT_EQ(g.inv(a), b);
      EXPECT_LT(a, b);
      ++seen[a], ++seen[b];
    }
    EXPECT_EQ(seen[0], 0);
    for (Element x = 1; x < g.order(); ++x) EXPECT_EQ(seen[x], 1);
  }
}

TEST(FindTrr, Z3ChoosesGenerator) {
  auto r = find_trr(cyclic_group(3));
  ASSERT_EQ(r.outcome, TrrResult::Outcome::found);
  EXPECT_EQ(r.r.members(), (std::vector<Element>{1}));
}

TEST(FindTrr, Z3SquaredHasNone) {
  auto z3 = cyclic_group(3);
  auto r = find_trr(direct_product(z3, z3));
  EXPECT_EQ(r.outcome, TrrResult::Outcome::no_trr);
  EXPECT_EQ(r.candidates, 16u);
}

TEST(FindTrr, TrivialGroup) { EXPECT_EQ(find_trr(cyclic_group(1)).outcome, TrrResult::Outcome::trivial_group); }

TEST(FindTrr, MatchesBruteForceFirstHit) {
  for (std::size_t n : {3, 5, 7}) {
    auto g = cyclic_group(n);
    auto fast = find_trr(g);
    auto slow = brute_first_trr(g);
    ASSERT_TRUE(slow.has_value());
    ASSERT_EQ(fast.outcome, TrrResult::Outcome::found);
    EXPECT_EQ(fast.r, *slow) << "n=" << n;
    EXPECT_EQ(oracle::brute_aut_order(oracle::cayley_matrix(g, {{fast.r}})), n);
  }
}

TEST(FindTrr, FoundSetsAreTournamentConnectionSets) {
  for (const auto& g : {cyclic_group(9), cyclic_group(11), cyclic_group(15), oracle::nonabelian21()}) {
    auto r = find_trr(g);
    ASSERT_EQ(r.outcome, TrrResult::Outcome::found);
    EXPECT_TRUE(is_tournament_connection_set(g, r.r));
    EXPECT_TRUE(is_tournament(cayley_digraph(g, r.r)));
    EXPECT_EQ(automorphism_group(cayley_digraph(g, r.r)).order(), g.order());
  }
}

TEST(FindTrr, ThreadCountDoesNotChangeResult) {
  for (const auto& g : {cyclic_group(13), oracle::nonabelian21()}) {
    auto one = find_trr(g);
    for (std::size_t threads : {2, 3, 8}) {
      auto many = find_trr(g, {.bit_budget = 20, .threads = threads});
      EXPECT_EQ(many.outcome, one.outcome);
      EXPECT_EQ(many.r, one.r);
      EXPECT_EQ(many.candidates, one.candidates);
    }
  }
}

TEST(FindTrr, BitBudget) {
  try {
    find_trr(cyclic_group(43));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::search_space_too_large);
  }
  EXPECT_THROW(find_trr(cyclic_group(9), {.bit_budget = 3}), Error);
}

TEST(Elementary, Detection) {
  auto z3 = cyclic_group(3);
  EXPECT_EQ(elementary_three_kind(direct_product(z3, z3)), ElementaryKind::z3_squared);
  EXPECT_EQ(elementary_three_kind(oracle::z3_cubed()), ElementaryKind::z3_cubed);
  EXPECT_EQ(elementary_three_kind(relabelled(oracle::z3_cubed(), 4)), ElementaryKind::z3_cubed);
  EXPECT_FALSE(elementary_three_kind(cyclic_group(9)).has_value());
  EXPECT_FALSE(elementary_three_kind(cyclic_group(27)).has_value());
  EXPECT_FALSE(elementary_three_kind(direct_product(cyclic_group(9), z3)).has_value());
  // Exponent 3 but nonabelian: not covered by the built-in pairs.
  auto h = heisenberg27();
  for (Element x = 1; x < 27; ++x) ASSERT_EQ(element_order(h, x), 3u);
  EXPECT_FALSE(elementary_three_kind(h).has_value());
}

TEST(Elementary, HeisenbergGroupHasTrr) {
  auto h = heisenberg27();
  auto r = find_trr(h);
  ASSERT_EQ(r.outcome, TrrResult::Outcome::found);
  EXPECT_EQ(automorphism_group(cayley_digraph(h, r.r)).order(), 27u);
  auto inst = build_tmsr(h, 3);
  EXPECT_EQ(inst.matrix.variant, Variant::trr);
}

TEST(Builtin, SetIdentities) {
  for (auto kind : {ElementaryKind::z3_squared, ElementaryKind::z3_cubed}) {
    auto b = builtin_rs(kind);
    const std::size_t half = (b.group.order() - 1) / 2;
    EXPECT_EQ(b.r.size(), half);
    EXPECT_EQ(b.s.size(), half);
    auto non_identity = ElementSet::all(b.group).without(0);
    for (const auto* set : {&b.r, &b.s}) {
      EXPECT_TRUE(set->intersect(set->inverse(b.group)).empty());
      EXPECT_EQ(set->unite(set->inverse(b.group)), non_identity);
    }
  }
}

TEST(Builtin, NamedMembers) {
  auto names = [](const BuiltinRS& b, const ElementSet& s) {
    std::set<std::string> out;
    for (auto e : s) out.insert(b.group.name(e));
    return out;
  };
  auto sq = builtin_rs(ElementaryKind::z3_squared);
  EXPECT_EQ(names(sq, sq.r), (std::set<std::string>{"a", "x", "ax", "a2x"}));
  EXPECT_EQ(names(sq, sq.s), (std::set<std::string>{"a", "x2", "ax", "a2x"}));
  EXPECT_EQ(sq.group.name(sq.x), "x");

  auto cu = builtin_rs(ElementaryKind::z3_cubed);
  EXPECT_EQ(names(cu, cu.r), (std::set<std::string>{"a", "x", "c", "ax", "ac", "xc", "axc", "a2x", "a2c",
                                                    "x2c", "a2xc", "a2x2c", "ax2c"}));
  EXPECT_EQ(cu.group.name(cu.x), "x");
}

TEST(Builtin, SDiffersFromRByInvertingGenerators) {
  for (auto kind : {ElementaryKind::z3_squared, ElementaryKind::z3_cubed}) {
    auto b = builtin_rs(kind);
    std::set<std::string> r_only, s_only;
    for (auto e : b.r)
      if (!b.s.contains(e)) r_only.insert(b.group.name(e));
    for (auto e : b.s)
      if (!b.r.contains(e)) s_only.insert(b.group.name(e));
    if (kind == ElementaryKind::z3_squared) {
      EXPECT_EQ(r_only, (std::set<std::string>{"x"}));
      EXPECT_EQ(s_only, (std::set<std::string>{"x2"}));
    } else {
      EXPECT_EQ(r_only, (std::set<std::string>{"x", "c"}));
      EXPECT_EQ(s_only, (std::set<std::string>{"x2", "c2"}));
    }
  }
}

TEST(Builtin, BuiltinsHaveNoTrrThemselves) {
  for (auto kind : {ElementaryKind::z3_squared, ElementaryKind::z3_cubed}) {
    auto b = builtin_rs(kind);
    EXPECT_GT(automorphism_group(cayley_digraph(b.group, b.r)).order(), b.group.order());
  }
}

TEST(T2sr, BuiltinPairsWork) {
  EXPECT_TRUE(verify_t2sr(ElementaryKind::z3_squared));
  EXPECT_TRUE(verify_t2sr(ElementaryKind::z3_cubed));
}

TEST(T2sr, IndependentCheckOnZ3Squared) {
  auto b = builtin_rs(ElementaryKind::z3_squared);
  auto cells = t2sr_cells(b);
  auto a = oracle::cayley_matrix(b.group, cells);
  auto d = m_cayley_digraph(b.group, cells);
  EXPECT_EQ(oracle::matrix_of(d), a);
  auto aut = automorphism_group(d);
  EXPECT_EQ(aut.order(), 9u);
  EXPECT_TRUE(is_semiregular(aut));
  EXPECT_EQ(orbit_partition(aut).size(), 2u);
}

TEST(T2sr, MutatedMatrixFails) {
  for (auto kind : {ElementaryKind::z3_squared, ElementaryKind::z3_cubed}) {
    auto b = builtin_rs(kind);
    auto cells = t2sr_cells(b);
    cells[0][1] = ElementSet(b.group.order(), std::vector<Element>{});
    EXPECT_FALSE(verify_two_block(b.group, cells));
  }
}

TEST(T2sr, TransportedPairsWork) {
  for (unsigned seed : {1u, 2u, 3u}) {
    auto z3 = cyclic_group(3);
    for (const auto& g : {relabelled(direct_product(z3, z3), seed), relabelled(oracle::z3_cubed(), seed)}) {
      auto b = builtin_rs_for(g);
      EXPECT_TRUE(is_tournament_connection_set(g, b.r));
      EXPECT_TRUE(is_tournament_connection_set(g, b.s));
      EXPECT_EQ(element_order(g, b.x), 3u);
      EXPECT_TRUE(b.r.contains(b.x));
      EXPECT_TRUE(verify_two_block(g, t2sr_cells(b)));
    }
  }
}
