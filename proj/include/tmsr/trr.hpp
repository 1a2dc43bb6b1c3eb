#ifndef TMSR_TRR_HPP
#define TMSR_TRR_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tmsr/automorphism.hpp"
#include "tmsr/cayley.hpp"
#include "tmsr/digraph.hpp"
#include "tmsr/error.hpp"
#include "tmsr/group.hpp"

namespace tmsr {

/// {x, x^-1} with x < x^-1.
using InversePair = std::pair<Element, Element>;

/// The (n-1)/2 inverse pairs covering G \ {e}, ordered by their smaller element.
inline std::vector<InversePair> inverse_pairs(const Group& g) {
  if (g.order() % 2 == 0) {
    throw Error(Errc::even_order, "group of order " + std::to_string(g.order()) + " is even");
  }
  std::vector<InversePair> pairs;
  for (Element x = 1; x < g.order(); ++x) {
    auto y = g.inv(x);
    if (y == x) throw Error(Errc::even_order, "element " + g.name(x) + " is its own inverse");
    if (x < y) pairs.emplace_back(x, y);
  }
  return pairs;
}

/// One orientation per inverse pair. Bit p of the selection picks the larger
/// element of pair p; pair 0 is the most significant position, so counting
/// upwards walks selections in lexicographic order.
struct OrientationChoice {
  std::vector<InversePair> pairs;
  std::uint64_t selection = 0;

  ElementSet connection_set(std::size_t group_order) const {
    std::vector<Element> r;
    r.reserve(pairs.size());
    const auto k = pairs.size();
    for (std::size_t p = 0; p < k; ++p) {
      bool larger = (selection >> (k - 1 - p)) & 1U;
      r.push_back(larger ? pairs[p].second : pairs[p].first);
    }
    return {group_order, std::move(r)};
  }
};

struct TrrResult {
  enum class Outcome { found, no_trr, trivial_group };

  Outcome outcome = Outcome::no_trr;
  ElementSet r;
  std::uint64_t candidates = 0;
};

inline std::string_view to_string(TrrResult::Outcome o) {
  switch (o) {
    case TrrResult::Outcome::found: return "found";
    case TrrResult::Outcome::no_trr: return "no-trr";
    case TrrResult::Outcome::trivial_group: return "trivial";
  }
  return "?";
}

struct TrrOptions {
  std::size_t bit_budget = 20;
  std::size_t threads = 1;
};

/// |Aut(Cay(G, R))| == |G|, stopping the enumeration as soon as it is exceeded.
inline bool is_trr_connection_set(const Group& g, const ElementSet& r) {
  auto d = cayley_digraph(g, r);
  auto res = search_automorphisms(d, {.ceiling = std::max<std::size_t>(512, g.order()),
                                      .stop_above = g.order()});
  return res.complete && res.group.order() == g.order();
}

/// Tries every orientation of the inverse pairs in lexicographic order and
/// returns the first R whose Cayley tournament has exactly |G| automorphisms.
/// With several threads the lexicographically smallest hit still wins.
inline TrrResult find_trr(const Group& g, const TrrOptions& opts = {}) {
  auto pairs = inverse_pairs(g);
  TrrResult result;
  if (g.order() == 1) {
    result.outcome = TrrResult::Outcome::trivial_group;
    return result;
  }
  const auto bits = pairs.size();
  if (bits > opts.bit_budget || bits >= 63) {
    throw Error(Errc::search_space_too_large,
                std::to_string(bits) + " inverse pairs exceed the search budget of " +
                    std::to_string(opts.bit_budget) + " bits; supply R explicitly");
  }
  const std::uint64_t total = std::uint64_t{1} << bits;
  result.candidates = total;

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{total};
  auto worker = [&] {
    for (;;) {
      auto c = next.fetch_add(1);
      if (c >= total || c >= best.load()) return;
      OrientationChoice choice{pairs, c};
      if (is_trr_connection_set(g, choice.connection_set(g.order()))) {
        auto cur = best.load();
        while (c < cur && !best.compare_exchange_weak(cur, c)) {
        }
        return;
      }
    }
  };
  const auto threads = std::max<std::size_t>(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  if (best.load() < total) {
    result.outcome = TrrResult::Outcome::found;
    result.r = OrientationChoice{pairs, best.load()}.connection_set(g.order());
    result.candidates = best.load() + 1;
  }
  return result;
}

enum class ElementaryKind { z3_squared, z3_cubed };

/// Z3^2 or Z3^3 recognized structurally: order 9 or 27, abelian, and every
/// non-identity element of order 3.
inline std::optional<ElementaryKind> elementary_three_kind(const Group& g) {
  if (g.order() != 9 && g.order() != 27) return std::nullopt;
  for (Element x = 1; x < g.order(); ++x)
    if (element_order(g, x) != 3) return std::nullopt;
  if (!is_abelian(g)) return std::nullopt;
  return g.order() == 9 ? ElementaryKind::z3_squared : ElementaryKind::z3_cubed;
}

/// The explicit (R, S) pair for Z3^2 = <a> x <x> or Z3^3 = <a> x <x> x <c>,
/// with x the distinguished generator. Element a^i x^j c^l has index
/// 9i + 3j + l (Z3^3) or 3i + j (Z3^2).
struct BuiltinRS {
  ElementaryKind kind;
  Group group;
  ElementSet r;
  ElementSet s;
  Element x;
};

namespace detail {

inline std::string word_name(int i, int j, int l) {
  std::string s;
  auto put = [&](char c, int p) {
    if (p == 0) return;
    s += c;
    if (p == 2) s += '2';
  };
  put('a', i);
  put('x', j);
  put('c', l);
  return s.empty() ? "e" : s;
}

}  // namespace detail

inline BuiltinRS builtin_rs(ElementaryKind kind) {
  const bool cube = kind == ElementaryKind::z3_cubed;
  const auto z3 = cyclic_group(3);
  const Group raw = cube ? direct_product(direct_product(z3, z3), z3) : direct_product(z3, z3);
  const std::size_t n = raw.order();

  auto idx = [&](int i, int j, int l) -> Element {
    return static_cast<Element>(cube ? 9 * i + 3 * j + l : 3 * i + j);
  };
  std::vector<std::string> names(n);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < (cube ? 3 : 1); ++l) names[idx(i, j, l)] = detail::word_name(i, j, l);
  Group g(n, raw.table(), names);

  struct Word {
    int a, x, c;
  };
  std::vector<Word> r_words, s_words;
  if (!cube) {
    r_words = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 1, 0}};
    s_words = {{1, 0, 0}, {0, 2, 0}, {1, 1, 0}, {2, 1, 0}};
  } else {
    const std::vector<Word> common = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 1, 0},
                                      {2, 0, 1}, {0, 2, 1}, {2, 1, 1}, {2, 2, 1}, {1, 2, 1}};
    r_words = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    s_words = {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    r_words.insert(r_words.end(), common.begin(), common.end());
    s_words.insert(s_words.end(), common.begin(), common.end());
  }
  auto to_set = [&](const std::vector<Word>& ws) {
    std::vector<Element> v;
    for (auto w : ws) v.push_back(idx(w.a, w.x, w.c));
    return ElementSet(n, std::move(v));
  };
  auto r = to_set(r_words);
  auto s = to_set(s_words);
  return {kind, std::move(g), std::move(r), std::move(s), idx(0, 1, 0)};
}

/// builtin_rs transported onto an arbitrary copy of Z3^2 or Z3^3 through the
/// basis a -> smallest non-identity element, x -> smallest element outside
/// <a>, c -> smallest element outside <a, x>.
inline BuiltinRS builtin_rs_for(const Group& g) {
  auto kind = elementary_three_kind(g);
  if (!kind) throw Error(Errc::precondition_violated, "group is not Z3^2 or Z3^3");
  auto ref = builtin_rs(*kind);
  const bool cube = *kind == ElementaryKind::z3_cubed;

  auto power = [&](Element b, int p) {
    Element r = Group::identity();
    for (int t = 0; t < p; ++t) r = g.mul(r, b);
    return r;
  };
  std::vector<Element> basis;
  std::vector<bool> spanned(g.order(), false);
  spanned[0] = true;
  while (basis.size() < (cube ? 3u : 2u)) {
    Element b = 1;
    while (spanned[b]) ++b;
    basis.push_back(b);
    std::vector<Element> span;
    for (Element y = 0; y < g.order(); ++y)
      if (spanned[y]) span.push_back(y);
    for (auto y : span)
      for (int p = 1; p < 3; ++p) spanned[g.mul(y, power(b, p))] = true;
  }

  std::vector<Element> phi(ref.group.order());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < (cube ? 3 : 1); ++l) {
        auto src = static_cast<Element>(cube ? 9 * i + 3 * j + l : 3 * i + j);
        Element img = g.mul(power(basis[0], i), power(basis[1], j));
        if (cube) img = g.mul(img, power(basis[2], l));
        phi[src] = img;
      }
  for (Element u = 0; u < ref.group.order(); ++u)
    for (Element v = 0; v < ref.group.order(); ++v)
      if (phi[ref.group.mul(u, v)] != g.mul(phi[u], phi[v])) {
        throw Error(Errc::precondition_violated, "basis map is not a homomorphism");
      }

  auto map_set = [&](const ElementSet& s) {
    std::vector<Element> v;
    for (auto e : s) v.push_back(phi[e]);
    return ElementSet(g.order(), std::move(v));
  };
  return {*kind, g, map_set(ref.r), map_set(ref.s), phi[ref.x]};
}

/// True iff the two-block Cayley digraph is a tournament whose automorphism
/// group has order |G| and acts semiregularly with 2 orbits.
inline bool verify_two_block(const Group& g, const CellMatrix& cells) {
  auto d = m_cayley_digraph(g, cells);
  if (!is_tournament(d)) return false;
  auto res = search_automorphisms(d, {.ceiling = std::max<std::size_t>(512, d.vertex_count()),
                                      .stop_above = g.order()});
  if (!res.complete || res.group.order() != g.order()) return false;
  return is_semiregular(res.group) && orbit_partition(res.group).size() == 2;
}

/// Two-block layout T_11 = R, T_22 = S, T_12 = {e}, T_21 = G \ {e}, with the
/// blocks numbered 0 and 1 here.
inline CellMatrix t2sr_cells(const BuiltinRS& b) {
  const auto n = b.group.order();
  ElementSet e(n, {Group::identity()});
  return {{b.r, e}, {e.complement(), b.s}};
}

inline bool verify_t2sr(ElementaryKind kind) {
  auto b = builtin_rs(kind);
  return verify_two_block(b.group, t2sr_cells(b));
}

}  // namespace tmsr

#endif  // TMSR_TRR_HPP
