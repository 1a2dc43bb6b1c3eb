#ifndef TMSR_BUILDER_HPP
#define TMSR_BUILDER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tmsr/cayley.hpp"
#include "tmsr/digraph.hpp"
#include "tmsr/error.hpp"
#include "tmsr/group.hpp"
#include "tmsr/trr.hpp"

namespace tmsr {

/// Which of the three constructions produced a matrix:
///   case_i   - m >= 7, or m = 5 and n >= 5
///   case_ii  - m = 5 and n = 3
///   case_iii - m = 3
enum class CaseTag { case_i, case_ii, case_iii };

/// Source of the diagonal cells: a TRR set R, or the built-in (R, S) pair for
/// Z3^2 / Z3^3.
enum class Variant { trr, z3sq, z3cu };

inline std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::case_i: return "CASE_I";
    case CaseTag::case_ii: return "CASE_II";
    case CaseTag::case_iii: return "CASE_III";
  }
  return "?";
}

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::trr: return "TRR";
    case Variant::z3sq: return "Z3SQ";
    case Variant::z3cu: return "Z3CU";
  }
  return "?";
}

struct ConnectionMatrix {
  std::size_t m = 0;
  std::size_t k = 0;  // (m - 1) / 2
  CellMatrix cells;
  CaseTag case_tag = CaseTag::case_i;
  Variant variant = Variant::trr;
  Element x = 0;

  const ElementSet& at(std::size_t i, std::size_t j) const { return cells[i % m][j % m]; }
};

/// Diagonal material for cases I and III. `s` is present exactly for the
/// Z3^2 / Z3^3 variants.
struct DiagonalSets {
  ElementSet r;
  std::optional<ElementSet> s;
  Variant variant = Variant::trr;
};

/// Every violated matrix invariant, one line each; empty when the matrix is
/// well formed. Diagonal cells T need T and T^-1 to split G \ {e}; off-diagonal
/// cells need T_ji = (G \ T_ij)^-1.
inline std::vector<std::string> matrix_violations(const Group& g, const ConnectionMatrix& cm) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cm.m; ++i) {
    if (!is_tournament_connection_set(g, cm.at(i, i))) {
      out.push_back("diagonal cell (" + std::to_string(i) + "," + std::to_string(i) +
                    ") is not an orientation of G \\ {e}");
    }
    for (std::size_t j = 0; j < cm.m; ++j) {
      if (i != j && cm.at(j, i) != cm.at(i, j).complement().inverse(g)) {
        out.push_back("cells (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                      std::to_string(j) + "," + std::to_string(i) + ") are not complementary");
      }
    }
  }
  return out;
}

namespace detail {

inline ConnectionMatrix empty_matrix(const Group& g, std::size_t m) {
  ConnectionMatrix cm;
  cm.m = m;
  cm.k = (m - 1) / 2;
  cm.cells.assign(m, std::vector<ElementSet>(m, ElementSet(g.order(), std::vector<Element>{})));
  return cm;
}

/// T_{i,i+j} = {e} and T_{i+j,i} = G \ {e} for j = 1..k, then the exceptional
/// pair T_01 = {x}, T_10 = G \ {x^-1}. Shared by cases I and III.
inline void fill_off_diagonal(const Group& g, ConnectionMatrix& cm) {
  const auto m = cm.m;
  ElementSet e(g.order(), {Group::identity()});
  ElementSet not_e = e.complement();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 1; j <= cm.k; ++j) {
      cm.cells[i][(i + j) % m] = e;
      cm.cells[(i + j) % m][i] = not_e;
    }
  cm.cells[0][1] = ElementSet(g.order(), {cm.x});
  cm.cells[1][0] = ElementSet(g.order(), {g.inv(cm.x)}).complement();

  // The j = k+1..2k rule must describe the same cells.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = cm.k + 1; j <= 2 * cm.k; ++j) {
      auto a = i, b = (i + j) % m;
      bool exceptional = (a == 0 && b == 1) || (a == 1 && b == 0);
      if (!exceptional && (cm.cells[a][b] != not_e || cm.cells[b][a] != e)) {
        throw std::logic_error("off-diagonal rules disagree at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
      }
    }
}

inline void require_x_in_r(const DiagonalSets& d, Element x) {
  if (!d.r.contains(x)) {
    throw Error(Errc::x_not_in_r, "x = " + std::to_string(x) + " is not an element of R");
  }
}

inline void require_variant_shape(const DiagonalSets& d) {
  if ((d.variant == Variant::trr) == d.s.has_value()) {
    throw Error(Errc::precondition_violated,
                "S must be given exactly for the Z3^2 / Z3^3 variants");
  }
}

}  // namespace detail

/// Case I: T_ii = R (T_{k+1,k+1} = S for the Z3 variants), the {e} / G \ {e}
/// pattern off the diagonal, and T_01 = {x}, T_10 = G \ {x^-1}.
inline ConnectionMatrix build_case1(const Group& g, std::size_t m, const DiagonalSets& d,
                                    Element x) {
  const auto n = g.order();
  if (m % 2 == 0 || !(m >= 7 || (m == 5 && n >= 5))) {
    throw Error(Errc::precondition_violated,
                "case I needs odd m >= 7, or m = 5 with n >= 5 (m = " + std::to_string(m) +
                    ", n = " + std::to_string(n) + ")");
  }
  detail::require_variant_shape(d);
  detail::require_x_in_r(d, x);
  auto cm = detail::empty_matrix(g, m);
  cm.case_tag = CaseTag::case_i;
  cm.variant = d.variant;
  cm.x = x;
  for (std::size_t i = 0; i < m; ++i) cm.cells[i][i] = d.r;
  if (d.s) {
    cm.cells[cm.k + 1][cm.k + 1] = *d.s;
    if (element_order(g, x) != 3) {
      throw Error(Errc::precondition_violated, "x must have order 3 in the Z3 variants");
    }
  }
  detail::fill_off_diagonal(g, cm);
  if (d.s) {
    // Written as G \ {x^2} for these groups; identical since x^3 = e.
    auto alt = ElementSet(n, {g.mul(x, x)}).complement();
    if (alt != cm.cells[1][0]) throw std::logic_error("G \\ {x^2} differs from G \\ {x^-1}");
  }
  return cm;
}

/// Case II, the fixed 5 x 5 matrix over G = {e, x, x^2}.
inline ConnectionMatrix build_case2(const Group& g, Element x) {
  if (g.order() != 3) {
    throw Error(Errc::wrong_order, "case II needs |G| = 3, got " + std::to_string(g.order()));
  }
  if (x == Group::identity()) throw Error(Errc::precondition_violated, "x must not be e");
  const Element x2 = g.mul(x, x);
  auto cm = detail::empty_matrix(g, 5);
  cm.case_tag = CaseTag::case_ii;
  cm.variant = Variant::trr;
  cm.x = x;
  ElementSet e(3, {Group::identity()});
  ElementSet gens(3, {x, x2});
  for (std::size_t i = 0; i < 5; ++i) {
    cm.cells[i][i] = ElementSet(3, {x});
    for (std::size_t d = 1; d < 5; ++d) cm.cells[i][(i + d) % 5] = d <= 2 ? e : gens;
  }
  cm.cells[0][1] = ElementSet(3, {x});
  cm.cells[1][0] = ElementSet(3, {Group::identity(), x});
  return cm;
}

inline ConnectionMatrix build_case2(const Group& g) {
  if (g.order() != 3) {
    throw Error(Errc::wrong_order, "case II needs |G| = 3, got " + std::to_string(g.order()));
  }
  return build_case2(g, 1);
}

/// Case III (m = 3): T_00 = T_11 = R^-1 (or S), T_22 = R, T_01 = {x},
/// T_10 = G \ {x^-1}, T_12 = T_20 = {e}, T_21 = T_02 = G \ {e}.
inline ConnectionMatrix build_case3(const Group& g, const DiagonalSets& d, Element x) {
  if (g.order() < 3 || g.order() % 2 == 0) {
    throw Error(Errc::precondition_violated, "case III needs odd |G| >= 3");
  }
  detail::require_variant_shape(d);
  detail::require_x_in_r(d, x);
  auto cm = detail::empty_matrix(g, 3);
  cm.case_tag = CaseTag::case_iii;
  cm.variant = d.variant;
  cm.x = x;
  const ElementSet first = d.s ? *d.s : d.r.inverse(g);
  cm.cells[0][0] = first;
  cm.cells[1][1] = first;
  cm.cells[2][2] = d.r;
  detail::fill_off_diagonal(g, cm);
  return cm;
}

struct TmsrInstance {
  Group group;
  ConnectionMatrix matrix;
  Digraph graph;
};

/// Γ = Cay(G, T_ij): arc (g_i, (t*g)_j) for every t in T_ij.
inline Digraph assemble(const Group& g, const ConnectionMatrix& cm) {
  return m_cayley_digraph(g, cm.cells);
}

struct BuildOptions {
  TrrOptions trr;
  /// Replaces the TRR search; must satisfy R ∩ R^-1 = ∅, R ∪ R^-1 = G \ {e}.
  std::optional<ElementSet> r;
};

/// Checks (n, m), picks the case and the diagonal sets, and assembles the
/// regular tournament.
inline TmsrInstance build_tmsr(const Group& g, std::size_t m, const BuildOptions& opts = {}) {
  const auto n = g.order();
  if (m % 2 == 0) {
    throw Error(Errc::even_m, "no regular TmSR exists for even m = " + std::to_string(m));
  }
  if (m < 3) throw Error(Errc::precondition_violated, "m must be an odd integer >= 3");
  if (!has_odd_order(g)) {
    throw Error(Errc::even_order, "group of order " + std::to_string(n) + " has even order");
  }
  if (n == 1) {
    throw Error(Errc::trivial_group_unsupported,
                "the trivial group is not supported (no regular T3SR or T5SR exists; m >= 7 is open)");
  }

  DiagonalSets diag;
  Element x = 0;
  if (elementary_three_kind(g)) {
    if (opts.r) {
      throw Error(Errc::precondition_violated,
                  "this group has no TRR; the built-in (R, S) pair is always used");
    }
    auto b = builtin_rs_for(g);
    diag = {b.r, b.s, b.kind == ElementaryKind::z3_squared ? Variant::z3sq : Variant::z3cu};
    x = b.x;
  } else {
    ElementSet r;
    if (opts.r) {
      if (opts.r->parent_order() != n || !is_tournament_connection_set(g, *opts.r)) {
        throw Error(Errc::precondition_violated,
                    "supplied R is not an orientation of G \\ {e}");
      }
      r = *opts.r;
    } else {
      auto found = find_trr(g, opts.trr);
      if (found.outcome != TrrResult::Outcome::found) {
        throw Error(Errc::no_connection_set, "TRR search exhausted without a connection set");
      }
      r = found.r;
    }
    x = *r.begin();
    diag = {r, std::nullopt, Variant::trr};
  }

  ConnectionMatrix cm;
  if (m == 3) {
    cm = build_case3(g, diag, x);
  } else if (m == 5 && n == 3) {
    cm = build_case2(g, x);
  } else {
    cm = build_case1(g, m, diag, x);
  }

  if (auto bad = matrix_violations(g, cm); !bad.empty()) {
    throw std::logic_error("connection matrix invalid: " + bad.front());
  }
  auto graph = assemble(g, cm);
  if (!is_regular_tournament(graph)) {
    throw std::logic_error("assembled digraph is not a regular tournament");
  }
  return {g, std::move(cm), std::move(graph)};
}

/// T_ij read back from the arcs leaving base_i: {h * base^-1 : (base_i, h_j) an arc}.
inline ElementSet reconstruct_cell(const TmsrInstance& inst, std::size_t i, std::size_t j,
                                   Element base = Group::identity()) {
  const auto& g = inst.group;
  const auto n = g.order();
  std::vector<Element> out;
  for (Element h = 0; h < n; ++h) {
    if (inst.graph.has_arc(vertex_of(n, i, base), vertex_of(n, j, h))) {
      out.push_back(g.mul(h, g.inv(base)));
    }
  }
  return {n, std::move(out)};
}

}  // namespace tmsr

#endif  // TMSR_BUILDER_HPP
