#ifndef TMSR_CAYLEY_HPP
#define TMSR_CAYLEY_HPP

#include <cstddef>
#include <vector>

#include "tmsr/digraph.hpp"
#include "tmsr/error.hpp"
#include "tmsr/group.hpp"

namespace tmsr {

/// m x m matrix of connection sets, row-major; cell (i, j) holds T_ij.
using CellMatrix = std::vector<std::vector<ElementSet>>;

/// Vertex id of g_i in the block-major layout.
constexpr Vertex vertex_of(std::size_t group_order, std::size_t block, Element g) noexcept {
  return static_cast<Vertex>(block * group_order + g);
}

/// m-Cayley digraph on m copies of G: arc (g_i, (t*g)_j) for every t in T_ij.
/// Vertices are block-major (g_i has id i*n + g) and carry (g, i) labels.
inline Digraph m_cayley_digraph(const Group& g, const CellMatrix& cells) {
  const std::size_t n = g.order(), m = cells.size();
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (std::size_t i = 0; i < m; ++i) {
    if (cells[i].size() != m) throw Error(Errc::precondition_violated, "cell matrix is not square");
    for (std::size_t j = 0; j < m; ++j) {
      const auto& t_set = cells[i][j];
      if (i == j && t_set.contains(Group::identity())) {
        throw Error(Errc::identity_in_set, "diagonal cell (" + std::to_string(i) + "," +
                                               std::to_string(i) + ") contains the identity");
      }
      for (Element h = 0; h < n; ++h)
        for (auto t : t_set) arcs.emplace_back(vertex_of(n, i, h), vertex_of(n, j, g.mul(t, h)));
    }
  }
  std::vector<VertexLabel> labels(n * m);
  for (std::size_t i = 0; i < m; ++i)
    for (Element h = 0; h < n; ++h)
      labels[vertex_of(n, i, h)] = {h, static_cast<std::uint32_t>(i)};
  return Digraph(n * m, arcs).with_labels(std::move(labels), n, m);
}

/// Cay(G, S): arc h -> t*h for every t in S.
inline Digraph cayley_digraph(const Group& g, const ElementSet& conn) {
  if (conn.contains(Group::identity())) {
    throw Error(Errc::identity_in_set, "connection set contains the identity");
  }
  return m_cayley_digraph(g, CellMatrix{{conn}});
}

}  // namespace tmsr

#endif  // TMSR_CAYLEY_HPP
