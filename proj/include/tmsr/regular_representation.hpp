#ifndef TMSR_REGULAR_REPRESENTATION_HPP
#define TMSR_REGULAR_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "tmsr/builder.hpp"
#include "tmsr/error.hpp"
#include "tmsr/permutation.hpp"

namespace tmsr {

/// Right translation rho_g: f_i -> (f*g)_i on the block-major vertex set.
inline Permutation right_translation(const Group& g, std::size_t blocks, Element by) {
  const auto n = g.order();
  std::vector<Vertex> map(n * blocks);
  for (std::size_t i = 0; i < blocks; ++i)
    for (Element f = 0; f < n; ++f) map[vertex_of(n, i, f)] = vertex_of(n, i, g.mul(f, by));
  return Permutation(std::move(map));
}

/// Reg(G) on the instance, entry g holding rho_g. With products applied left
/// factor first, rho_g.then(rho_h) == rho_{g*h}. Throws NotAutomorphism naming
/// the first arc some rho_g fails to preserve.
inline std::vector<Permutation> reg_embedding(const TmsrInstance& inst) {
  const auto& g = inst.group;
  const auto& d = inst.graph;
  const std::size_t blocks = inst.matrix.m;
  if (d.vertex_count() != g.order() * blocks) {
    throw Error(Errc::not_automorphism, "graph size does not match |G| * m");
  }
  std::vector<Permutation> out;
  out.reserve(g.order());
  for (Element h = 0; h < g.order(); ++h) {
    auto rho = right_translation(g, blocks, h);
    for (auto [u, v] : d.arcs()) {
      if (!d.has_arc(rho[u], rho[v])) {
        throw Error(Errc::not_automorphism,
                    "rho_" + g.name(h) + " sends arc (" + std::to_string(u) + "," +
                        std::to_string(v) + ") to a non-arc (" + std::to_string(rho[u]) + "," +
                        std::to_string(rho[v]) + ")");
      }
    }
    out.push_back(std::move(rho));
  }
  return out;
}

}  // namespace tmsr

#endif  // TMSR_REGULAR_REPRESENTATION_HPP
