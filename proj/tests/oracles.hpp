// Reference computations for the test suites. Everything here is written
// directly from the definitions and shares no code path with the library
// beyond the Group / ElementSet containers.
#ifndef TMSR_TESTS_ORACLES_HPP
#define TMSR_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include "tmsr/tmsr.hpp"

namespace oracle {

using tmsr::Element;
using tmsr::Group;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& rel) { return std::string(TMSR_DATA_DIR) + "/" + rel; }

/// <a, b | a^7 = b^3 = e, b^-1 a b = a^2> modelled as pairs (i mod 7, j mod 3)
/// with (i, j)(k, l) = (i + k * 4^j, j + l). Index of (i, j) is 3i + j.
inline Group nonabelian21() {
  const int pow4[3] = {1, 4, 2};
  std::vector<Element> table(21 * 21);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 3; ++l) {
          int pi = (i + k * pow4[j]) % 7, pj = (j + l) % 3;
          table[(3 * i + j) * 21 + 3 * k + l] = static_cast<Element>(3 * pi + pj);
        }
  return Group(21, std::move(table));
}

inline Group z3_cubed() {
  auto z3 = tmsr::cyclic_group(3);
  return tmsr::direct_product(tmsr::direct_product(z3, z3), z3);
}

/// Plain adjacency matrix.
using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const tmsr::Digraph& d) {
  Matrix a(d.vertex_count(), std::vector<bool>(d.vertex_count(), false));
  for (auto [u, v] : d.arcs()) a[u][v] = true;
  return a;
}

/// Adjacency of the m-Cayley digraph straight from the arc rule:
/// g_i -> h_j iff h * g^-1 is in T_ij.
inline Matrix cayley_matrix(const Group& g, const tmsr::CellMatrix& cells) {
  const auto n = g.order(), m = cells.size();
  Matrix a(n * m, std::vector<bool>(n * m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (cells[i][j].contains(g.mul(y, g.inv(x)))) a[i * n + x][j * n + y] = true;
  return a;
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::size_t brute_aut_order(const Matrix& a) {
  std::size_t count = 0;
  for (const auto& p : all_permutations(a.size())) {
    bool ok = true;
    for (std::size_t u = 0; u < a.size() && ok; ++u)
      for (std::size_t v = 0; v < a.size() && ok; ++v) ok = a[u][v] == a[p[u]][p[v]];
    count += ok;
  }
  return count;
}

inline bool brute_isomorphic(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : all_permutations(a.size())) {
    bool ok = true;
    for (std::size_t u = 0; u < a.size() && ok; ++u)
      for (std::size_t v = 0; v < a.size() && ok; ++v) ok = a[u][v] == b[p[u]][p[v]];
    if (ok) return true;
  }
  return false;
}

/// Arcs with independent probability `density`, loops excluded.
inline tmsr::Digraph random_digraph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<tmsr::Vertex, tmsr::Vertex>> arcs;
  for (tmsr::Vertex u = 0; u < n; ++u)
    for (tmsr::Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.emplace_back(u, v);
  return tmsr::Digraph(n, arcs);
}

/// Tournament on n vertices from the bits of `mask` over the pairs u < v.
inline tmsr::Digraph tournament_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::pair<tmsr::Vertex, tmsr::Vertex>> arcs;
  std::size_t bit = 0;
  for (tmsr::Vertex u = 0; u < n; ++u)
    for (tmsr::Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) arcs.emplace_back(u, v);
      else arcs.emplace_back(v, u);
    }
  return tmsr::Digraph(n, arcs);
}

/// Degree statistics of block i recomputed from an adjacency matrix.
struct Stats {
  std::size_t delta, pi, chi;
  std::vector<std::size_t> delta_at, pi_at, chi_at;
};

inline Stats block_stats(const Matrix& a, std::size_t n, std::size_t i, bool case_two, Element x) {
  const std::size_t base = i * n;
  std::vector<std::size_t> nb;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[base][v]) nb.push_back(v);
  auto in_block_i = [&](std::size_t v) { return v / n == i; };
  auto in_psi = [&](std::size_t v) { return case_two ? v != base + x : !in_block_i(v); };

  auto minimize = [&](auto keep_vertex, auto keep_other, bool out) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> at;
    for (auto v : nb) {
      if (!keep_vertex(v)) continue;
      std::size_t d = 0;
      for (auto w : nb)
        if (keep_other(w) && (out ? a[v][w] : a[w][v])) ++d;
      if (d < best) best = d, at.clear();
      if (d == best) at.push_back(v);
    }
    return std::pair{best, at};
  };
  auto all = [](std::size_t) { return true; };
  Stats s;
  std::tie(s.delta, s.delta_at) = minimize([&](std::size_t v) { return !in_block_i(v); }, all, false);
  std::tie(s.pi, s.pi_at) = minimize(all, all, true);
  std::tie(s.chi, s.chi_at) = minimize(in_psi, in_psi, true);
  return s;
}

}  // namespace oracle

#endif  // TMSR_TESTS_ORACLES_HPP
