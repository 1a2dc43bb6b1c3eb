#ifndef TMSR_REFINEMENT_HPP
#define TMSR_REFINEMENT_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tmsr/digraph.hpp"

namespace tmsr {

/// Ordered partition of the vertex set. Cell order matters: two partitions
/// correspond under an isomorphism only if cell t maps onto cell t for all t.
using OrderedPartition = std::vector<std::vector<Vertex>>;

/// Record of every split made while refining. Two refinements that are images
/// of each other under an isomorphism produce identical traces, so comparing
/// traces is a sound pruning test.
using RefinementTrace = std::vector<std::uint64_t>;

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  // splitmix64 finalizer over the running hash
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

}  // namespace detail

inline OrderedPartition unit_partition(std::size_t n) {
  OrderedPartition p(1);
  p[0].resize(n);
  std::iota(p[0].begin(), p[0].end(), Vertex{0});
  if (n == 0) p.clear();
  return p;
}

inline bool is_discrete(const OrderedPartition& p) {
  return std::all_of(p.begin(), p.end(), [](const auto& c) { return c.size() == 1; });
}

/// Splits every cell by the signature (out-count, in-count) into each current
/// cell, iterated to a fixpoint. Sub-cells are ordered by signature, so the
/// result depends only on the isomorphism type of (d, p).
inline OrderedPartition refine(const Digraph& d, OrderedPartition p, RefinementTrace* trace = nullptr) {
  const std::size_t n = d.vertex_count();
  std::vector<std::uint32_t> cell_of(n);
  std::vector<std::uint32_t> counts;

  for (;;) {
    const std::size_t cells = p.size();
    const std::size_t width = 2 * cells;
    for (std::size_t c = 0; c < cells; ++c)
      for (auto v : p[c]) cell_of[v] = static_cast<std::uint32_t>(c);

    counts.assign(n * width, 0);
    for (Vertex u = 0; u < n; ++u) {
      auto* row = counts.data() + u * width;
      auto out = d.out_row(u);
      auto in = d.in_row(u);
      for (std::size_t w = 0; w < out.size(); ++w) {
        for (auto bits = out[w]; bits; bits &= bits - 1)
          ++row[cell_of[w * 64 + std::countr_zero(bits)]];
        for (auto bits = in[w]; bits; bits &= bits - 1)
          ++row[cells + cell_of[w * 64 + std::countr_zero(bits)]];
      }
    }

    auto less = [&](Vertex a, Vertex b) {
      const auto* ra = counts.data() + a * width;
      const auto* rb = counts.data() + b * width;
      return std::lexicographical_compare(ra, ra + width, rb, rb + width);
    };
    auto same = [&](Vertex a, Vertex b) {
      const auto* ra = counts.data() + a * width;
      return std::equal(ra, ra + width, counts.data() + b * width);
    };

    OrderedPartition next;
    next.reserve(cells);
    bool split = false;
    for (std::size_t c = 0; c < cells; ++c) {
      auto& cell = p[c];
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::sort(cell.begin(), cell.end(), [&](Vertex a, Vertex b) {
        return less(a, b) || (!less(b, a) && a < b);
      });
      std::size_t first_new = next.size();
      std::size_t begin = 0;
      for (std::size_t i = 1; i <= cell.size(); ++i) {
        if (i == cell.size() || !same(cell[begin], cell[i])) {
          next.emplace_back(cell.begin() + static_cast<std::ptrdiff_t>(begin),
                            cell.begin() + static_cast<std::ptrdiff_t>(i));
          begin = i;
        }
      }
      if (next.size() - first_new > 1) {
        split = true;
        if (trace) {
          std::uint64_t h = detail::mix(c, next.size() - first_new);
          for (std::size_t s = first_new; s < next.size(); ++s) {
            const auto* r = counts.data() + next[s][0] * width;
            h = detail::mix(h, next[s].size());
            for (std::size_t k = 0; k < width; ++k) h = detail::mix(h, r[k]);
          }
          trace->push_back(h);
        }
      }
    }
    p = std::move(next);
    if (!split) break;
  }
  if (trace) trace->push_back(p.size());
  return p;
}

/// Moves v to a singleton cell placed directly before the rest of cell t.
inline OrderedPartition individualize(const OrderedPartition& p, std::size_t t, Vertex v) {
  OrderedPartition out;
  out.reserve(p.size() + 1);
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (c != t) {
      out.push_back(p[c]);
      continue;
    }
    out.push_back({v});
    std::vector<Vertex> rest;
    rest.reserve(p[c].size() - 1);
    for (auto w : p[c])
      if (w != v) rest.push_back(w);
    out.push_back(std::move(rest));
  }
  return out;
}

/// Smallest non-singleton cell, earliest on ties; p.size() when discrete.
inline std::size_t target_cell(const OrderedPartition& p) {
  std::size_t best = p.size();
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (p[c].size() > 1 && (best == p.size() || p[c].size() < p[best].size())) best = c;
  }
  return best;
}

inline bool same_shape(const OrderedPartition& a, const OrderedPartition& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c].size() != b[c].size()) return false;
  return true;
}

}  // namespace tmsr

#endif  // TMSR_REFINEMENT_HPP
