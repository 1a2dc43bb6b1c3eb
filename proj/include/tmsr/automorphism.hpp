#ifndef TMSR_AUTOMORPHISM_HPP
#define TMSR_AUTOMORPHISM_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "tmsr/digraph.hpp"
#include "tmsr/error.hpp"
#include "tmsr/permutation.hpp"
#include "tmsr/refinement.hpp"

namespace tmsr {

/// The full automorphism group, listed element by element in lexicographic
/// order of the mapping arrays.
struct AutGroup {
  std::size_t vertex_count = 0;
  std::vector<Permutation> elements;

  std::size_t order() const noexcept { return elements.size(); }
};

struct AutOptions {
  std::size_t ceiling = 512;
  /// Stop once more than this many automorphisms are known (0 = never). The
  /// result is then marked incomplete.
  std::size_t stop_above = 0;
};

struct AutSearchResult {
  AutGroup group;
  bool complete = true;
  /// Equitable partition of the root, before any individualization.
  OrderedPartition root_partition;
  std::size_t leaves_visited = 0;
};

namespace detail {

/// Individualization-refinement search mapping a fixed path in `left` onto
/// every compatible path in `right`. Each leaf yields one candidate bijection;
/// distinct leaves give distinct bijections.
class PathSearch {
 public:
  PathSearch(const Digraph& left, const Digraph& right) : left_(left), right_(right) {
    OrderedPartition p = refine(left_, unit_partition(left_.vertex_count()), &root_trace_);
    for (;;) {
      auto t = target_cell(p);
      levels_.push_back({p, t, {}});
      if (t == p.size()) break;
      Vertex v = *std::min_element(p[t].begin(), p[t].end());
      RefinementTrace trace;
      p = refine(left_, individualize(p, t, v), &trace);
      levels_.back().trace_after = std::move(trace);
    }
  }

  const OrderedPartition& root_partition() const { return levels_.front().partition; }

  /// Calls visit(leaf_bijection) on every leaf whose partition matches the
  /// left path; stops early when visit returns false.
  template <class Visit>
  std::size_t run(Visit&& visit) {
    leaves_ = 0;
    RefinementTrace trace;
    auto root = refine(right_, unit_partition(right_.vertex_count()), &trace);
    if (trace != root_trace_ || !same_shape(root, levels_.front().partition)) return 0;
    descend(0, root, visit);
    return leaves_;
  }

 private:
  struct Level {
    OrderedPartition partition;
    std::size_t target;
    RefinementTrace trace_after;
  };

  template <class Visit>
  bool descend(std::size_t depth, const OrderedPartition& q, Visit& visit) {
    const Level& level = levels_[depth];
    if (level.target == level.partition.size()) {
      ++leaves_;
      std::vector<Vertex> map(left_.vertex_count());
      for (std::size_t c = 0; c < q.size(); ++c) map[level.partition[c][0]] = q[c][0];
      return visit(Permutation(std::move(map)));
    }
    const Level& next = levels_[depth + 1];
    for (auto w : q[level.target]) {
      RefinementTrace trace;
      auto child = refine(right_, individualize(q, level.target, w), &trace);
      if (trace != level.trace_after || !same_shape(child, next.partition)) continue;
      if (!descend(depth + 1, child, visit)) return false;
    }
    return true;
  }

  const Digraph& left_;
  const Digraph& right_;
  RefinementTrace root_trace_;
  std::vector<Level> levels_;
  std::size_t leaves_ = 0;
};

inline void check_ceiling(const Digraph& d, std::size_t ceiling) {
  if (d.vertex_count() > ceiling) {
    throw Error(Errc::ceiling_exceeded, std::to_string(d.vertex_count()) +
                                            " vertices exceed the automorphism ceiling of " +
                                            std::to_string(ceiling));
  }
}

}  // namespace detail

inline AutSearchResult search_automorphisms(const Digraph& d, const AutOptions& opts = {}) {
  detail::check_ceiling(d, opts.ceiling);
  AutSearchResult result;
  result.group.vertex_count = d.vertex_count();
  detail::PathSearch search(d, d);
  result.root_partition = search.root_partition();
  result.leaves_visited = search.run([&](const Permutation& p) {
    if (!is_automorphism(d, p)) return true;
    result.group.elements.push_back(p);
    if (opts.stop_above && result.group.elements.size() > opts.stop_above) {
      result.complete = false;
      return false;
    }
    return true;
  });
  std::sort(result.group.elements.begin(), result.group.elements.end());
  return result;
}

inline AutGroup automorphism_group(const Digraph& d, std::size_t ceiling = 512) {
  return search_automorphisms(d, {.ceiling = ceiling}).group;
}

/// Exhaustive filter over all N! permutations; the independent oracle for
/// automorphism_group.
inline AutGroup brute_force_automorphisms(const Digraph& d) {
  if (d.vertex_count() > 8) {
    throw Error(Errc::too_large, "brute force is limited to 8 vertices");
  }
  AutGroup a;
  a.vertex_count = d.vertex_count();
  std::vector<Vertex> m(d.vertex_count());
  std::iota(m.begin(), m.end(), Vertex{0});
  do {
    Permutation p(m);
    if (is_automorphism(d, p)) a.elements.push_back(std::move(p));
  } while (std::next_permutation(m.begin(), m.end()));
  return a;  // next_permutation already walks in lexicographic order
}

inline std::optional<Permutation> find_isomorphism(const Digraph& a, const Digraph& b,
                                                   std::size_t ceiling = 512) {
  detail::check_ceiling(a, ceiling);
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return std::nullopt;
  std::optional<Permutation> found;
  detail::PathSearch search(a, b);
  search.run([&](const Permutation& p) {
    if (!is_isomorphism(a, b, p)) return true;
    found = p;
    return false;
  });
  return found;
}

inline bool are_isomorphic(const Digraph& a, const Digraph& b, std::size_t ceiling = 512) {
  return find_isomorphism(a, b, ceiling).has_value();
}

/// Orbits as sorted lists, ordered by their smallest vertex.
inline std::vector<std::vector<Vertex>> orbit_partition(const AutGroup& a) {
  const std::size_t n = a.vertex_count;
  std::vector<Vertex> root(n);
  std::iota(root.begin(), root.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& p : a.elements) {
    for (Vertex v = 0; v < n; ++v) {
      auto x = find(v), y = find(p[v]);
      if (x != y) root[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<std::vector<Vertex>> orbits;
  std::vector<std::size_t> slot(n, n);
  for (Vertex v = 0; v < n; ++v) {
    auto r = find(v);
    if (slot[r] == n) {
      slot[r] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(v);
  }
  return orbits;
}

/// No non-identity element fixes a vertex.
inline bool is_semiregular(const AutGroup& a) {
  return std::all_of(a.elements.begin(), a.elements.end(),
                     [](const Permutation& p) { return p.is_identity() || p.fixed_points() == 0; });
}

}  // namespace tmsr

#endif  // TMSR_AUTOMORPHISM_HPP
