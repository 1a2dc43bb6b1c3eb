#ifndef TMSR_PERMUTATION_HPP
#define TMSR_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

#include "tmsr/digraph.hpp"
#include "tmsr/error.hpp"

namespace tmsr {

/// Bijection on {0, ..., N-1}; maps v to mapping()[v].
///
/// Products are written left to right: `a.then(b)` applies a first and then b,
/// so (a.then(b))[v] == b[a[v]].
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Vertex> mapping) : map_(std::move(mapping)) {
    std::vector<bool> hit(map_.size(), false);
    for (auto v : map_) {
      if (v >= map_.size() || hit[v]) {
        throw Error(Errc::precondition_violated, "mapping is not a bijection");
      }
      hit[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Vertex> m(n);
    std::iota(m.begin(), m.end(), Vertex{0});
    Permutation p;
    p.map_ = std::move(m);
    return p;
  }

  std::size_t size() const noexcept { return map_.size(); }
  Vertex operator[](Vertex v) const noexcept { return map_[v]; }
  const std::vector<Vertex>& mapping() const noexcept { return map_; }

  Permutation then(const Permutation& next) const {
    if (next.size() != size()) {
      throw Error(Errc::precondition_violated, "permutations of different degree");
    }
    Permutation p;
    p.map_.resize(size());
    for (std::size_t v = 0; v < size(); ++v) p.map_[v] = next.map_[map_[v]];
    return p;
  }

  Permutation inverse() const {
    Permutation p;
    p.map_.resize(size());
    for (std::size_t v = 0; v < size(); ++v) p.map_[map_[v]] = static_cast<Vertex>(v);
    return p;
  }

  bool is_identity() const noexcept {
    for (std::size_t v = 0; v < size(); ++v)
      if (map_[v] != v) return false;
    return true;
  }

  std::size_t fixed_points() const noexcept {
    std::size_t c = 0;
    for (std::size_t v = 0; v < size(); ++v) c += map_[v] == v;
    return c;
  }

  /// Smallest t >= 1 with p^t = id.
  std::size_t order() const {
    std::size_t result = 1;
    std::vector<bool> seen(size(), false);
    for (std::size_t v = 0; v < size(); ++v) {
      if (seen[v]) continue;
      std::size_t len = 0;
      for (auto w = v; !seen[w]; w = map_[w]) {
        seen[w] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.map_ <=> b.map_; }

 private:
  std::vector<Vertex> map_;
};

/// True iff p maps `from` onto `to` arc for arc.
inline bool is_isomorphism(const Digraph& from, const Digraph& to, const Permutation& p) {
  if (from.vertex_count() != to.vertex_count() || p.size() != from.vertex_count() ||
      from.arc_count() != to.arc_count()) {
    return false;
  }
  for (Vertex u = 0; u < from.vertex_count(); ++u) {
    if (from.out_degree(u) != to.out_degree(p[u])) return false;
    for (auto v : from.out_neighbors(u))
      if (!to.has_arc(p[u], p[v])) return false;
  }
  return true;
}

inline bool is_automorphism(const Digraph& d, const Permutation& p) {
  return is_isomorphism(d, d, p);
}

}  // namespace tmsr

#endif  // TMSR_PERMUTATION_HPP
