#ifndef TMSR_DIGRAPH_HPP
#define TMSR_DIGRAPH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "tmsr/error.hpp"
#include "tmsr/group.hpp"

namespace tmsr {

using Vertex = std::uint32_t;

/// Group element g placed in block i, written g_i.
struct VertexLabel {
  Element element = 0;
  std::uint32_t block = 0;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Dense digraph without loops. Out- and in-neighbourhoods are both stored as
/// bitset rows so arc tests and neighbourhood counts stay O(1) per word.
class Digraph {
 public:
  using Word = std::uint64_t;

  Digraph() = default;

  explicit Digraph(std::size_t vertex_count) { reset(vertex_count); }

  /// Builds the digraph whose arcs are exactly the pairs (u, v), u != v, for
  /// which has_arc(u, v) holds.
  template <class Pred>
    requires std::is_invocable_r_v<bool, Pred, Vertex, Vertex>
  Digraph(std::size_t vertex_count, Pred&& has_arc) {
    reset(vertex_count);
    for (Vertex u = 0; u < vertex_count; ++u)
      for (Vertex v = 0; v < vertex_count; ++v)
        if (u != v && has_arc(u, v)) set_arc(u, v);
  }

  Digraph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
    reset(vertex_count);
    for (auto [u, v] : arcs) {
      if (u >= vertex_count || v >= vertex_count) {
        throw Error(Errc::precondition_violated, "arc endpoint out of range");
      }
      if (u == v) throw Error(Errc::precondition_violated, "loops are not allowed");
      set_arc(u, v);
    }
  }

  /// Attaches g_i labels; `group_order` and `blocks` describe the full layout
  /// the labels come from.
  Digraph with_labels(std::vector<VertexLabel> labels, std::size_t group_order,
                      std::size_t blocks) const {
    if (labels.size() != n_) {
      throw Error(Errc::precondition_violated, "one label per vertex required");
    }
    Digraph out = *this;
    out.labels_ = std::move(labels);
    out.group_order_ = group_order;
    out.blocks_ = blocks;
    return out;
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return (out_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::span<const Word> out_row(Vertex u) const noexcept {
    return {out_.data() + u * words_, words_};
  }
  std::span<const Word> in_row(Vertex u) const noexcept {
    return {in_.data() + u * words_, words_};
  }

  std::size_t out_degree(Vertex u) const noexcept { return popcount(out_row(u)); }
  std::size_t in_degree(Vertex u) const noexcept { return popcount(in_row(u)); }

  std::vector<Vertex> out_neighbors(Vertex u) const { return members(checked(u, out_row(u))); }
  std::vector<Vertex> in_neighbors(Vertex u) const { return members(checked(u, in_row(u))); }

  std::size_t arc_count() const noexcept { return popcount(out_); }

  /// Arcs in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> arcs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(arc_count());
    for (Vertex u = 0; u < n_; ++u)
      for (auto v : members(out_row(u))) out.emplace_back(u, v);
    return out;
  }

  bool labeled() const noexcept { return !labels_.empty(); }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  std::size_t group_order() const noexcept { return labeled() ? group_order_ : n_; }
  std::size_t blocks() const noexcept { return labeled() ? blocks_ : 1; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  static std::size_t popcount(std::span<const Word> row) noexcept {
    std::size_t c = 0;
    for (auto w : row) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  static std::vector<Vertex> members(std::span<const Word> row) {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (Word bits = row[w]; bits; bits &= bits - 1) {
        out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      }
    }
    return out;
  }

  std::span<const Word> checked(Vertex u, std::span<const Word> row) const {
    if (u >= n_) throw Error(Errc::precondition_violated, "vertex out of range");
    return row;
  }

  void reset(std::size_t n) {
    n_ = n;
    words_ = (n + 63) / 64;
    out_.assign(n_ * words_, 0);
    in_.assign(n_ * words_, 0);
  }

  void set_arc(Vertex u, Vertex v) noexcept {
    out_[u * words_ + v / 64] |= Word{1} << (v % 64);
    in_[v * words_ + u / 64] |= Word{1} << (u % 64);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> out_;
  std::vector<Word> in_;
  std::vector<VertexLabel> labels_;
  std::size_t group_order_ = 0;
  std::size_t blocks_ = 0;
};

/// Sub-digraph on `vertices` (in the given order) plus the map back to the
/// parent's vertex ids.
struct InducedSubdigraph {
  Digraph graph;
  std::vector<Vertex> original;
};

inline InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<Vertex>& vertices) {
  for (auto v : vertices) {
    if (v >= d.vertex_count()) throw Error(Errc::precondition_violated, "vertex out of range");
  }
  Digraph g(vertices.size(), [&](Vertex a, Vertex b) { return d.has_arc(vertices[a], vertices[b]); });
  if (d.labeled()) {
    std::vector<VertexLabel> labels;
    labels.reserve(vertices.size());
    for (auto v : vertices) labels.push_back(d.labels()[v]);
    g = g.with_labels(std::move(labels), d.group_order(), d.blocks());
  }
  return {std::move(g), vertices};
}

inline bool is_tournament(const Digraph& d) {
  const auto n = static_cast<Vertex>(d.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
  return true;
}

inline bool is_regular_tournament(const Digraph& d) {
  const auto n = d.vertex_count();
  if (n % 2 == 0 && n != 0) return false;
  if (!is_tournament(d)) return false;
  for (Vertex u = 0; u < n; ++u)
    if (d.out_degree(u) != (n - 1) / 2) return false;
  return true;
}

}  // namespace tmsr

#endif  // TMSR_DIGRAPH_HPP
