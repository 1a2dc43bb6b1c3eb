#ifndef TMSR_GROUP_HPP
#define TMSR_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmsr/error.hpp"

namespace tmsr {

using Element = std::uint32_t;

enum class AssociativityCheck {
  automatic,  // exhaustive up to order 64, sampled above
  full,
};

/// A finite group given by its multiplication table.
///
/// Element 0 is always the identity. Tables whose identity sits elsewhere are
/// re-indexed on construction. Instances are immutable.
class Group {
 public:
  static constexpr std::size_t exhaustive_associativity_limit = 64;

  /// Validates the group axioms over a row-major n*n table and normalizes the
  /// identity to index 0. Throws Error(not_a_group) naming the failed axiom
  /// and its witnesses.
  Group(std::size_t order, std::vector<Element> table,
        std::vector<std::string> names = {},
        AssociativityCheck check = AssociativityCheck::automatic) {
    if (order == 0) {
      throw Error(Errc::not_a_group, "a group needs at least one element");
    }
    if (table.size() != order * order) {
      throw Error(Errc::not_a_group, "table has " + std::to_string(table.size()) +
                                         " entries, expected " +
                                         std::to_string(order * order));
    }
    if (names.empty()) {
      names = default_names(order);
    }
    if (names.size() != order) {
      throw Error(Errc::not_a_group, "expected " + std::to_string(order) + " names");
    }
    n_ = order;
    mul_ = std::move(table);
    names_ = std::move(names);
    validate_and_normalize(check);
  }

  std::size_t order() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return mul_[a * n_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Row-major table, row a column b holds a*b.
  const std::vector<Element>& table() const noexcept { return mul_; }

  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_ && a.names_ == b.names_;
  }

  static std::vector<std::string> default_names(std::size_t order) {
    std::vector<std::string> out;
    out.reserve(order);
    for (std::size_t i = 0; i < order; ++i) {
      out.push_back(std::to_string(i));
    }
    return out;
  }

 private:
  std::string witness(std::initializer_list<std::size_t> idx) const {
    std::string s = "(";
    bool first = true;
    for (auto i : idx) {
      if (!first) s += ", ";
      first = false;
      s += i < names_.size() ? names_[i] : std::to_string(i);
    }
    return s + ")";
  }

  void validate_and_normalize(AssociativityCheck check) {
    const std::size_t n = n_;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mul_[a * n + b] >= n) {
          throw Error(Errc::not_a_group, "closure fails at " + witness({a, b}));
        }
      }
    }

    std::size_t e = n;
    for (std::size_t c = 0; c < n && e == n; ++c) {
      bool ok = true;
      for (std::size_t h = 0; h < n && ok; ++h) {
        ok = mul_[c * n + h] == h && mul_[h * n + c] == h;
      }
      if (ok) e = c;
    }
    if (e == n) {
      throw Error(Errc::not_a_group, "no two-sided identity element");
    }

    // Latin-square property gives cancellation on both sides.
    std::vector<std::size_t> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), n);
      for (std::size_t b = 0; b < n; ++b) {
        auto p = mul_[a * n + b];
        if (seen[p] != n) {
          throw Error(Errc::not_a_group, "left cancellation fails: " + witness({a, seen[p]}) +
                                             " and " + witness({a, b}) +
                                             " have the same product");
        }
        seen[p] = b;
      }
      std::fill(seen.begin(), seen.end(), n);
      for (std::size_t b = 0; b < n; ++b) {
        auto p = mul_[b * n + a];
        if (seen[p] != n) {
          throw Error(Errc::not_a_group, "right cancellation fails: " + witness({seen[p], a}) +
                                             " and " + witness({b, a}) +
                                             " have the same product");
        }
        seen[p] = b;
      }
    }

    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      if (mul_[mul_[a * n + b] * n + c] != mul_[a * n + mul_[b * n + c]]) {
        throw Error(Errc::not_a_group, "associativity fails at " + witness({a, b, c}));
      }
    };
    if (check == AssociativityCheck::full || n <= exhaustive_associativity_limit) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
    } else {
      // Fixed seed: construction stays deterministic.
      std::mt19937_64 rng(0x5eed'7a61eULL ^ n);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t t = 0; t < 10 * n; ++t) assoc(pick(rng), pick(rng), pick(rng));
    }

    {
      std::set<std::string> unique(names_.begin(), names_.end());
      if (unique.size() != n) {
        throw Error(Errc::not_a_group, "element names are not unique");
      }
      for (const auto& nm : names_) {
        if (nm.empty() || nm.find_first_of(",\n\r") != std::string::npos ||
            nm.front() == ' ' || nm.back() == ' ') {
          throw Error(Errc::not_a_group, "element name '" + nm + "' is not writable");
        }
      }
    }

    if (e != 0) {
      // New order: identity first, the rest in their original order.
      std::vector<std::size_t> old_of(n);
      std::vector<Element> new_of(n);
      old_of[0] = e;
      for (std::size_t o = 0, k = 1; o < n; ++o) {
        if (o != e) old_of[k++] = o;
      }
      for (std::size_t k = 0; k < n; ++k) new_of[old_of[k]] = static_cast<Element>(k);
      std::vector<Element> table(n * n);
      std::vector<std::string> names(n);
      for (std::size_t a = 0; a < n; ++a) {
        names[a] = names_[old_of[a]];
        for (std::size_t b = 0; b < n; ++b) {
          table[a * n + b] = new_of[mul_[old_of[a] * n + old_of[b]]];
        }
      }
      mul_ = std::move(table);
      names_ = std::move(names);
    }

    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mul_[a * n + b] == 0) {
          if (mul_[b * n + a] != 0) {
            throw Error(Errc::not_a_group, "inverse is not two-sided at " + witness({a, b}));
          }
          inv_[a] = static_cast<Element>(b);
        }
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> names_;
};

/// Sorted, duplicate-free set of elements of a group of a given order.
class ElementSet {
 public:
  ElementSet() = default;

  ElementSet(std::size_t parent_order, std::vector<Element> members)
      : order_(parent_order), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= order_) {
      throw Error(Errc::precondition_violated,
                  "element " + std::to_string(members_.back()) + " outside group of order " +
                      std::to_string(order_));
    }
  }

  ElementSet(std::size_t parent_order, std::initializer_list<Element> members)
      : ElementSet(parent_order, std::vector<Element>(members)) {}

  static ElementSet all(const Group& g) {
    std::vector<Element> v(g.order());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Element>(i);
    return {g.order(), std::move(v)};
  }

  std::size_t parent_order() const noexcept { return order_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Element>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(Element x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
  }

  ElementSet inverse(const Group& g) const {
    std::vector<Element> v;
    v.reserve(members_.size());
    for (auto x : members_) v.push_back(g.inv(x));
    return {order_, std::move(v)};
  }

  /// G minus this set.
  ElementSet complement() const {
    std::vector<Element> v;
    for (std::size_t x = 0; x < order_; ++x) {
      if (!contains(static_cast<Element>(x))) v.push_back(static_cast<Element>(x));
    }
    return {order_, std::move(v)};
  }

  ElementSet without(Element x) const {
    std::vector<Element> v;
    for (auto y : members_) {
      if (y != x) v.push_back(y);
    }
    return {order_, std::move(v)};
  }

  ElementSet intersect(const ElementSet& o) const {
    std::vector<Element> v;
    std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(v));
    return {order_, std::move(v)};
  }

  ElementSet unite(const ElementSet& o) const {
    std::vector<Element> v;
    std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(v));
    return {order_, std::move(v)};
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Element> members_;
};

/// True iff s and s^-1 are disjoint and together cover G \ {e}.
inline bool is_tournament_connection_set(const Group& g, const ElementSet& s) {
  auto inv = s.inverse(g);
  return s.intersect(inv).empty() &&
         s.unite(inv) == ElementSet::all(g).without(Group::identity());
}

inline Group cyclic_group(std::size_t n) {
  if (n == 0) throw Error(Errc::precondition_violated, "cyclic group needs n >= 1");
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>((i + j) % n);
  return {n, std::move(t)};
}

/// Componentwise product; element (i, j) has index i*|b| + j and is named
/// "(i:j)".
inline Group direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> t(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = "(" + a.name(static_cast<Element>(x / nb)) + ":" +
               b.name(static_cast<Element>(x % nb)) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      auto ia = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      auto ib = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      t[x * n + y] = static_cast<Element>(ia * nb + ib);
    }
  }
  return {n, std::move(t), std::move(names)};
}

inline std::size_t element_order(const Group& g, Element x) {
  if (x >= g.order()) {
    throw Error(Errc::precondition_violated, "element index out of range");
  }
  std::size_t t = 1;
  for (Element p = x; p != Group::identity(); p = g.mul(p, x)) ++t;
  return t;
}

inline bool is_abelian(const Group& g) {
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

/// Odd order, checked both through n and through the absence of involutions.
inline bool has_odd_order(const Group& g) {
  if (g.order() % 2 == 0) return false;
  for (Element x = 1; x < g.order(); ++x) {
    if (g.inv(x) == x) return false;
  }
  return true;
}

/// Reads the Cayley-table text format: first non-comment line is n, then n
/// rows of n indices, optionally followed by `names: a,b,...`. Lines starting
/// with `#` are comments.
inline Group parse_cayley_table(std::string_view text,
                                AssociativityCheck check = AssociativityCheck::automatic) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(line);
    }
  }
  if (lines.empty()) throw Error(Errc::parse_error, "empty Cayley table");

  auto parse_index = [](const std::string& tok, std::size_t line_no) -> std::size_t {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(Errc::parse_error,
                  "line " + std::to_string(line_no) + ": not a non-negative integer: '" + tok + "'");
    }
    try {
      return std::stoul(tok);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": integer out of range");
    }
  };

  std::size_t n = 0;
  {
    std::istringstream head(lines[0]);
    std::string tok, extra;
    head >> tok;
    if (head >> extra) throw Error(Errc::parse_error, "first line must hold only the order");
    n = parse_index(tok, 1);
    if (n == 0) throw Error(Errc::parse_error, "order must be positive");
  }

  std::vector<std::string> names;
  std::size_t rows_end = lines.size();
  if (lines.size() > 1 && lines.back().rfind("names:", 0) == 0) {
    std::string body = lines.back().substr(6);
    rows_end = lines.size() - 1;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto b = item.find_first_not_of(" \t");
      auto e = item.find_last_not_of(" \t");
      names.push_back(b == std::string::npos ? std::string{} : item.substr(b, e - b + 1));
    }
    if (names.size() != n) {
      throw Error(Errc::parse_error, "names line lists " + std::to_string(names.size()) +
                                         " names for " + std::to_string(n) + " elements");
    }
  }
  if (rows_end - 1 != n) {
    throw Error(Errc::parse_error, "expected " + std::to_string(n) + " table rows, found " +
                                       std::to_string(rows_end - 1));
  }

  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 1; r < rows_end; ++r) {
    std::istringstream in(lines[r]);
    std::string tok;
    std::size_t count = 0;
    while (in >> tok) {
      auto v = parse_index(tok, r + 1);
      // Indices >= n are left to the closure check, which names the witnesses.
      if (v > std::numeric_limits<Element>::max()) {
        throw Error(Errc::parse_error, "line " + std::to_string(r + 1) + ": integer out of range");
      }
      table.push_back(static_cast<Element>(v));
      ++count;
    }
    if (count != n) {
      throw Error(Errc::parse_error, "row " + std::to_string(r - 1) + " has " +
                                         std::to_string(count) + " entries, expected " +
                                         std::to_string(n));
    }
  }
  return {n, std::move(table), std::move(names), check};
}

/// Inverse of parse_cayley_table. The names line is emitted only when the
/// names differ from the plain index strings.
inline std::string write_cayley_table(const Group& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(g.mul(a, b));
    }
    out += '\n';
  }
  if (g.names() != Group::default_names(g.order())) {
    out += "names: ";
    for (Element a = 0; a < g.order(); ++a) {
      if (a) out += ',';
      out += g.name(a);
    }
    out += '\n';
  }
  return out;
}

}  // namespace tmsr

#endif  // TMSR_GROUP_HPP
