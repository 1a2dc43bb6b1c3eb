#ifndef TMSR_IO_HPP
#define TMSR_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmsr/audit.hpp"
#include "tmsr/automorphism.hpp"
#include "tmsr/builder.hpp"
#include "tmsr/digraph.hpp"
#include "tmsr/error.hpp"
#include "tmsr/group.hpp"
#include "tmsr/trr.hpp"

// JSON objects use nlohmann::json's default std::map storage, so keys are
// always emitted in sorted order.

namespace tmsr {

using json = nlohmann::json;

namespace detail {

template <class F>
auto parsing(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::parse_error, std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

inline json group_to_json(const Group& g) {
  json rows = json::array();
  for (Element a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Element b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  return {{"order", g.order()}, {"names", g.names()}, {"table", std::move(rows)}};
}

inline Group group_from_json(const json& j) {
  return detail::parsing("group", [&] {
    const auto n = j.at("order").get<std::size_t>();
    std::vector<Element> table;
    const auto& rows = j.at("table");
    if (rows.size() != n) throw Error(Errc::parse_error, "group table has the wrong number of rows");
    for (const auto& row : rows) {
      if (row.size() != n) throw Error(Errc::parse_error, "group table row has the wrong length");
      for (const auto& v : row) table.push_back(v.get<Element>());
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return Group(n, std::move(table), std::move(names));
  });
}

/// {"n", "m", "vertex_labels": [[g, i], ...], "arcs": [[u, v], ...]}, arcs in
/// lexicographic order. Unlabeled digraphs are written as one block.
inline json digraph_to_json(const Digraph& d) {
  json labels = json::array();
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (d.labeled()) labels.push_back({d.labels()[v].element, d.labels()[v].block});
    else labels.push_back({v, 0});
  }
  json arcs = json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return {{"n", d.group_order()}, {"m", d.blocks()}, {"vertex_labels", std::move(labels)},
          {"arcs", std::move(arcs)}};
}

inline Digraph digraph_from_json(const json& j) {
  return detail::parsing("graph", [&] {
    const auto n = j.at("n").get<std::size_t>();
    const auto m = j.at("m").get<std::size_t>();
    const auto& lab = j.at("vertex_labels");
    std::vector<VertexLabel> labels;
    for (const auto& l : lab) labels.push_back({l.at(0).get<Element>(), l.at(1).get<std::uint32_t>()});
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (const auto& a : j.at("arcs")) arcs.emplace_back(a.at(0).get<Vertex>(), a.at(1).get<Vertex>());
    Digraph d(labels.size(), arcs);
    return d.with_labels(std::move(labels), n, m);
  });
}

/// Arcs only; vertices are labelled "g@i" when a group is given.
inline std::string digraph_to_dot(const Digraph& d, const Group* g = nullptr) {
  auto label = [&](Vertex v) {
    if (!d.labeled()) return std::to_string(v);
    const auto& l = d.labels()[v];
    return (g ? g->name(l.element) : std::to_string(l.element)) + "@" + std::to_string(l.block);
  };
  std::string out = "digraph G {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + label(v) + "\"];\n";
  }
  for (auto [u, v] : d.arcs()) out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  return out + "}\n";
}

inline CaseTag case_from_string(const std::string& s) {
  if (s == "CASE_I") return CaseTag::case_i;
  if (s == "CASE_II") return CaseTag::case_ii;
  if (s == "CASE_III") return CaseTag::case_iii;
  throw Error(Errc::parse_error, "unknown case tag '" + s + "'");
}

inline Variant variant_from_string(const std::string& s) {
  if (s == "TRR") return Variant::trr;
  if (s == "Z3SQ") return Variant::z3sq;
  if (s == "Z3CU") return Variant::z3cu;
  throw Error(Errc::parse_error, "unknown variant '" + s + "'");
}

inline json instance_to_json(const TmsrInstance& inst) {
  json cells = json::array();
  for (const auto& row : inst.matrix.cells) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.members());
    cells.push_back(std::move(r));
  }
  return {{"group", group_to_json(inst.group)},
          {"m", inst.matrix.m},
          {"k", inst.matrix.k},
          {"case", to_string(inst.matrix.case_tag)},
          {"variant", to_string(inst.matrix.variant)},
          {"x", inst.matrix.x},
          {"T", std::move(cells)},
          {"graph", digraph_to_json(inst.graph)}};
}

/// Reads an instance back. The graph is taken verbatim from the file; nothing
/// is rebuilt from the matrix.
inline TmsrInstance instance_from_json(const json& j) {
  return detail::parsing("instance", [&] {
    Group g = group_from_json(j.at("group"));
    ConnectionMatrix cm;
    cm.m = j.at("m").get<std::size_t>();
    cm.k = (cm.m - 1) / 2;
    cm.case_tag = case_from_string(j.at("case").get<std::string>());
    cm.variant = variant_from_string(j.at("variant").get<std::string>());
    cm.x = j.at("x").get<Element>();
    const auto& t = j.at("T");
    if (t.size() != cm.m) throw Error(Errc::parse_error, "T must have m rows");
    for (const auto& row : t) {
      if (row.size() != cm.m) throw Error(Errc::parse_error, "T must have m columns");
      std::vector<ElementSet> r;
      for (const auto& c : row) r.emplace_back(g.order(), c.get<std::vector<Element>>());
      cm.cells.push_back(std::move(r));
    }
    Digraph d = digraph_from_json(j.at("graph"));
    if (d.vertex_count() != g.order() * cm.m) {
      throw Error(Errc::parse_error, "graph has the wrong number of vertices");
    }
    return TmsrInstance{std::move(g), std::move(cm), std::move(d)};
  });
}

/// Elements are listed only up to `max_listed` (the orbit data is always there).
inline json aut_group_to_json(const AutGroup& a, std::size_t max_listed = 1000) {
  json j = {{"order", a.order()}, {"semiregular", is_semiregular(a)}, {"orbits", orbit_partition(a)}};
  if (a.order() <= max_listed) {
    json el = json::array();
    for (const auto& p : a.elements) el.push_back(p.mapping());
    j["elements"] = std::move(el);
  }
  return j;
}

inline json trr_to_json(const std::string& group_label, const TrrResult& r) {
  json j = {{"group", group_label}, {"outcome", to_string(r.outcome)}, {"candidates", r.candidates}};
  if (r.outcome == TrrResult::Outcome::found) {
    j["R"] = r.r.members();
    j["x"] = *r.r.begin();
  } else {
    j["R"] = json::array();
    j["x"] = nullptr;
  }
  return j;
}

inline json claim_value_to_json(const ClaimValue& v) {
  return std::visit([](const auto& x) { return json(x); }, v);
}

inline json audit_to_json(const AuditReport& r) {
  json lemmas = json::array();
  for (const auto& l : r.lemmas) {
    json claims = json::array();
    for (const auto& c : l.claims) {
      claims.push_back({{"i", c.i ? json(*c.i) : json(nullptr)},
                        {"statistic", c.statistic},
                        {"observed", claim_value_to_json(c.observed)},
                        {"expected", claim_value_to_json(c.expected)},
                        {"minimizers", c.minimizers},
                        {"pass", c.pass}});
    }
    json e = {{"lemma", l.lemma}, {"claims", std::move(claims)}, {"pass", l.pass()}};
    if (!l.note.empty()) e["note"] = l.note;
    if (l.skipped) e["skipped"] = true;
    if (!l.isomorphism_matrix.empty()) e["isomorphism_matrix"] = l.isomorphism_matrix;
    lemmas.push_back(std::move(e));
  }
  return {{"case", to_string(r.case_tag)}, {"lemmas", std::move(lemmas)}, {"pass", r.pass()}};
}

}  // namespace tmsr

#endif  // TMSR_IO_HPP
