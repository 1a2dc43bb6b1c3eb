// tmsr: command-line front end for constructing and checking tournament m-semiregular representations.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 rejected input,
// 3 verification or audit failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tmsr/tmsr.hpp"

namespace {

using namespace tmsr;

enum Exit { ok = 0, usage = 1, rejected = 2, failed = 3 };

/// Usage-level problem (bad flag value, unreadable file).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Verification or audit produced a negative answer.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int log_level() {
  const char* v = std::getenv("TMSR_LOG");
  if (!v) return 1;
  std::string s = v;
  if (s == "quiet" || s == "0") return 0;
  if (s == "debug" || s == "2") return 2;
  return 1;
}

void log(int level, const std::string& msg) {
  if (level <= log_level()) std::cerr << "tmsr: " << msg << "\n";
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write to " + path + " failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::optional<std::size_t> parse_size(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) return std::nullopt;
  return std::stoul(s);
}

std::optional<Group> parse_group_spec(const std::string& spec, bool allow_file);

/// Splits "A x B" at the first separator for which both sides parse.
std::optional<Group> parse_product(const std::string& body) {
  for (const std::string sep : {"×", "x", "X", "*"}) {
    for (auto p = body.find(sep); p != std::string::npos; p = body.find(sep, p + 1)) {
      auto a = parse_group_spec(body.substr(0, p), false);
      auto b = parse_group_spec(body.substr(p + sep.size()), false);
      if (a && b) return direct_product(*a, *b);
    }
  }
  return std::nullopt;
}

std::optional<Group> parse_group_spec(const std::string& spec, bool allow_file) {
  if (spec.rfind("cyclic:", 0) == 0) {
    auto n = parse_size(spec.substr(7));
    if (!n || *n == 0) return std::nullopt;
    return cyclic_group(*n);
  }
  if (spec == "z3sq") return builtin_rs(ElementaryKind::z3_squared).group;
  if (spec == "z3cube" || spec == "z3cu") return builtin_rs(ElementaryKind::z3_cubed).group;
  if (spec.rfind("product:", 0) == 0) return parse_product(spec.substr(8));
  if (!allow_file) return std::nullopt;
  return parse_cayley_table(read_text(spec));
}

Group load_group(const std::string& spec) {
  bool looks_builtin = spec.rfind("cyclic:", 0) == 0 || spec.rfind("product:", 0) == 0;
  auto g = parse_group_spec(spec, !looks_builtin);
  if (!g) throw UsageError("cannot understand group spec '" + spec + "'");
  log(2, "group " + spec + " has order " + std::to_string(g->order()));
  return std::move(*g);
}

TmsrInstance load_instance(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
  return instance_from_json(j);
}

std::size_t default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

ElementSet parse_r(const Group& g, const std::string& text) {
  std::vector<Element> members;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    auto v = parse_size(item);
    if (!v || *v >= g.order()) throw UsageError("bad element index '" + item + "' in --R");
    members.push_back(static_cast<Element>(*v));
  }
  return {g.order(), std::move(members)};
}

int exit_for(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::not_a_group: return usage;
    case Errc::no_connection_set:
    case Errc::not_automorphism: return failed;
    default: return rejected;
  }
}

struct Options {
  std::string group;
  std::size_t m = 0;
  std::string out;
  std::string dot;
  std::string instance;
  std::string lemmas = "all";
  std::string r;
  std::size_t threads = default_threads();
  std::size_t ceiling = 512;
};

int cmd_build(const Options& o) {
  auto g = load_group(o.group);
  BuildOptions opts;
  opts.trr.threads = o.threads;
  if (!o.r.empty()) opts.r = parse_r(g, o.r);
  auto inst = build_tmsr(g, o.m, opts);
  log(1, "built " + std::string(to_string(inst.matrix.case_tag)) + " (" + std::string(to_string(inst.matrix.variant)) +
             ") instance on " + std::to_string(inst.graph.vertex_count()) + " vertices, x = " +
             inst.group.name(inst.matrix.x));
  write_text(o.out, dump(instance_to_json(inst)));
  if (!o.dot.empty()) write_text(o.dot, digraph_to_dot(inst.graph, &inst.group));
  return ok;
}

int cmd_verify(const Options& o) {
  auto inst = load_instance(o.instance);
  if (!is_tournament(inst.graph)) throw Failure("not a tournament");
  if (!is_regular_tournament(inst.graph)) throw Failure("not a regular tournament");
  auto r = check_main_theorem(inst, o.ceiling);
  std::cout << "order=" << r.aut_order << " orbits=" << r.orbit_count
            << " semiregular=" << (r.semiregular ? "yes" : "no") << "\n";
  if (!o.out.empty()) write_text(o.out, dump(aut_group_to_json(automorphism_group(inst.graph, o.ceiling))));
  if (!r.holds) throw Failure(r.failure);
  return ok;
}

int cmd_audit(const Options& o) {
  auto inst = load_instance(o.instance);
  std::vector<std::string> selection;
  if (o.lemmas != "all") {
    std::stringstream ss(o.lemmas);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) selection.push_back(item);
  }
  auto report = audit(inst, selection);
  write_text(o.out, dump(audit_to_json(report)));
  if (auto f = first_failure(report, inst.group)) throw Failure(*f);
  return ok;
}

int cmd_trr(const Options& o) {
  auto g = load_group(o.group);
  auto r = find_trr(g, {.bit_budget = 20, .threads = o.threads});
  log(2, std::to_string(r.candidates) + " candidates examined");
  write_text(o.out, dump(trr_to_json(o.group, r)));
  return ok;
}

int cmd_rt5(const Options& o) {
  auto r = enumerate_rt5();
  json j = {{"labeled_tournaments", r.labeled_tournaments},
            {"labeled_regular", r.labeled_regular},
            {"isomorphism_classes", r.isomorphism_classes},
            {"all_nontrivial", r.all_nontrivial},
            {"all_odd", r.all_odd},
            {"min_aut_order", r.min_aut_order},
            {"max_aut_order", r.max_aut_order},
            {"cayley_z5_found", r.cayley_z5_found},
            {"cayley_z5_aut_order", r.cayley_z5_aut_order}};
  write_text(o.out, dump(j));
  if (!r.all_nontrivial || !r.all_odd) throw Failure("a regular 5-vertex tournament is rigid or has even |Aut|");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Regular tournament m-semiregular representations of odd-order groups"};
  app.require_subcommand(1);
  const std::string group_help = "cyclic:N | z3sq | z3cube | product:AxB | path to a Cayley table";

  auto* build = app.add_subcommand("build", "construct a tournament and write it as JSON");
  build->add_option("--group", o.group, group_help)->required();
  build->add_option("--m", o.m, "number of blocks")->required();
  build->add_option("--out", o.out, "instance JSON (stdout when omitted)");
  build->add_option("--dot", o.dot, "also write the digraph in DOT format");
  build->add_option("--R", o.r, "comma-separated connection set, skipping the TRR search");
  build->add_option("--threads", o.threads, "worker threads for the TRR search");

  auto* verify = app.add_subcommand("verify", "check Aut(G) of an instance");
  verify->add_option("instance", o.instance)->required();
  verify->add_option("--out", o.out, "write the automorphism group as JSON");
  verify->add_option("--aut-ceiling", o.ceiling, "largest digraph the search accepts");

  auto* audit_cmd = app.add_subcommand("audit", "recompute the degree statistics of an instance");
  audit_cmd->add_option("instance", o.instance)->required();
  audit_cmd->add_option("--lemmas", o.lemmas, "comma-separated lemma ids, or all");
  audit_cmd->add_option("--out", o.out, "report JSON (stdout when omitted)");

  auto* trr = app.add_subcommand("trr", "search for a tournament regular representation");
  trr->add_option("--group", o.group, group_help)->required();
  trr->add_option("--threads", o.threads, "worker threads");
  trr->add_option("--out", o.out, "result JSON (stdout when omitted)");

  auto* rt5 = app.add_subcommand("rt5", "enumerate the regular tournaments on five vertices");
  rt5->add_option("--out", o.out, "report JSON (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*build) return cmd_build(o);
    if (*verify) return cmd_verify(o);
    if (*audit_cmd) return cmd_audit(o);
    if (*trr) return cmd_trr(o);
    if (*rt5) return cmd_rt5(o);
  } catch (const Failure& e) {
    std::cerr << "tmsr: " << e.what() << "\n";
    return failed;
  } catch (const UsageError& e) {
    std::cerr << "tmsr: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "tmsr: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "tmsr: internal error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
