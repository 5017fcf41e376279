#pragma once

// Command-line front end. Kept in a header so the test suite can drive dispatch() in-process.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsym/gsym.hpp"

namespace gsym::cli {

using nlohmann::json;

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Loads a graph from a file (graph6 or edge list), or from a family expression such as "P4"
/// or "P3xP4s" when no file of that name exists.
inline Graph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_graph_file(arg);
  try {
    Instance inst = parse_instance(arg);
    if (inst.factors.size() > 1 || inst.power > 1 || inst.factors[0].family != Family::other) return inst.graph();
  } catch (const std::exception&) {
  }
  throw parse_error("cannot open '" + arg + "'");
}

inline json to_json(const DistinguishingResult& r) {
  json j;
  j["mode"] = to_string(r.mode);
  j["group_order"] = r.group_order;
  if (!r.defined()) {
    j["value"] = nullptr;
    j["lower"] = nullptr;
    j["upper"] = nullptr;
    j["witness"] = nullptr;
    j["reason"] = "automorphism-fixes-every-edge";
    return j;
  }
  j["value"] = r.value;
  j["lower"] = r.lower;
  j["upper"] = r.value;
  j["witness"] = r.witness;
  j["reason"] = to_string(r.reason);
  return j;
}

inline json to_json(const BoundReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["instance"] = r.instance;
  j["factor_orders"] = r.factor_orders;
  j["verdict"] = to_string(r.verdict);
  j["hypotheses"] = json::array();
  for (const auto& h : r.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"held", h.held}, {"required", h.required}});
  j["quantities"] = json::array();
  for (const auto& q : r.quantities) {
    json jq{{"name", q.name}, {"mode", q.mode}};
    jq["lower"] = q.defined() ? json(q.lower) : json(nullptr);
    jq["upper"] = q.defined() ? json(q.upper) : json(nullptr);
    j["quantities"].push_back(jq);
  }
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json jc{{"name", c.name}, {"detail", c.detail}};
    jc["outcome"] = c.outcome ? json(*c.outcome) : json(nullptr);
    j["checks"].push_back(jc);
  }
  j["notes"] = r.notes;
  j["witness_kind"] = r.witness_kind.empty() ? json(nullptr) : json(r.witness_kind);
  j["witness"] = r.witness;
  return j;
}

namespace detail {

inline std::string join(const std::vector<Label>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

inline void print_result(std::ostream& out, const char* what, const DistinguishingResult& r) {
  if (!r.defined()) {
    out << what << ": undefined (a non-identity automorphism fixes every edge)\n";
    return;
  }
  out << what << ": " << r.value << " (" << to_string(r.mode) << ")\n";
  if (r.lower != r.value) out << "bracket: [" << r.lower << ", " << r.value << "]\n";
  out << "lower bound reason: " << to_string(r.reason) << "\n";
  out << "|Aut|: " << r.group_order << "\n";
  out << "witness: " << join(r.witness) << "\n";
}

inline void print_report(std::ostream& out, const BoundReport& r) {
  std::string tag = to_string(r.verdict);
  for (auto& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  out << "[" << tag << "] " << r.theorem << " " << r.instance << "\n";
  for (const auto& h : r.hypotheses) {
    if (!h.held) out << "    hypothesis failed: " << h.name << (h.required ? "" : " (optional)") << "\n";
  }
  for (const auto& q : r.quantities) {
    out << "    " << q.name << " = ";
    if (!q.defined()) out << "undefined";
    else if (q.exact()) out << q.lower;
    else out << "[" << q.lower << ", " << q.upper << "]";
    out << "\n";
  }
  for (const auto& c : r.checks) {
    out << "    " << (c.outcome ? (*c.outcome ? "ok   " : "FAIL ") : "???  ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  for (const auto& n : r.notes) out << "    note: " << n << "\n";
}

}  // namespace detail

/// Parses argv and runs one verb. Returns the process exit status.
inline int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph symmetry toolkit: products, automorphism groups, distinguishing numbers"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON document");

  std::size_t exact_bound = 12;
  std::size_t exact_edge_bound = 14;
  std::size_t aut_bound = 20;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  auto add_budgets = [&](CLI::App* sub) {
    sub->add_option("--exact-bound", exact_bound, "Largest vertex count minimised exhaustively")
        ->envname("GSYM_EXACT_BOUND");
    sub->add_option("--exact-edge-bound", exact_edge_bound, "Largest edge count minimised exhaustively")
        ->envname("GSYM_EXACT_EDGE_BOUND");
    sub->add_option("--aut-bound", aut_bound, "Largest vertex count for automorphism search")
        ->envname("GSYM_AUT_BOUND");
    sub->add_option("--trials", trials, "Randomized witness trials per palette size")->envname("GSYM_TRIALS");
    sub->add_option("--seed", seed, "Seed for randomized witness search")->envname("GSYM_SEED");
    sub->add_flag("--json", as_json, "Emit one JSON document");
  };

  std::string op = "strong";
  std::string format = "graph6";
  std::vector<std::string> product_inputs;
  auto* product_cmd = app.add_subcommand("product", "Build a product of two graphs");
  product_cmd->add_option("--op", op, "cartesian, direct or strong")
      ->check(CLI::IsMember({"cartesian", "direct", "strong"}));
  product_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));
  product_cmd->add_option("graphs", product_inputs, "Two graph files")->required()->expected(2);
  product_cmd->add_flag("--json", as_json, "Emit one JSON document");

  std::string input;
  bool elements = false;
  auto* aut_cmd = app.add_subcommand("autgroup", "Enumerate the automorphism group");
  aut_cmd->add_option("graph", input, "Graph file")->required();
  aut_cmd->add_flag("--elements", elements, "List every element in one-line notation");
  add_budgets(aut_cmd);

  auto* distnum_cmd = app.add_subcommand("distnum", "Distinguishing number D(G)");
  distnum_cmd->add_option("graph", input, "Graph file")->required();
  add_budgets(distnum_cmd);

  auto* distidx_cmd = app.add_subcommand("distidx", "Distinguishing index D'(G)");
  distidx_cmd->add_option("graph", input, "Graph file")->required();
  add_budgets(distidx_cmd);

  auto* sthin_cmd = app.add_subcommand("sthin", "S-relation classes and S-thinness");
  sthin_cmd->add_option("graph", input, "Graph file")->required();
  sthin_cmd->add_flag("--json", as_json, "Emit one JSON document");

  std::size_t path_bound = 16;
  auto* traceable_cmd = app.add_subcommand("traceable", "Hamiltonian path search");
  traceable_cmd->add_option("graph", input, "Graph file")->required();
  traceable_cmd->add_option("--bound", path_bound, "Largest vertex count searched")->envname("GSYM_PATH_BOUND");
  traceable_cmd->add_flag("--json", as_json, "Emit one JSON document");

  bool all = false;
  std::string corpus_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check every theorem on a corpus");
  verify_cmd->add_flag("--all", all, "Run every verification (the default)");
  verify_cmd->add_option("--corpus", corpus_file, "Corpus file: one graph6 string or family expression per line");
  add_budgets(verify_cmd);
  aut_bound = 0;  // 0 = per-verb default, resolved below

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  DistinguishingOptions dopts;
  dopts.exact_bound = exact_bound;
  dopts.exact_edge_bound = exact_edge_bound;
  dopts.trials = trials;
  dopts.seed = seed;
  dopts.limits.max_vertices = aut_bound ? aut_bound : 20;

  try {
    if (*product_cmd) {
      const Graph a = load_graph(product_inputs[0]);
      const Graph b = load_graph(product_inputs[1]);
      const ProductKind kind = op == "cartesian" ? ProductKind::cartesian
                               : op == "direct"  ? ProductKind::direct
                                                 : ProductKind::strong;
      const Graph p = product(a, b, kind);
      const Format f = format == "edgelist" ? Format::edgelist : Format::graph6;
      if (as_json) {
        out << json{{"op", op}, {"order", p.order()}, {"size", p.size()}, {"graph", serialize(p, f)}}.dump() << "\n";
      } else {
        out << serialize(p, f);
      }
      return kSuccess;
    }

    if (*aut_cmd) {
      const Graph g = load_graph(input);
      const auto group = automorphism_group(g, dopts.limits);
      if (as_json) {
        json j{{"order", group.order()}};
        if (elements) {
          j["elements"] = json::array();
          for (const auto& p : group) j["elements"].push_back(p.image());
        }
        out << j.dump() << "\n";
      } else {
        out << "order " << group.order() << "\n";
        if (elements)
          for (const auto& p : group) out << p.to_string() << "\n";
      }
      return kSuccess;
    }

    if (*distnum_cmd || *distidx_cmd) {
      const Graph g = load_graph(input);
      const bool vertex = distnum_cmd->parsed();
      const auto r = vertex ? distinguishing_number(g, dopts) : distinguishing_index(g, dopts);
      if (as_json) {
        out << to_json(r).dump() << "\n";
      } else {
        detail::print_result(out, vertex ? "D" : "D'", r);
      }
      return kSuccess;
    }

    if (*sthin_cmd) {
      const Graph g = load_graph(input);
      const auto partition = s_partition(g);
      const bool thin = partition.classes.size() == g.order();
      if (as_json) {
        out << json{{"s_thin", thin}, {"classes", partition.classes}}.dump() << "\n";
      } else {
        out << (thin ? "S-thin" : "not S-thin") << "\n";
        for (const auto& c : partition.classes) {
          if (c.size() < 2) continue;
          out << "class:";
          for (Vertex v : c) out << " " << v;
          out << "\n";
        }
      }
      return kSuccess;
    }

    if (*traceable_cmd) {
      const Graph g = load_graph(input);
      const auto route = hamiltonian_path(g, HamiltonianLimits{path_bound});
      if (as_json) {
        json j{{"traceable", route.has_value()}};
        j["path"] = route ? json(*route) : json(nullptr);
        out << j.dump() << "\n";
      } else {
        out << (route ? "traceable" : "not traceable") << "\n";
        if (route) {
          out << "path:";
          for (Vertex v : *route) out << " " << v;
          out << "\n";
        }
      }
      return kSuccess;
    }

    if (*verify_cmd) {
      (void)all;
      std::vector<Instance> corpus;
      if (corpus_file.empty()) {
        corpus = default_corpus();
      } else {
        std::ifstream in(corpus_file);
        if (!in) throw parse_error("cannot open '" + corpus_file + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        corpus = parse_corpus(buffer.str());
      }
      HarnessOptions hopts;
      hopts.dist = dopts;
      hopts.dist.limits.max_vertices = aut_bound ? aut_bound : 36;
      const auto reports = run_all(corpus, hopts);
      std::map<std::string, std::size_t> tally{{"pass", 0}, {"fail", 0}, {"not-applicable", 0}, {"inconclusive", 0}};
      for (const auto& r : reports) ++tally[to_string(r.verdict)];
      const bool ok = all_passed(reports);
      if (as_json) {
        json j;
        j["reports"] = json::array();
        for (const auto& r : reports) j["reports"].push_back(to_json(r));
        j["summary"] = tally;
        j["passed"] = ok;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& r : reports) detail::print_report(out, r);
        out << "\n" << reports.size() << " reports: " << tally["pass"] << " pass, " << tally["fail"] << " fail, "
            << tally["not-applicable"] << " not applicable, " << tally["inconclusive"] << " inconclusive\n";
      }
      return ok ? kSuccess : kVerificationFailed;
    }
  } catch (const budget_exceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace gsym::cli
