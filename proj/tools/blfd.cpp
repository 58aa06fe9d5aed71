// Command-line front end. stdout carries machine-readable results, stderr
// carries prose. Exit codes: 0 yes/success, 1 no, 2 timeout or budget, 64
// usage, file or parse error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "blfd/cnf.hpp"
#include "blfd/decomp.hpp"
#include "blfd/factor.hpp"
#include "blfd/gadgets.hpp"
#include "blfd/girth9.hpp"
#include "blfd/graph.hpp"
#include "blfd/oracle.hpp"
#include "blfd/poly21.hpp"

namespace fs = std::filesystem;
using namespace blfd;

namespace {

constexpr int kYes = 0, kNo = 1, kTimeout = 2, kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

// Labelings on the command line use the caller's order of the bounds: A is
// the forest of the first bound.
EdgeLabeling to_caller(EdgeLabeling lab, const BoundSpec& b) {
  for (Part& p : lab) p = b.caller_part(p);
  return lab;
}

std::string named_header(const GadgetOutput& out) {
  std::vector<std::pair<Vertex, std::string>> names;
  for (const auto& [name, v] : out.marked) names.emplace_back(v, name);
  std::sort(names.begin(), names.end());
  std::string text = "# bounds " + out.bounds.to_string() + "\n";
  for (const auto& [v, name] : names) text += "# " + name + " " + std::to_string(v) + "\n";
  if (!out.attach.empty()) {
    text += "# attach";
    for (Vertex a : out.attach) text += " " + std::to_string(a);
    text += "\n";
  }
  return text;
}

Length parse_size(const std::string& s) {
  if (s == "inf" || s == "infinity") return kInfinite;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw UsageError("bad number '" + s + "'");
  return std::stoull(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded linear forest decompositions"};
  app.require_subcommand(1);

  std::string bounds_text = "inf,1", graph_path, second_path, out_path, cnf_path, kind = "short", variant = "k1";
  std::string k_text = "4", l_text = "0", assignment, witness_path, corpus_dir, write_corpus, emit_factor;
  std::uint64_t budget = 10'000'000, limit = 1'000'000;
  unsigned workers = 1;
  std::size_t alpha = 0, t = 2;
  bool count_only = false, distinguish_parallel = false, check = false, builtin = false;

  auto* solve = app.add_subcommand("solve", "Exact oracle: decide (k,l)-BLFD and print a labeling");
  solve->add_option("--bounds", bounds_text, "k,l with inf allowed")->capture_default_str();
  solve->add_option("--budget", budget, "Search node budget")->capture_default_str()->check(CLI::PositiveNumber);
  solve->add_option("--workers", workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  solve->add_option("graph", graph_path, "Graph file")->required();

  auto* solve21_cmd = app.add_subcommand("solve21", "Polynomial (2,1) solver");
  solve21_cmd->add_option("--emit-factor", emit_factor, "Write the factor instance to this file");
  solve21_cmd->add_option("graph", graph_path, "Graph file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a labeling against bounds");
  verify_cmd->add_option("--bounds", bounds_text, "k,l with inf allowed")->capture_default_str();
  verify_cmd->add_option("graph", graph_path, "Graph file")->required();
  verify_cmd->add_option("labeling", second_path, "Labeling file")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all labelings (count first)");
  enumerate_cmd->add_option("--bounds", bounds_text, "k,l with inf allowed")->capture_default_str();
  enumerate_cmd->add_option("--limit", limit, "Stop after this many labelings")->capture_default_str()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--budget", budget, "Search node budget")->capture_default_str()->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--count-only", count_only, "Print only the count");
  enumerate_cmd->add_flag("--distinguish-parallel", distinguish_parallel,
                          "Count labelings that only exchange parallel copies separately");
  enumerate_cmd->add_option("graph", graph_path, "Graph file")->required();

  auto* factor_cmd = app.add_subcommand("factor", "Solve a general factor instance");
  factor_cmd->add_option("instance", graph_path, "Instance file")->required();

  auto* gadget_cmd = app.add_subcommand("gadget", "Build a forcer or an (alpha,k,l)-gadget");
  gadget_cmd->add_option("--kind", kind, "long1|short1|short|long|symmetric|longinf|path|alpha")->capture_default_str();
  gadget_cmd->add_option("--k", k_text, "k")->capture_default_str();
  gadget_cmd->add_option("--l", l_text, "l")->capture_default_str();
  gadget_cmd->add_option("--alpha", alpha, "Number of attachment vertices (kind alpha)");
  gadget_cmd->add_option("--plan", witness_path, "Write the intended labeling here");
  gadget_cmd->add_flag("--check", check, "Enumerate and check the defining property");
  gadget_cmd->add_option("-o,--output", out_path, "Output graph file ('-' for stdout)")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the reduction graph of a formula");
  reduce_cmd->add_option("--variant", variant, "k1|infk|kl")->capture_default_str();
  reduce_cmd->add_option("--k", k_text, "k (k1: at least 9; infk: k; kl: k)");
  reduce_cmd->add_option("--l", l_text, "l (kl only)");
  reduce_cmd->add_option("-i,--input", cnf_path, "DIMACS file with a 'c 3B2' or 'c MNAE' comment")->required();
  reduce_cmd->add_option("-o,--output", out_path, "Output graph file ('-' for stdout)")->required();
  reduce_cmd->add_option("--assignment", assignment, "Satisfying assignment such as 1011");
  reduce_cmd->add_option("--witness", witness_path, "Write the labeling built from --assignment here");

  auto* girth9_cmd = app.add_subcommand("girth9", "Run the girth-9 experiment on a corpus");
  girth9_cmd->add_option("--corpus", corpus_dir, "Directory of .graph files with rotation blocks");
  girth9_cmd->add_flag("--builtin", builtin, "Use the built-in corpus");
  girth9_cmd->add_option("--write-corpus", write_corpus, "Write the built-in corpus to this directory and exit");
  girth9_cmd->add_option("--budget", budget, "Search node budget per oracle call")->capture_default_str()->check(CLI::PositiveNumber);
  girth9_cmd->add_option("--workers", workers, "Corpus members run in parallel")->capture_default_str()->check(CLI::PositiveNumber);

  auto* audit_cmd = app.add_subcommand("audit", "Discharging audit of an embedded graph");
  audit_cmd->add_option("graph", graph_path, "Graph file with a rotation block")->required();

  auto* subdivide_cmd = app.add_subcommand("subdivide", "Replace every edge by a path of t+1 edges");
  subdivide_cmd->add_option("-t", t, "Vertices added per edge")->capture_default_str();
  subdivide_cmd->add_option("input", graph_path, "Input graph")->required();
  subdivide_cmd->add_option("output", out_path, "Output graph ('-' for stdout)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) {
      BoundSpec b = parse_bounds(bounds_text);
      MultiGraph g = parse_graph(read_file(graph_path));
      OracleOptions opt;
      opt.budget = budget;
      opt.workers = workers;
      OracleResult r = solve_exact(g, b, opt);
      std::cerr << "nodes " << r.nodes << "\n";
      if (r.outcome == Outcome::yes) {
        std::cout << serialize_labeling(to_caller(r.labeling, b));
        return kYes;
      }
      std::cout << (r.outcome == Outcome::no ? "NO\n" : "TIMEOUT\n");
      return r.outcome == Outcome::no ? kNo : kTimeout;
    }

    if (*solve21_cmd) {
      MultiGraph g = parse_graph(read_file(graph_path));
      if (!emit_factor.empty()) {
        if (g.max_degree() >= 4) throw UsageError("no factor instance for a graph with a vertex of degree >= 4");
        PathSystem ps = decompose_paths(g);
        write_file(emit_factor, serialize_factor_instance(build_factor_instance(g, ps).inst));
      }
      Solve21Result r = solve21(g);
      if (r.yes) {
        std::cout << serialize_labeling(r.labeling);
        return kYes;
      }
      std::cout << "NO\n";
      std::cerr << "reason: " << r.reason << "\n";
      return kNo;
    }

    if (*verify_cmd) {
      BoundSpec b = parse_bounds(bounds_text);
      MultiGraph g = parse_graph(read_file(graph_path));
      PartialLabeling lab = parse_labeling(read_file(second_path), g.edge_count());
      for (auto& p : lab) {
        if (p) p = b.caller_part(*p);
      }
      CheckResult r = verify(g, lab, b);
      if (r) {
        std::cout << "VALID\n";
        return kYes;
      }
      Violation v = *r.violation;
      if (v.part) v.part = b.caller_part(*v.part);
      std::cout << "INVALID\n";
      std::cerr << v.describe() << "\n";
      return kNo;
    }

    if (*enumerate_cmd) {
      BoundSpec b = parse_bounds(bounds_text);
      MultiGraph g = parse_graph(read_file(graph_path));
      EnumerateOptions opt;
      opt.limit = limit;
      opt.budget = budget;
      opt.up_to_parallel_exchange = !distinguish_parallel;
      EnumerateResult r = enumerate(g, b, opt);
      std::cout << r.labelings.size() << "\n";
      if (!count_only) {
        for (const auto& lab : r.labelings) {
          for (Part p : to_caller(lab, b)) std::cout << part_char(p);
          std::cout << "\n";
        }
      }
      if (!r.complete) std::cerr << (r.timed_out ? "budget exhausted" : "limit reached") << ", count is a lower bound\n";
      return r.complete ? kYes : kTimeout;
    }

    if (*factor_cmd) {
      FactorInstance inst = parse_factor_instance(read_file(graph_path));
      inst.validate();
      auto s = solve_factor(inst);
      if (!s) {
        std::cout << "NO\n";
        return kNo;
      }
      for (EdgeId e : *s) std::cout << e << "\n";
      return kYes;
    }

    if (*gadget_cmd) {
      Length k = parse_size(k_text), l = parse_size(l_text);
      GadgetOutput out;
      PropertyReport rep;
      if (kind == "alpha") {
        if (alpha < 2) throw UsageError("--alpha must be at least 2");
        out = build_alpha_gadget(alpha, k, l);
        if (check) rep = check_alpha_gadget(out.g, out.attach, alpha, out.bounds);
      } else {
        ForcerKind fk = parse_forcer_kind(kind);
        out = build_forcer(fk, k, l);
        if (check) rep = check_forcer_property(fk, k, l);
      }
      write_file(out_path, named_header(out) + serialize_graph(out.g));
      if (!witness_path.empty()) write_file(witness_path, serialize_labeling(out.plan));
      if (check) {
        std::cerr << rep.to_string();
        std::cout << (rep.passed() ? "PASS\n" : "FAIL\n");
        if (!rep.complete) return kTimeout;
        return rep.passed() ? kYes : kNo;
      }
      return kYes;
    }

    if (*reduce_cmd) {
      CnfDocument doc = parse_dimacs(read_file(cnf_path));
      Variant v = parse_variant(variant);
      GadgetOutput out;
      std::optional<EdgeLabeling> witness;
      if (v == Variant::kl) {
        const auto* f = std::get_if<CnfMnae>(&doc);
        if (!f) throw UsageError("variant kl needs an MNAE formula");
        if (l_text == "0") l_text = "2";
        Length k = parse_size(k_text == "4" && !reduce_cmd->count("--k") ? "2" : k_text), l = parse_size(l_text);
        out = reduce_nae_to_kl(*f, k, l);
        if (!assignment.empty()) witness = witness_from_assignment(*f, parse_assignment(assignment, f->num_vars), k, l);
      } else {
        const auto* f = std::get_if<Cnf3B2>(&doc);
        if (!f) throw UsageError("variants k1 and infk need a 3B2 formula");
        std::string kk = reduce_cmd->count("--k") ? k_text : (v == Variant::k1 ? "9" : "2");
        Length k = parse_size(kk);
        out = v == Variant::k1 ? reduce_3b2_to_k1(*f, k) : reduce_3b2_to_infk(*f, k);
        if (!assignment.empty()) witness = witness_from_assignment(*f, parse_assignment(assignment, f->num_vars), v, k);
      }
      write_file(out_path, named_header(out) + serialize_graph(out.g));
      if (witness) {
        if (witness_path.empty()) throw UsageError("--assignment needs --witness");
        write_file(witness_path, serialize_labeling(*witness));
      }
      std::cerr << "vertices " << out.g.vertex_count() << ", edges " << out.g.edge_count() << ", bounds "
                << out.bounds.to_string() << "\n";
      return kYes;
    }

    if (*girth9_cmd) {
      std::vector<CorpusMember> corpus;
      if (!write_corpus.empty()) {
        fs::create_directories(write_corpus);
        for (const auto& m : girth9_corpus()) {
          write_file((fs::path(write_corpus) / (m.name + ".graph")).string(), serialize_graph(m.emb.graph, &m.emb.rotation));
        }
        return kYes;
      }
      if (builtin == !corpus_dir.empty()) throw UsageError("give exactly one of --corpus and --builtin");
      if (builtin) {
        corpus = girth9_corpus();
      } else {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(corpus_dir)) {
          if (entry.path().extension() == ".graph") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& p : files) {
          GraphDocument doc = parse_graph_document(read_file(p.string()));
          if (!doc.rotation) throw UsageError(p.string() + " has no rotation block");
          corpus.push_back({p.stem().string(), {doc.graph, *doc.rotation}});
        }
      }
      ExperimentOptions opt;
      opt.budget = budget;
      opt.workers = workers;
      ExperimentReport rep = experiment_girth9(corpus, opt);
      for (const auto& m : rep.members) {
        std::cout << m.name << " " << to_string(m.outcome) << " " << (m.verified ? "verified" : "unverified") << " "
                  << (m.direct ? to_string(*m.direct) : "-") << " " << (m.preconditions.passed() ? "pre_ok" : "pre_fail")
                  << " " << m.nodes << "\n";
      }
      std::cerr << rep.to_string();
      if (rep.any_no()) return kNo;
      if (rep.count(Outcome::timeout) > 0) return kTimeout;
      return kYes;
    }

    if (*audit_cmd) {
      GraphDocument doc = parse_graph_document(read_file(graph_path));
      if (!doc.rotation) throw UsageError("audit needs a rotation block");
      ChargeReport r = discharging_audit(doc.graph, *doc.rotation);
      std::cout << "total_initial " << r.total_initial << "\n"
                << "expected " << r.expected_total << "\n"
                << "total_final " << r.total_final << "\n"
                << "euler " << (r.euler_consistent ? "consistent" : "inconsistent") << "\n"
                << "hypotheses " << (r.hypotheses_hold() ? "hold" : "fail") << "\n"
                << "negative " << r.negative.size() << "\n";
      std::cerr << r.to_string();
      return r.euler_consistent && r.total_matches() ? kYes : kNo;
    }

    if (*subdivide_cmd) {
      GraphDocument doc = parse_graph_document(read_file(graph_path));
      if (doc.rotation) {
        Embedded out = subdivide_all(Embedded{doc.graph, *doc.rotation}, t);
        write_file(out_path, serialize_graph(out.graph, &out.rotation));
      } else {
        write_file(out_path, serialize_graph(subdivide_all(doc.graph, t)));
      }
      return kYes;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "graph error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
