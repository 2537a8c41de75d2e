// starkit: generate star-family networks, evaluate h-super connectivity
// formulas, build and verify cut certificates, and run the exact oracle.
//
// Exit codes: 0 success/valid, 1 invalid verdict, 2 domain error, 3 I/O error,
// 4 search budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "starkit/starkit.hpp"

using namespace starkit;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

Graph read_graph_arg(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  return read_graph_file(path);
}

nlohmann::json read_json_arg(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  if (buf.str().find_first_not_of(" \t\r\n") == std::string::npos)
    return nlohmann::json::object();  // empty file: nothing claimed
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

// Writes to `path`, or stdout when path is empty or "-".
template <class Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  write(f);
  if (!f) throw IoError("write failed for " + path);
}

Graph build_family(const std::string& family, int n, int k) {
  if (family == "star") return build_star(n);
  if (family == "nkstar") return build_nkstar(n, k);
  if (family == "an") return build_alternating_network(n);
  if (family == "complete") return build_complete(n);
  if (family == "cycle") return build_cycle(n);
  throw DomainError("unknown family '" + family + "'");
}

void write_graph(const Graph& g, GraphFormat fmt, const std::string& out, const std::string& labels_out) {
  emit(out, [&](std::ostream& os) {
    if (fmt == GraphFormat::edgelist)
      write_edgelist(g, os);
    else
      write_dimacs(g, os);
  });
  if (fmt == GraphFormat::dimacs) {
    std::string companion = labels_out;
    if (companion.empty() && !out.empty() && out != "-") companion = out + ".labels.json";
    if (!companion.empty()) emit(companion, [&](std::ostream& os) { os << labels_json(g).dump(2) << '\n'; });
  }
}

GraphFormat parse_format(const std::string& s) {
  if (s == "edgelist") return GraphFormat::edgelist;
  if (s == "dimacs") return GraphFormat::dimacs;
  throw DomainError("unknown format '" + s + "'");
}

std::optional<std::chrono::milliseconds> timeout_from_seconds(double s) {
  if (s <= 0) return std::nullopt;
  return std::chrono::milliseconds(static_cast<long long>(s * 1000));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starkit: star-family networks and their h-super connectivity"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  // gen
  std::string family = "nkstar", format = "edgelist", out, labels_out;
  int n = 0, k = 0, h = 0;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--family", family, "star | nkstar | an | complete | cycle")->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--k", k);
  gen->add_option("--format", format, "edgelist | dimacs");
  gen->add_option("--out", out, "output path (default stdout)");
  gen->add_option("--labels-out", labels_out, "label map path for dimacs output");

  // formula
  std::string measure = "kappa";
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form value");
  formula->add_option("--family", family, "nkstar | star | an")->required();
  formula->add_option("--n", n)->required();
  formula->add_option("--k", k);
  formula->add_option("--h", h)->required();
  formula->add_option("--measure", measure, "kappa | lambda");

  // cut
  std::string kind = "vertex";
  auto* cut = app.add_subcommand("cut", "Build the fragment cut certificate of S_{n,k}");
  cut->add_option("--n", n)->required();
  cut->add_option("--k", k)->required();
  cut->add_option("--h", h)->required();
  cut->add_option("--kind", kind, "vertex | edge");
  cut->add_option("--out", out);

  // verify
  std::string graph_path, cert_path;
  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("certificate", cert_path)->required();

  // exact
  bool symmetry = false, allow_disconnected = false;
  std::size_t cap = 0, threads = 0;
  double timeout_s = 600;
  auto* exact = app.add_subcommand("exact", "Exact h-super connectivity by exhaustive search");
  exact->add_option("graph", graph_path)->required();
  exact->add_option("--h", h)->required();
  exact->add_option("--measure", measure, "kappa | lambda");
  exact->add_flag("--symmetry", symmetry, "assume vertex-transitivity; fragments contain vertex 0");
  exact->add_option("--cap", cap, "fragment size cap (below |V|/2 is non-exhaustive)");
  exact->add_option("--threads", threads, "worker count (default STARKIT_THREADS or all cores)");
  exact->add_option("--timeout", timeout_s, "seconds; 0 disables");
  exact->add_flag("--allow-disconnected", allow_disconnected);

  // split
  std::size_t t = 2;
  std::string rule = "lemma2_6", map_out;
  auto* split = app.add_subcommand("split", "Build a t-split graph");
  split->add_option("--n", n);
  split->add_option("--k", k);
  split->add_option("--graph", graph_path, "base graph file (parallel rule)");
  split->add_option("--t", t);
  split->add_option("--rule", rule, "lemma2_6 | parallel");
  split->add_option("--out", out);
  split->add_option("--map-out", map_out, "SplitMap JSON path");

  // iso
  std::string path_a, path_b, mode = "labels";
  std::uint64_t budget = IsoOptions{}.node_budget;
  auto* iso = app.add_subcommand("iso", "Compare two graphs");
  iso->add_option("a", path_a)->required();
  iso->add_option("b", path_b)->required();
  iso->add_option("--mode", mode, "labels | search");
  iso->add_option("--budget", budget, "search node budget");

  // report
  int n_min = 4, n_max = 5;
  std::string measures = "kappa,lambda";
  bool no_timing = false;
  auto* report = app.add_subcommand("report", "Formula vs. oracle table for S_{n,k}, n-k <= h <= n-2");
  report->add_option("--n-max", n_max);
  report->add_option("--n-min", n_min);
  report->add_option("--measures", measures);
  report->add_flag("--symmetry", symmetry);
  report->add_option("--timeout", timeout_s, "seconds per oracle call; 0 disables");
  report->add_flag("--no-timing", no_timing, "write runtime_ms as 0 for byte-stable output");
  report->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitDomain;
  }

  try {
    if (*gen) {
      const Graph g = build_family(family, n, k);
      write_graph(g, parse_format(format), out, labels_out);
      auto& info = (out.empty() || out == "-") ? std::cerr : std::cout;
      info << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
      return 0;
    }
    if (*formula) {
      const Measure m = parse_measure(measure);
      FormulaResult r;
      if (family == "nkstar")
        r = nkstar_formula(m, n, k, h);
      else if (family == "star")
        r = star_formula(n, h);
      else if (family == "an")
        r = an_formula(n, h, m);
      else
        throw DomainError("unknown family '" + family + "'");
      std::cout << r.value << " (" << to_string(r.branch) << ")\n";
      return 0;
    }
    if (*cut) {
      const FamilyParams p{n, k, h};
      const auto xs = build_fragment_X(p);
      const Graph g = build_nkstar(n, k);
      auto [vc, ec] = build_cuts_from_X(g, h, xs);
      const auto& cert = kind == "vertex" ? vc : kind == "edge" ? ec : throw DomainError("unknown kind '" + kind + "'");
      emit(out, [&](std::ostream& os) { os << to_json(cert).dump(2) << '\n'; });
      if (!out.empty() && out != "-") std::cout << "size=" << cert.claimed_size << '\n';
      return 0;
    }
    if (*verify) {
      const Graph g = read_graph_arg(graph_path);
      auto j = read_json_arg(cert_path);
      if (j.empty()) {
        // An empty file claims the empty cut; check it at h = 0.
        auto v = verify_vertex_cut(g, {}, 0);
        std::cout << (v.valid ? "valid size=0" : "invalid: " + v.reason) << '\n';
        return v.valid ? 0 : kExitInvalid;
      }
      const auto cert = certificate_from_json(j);
      const auto v = verify_certificate(g, cert);
      if (v.valid) {
        std::cout << "valid size=" << cert.claimed_size << '\n';
        return 0;
      }
      std::cout << "invalid: " << v.reason << '\n';
      return kExitInvalid;
    }
    if (*exact) {
      const Graph g = read_graph_arg(graph_path);
      OracleOptions o;
      o.symmetry = symmetry;
      if (cap > 0) o.fragment_cap = cap;
      o.threads = threads;
      o.timeout = timeout_from_seconds(timeout_s);
      o.allow_disconnected = allow_disconnected;
      const auto r = exact_measure(g, parse_measure(measure), h, o);
      std::cout << to_json(g, r).dump(2) << '\n';
      return 0;
    }
    if (*split) {
      SplitResult res;
      Graph base;
      if (rule == "lemma2_6") {
        if (!graph_path.empty()) throw DomainError("the lemma2_6 rule builds from --n/--k, not a graph file");
        base = build_nkstar(n, k);
        res = split_nkstar(n, k);
      } else if (rule == "parallel") {
        base = graph_path.empty() ? build_nkstar(n, k) : read_graph_arg(graph_path);
        res = split_graph(base, t);
      } else {
        throw DomainError("unknown rule '" + rule + "'");
      }
      write_graph(res.graph, GraphFormat::edgelist, out, "");
      if (!map_out.empty())
        emit(map_out, [&](std::ostream& os) { os << split_map_json(base, res.graph, res.map).dump(2) << '\n'; });
      return 0;
    }
    if (*iso) {
      if (path_a == "-" && path_b == "-") throw DomainError("only one input may come from stdin");
      const Graph a = read_graph_arg(path_a);
      const Graph b = read_graph_arg(path_b);
      if (mode == "labels") {
        const bool eq = edge_sets_equal(a, b);
        std::cout << (eq ? "equal" : "different") << '\n';
        return eq ? 0 : kExitInvalid;
      }
      if (mode != "search") throw DomainError("unknown mode '" + mode + "'");
      const auto w = isomorphic(a, b, IsoOptions{budget});
      if (!w) {
        std::cout << "none\n";
        return kExitInvalid;
      }
      std::cout << to_json(a, b, *w).dump(2) << '\n';
      return 0;
    }
    if (*report) {
      ReportOptions ro;
      ro.n_min = n_min;
      ro.n_max = n_max;
      ro.symmetry = symmetry;
      ro.timeout = timeout_from_seconds(timeout_s);
      ro.record_runtime = !no_timing;
      ro.measures.clear();
      std::stringstream ms(measures);
      for (std::string item; std::getline(ms, item, ',');) ro.measures.push_back(parse_measure(item));
      if (n_max > 5 && !symmetry) throw DomainError("report: n_max above 5 needs --symmetry");
      emit(out, [&](std::ostream& os) {
        write_report_header(os);
        build_report(ro, [&](const ReportRow& r) {
          write_report_row(os, r);
          os.flush();
          if (!r.certificate_ok)
            std::cerr << "warning: fragment certificate failed for (" << r.n << "," << r.k << "," << r.h << ")\n";
        });
      });
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
