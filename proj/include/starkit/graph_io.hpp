#pragma once

// Text formats for graphs.
//
//   edgelist:  "# family=<tag> n=<n> k=<k> nv=<V> ne=<E>" then "<label_u> <label_v>"
//              per edge, label_u < label_v, lines in (rank_u, rank_v) order.
//   dimacs:    "p edge <V> <E>" then "e <i> <j>" with 1-based ranks, i < j, sorted.
//              Labels travel in a companion JSON object {"<rank>": "<label>"} keyed
//              by 0-based rank.

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "starkit/errors.hpp"
#include "starkit/graph.hpp"

namespace starkit {

enum class GraphFormat { edgelist, dimacs };

inline void write_edgelist(const Graph& g, std::ostream& os) {
  const auto fam = g.family().value_or(FamilyTag{"custom", 0, 0});
  os << "# family=" << fam.name << " n=" << fam.n << " k=" << fam.k << " nv=" << g.vertex_count()
     << " ne=" << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << g.label_text(u) << ' ' << g.label_text(v) << '\n';
}

inline void write_dimacs(const Graph& g, std::ostream& os) {
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

inline nlohmann::ordered_json labels_json(const Graph& g) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) j[std::to_string(v)] = g.label_text(v);
  return j;
}

namespace detail {

inline std::map<std::string, std::string> parse_header_fields(const std::string& line) {
  std::map<std::string, std::string> out;
  std::istringstream is(line.substr(1));
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq != std::string::npos) out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

inline int field_int(const std::map<std::string, std::string>& f, const std::string& key, int fallback) {
  auto it = f.find(key);
  if (it == f.end()) return fallback;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw DomainError("bad header field " + key);
  }
}

// Vertex universe implied by a known family tag, if any.
inline std::optional<std::vector<Label>> family_labels(const FamilyTag& fam) {
  if (fam.name == "nkstar") return build_nkstar(fam.n, fam.k).labels();
  if (fam.name == "star") return build_star(fam.n).labels();
  if (fam.name == "an") return build_alternating_network(fam.n).labels();
  if (fam.name == "complete") return build_complete(fam.n).labels();
  if (fam.name == "cycle" || fam.name == "path") return numbered_labels(static_cast<std::size_t>(fam.n));
  return std::nullopt;
}

inline Graph read_edgelist(std::istream& is) {
  std::string line;
  std::optional<FamilyTag> family;
  std::optional<std::size_t> nv, ne;
  std::vector<std::pair<Label, Label>> raw;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto f = parse_header_fields(line);
      if (f.count("family")) {
        family = FamilyTag{f["family"], field_int(f, "n", 0), field_int(f, "k", 0)};
        if (f.count("nv")) nv = static_cast<std::size_t>(field_int(f, "nv", 0));
        if (f.count("ne")) ne = static_cast<std::size_t>(field_int(f, "ne", 0));
      }
      continue;
    }
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) throw DomainError("malformed edge line: " + line);
    raw.emplace_back(parse_label(a), parse_label(b));
  }
  std::vector<Label> labels;
  if (family) {
    if (auto known = family_labels(*family)) labels = std::move(*known);
  }
  if (labels.empty()) {
    for (const auto& [a, b] : raw) {
      labels.push_back(a);
      labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  }
  if (nv && *nv != labels.size()) throw DomainError("vertex count does not match header");
  auto locate = [&](const Label& l) {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) throw DomainError("edge uses unknown label " + format_label(l));
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<TaggedEdge> edges;
  for (const auto& [a, b] : raw) {
    auto u = locate(a), v = locate(b);
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  if (ne && *ne != edges.size()) throw DomainError("edge count does not match header");
  return Graph(std::move(labels), edges, family);
}

inline Graph read_dimacs(std::istream& is, const nlohmann::json* label_map) {
  std::string line;
  std::optional<std::size_t> nv, ne;
  std::vector<TaggedEdge> edges;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      std::string fmt;
      std::size_t a = 0, b = 0;
      if (!(ls >> fmt >> a >> b) || fmt != "edge") throw DomainError("malformed problem line");
      nv = a;
      ne = b;
    } else if (kind == "e") {
      std::size_t a = 0, b = 0;
      if (!nv || !(ls >> a >> b) || a < 1 || b < 1 || a > *nv || b > *nv)
        throw DomainError("malformed edge line: " + line);
      edges.push_back({std::min(a, b) - 1, std::max(a, b) - 1});
    } else {
      throw DomainError("unexpected dimacs line: " + line);
    }
  }
  if (!nv) throw DomainError("missing problem line");
  if (edges.size() != *ne) throw DomainError("edge count does not match problem line");
  std::vector<Label> labels;
  if (label_map != nullptr) {
    for (std::size_t v = 0; v < *nv; ++v) {
      auto key = std::to_string(v);
      if (!label_map->contains(key)) throw DomainError("label map lacks rank " + key);
      labels.push_back(parse_label((*label_map)[key].get<std::string>()));
    }
  } else {
    labels = numbered_labels(*nv);
  }
  return Graph(std::move(labels), edges);
}

}  // namespace detail

// Reads either format; the format is detected from the first meaningful line.
inline Graph read_graph(std::istream& is, const nlohmann::json* label_map = nullptr) {
  std::stringstream buf;
  buf << is.rdbuf();
  const std::string text = buf.str();
  std::istringstream probe(text);
  std::string line;
  bool dimacs = false;
  while (std::getline(probe, line)) {
    if (line.empty()) continue;
    dimacs = line[0] == 'p' || line[0] == 'c';
    break;
  }
  std::istringstream in(text);
  return dimacs ? detail::read_dimacs(in, label_map) : detail::read_edgelist(in);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  nlohmann::json map;
  const nlohmann::json* map_ptr = nullptr;
  std::ifstream lf(path + ".labels.json");
  if (lf) {
    try {
      map = nlohmann::json::parse(lf);
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("bad label map: ") + e.what());
    }
    map_ptr = &map;
  }
  return read_graph(f, map_ptr);
}

}  // namespace starkit
