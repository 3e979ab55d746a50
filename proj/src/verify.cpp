#include "aqpath/verify.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace aqpath {

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotAPath:
      return "NotAPath";
    case ViolationKind::NotSimple:
      return "NotSimple";
    case ViolationKind::MissingTerminal:
      return "MissingTerminal";
    case ViolationKind::VertexOverlap:
      return "VertexOverlap";
    case ViolationKind::EdgeOverlap:
      return "EdgeOverlap";
    case ViolationKind::WrongGraph:
      return "WrongGraph";
  }
  return "?";
}

namespace {

Violation violation(ViolationKind kind, std::vector<int> paths,
                    std::string detail) {
  return Violation{kind, std::move(paths), std::move(detail)};
}

std::optional<Violation> path_problem(const Graph& g, const Path& p,
                                      int index) {
  if (p.empty()) {
    return violation(ViolationKind::NotAPath, {index}, "empty path");
  }
  for (Vertex v : p) {
    if (!g.contains(v)) {
      return violation(ViolationKind::WrongGraph, {index},
                       "vertex " + std::to_string(v) + " not in graph");
    }
  }
  std::set<Vertex> seen;
  for (Vertex v : p) {
    if (!seen.insert(v).second) {
      return violation(ViolationKind::NotSimple, {index},
                       "repeated " + g.format(v));
    }
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.adjacent(p[i], p[i + 1])) {
      return violation(ViolationKind::NotAPath, {index},
                       g.format(p[i]) + "-" + g.format(p[i + 1]));
    }
  }
  return std::nullopt;
}

using Edge = std::pair<Vertex, Vertex>;

Edge edge(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

Verdict check_path(const Graph& g, const Path& path) {
  if (auto bad = path_problem(g, path, 0)) return *bad;
  return Accept{1};
}

Verdict check_family(const Graph& g, const Triple& terminals,
                     const PathSet& paths) {
  const std::set<Vertex> d(terminals.begin(), terminals.end());
  if (d.size() != 3) {
    return violation(ViolationKind::WrongGraph, {}, "terminals not distinct");
  }
  for (Vertex t : terminals) {
    if (!g.contains(t)) {
      return violation(ViolationKind::WrongGraph, {},
                       "terminal " + std::to_string(t) + " not in graph");
    }
  }
  const int count = static_cast<int>(paths.size());
  for (int i = 0; i < count; ++i) {
    if (auto bad = path_problem(g, paths[static_cast<std::size_t>(i)], i)) {
      return *bad;
    }
  }
  for (int i = 0; i < count; ++i) {
    const auto& p = paths[static_cast<std::size_t>(i)];
    for (Vertex t : terminals) {
      if (std::find(p.begin(), p.end(), t) == p.end()) {
        return violation(ViolationKind::MissingTerminal, {i}, g.format(t));
      }
    }
  }

  std::vector<int> owner_of;  // parallel to `interior`
  std::vector<Vertex> interior;
  for (int i = 0; i < count; ++i) {
    for (Vertex v : paths[static_cast<std::size_t>(i)]) {
      if (d.count(v)) continue;
      interior.push_back(v);
      owner_of.push_back(i);
    }
  }
  {
    std::vector<std::size_t> order(interior.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return interior[a] < interior[b];
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (interior[order[k]] == interior[order[k - 1]]) {
        return violation(ViolationKind::VertexOverlap,
                         {owner_of[order[k - 1]], owner_of[order[k]]},
                         g.format(interior[order[k]]));
      }
    }
  }

  std::vector<std::pair<Edge, int>> edges;
  for (int i = 0; i < count; ++i) {
    const auto& p = paths[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      edges.emplace_back(edge(p[k], p[k + 1]), i);
    }
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].first == edges[k - 1].first) {
      return violation(ViolationKind::EdgeOverlap,
                       {edges[k - 1].second, edges[k].second},
                       g.format(edges[k].first.first) + "-" +
                           g.format(edges[k].first.second));
    }
  }
  return Accept{count};
}

std::string render(const Verdict& v) {
  if (const auto* ok = std::get_if<Accept>(&v)) {
    return "OK " + std::to_string(ok->count);
  }
  const auto& bad = std::get<Violation>(v);
  std::string out = "VIOLATION ";
  out += to_string(bad.kind);
  if (!bad.paths.empty()) {
    out += " paths=";
    for (std::size_t i = 0; i < bad.paths.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(bad.paths[i]);
    }
  }
  if (!bad.detail.empty()) out += " " + bad.detail;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<Vertex> parse_label(std::string_view s, int bits) {
  if (s.size() != static_cast<std::size_t>(bits)) return std::nullopt;
  Vertex v = 0;
  for (char ch : s) {
    if (ch != '0' && ch != '1') return std::nullopt;
    v = (v << 1) | static_cast<Vertex>(ch - '0');
  }
  return v;
}

}  // namespace

FamilyText read_family_text(std::istream& in, int bits) {
  FamilyText out;
  bool have_d = false;
  std::string line;
  int line_no = 0;
  auto labels = [&](std::istringstream& fields) {
    std::vector<Vertex> vs;
    std::string tok;
    while (fields >> tok) {
      if (auto v = parse_label(tok, bits)) {
        vs.push_back(*v);
      } else {
        if (!out.wrong_graph) {
          out.wrong_graph = "line " + std::to_string(line_no) + ": '" + tok +
                            "' is not a vertex of AQ_" + std::to_string(bits);
        }
        vs.push_back(0);
      }
    }
    return vs;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string_view tag = "# trace:";
      if (line.rfind(tag, 0) == 0) {
        std::string text = line.substr(tag.size());
        if (!text.empty() && text[0] == ' ') text.erase(0, 1);
        out.trace.push_back(text);
      }
      continue;
    }
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "D") {
      if (have_d) {
        throw InvalidArgument("line " + std::to_string(line_no) +
                              ": second D line");
      }
      const auto vs = labels(fields);
      if (vs.size() != 3) {
        throw InvalidArgument("line " + std::to_string(line_no) +
                              ": D needs exactly three vertices");
      }
      out.terminals = {vs[0], vs[1], vs[2]};
      have_d = true;
    } else if (tag == "P") {
      if (!have_d) {
        throw InvalidArgument("line " + std::to_string(line_no) +
                              ": P line before D line");
      }
      out.paths.push_back(labels(fields));
    } else if (tag == "OK" || tag == "VIOLATION") {
      continue;  // verdict printed by `aqpath construct`
    } else {
      throw InvalidArgument("line " + std::to_string(line_no) +
                            ": unknown line tag '" + tag + "'");
    }
  }
  if (!have_d) throw InvalidArgument("family has no D line");
  return out;
}

void write_family_text(std::ostream& out, const AugmentedCube& cube,
                       const Triple& terminals, const PathSet& paths,
                       const std::vector<std::string>& trace) {
  for (const auto& t : trace) out << "# trace: " << t << '\n';
  out << "D " << cube.format(terminals[0]) << ' ' << cube.format(terminals[1])
      << ' ' << cube.format(terminals[2]) << '\n';
  for (const auto& p : paths) {
    out << 'P';
    for (Vertex v : p) out << ' ' << cube.format(v);
    out << '\n';
  }
}

}  // namespace aqpath
