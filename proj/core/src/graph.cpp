#include "widthdual/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "widthdual/errors.hpp"

namespace widthdual {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0 || vertex_count_ > Subset::kMaxElements) {
    throw InvalidArgument("vertex count " + std::to_string(vertex_count_) + " out of range");
  }
  if (edges_.size() > static_cast<std::size_t>(Subset::kMaxElements)) {
    throw InvalidArgument("too many edges (" + std::to_string(edges_.size()) + ")");
  }
  std::set<Edge> seen;
  for (auto [u, v] : edges_) {
    const std::string e = std::to_string(u) + " " + std::to_string(v);
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) throw InvalidArgument("edge " + e + " out of range");
    if (u == v) throw InvalidArgument("self-loop " + e);
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw InvalidArgument("duplicate edge " + e);
  }
}

Subset Graph::incident_edges(int v) const {
  Subset s;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].first == v || edges_[i].second == v) s |= Subset::singleton(static_cast<int>(i));
  }
  return s;
}

Subset Graph::neighbourhood(int v) const {
  Subset s;
  for (auto [a, b] : edges_) {
    if (a == v) s |= Subset::singleton(b);
    if (b == v) s |= Subset::singleton(a);
  }
  return s;
}

bool Graph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  Subset reached = Subset::singleton(0);
  for (bool grew = true; grew;) {
    grew = false;
    for (int v : reached.elements()) {
      const Subset next = reached | neighbourhood(v);
      if (next != reached) {
        reached = next;
        grew = true;
      }
    }
  }
  return reached == Subset::full(vertex_count_);
}

bool Graph::is_union_of_stars() const {
  // A component is a star iff one vertex touches all of its edges. Start
  // from each edge's component and test that.
  std::vector<char> done(edges_.size(), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (done[i]) continue;
    Subset verts = Subset::singleton(edges_[i].first) | Subset::singleton(edges_[i].second);
    for (bool grew = true; grew;) {
      grew = false;
      for (int v : verts.elements()) {
        const Subset next = verts | neighbourhood(v);
        if (next != verts) {
          verts = next;
          grew = true;
        }
      }
    }
    Subset comp_edges;
    for (int v : verts.elements()) comp_edges |= incident_edges(v);
    for (int e : comp_edges.elements()) done[static_cast<std::size_t>(e)] = 1;
    const auto vs = verts.elements();
    const bool star = std::any_of(vs.begin(), vs.end(), [&](int v) {
      return comp_edges.subset_of(incident_edges(v));
    });
    if (!star) return false;
  }
  return true;
}

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

int parse_index(const std::string& tok, int line_no) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + tok + "'");
  }
  return v;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<Graph::Edge> edges;
  std::set<Graph::Edge> seen;
  int declared_n = -1;
  int declared_m = -1;
  int max_vertex = -1;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto toks = tokens(line);
    if (toks.empty() || toks[0] == "c") continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (toks[0] == "p") {
      if (toks.size() != 3) throw ParseError(where + "header must be 'p <n> <m>'");
      if (declared_n >= 0 || !edges.empty()) throw ParseError(where + "header must come first and only once");
      declared_n = parse_index(toks[1], line_no);
      declared_m = parse_index(toks[2], line_no);
      continue;
    }
    if (toks.size() != 2) throw ParseError(where + "expected 'u v', got '" + line + "'");
    const int u = parse_index(toks[0], line_no);
    const int v = parse_index(toks[1], line_no);
    if (u == v) throw ParseError(where + "self-loop at vertex " + std::to_string(u));
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
      throw ParseError(where + "vertex out of range for declared n = " + std::to_string(declared_n));
    }
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw ParseError(where + "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (declared_m >= 0 && declared_m != static_cast<int>(edges.size())) {
    throw ParseError("header declares " + std::to_string(declared_m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  const int n = declared_n >= 0 ? declared_n : max_vertex + 1;
  try {
    return Graph(n, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : serialize_graph(g)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace widthdual
