#include "neumaier/graph_io.hpp"

#include <sstream>

namespace neumaier {

std::string to_graph6(const DenseGraph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
  unsigned acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  }
  if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

DenseGraph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  auto val = [&](std::size_t i) {
    if (i >= text.size()) throw ParseError("graph6 string is truncated");
    const int c = static_cast<unsigned char>(text[i]) - 63;
    if (c < 0 || c > 63) throw ParseError("graph6 character out of range");
    return static_cast<std::size_t>(c);
  };
  std::size_t n = 0, pos = 0;
  if (text.empty()) throw ParseError("empty graph6 string");
  if (text[0] != '~') {
    n = val(0);
    pos = 1;
  } else if (text.size() > 1 && text[1] != '~') {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | val(i);
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | val(i);
    pos = 8;
  }
  if (n > kMaxGraphOrder) throw ParseError("graph6 graph too large");
  const std::size_t bits = n * (n - (n > 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() != pos + need) throw ParseError("graph6 string has wrong length");
  DenseGraph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((val(pos + k / 6) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 && (val(pos + k / 6) & ((1U << (6 - k % 6)) - 1))) throw ParseError("graph6 padding bits must be zero");
  return g;
}

nlohmann::ordered_json to_adjacency_json(const DenseGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.size();
  auto adj = nlohmann::ordered_json::array();
  for (Vertex u = 0; u < g.size(); ++u) adj.push_back(g.neighbours(u));
  j["adjacency"] = std::move(adj);
  return j;
}

DenseGraph from_adjacency_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("vertices").get<std::size_t>();
    const auto& adj = j.at("adjacency");
    if (adj.size() != n) throw ParseError("adjacency list length differs from vertex count");
    if (n > kMaxGraphOrder) throw ParseError("graph too large");
    DenseGraph g(n);
    for (Vertex u = 0; u < n; ++u) {
      for (const auto& x : adj[u]) {
        const auto v = x.get<Vertex>();
        if (v >= n || v == u) throw ParseError("bad neighbour " + std::to_string(v) + " of " + std::to_string(u));
        g.add_edge(u, v);
      }
    }
    for (Vertex u = 0; u < n; ++u) {
      if (g.degree(u) != adj[u].size()) throw ParseError("adjacency lists are not symmetric");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("adjacency json: ") + e.what());
  }
}

std::string to_edge_list(const DenseGraph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

DenseGraph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list header must be 'n m'");
  if (static_cast<std::size_t>(n) > kMaxGraphOrder) throw ParseError("graph too large");
  DenseGraph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) throw ParseError("edge list ends after " + std::to_string(i) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("bad edge on line " + std::to_string(i + 2));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw ParseError("trailing data after edge list");
  return g;
}

}  // namespace neumaier
