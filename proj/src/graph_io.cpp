#include "cfclab/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cfclab/error.hpp"

namespace cfclab {

namespace {

// All meaningful tokens of the stream, with '#' comments stripped.
std::vector<long long> read_tokens(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long value;
    while (ls >> value) tokens.push_back(value);
    if (ls.fail() && !ls.eof()) fail(ErrKind::BadFormat, "non-numeric token in: " + line);
  }
  return tokens;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  auto tokens = read_tokens(in);
  if (tokens.size() < 2) fail(ErrKind::BadFormat, "expected header \"n m\"");
  long long n = tokens[0], m = tokens[1];
  if (n < 0 || m < 0 || tokens.size() != static_cast<size_t>(2 + 2 * m))
    fail(ErrKind::BadFormat, "expected " + std::to_string(2 * m) + " endpoint tokens");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i)
    pairs.push_back({static_cast<int>(tokens[2 + 2 * i]), static_cast<int>(tokens[3 + 2 * i])});
  return Graph::from_edge_list(static_cast<int>(n), pairs);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n() << " " << g.m() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

std::pair<Graph, EdgeColoring> read_colored_edge_list(std::istream& in) {
  auto tokens = read_tokens(in);
  if (tokens.size() < 2) fail(ErrKind::BadFormat, "expected header \"n m\"");
  long long n = tokens[0], m = tokens[1];
  if (n < 0 || m < 0 || tokens.size() != static_cast<size_t>(2 + 3 * m))
    fail(ErrKind::BadFormat, "expected " + std::to_string(3 * m) + " edge tokens");
  // Edges are re-sorted inside Graph; colors must follow their edges.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> given;
  for (long long i = 0; i < m; ++i) {
    int a = static_cast<int>(tokens[2 + 3 * i]);
    int b = static_cast<int>(tokens[3 + 3 * i]);
    int c = static_cast<int>(tokens[4 + 3 * i]);
    if (c < 1) fail(ErrKind::BadFormat, "color " + std::to_string(c) + " < 1");
    pairs.push_back({a, b});
    given.push_back(c);
  }
  Graph g = Graph::from_edge_list(static_cast<int>(n), pairs);
  std::vector<int> colors(g.m());
  for (size_t i = 0; i < pairs.size(); ++i) {
    int e = g.edge_index(pairs[i].first, pairs[i].second);
    colors[e] = given[i];
  }
  return {g, make_coloring(g, std::move(colors))};
}

void write_colored_edge_list(const Graph& g, const EdgeColoring& c, std::ostream& out) {
  out << g.n() << " " << g.m() << "\n";
  for (int e = 0; e < g.m(); ++e)
    out << g.edge(e).u << " " << g.edge(e).v << " " << c.colors[e] << "\n";
}

Graph read_graph6(const std::string& raw) {
  std::string line = raw;
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line.erase(0, header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.empty()) fail(ErrKind::BadFormat, "empty graph6 line");
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) fail(ErrKind::BadFormat, "truncated graph6 line");
    unsigned char ch = static_cast<unsigned char>(line[pos++]);
    if (ch < 63 || ch > 126) fail(ErrKind::BadFormat, "graph6 byte out of range");
    return ch - 63;
  };
  long long n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    long long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  }
  if (n > 100000) fail(ErrKind::TooLarge, "graph6 order " + std::to_string(n));
  std::vector<std::pair<int, int>> pairs;
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      --bits;
      if ((acc >> bits) & 1) pairs.push_back({i, j});
    }
  return Graph::from_edge_list(static_cast<int>(n), pairs);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  int n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int bits = 0, acc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

}  // namespace cfclab
