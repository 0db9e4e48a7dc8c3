#include "ffdg/graphs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ffdg/splitmix64.hpp"

namespace ffdg {

GraphKind graph_kind_from_string(std::string_view name) {
  if (name == "path") return GraphKind::path;
  if (name == "cycle") return GraphKind::cycle;
  if (name == "complete") return GraphKind::complete;
  if (name == "star") return GraphKind::star;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::path:
      return "path";
    case GraphKind::cycle:
      return "cycle";
    case GraphKind::complete:
      return "complete";
    case GraphKind::star:
      return "star";
  }
  throw std::invalid_argument("unknown graph kind");
}

DistanceGraph DistanceGraph::make(int n, std::vector<GraphEdge> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& e : edges) {
    if (e.i == e.j) throw std::invalid_argument("loop edge");
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.lambda == 0) throw std::invalid_argument("zero edge length");
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t idx = 1; idx < edges.size(); ++idx)
    if (edges[idx].i == edges[idx - 1].i && edges[idx].j == edges[idx - 1].j)
      throw std::invalid_argument("duplicate edge");

  DistanceGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.degrees_.assign(std::size_t(n), 0);
  for (const auto& e : g.edges_) {
    ++g.degrees_[std::size_t(e.i)];
    ++g.degrees_[std::size_t(e.j)];
  }
  g.t_ = g.degrees_.empty()
             ? 0
             : *std::max_element(g.degrees_.begin(), g.degrees_.end());
  return g;
}

namespace {

std::vector<GraphEdge> shape_edges(GraphKind kind, int n) {
  if (n < 2) throw std::invalid_argument("generator needs n >= 2");
  if (kind == GraphKind::cycle && n < 3)
    throw std::invalid_argument("cycle needs n >= 3");
  std::vector<GraphEdge> edges;
  switch (kind) {
    case GraphKind::path:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
      break;
    case GraphKind::cycle:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
      edges.push_back({0, n - 1, 1});
      break;
    case GraphKind::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1});
      break;
    case GraphKind::star:
      for (int i = 1; i < n; ++i) edges.push_back({0, i, 1});
      break;
  }
  return edges;
}

}  // namespace

DistanceGraph DistanceGraph::generate(GraphKind kind, int n,
                                      std::uint32_t lambda) {
  auto edges = shape_edges(kind, n);
  for (auto& e : edges) e.lambda = lambda;
  return make(n, std::move(edges));
}

DistanceGraph DistanceGraph::generate_random_lengths(GraphKind kind, int n,
                                                     std::uint32_t q,
                                                     std::uint64_t seed) {
  if (q < 2) throw std::invalid_argument("need q >= 2 for nonzero lengths");
  auto edges = shape_edges(kind, n);
  SplitMix64 rng(seed);
  // One draw per edge in canonical (sorted) edge order.
  std::sort(edges.begin(), edges.end());
  for (auto& e : edges)
    e.lambda = std::uint32_t(1 + rng.next_below(q - 1));
  return make(n, std::move(edges));
}

DistanceGraph DistanceGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  std::vector<GraphEdge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("graph file line " + std::to_string(lineno) +
                                  ": " + why);
    };
    if (tok == "n") {
      if (n != -1) fail("repeated vertex-count line");
      if (!(ls >> n) || n < 1) fail("bad vertex count");
    } else if (tok == "e") {
      if (n == -1) fail("edge before vertex count");
      long long i = 0, j = 0, lambda = -1;
      if (!(ls >> i >> j >> lambda) || lambda < 0 ||
          lambda > 0xFFFFFFFFll)
        fail("bad edge line");
      edges.push_back({int(i), int(j), std::uint32_t(lambda)});
    } else {
      fail("unknown directive '" + tok + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  if (n == -1) throw std::invalid_argument("graph file: missing 'n' line");
  return make(n, std::move(edges));
}

std::string DistanceGraph::serialize() const {
  std::string out = "n " + std::to_string(n_) + "\n";
  for (const auto& e : edges_) {
    out += "e " + std::to_string(e.i) + " " + std::to_string(e.j) + " " +
           std::to_string(e.lambda) + "\n";
  }
  return out;
}

}  // namespace ffdg
