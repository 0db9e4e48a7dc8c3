#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ffdg {

/// One edge of a distance graph: endpoints i < j and the prescribed length.
/// The length is stored as a canonical integer encoding and interpreted in
/// whatever field is supplied at counting time; it must be nonzero and, at
/// use time, below q.
struct GraphEdge {
  int i = 0;
  int j = 0;
  std::uint32_t lambda = 0;

  auto operator<=>(const GraphEdge&) const = default;
};

enum class GraphKind { path, cycle, complete, star };

GraphKind graph_kind_from_string(std::string_view name);
std::string_view to_string(GraphKind kind);

/// A simple graph on vertices 0..n-1 whose edges carry nonzero lengths.
/// Canonical form: every edge has i < j and the edge list is sorted.
class DistanceGraph {
 public:
  /// Edges may arrive in any orientation/order; loops, repeated pairs and
  /// zero lengths are rejected.
  static DistanceGraph make(int n, std::vector<GraphEdge> edges);

  /// path/cycle/complete/star on n vertices. With `lambda` all edges share
  /// one length; the seeded overload draws independent nonzero lengths
  /// below q from a SplitMix64 stream.
  static DistanceGraph generate(GraphKind kind, int n, std::uint32_t lambda);
  static DistanceGraph generate_random_lengths(GraphKind kind, int n,
                                               std::uint32_t q,
                                               std::uint64_t seed);

  static DistanceGraph parse(std::string_view text);
  std::string serialize() const;

  int n() const { return n_; }
  int m() const { return int(edges_.size()); }
  /// Maximum vertex degree.
  int t() const { return t_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<int>& degrees() const { return degrees_; }

  bool operator==(const DistanceGraph&) const = default;

 private:
  DistanceGraph() = default;

  int n_ = 0;
  int t_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<int> degrees_;
};

}  // namespace ffdg
