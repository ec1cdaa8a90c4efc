#pragma once

// The transfer graph on G/Phi_p(G), its reduced form and the p = 2 auxiliary
// graph, with the graph queries the solvability criterion needs.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hh1/group.hpp"
#include "hh1/transfer.hpp"

namespace hh1 {

/// A nonnegative length that may be infinite (cyclic graph, nonsolvable
/// algebra).
class Length {
 public:
  static Length infinite() { return Length(); }
  static Length finite(std::size_t n) { return Length(n); }

  bool is_finite() const noexcept { return value_.has_value(); }
  std::size_t value() const { return value_.value(); }
  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Length&, const Length&) = default;

 private:
  Length() = default;
  explicit Length(std::size_t n) : value_(n) {}
  std::optional<std::size_t> value_;
};

/// Directed graph on vertices 0..n-1, loops allowed, no multi-edges.
class DiGraph {
 public:
  explicit DiGraph(std::size_t n = 0) : out_(n) {}

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const;
  /// Sorted successors.
  const std::vector<std::size_t>& successors(std::size_t a) const { return out_[a]; }
  /// All edges, lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::size_t> loops() const;

  friend bool operator==(const DiGraph&, const DiGraph&) = default;

 private:
  std::vector<std::vector<std::size_t>> out_;
  std::size_t edges_ = 0;
};

struct GammaGraph {
  unsigned prime = 0;
  std::size_t dim = 0;
  DiGraph graph;
  std::vector<std::size_t> h_dims;  // per vertex

  VertexCodec codec() const { return VertexCodec(prime, dim); }
  std::size_t vertex(std::span<const Scalar> coords) const { return codec().encode(coords); }
};

GammaGraph build_gamma(const TransferSummary& summary);
GammaGraph build_gamma(const Group& g, unsigned p);
/// Keeps a -> b iff h_b != 0.
GammaGraph reduce_gamma(const GammaGraph& gamma);
/// p = 2 only: a ~> b iff a != e, a -> b and a -> a+b.
GammaGraph build_gamma2(const GammaGraph& gamma);

/// Shortest directed cycle (a loop has length 1), as its vertex sequence
/// starting from the smallest possible starting vertex. None if acyclic.
std::optional<std::vector<std::size_t>> find_cycle(const DiGraph& g);
/// Longest directed path length in edges; infinite if the graph has a cycle.
Length longest_path(const DiGraph& g);
/// T_0 = all vertices, T_{n+1} = successors of T_n. Stops after the first
/// empty layer or after `max_layers` layers.
std::vector<std::vector<std::size_t>> layering(const DiGraph& g, std::size_t max_layers);

/// "e", or a word in g1..gd such as "g1^2*g2".
std::string vertex_label(std::span<const Scalar> coords);
std::vector<std::string> vertex_labels(const VertexCodec& codec);
/// Deterministic DOT digraph. Vertices in index order, edges sorted.
std::string to_dot(const DiGraph& g, const std::vector<std::string>& labels,
                   const std::string& name = "gamma");

}  // namespace hh1
