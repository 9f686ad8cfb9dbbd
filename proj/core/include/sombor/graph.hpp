// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Adjacency is stored in compressed rows; neighbour lists are sorted.
class Graph {
 public:
  /// Throws std::invalid_argument on n == 0, out-of-range endpoints,
  /// self-loops or repeated edges.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return offsets_.size() - 1; }
  std::size_t size() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

std::vector<std::size_t> degrees(const Graph& g);
std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Tree with maximum degree at most four.
bool is_molecular_tree(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Graph with vertex v renamed to perm[v]. perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Unordered degree pair, normalised so that first <= second.
struct DegreePair {
  std::size_t low;
  std::size_t high;
  DegreePair(std::size_t a, std::size_t b) : low(a < b ? a : b), high(a < b ? b : a) {}
  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

/// Edge counts m_ij keyed by endpoint-degree pair (i <= j) and vertex counts
/// n_i keyed by degree. Only nonzero entries are stored.
class EdgeTypeProfile {
 public:
  EdgeTypeProfile() = default;
  EdgeTypeProfile(std::size_t order, std::map<DegreePair, std::size_t> edge_counts,
                  std::map<std::size_t, std::size_t> degree_counts);

  std::size_t order() const { return order_; }
  std::size_t edge_count() const;

  std::size_t m(std::size_t i, std::size_t j) const;
  std::size_t n(std::size_t degree) const;

  const std::map<DegreePair, std::size_t>& edge_counts() const { return edge_counts_; }
  const std::map<std::size_t, std::size_t>& degree_counts() const { return degree_counts_; }

  /// Handshake and incidence identities: sum m_ij = |E|, sum n_i = n,
  /// sum i n_i = 2|E|, and for each i, sum_j m_ij (m_ii twice) = i n_i.
  bool is_consistent() const;

  friend bool operator==(const EdgeTypeProfile&, const EdgeTypeProfile&) = default;

 private:
  std::size_t order_ = 0;
  std::map<DegreePair, std::size_t> edge_counts_;
  std::map<std::size_t, std::size_t> degree_counts_;
};

EdgeTypeProfile edge_type_profile(const Graph& g);

/// Isomorphism-complete code for trees (AHU encoding rooted at the centroid,
/// the smaller code when there are two centroids). Throws std::invalid_argument
/// if g is not a tree.
std::string tree_canonical_code(const Graph& g);

/// Edge-list text: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
/// Same content on one line: "n m u1 v1 u2 v2 ...".
std::string edge_list_line(const Graph& g);

}  // namespace sombor
