// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/rational.hpp"

namespace sombor {

enum class TreeClass {
  kAll,        // every free tree
  kMolecular,  // free trees with maximum degree <= 4
};

inline constexpr std::size_t kDefaultMaxOrder = 18;

/// Exhaustive, duplicate-free stream of free trees on n vertices, one
/// representative per isomorphism class.
///
/// Trees are built from a catalog of canonical rooted trees: the centroid is
/// the root and its branches form a non-increasing multiset of catalog
/// entries, or, when n is even and the tree has two centroids, the tree is an
/// unordered pair of rooted halves of n/2 vertices. The degree cap of the
/// molecular class is applied while the catalog is built, so nothing is
/// filtered afterwards. Vertex 0 of every emitted tree is a centroid.
class TreeStream {
 public:
  /// Throws std::out_of_range if n is 0 or exceeds max_order.
  TreeStream(std::size_t n, TreeClass tree_class, std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const { return n_; }
  TreeClass tree_class() const { return class_; }

  void for_each(const std::function<void(const Graph&)>& visit) const;
  std::size_t count() const;
  std::vector<Graph> collect() const;

  /// Disjoint sub-streams (split on the largest branch at the centroid) whose
  /// union is this stream. Each sub-stream is itself exhaustive over its part.
  /// A sub-stream partitions into itself.
  std::vector<TreeStream> partition() const;

  struct Catalog;

 private:
  struct Part {
    bool bicentroidal;
    std::uint32_t first;  // catalog id of the largest centroid branch / first half
  };

  TreeStream(std::shared_ptr<const Catalog> catalog, std::size_t n, TreeClass tree_class,
             std::optional<Part> part);

  void generate(const std::function<void(const std::vector<std::uint32_t>&, bool)>& emit) const;
  Graph build(const std::vector<std::uint32_t>& branches, bool bicentroidal) const;

  std::shared_ptr<const Catalog> catalog_;
  std::size_t n_;
  TreeClass class_;
  std::optional<Part> part_;
};

TreeStream enumerate_trees(std::size_t n, std::size_t max_order = kDefaultMaxOrder);
TreeStream enumerate_molecular_trees(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

/// Extreme SO2 value over a stream together with every tree attaining it.
struct ExtremeSet {
  Rational value;
  std::vector<Graph> attainers;
};

/// Exact maximum / minimum of SO2 over all trees of the class. Work is spread
/// over `threads` workers by stream partition; results are merged in
/// partition order, so the attainer list does not depend on `threads`.
ExtremeSet argmax_so2(std::size_t n, TreeClass tree_class,
                      std::size_t max_order = kDefaultMaxOrder, unsigned threads = 1);
ExtremeSet argmin_so2(std::size_t n, TreeClass tree_class,
                      std::size_t max_order = kDefaultMaxOrder, unsigned threads = 1);

/// argmax/argmin over an already constructed stream.
ExtremeSet extreme_so2(const TreeStream& stream, bool maximize, unsigned threads = 1);

}  // namespace sombor
