// SPDX-License-Identifier: Apache-2.0

#include "sombor/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "sombor/indices.hpp"

namespace sombor {

// Canonical rooted trees, ids ordered by size. A tree's children are stored as
// a non-increasing list of ids, which makes the representation unique.
struct TreeStream::Catalog {
  struct Entry {
    std::size_t size;
    std::vector<std::uint32_t> children;
  };

  std::size_t max_root_children;  // for centroid roots
  std::size_t max_children;       // for every other vertex
  std::vector<Entry> entries;
  std::vector<std::uint32_t> first_of_size;  // first id with size >= s

  std::uint32_t end_of_size(std::size_t s) const {
    return s + 1 < first_of_size.size() ? first_of_size[s + 1]
                                        : static_cast<std::uint32_t>(entries.size());
  }

  // Visit each non-increasing id list (ids <= max_id) whose sizes sum to
  // `remaining` and has at most `slots` entries.
  template <typename Fn>
  void multisets(std::size_t remaining, std::int64_t max_id, std::size_t slots,
                 std::vector<std::uint32_t>& current, Fn&& emit) const {
    if (remaining == 0) {
      emit(current);
      return;
    }
    if (slots == 0) return;
    for (std::int64_t id = max_id; id >= 0; --id) {
      const auto& e = entries[static_cast<std::size_t>(id)];
      if (e.size > remaining) continue;
      // Largest remaining pieces are at most e.size each.
      if (slots < remaining && e.size * slots < remaining) break;
      current.push_back(static_cast<std::uint32_t>(id));
      multisets(remaining - e.size, id, slots - 1, current, emit);
      current.pop_back();
    }
  }

  Catalog(std::size_t max_size, TreeClass cls) {
    constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max() / 4;
    max_root_children = cls == TreeClass::kMolecular ? 4 : kUnbounded;
    max_children = cls == TreeClass::kMolecular ? 3 : kUnbounded;
    first_of_size.assign(max_size + 2, 0);
    for (std::size_t s = 1; s <= max_size; ++s) {
      first_of_size[s] = static_cast<std::uint32_t>(entries.size());
      const std::int64_t last = static_cast<std::int64_t>(entries.size()) - 1;
      std::vector<std::uint32_t> current;
      std::vector<Entry> fresh;
      multisets(s - 1, last, max_children, current,
                [&](const std::vector<std::uint32_t>& kids) { fresh.push_back({s, kids}); });
      for (auto& e : fresh) entries.push_back(std::move(e));
    }
    first_of_size[max_size + 1] = static_cast<std::uint32_t>(entries.size());
  }
};

TreeStream::TreeStream(std::size_t n, TreeClass tree_class, std::size_t max_order)
    : n_(n), class_(tree_class) {
  if (n == 0) throw std::out_of_range("tree order must be at least 1");
  if (n > max_order) {
    throw std::out_of_range("tree order " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(max_order));
  }
  catalog_ = std::make_shared<const Catalog>(n / 2, tree_class);
}

TreeStream::TreeStream(std::shared_ptr<const Catalog> catalog, std::size_t n, TreeClass tree_class,
                       std::optional<Part> part)
    : catalog_(std::move(catalog)), n_(n), class_(tree_class), part_(part) {}

void TreeStream::generate(
    const std::function<void(const std::vector<std::uint32_t>&, bool)>& emit) const {
  const Catalog& cat = *catalog_;
  std::vector<std::uint32_t> current;

  // One centroid: every branch has fewer than n/2 vertices.
  const std::size_t branch_max = (n_ - 1) / 2;
  const std::int64_t last_branch_id = static_cast<std::int64_t>(cat.end_of_size(branch_max)) - 1;
  auto emit_uni = [&](const std::vector<std::uint32_t>& branches) { emit(branches, false); };
  if (!part_) {
    cat.multisets(n_ - 1, last_branch_id, cat.max_root_children, current, emit_uni);
  } else if (!part_->bicentroidal) {
    const std::uint32_t first = part_->first;
    if (first == std::numeric_limits<std::uint32_t>::max()) {
      emit_uni(current);  // the single-vertex tree
    } else {
      current.push_back(first);
      cat.multisets(n_ - 1 - cat.entries[first].size, first, cat.max_root_children - 1, current,
                    emit_uni);
    }
  }

  // Two centroids: an edge joining two rooted halves of n/2 vertices.
  if (n_ % 2 == 0 && (!part_ || part_->bicentroidal)) {
    const std::size_t half = n_ / 2;
    const std::uint32_t lo = cat.first_of_size[half];
    const std::uint32_t hi = cat.end_of_size(half);
    for (std::uint32_t a = lo; a < hi; ++a) {
      if (part_ && part_->first != a) continue;
      for (std::uint32_t b = lo; b <= a; ++b) emit({a, b}, true);
    }
  }
}

Graph TreeStream::build(const std::vector<std::uint32_t>& branches, bool bicentroidal) const {
  const Catalog& cat = *catalog_;
  std::vector<Edge> edges;
  edges.reserve(n_ - 1);
  Vertex next = 0;
  // Appends the rooted tree `id` and returns its root vertex.
  auto attach = [&](auto&& self, std::uint32_t id) -> Vertex {
    const Vertex root = next++;
    for (std::uint32_t child : cat.entries[id].children) {
      const Vertex c = self(self, child);
      edges.push_back({root, c});
    }
    return root;
  };
  if (bicentroidal) {
    const Vertex a = attach(attach, branches[0]);
    const Vertex b = attach(attach, branches[1]);
    edges.push_back({a, b});
  } else {
    const Vertex root = next++;
    for (std::uint32_t id : branches) edges.push_back({root, attach(attach, id)});
  }
  return Graph(n_, edges);
}

void TreeStream::for_each(const std::function<void(const Graph&)>& visit) const {
  generate([&](const std::vector<std::uint32_t>& branches, bool bi) { visit(build(branches, bi)); });
}

std::size_t TreeStream::count() const {
  std::size_t total = 0;
  generate([&](const std::vector<std::uint32_t>&, bool) { ++total; });
  return total;
}

std::vector<Graph> TreeStream::collect() const {
  std::vector<Graph> out;
  for_each([&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<TreeStream> TreeStream::partition() const {
  if (part_) return {*this};
  const Catalog& cat = *catalog_;
  std::vector<TreeStream> parts;
  if (n_ == 1) {
    parts.push_back(TreeStream(catalog_, n_, class_,
                               Part{false, std::numeric_limits<std::uint32_t>::max()}));
    return parts;
  }
  const std::size_t branch_max = (n_ - 1) / 2;
  for (std::uint32_t id = 0; id < cat.end_of_size(branch_max); ++id) {
    parts.push_back(TreeStream(catalog_, n_, class_, Part{false, id}));
  }
  if (n_ % 2 == 0) {
    const std::size_t half = n_ / 2;
    for (std::uint32_t a = cat.first_of_size[half]; a < cat.end_of_size(half); ++a) {
      parts.push_back(TreeStream(catalog_, n_, class_, Part{true, a}));
    }
  }
  return parts;
}

TreeStream enumerate_trees(std::size_t n, std::size_t max_order) {
  return TreeStream(n, TreeClass::kAll, max_order);
}

TreeStream enumerate_molecular_trees(std::size_t n, std::size_t max_order) {
  return TreeStream(n, TreeClass::kMolecular, max_order);
}

namespace {

struct PartialExtreme {
  std::optional<Rational> value;
  std::vector<Graph> attainers;
};

void absorb(PartialExtreme& acc, Rational value, const Graph& g, bool maximize) {
  if (!acc.value || (maximize ? value > *acc.value : value < *acc.value)) {
    acc.value = std::move(value);
    acc.attainers.clear();
    acc.attainers.push_back(g);
  } else if (value == *acc.value) {
    acc.attainers.push_back(g);
  }
}

}  // namespace

ExtremeSet extreme_so2(const TreeStream& stream, bool maximize, unsigned threads) {
  const std::vector<TreeStream> parts = stream.partition();
  std::vector<PartialExtreme> partials(parts.size());
  auto work = [&](std::size_t i) {
    parts[i].for_each([&](const Graph& g) { absorb(partials[i], *so2(g).exact, g, maximize); });
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(parts.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < parts.size(); ++i) work(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < parts.size(); i += workers) work(i);
      });
    }
  }

  PartialExtreme merged;
  for (auto& p : partials) {
    if (!p.value) continue;
    for (const auto& g : p.attainers) absorb(merged, *p.value, g, maximize);
  }
  if (!merged.value) throw std::logic_error("extreme_so2: empty tree stream");
  return {std::move(*merged.value), std::move(merged.attainers)};
}

ExtremeSet argmax_so2(std::size_t n, TreeClass tree_class, std::size_t max_order,
                      unsigned threads) {
  return extreme_so2(TreeStream(n, tree_class, max_order), true, threads);
}

ExtremeSet argmin_so2(std::size_t n, TreeClass tree_class, std::size_t max_order,
                      unsigned threads) {
  return extreme_so2(TreeStream(n, tree_class, max_order), false, threads);
}

}  // namespace sombor
