// SPDX-License-Identifier: Apache-2.0

#include "sombor/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sombor {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") references a vertex outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  std::partial_sum(deg.begin(), deg.end(), offsets_.begin() + 1);
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw std::invalid_argument("repeated edge (" + std::to_string(v) + ", " +
                                  std::to_string(*dup) + ")");
    }
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  return out;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t min_degree(const Graph& g) {
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

bool is_molecular_tree(const Graph& g) { return is_tree(g) && max_degree(g) <= 4; }

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (Vertex p : perm) {
    if (p >= perm.size() || hit[p]) throw std::invalid_argument("relabel: not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e = {perm[e.u], perm[e.v]};
  return Graph(g.order(), edges);
}

EdgeTypeProfile::EdgeTypeProfile(std::size_t order, std::map<DegreePair, std::size_t> edge_counts,
                                 std::map<std::size_t, std::size_t> degree_counts)
    : order_(order), edge_counts_(std::move(edge_counts)), degree_counts_(std::move(degree_counts)) {
  std::erase_if(edge_counts_, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(degree_counts_, [](const auto& kv) { return kv.second == 0; });
}

std::size_t EdgeTypeProfile::edge_count() const {
  std::size_t total = 0;
  for (const auto& [pair, count] : edge_counts_) total += count;
  return total;
}

std::size_t EdgeTypeProfile::m(std::size_t i, std::size_t j) const {
  auto it = edge_counts_.find(DegreePair(i, j));
  return it == edge_counts_.end() ? 0 : it->second;
}

std::size_t EdgeTypeProfile::n(std::size_t degree) const {
  auto it = degree_counts_.find(degree);
  return it == degree_counts_.end() ? 0 : it->second;
}

bool EdgeTypeProfile::is_consistent() const {
  const std::size_t edges = edge_count();
  std::size_t vertices = 0;
  std::size_t degree_sum = 0;
  for (const auto& [d, count] : degree_counts_) {
    vertices += count;
    degree_sum += d * count;
  }
  if (vertices != order_ || degree_sum != 2 * edges) return false;

  std::map<std::size_t, std::size_t> incidences;
  for (const auto& [pair, count] : edge_counts_) {
    incidences[pair.low] += count;
    incidences[pair.high] += count;
  }
  for (const auto& [d, count] : degree_counts_) {
    if (d == 0) continue;
    if (incidences[d] != d * count) return false;
  }
  for (const auto& [d, count] : incidences) {
    if (count != d * n(d)) return false;
  }
  return true;
}

EdgeTypeProfile edge_type_profile(const Graph& g) {
  std::map<DegreePair, std::size_t> edge_counts;
  std::map<std::size_t, std::size_t> degree_counts;
  for (Vertex v = 0; v < g.order(); ++v) ++degree_counts[g.degree(v)];
  for (const auto& e : g.edges()) ++edge_counts[DegreePair(g.degree(e.u), g.degree(e.v))];
  return EdgeTypeProfile(g.order(), std::move(edge_counts), std::move(degree_counts));
}

namespace {

std::vector<Vertex> tree_centroids(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n, 0), order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  order.push_back(0);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::size_t> subtree(n, 1), heaviest(n, 0);
  for (std::size_t i = order.size(); i-- > 1;) {
    Vertex v = order[i];
    subtree[parent[v]] += subtree[v];
    heaviest[parent[v]] = std::max(heaviest[parent[v]], subtree[v]);
  }
  std::vector<Vertex> centroids;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t worst = std::max(heaviest[v], n - subtree[v]);
    if (2 * worst <= n) centroids.push_back(v);
  }
  return centroids;
}

std::string ahu_code(const Graph& g, Vertex v, Vertex parent, bool has_parent) {
  std::vector<std::string> children;
  for (Vertex w : g.neighbors(v)) {
    if (has_parent && w == parent) continue;
    children.push_back(ahu_code(g, w, v, true));
  }
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  code += ")";
  return code;
}

}  // namespace

std::string tree_canonical_code(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("tree_canonical_code: graph is not a tree");
  std::string best;
  for (Vertex c : tree_centroids(g)) {
    std::string code = ahu_code(g, c, c, false);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: expected header \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges, read " +
                               std::to_string(i));
    }
    if (u < 0 || v < 0) throw std::runtime_error("edge list: negative vertex id");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string extra;
  if (in >> extra) throw std::runtime_error("edge list: trailing content \"" + extra + "\"");
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string edge_list_line(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size();
  for (const auto& e : g.edges()) out << ' ' << e.u << ' ' << e.v;
  return out.str();
}

}  // namespace sombor
