// SPDX-License-Identifier: Apache-2.0

#include "sombor/extremal.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "sombor/indices.hpp"

namespace sombor {

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

}  // namespace

Graph build_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("build_path: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph build_star(std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_star: n must be at least 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

FamilySignature family_signature(int residue) {
  switch (residue) {
    case 0: return {0, 8};
    case 1: return {1, 5};
    case 2: return {2, 6};
    case 3: return {3, 7};
    default:
      throw std::invalid_argument("family residue must be 0, 1, 2 or 3");
  }
}

std::map<DegreePair, std::size_t> FamilySignature::edge_counts(std::size_t n) const {
  if (!admits(n)) {
    throw std::invalid_argument("family T" + std::to_string(residue) + " needs n = " +
                                std::to_string(residue) + " (mod 4) and n >= " +
                                std::to_string(min_order) + "; got n = " + std::to_string(n));
  }
  std::map<DegreePair, std::size_t> m;
  switch (residue) {
    case 0:
      m[{1, 4}] = (n + 4) / 2;
      m[{2, 4}] = (n - 8) / 2;
      m[{4, 4}] = 1;
      break;
    case 1:
      m[{1, 4}] = (n + 3) / 2;
      m[{2, 4}] = (n - 5) / 2;
      break;
    case 2:
      m[{1, 4}] = n / 2;
      m[{2, 4}] = (n - 4) / 2;
      m[{1, 2}] = 1;
      break;
    default:
      m[{1, 4}] = (n - 1) / 2;
      m[{2, 4}] = (n - 7) / 2;
      m[{1, 3}] = 2;
      m[{3, 4}] = 1;
      break;
  }
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

Graph build_family_member(int residue, std::size_t n) {
  const FamilySignature sig = family_signature(residue);
  sig.edge_counts(n);  // validates n

  const std::size_t hubs = n / 4;
  std::vector<Edge> edges;
  Vertex next = 0;
  std::vector<Vertex> hub(hubs);
  for (auto& h : hub) h = next++;
  std::vector<std::size_t> free_slots(hubs, 4);

  for (std::size_t i = 0; i + 1 < hubs; ++i) {
    if (residue == 0 && i == 0) {
      edges.push_back({hub[0], hub[1]});
    } else {
      const Vertex link = next++;
      edges.push_back({hub[i], link});
      edges.push_back({link, hub[i + 1]});
    }
    --free_slots[i];
    --free_slots[i + 1];
  }

  if (residue == 2) {
    const Vertex arm = next++;
    const Vertex tip = next++;
    edges.push_back({hub[0], arm});
    edges.push_back({arm, tip});
    --free_slots[0];
  } else if (residue == 3) {
    const Vertex branch = next++;
    edges.push_back({hub[0], branch});
    for (int k = 0; k < 2; ++k) edges.push_back({branch, next++});
    --free_slots[0];
  }

  for (std::size_t i = 0; i < hubs; ++i) {
    for (std::size_t k = 0; k < free_slots[i]; ++k) edges.push_back({hub[i], next++});
  }
  return Graph(n, edges);
}

bool is_in_family(const Graph& g, int residue) {
  const FamilySignature sig = family_signature(residue);
  const std::size_t n = g.order();
  if (!sig.admits(n) || !is_molecular_tree(g)) return false;

  std::size_t degree3 = 0;
  std::size_t special_degree2 = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    std::array<std::size_t, 5> around{};
    for (Vertex w : g.neighbors(v)) ++around[g.degree(w)];
    if (d == 2) {
      if (around[4] == 2) continue;
      if (residue == 2 && around[4] == 1 && around[1] == 1) {
        ++special_degree2;
        continue;
      }
      return false;
    }
    if (d == 3) {
      if (residue != 3 || around[1] != 2 || around[4] != 1) return false;
      ++degree3;
    }
  }
  if (residue == 3 && degree3 != 1) return false;
  if (residue == 2 && special_degree2 != 1) return false;

  return edge_type_profile(g).edge_counts() == sig.edge_counts(n);
}

TreeBounds theorem32_bounds(std::size_t n) {
  if (n <= 2) throw std::invalid_argument("theorem32_bounds: n must be at least 3");
  const std::int64_t k = as_int(n);
  return {r(6, 5), r((k * k - 2 * k) * (k - 1), k * k - 2 * k + 2)};
}

Rational theorem33_upper(std::size_t n) {
  if (n < 5) throw std::invalid_argument("theorem33_upper: n must be at least 5");
  const std::int64_t k = as_int(n);
  switch (n % 4) {
    case 0: return r(126 * k - 108, 170);
    case 1: return r(126 * k - 30, 170);
    case 2: return r(126 * k - 102, 170);
    default: return r(315 * k - 281, 425);
  }
}

bool MijSystemValues::is_realizable() const {
  for (const Rational* v : {&m14, &m24, &n1, &n2, &n3, &n4}) {
    if (v->sign() < 0 || !v->is_integer()) return false;
  }
  return true;
}

MijSystemValues evaluate_mij_system(const EdgeTypeProfile& p) {
  if (p.order() < 3) throw std::invalid_argument("evaluate_mij_system: needs at least 3 vertices");
  for (const auto& [d, count] : p.degree_counts()) {
    if (d > 4) throw std::invalid_argument("evaluate_mij_system: profile has a vertex of degree > 4");
  }
  const Rational n = r(as_int(p.order()));
  const Rational m12 = r(as_int(p.m(1, 2))), m13 = r(as_int(p.m(1, 3)));
  const Rational m22 = r(as_int(p.m(2, 2))), m23 = r(as_int(p.m(2, 3)));
  const Rational m33 = r(as_int(p.m(3, 3))), m34 = r(as_int(p.m(3, 4)));
  const Rational m44 = r(as_int(p.m(4, 4)));

  MijSystemValues out;
  out.m14 = (n + r(3)) / r(2) - r(3, 2) * m12 - r(7, 6) * m13 - r(1, 2) * m22 - r(1, 6) * m23 +
            r(1, 6) * m33 + r(1, 3) * m34 + r(1, 2) * m44;
  out.m24 = (n - r(5)) / r(2) + r(1, 2) * m12 + r(1, 6) * m13 - r(1, 2) * m22 - r(5, 6) * m23 -
            r(7, 6) * m33 - r(4, 3) * m34 - r(3, 2) * m44;
  out.n1 = (n + r(3)) / r(2) - r(1, 2) * m12 - r(1, 6) * m13 - r(1, 2) * m22 - r(1, 6) * m23 +
           r(1, 6) * m33 + r(1, 3) * m34 + r(1, 2) * m44;
  out.n2 = (n - r(5)) / r(4) + r(3, 4) * m12 + r(1, 12) * m13 + r(3, 4) * m22 + r(1, 12) * m23 -
           r(7, 12) * m33 - r(2, 3) * m34 - r(3, 4) * m44;
  out.n3 = r(1, 3) * m13 + r(1, 3) * m23 + r(2, 3) * m33 + r(1, 3) * m34;
  out.n4 = (n - r(1)) / r(4) - r(1, 4) * m12 - r(1, 4) * m13 - r(1, 4) * m22 - r(1, 4) * m23 -
           r(1, 4) * m33 + r(1, 4) * m44;
  return out;
}

MijSolution solve_mij_system(const EdgeTypeProfile& p) {
  const MijSystemValues v = evaluate_mij_system(p);
  if (!v.is_realizable()) {
    throw InconsistentProfile("edge-type profile is not realisable by a molecular tree on " +
                              std::to_string(p.order()) + " vertices");
  }
  auto to_size = [](const Rational& x) { return static_cast<std::size_t>(x.numerator()); };
  return {to_size(v.m14), to_size(v.m24), to_size(v.n1),
          to_size(v.n2),  to_size(v.n3),  to_size(v.n4)};
}

Rational so2_reduced_form(const EdgeTypeProfile& p, std::size_t n) {
  if (n < 3) throw std::invalid_argument("so2_reduced_form: needs at least 3 vertices");
  auto m = [&](std::size_t i, std::size_t j) { return r(as_int(p.m(i, j))); };
  return r(126 * as_int(n) - 30, 170) - r(36, 85) * m(1, 2) - r(11, 85) * m(1, 3) -
         r(63, 85) * m(2, 2) - r(58, 221) * m(2, 3) - r(47, 85) * m(3, 3) -
         r(96, 425) * m(3, 4) - r(39, 85) * m(4, 4);
}

Rational table4_t(std::size_t m13, std::size_t m23, std::size_t m33, std::size_t m34) {
  if (m13 + m23 + 2 * m33 + m34 != 3) {
    throw std::invalid_argument("table4_t: requires m13 + m23 + 2 m33 + m34 = 3");
  }
  return r(11, 85) * r(as_int(m13)) + r(58, 221) * r(as_int(m23)) + r(47, 85) * r(as_int(m33)) +
         r(96, 425) * r(as_int(m34));
}

std::vector<Table4Row> table4_rows() {
  std::vector<Table4Row> rows;
  for (std::size_t m33 = 0; m33 <= 1; ++m33) {
    const std::size_t rest = 3 - 2 * m33;
    for (std::size_t m13 = 0; m13 <= rest; ++m13) {
      for (std::size_t m23 = 0; m13 + m23 <= rest; ++m23) {
        const std::size_t m34 = rest - m13 - m23;
        const int classes = (m13 > 0) + (m23 > 0) + (m33 > 0) + (m34 > 0);
        const bool star = m13 == 3;
        rows.push_back({m13, m23, m33, m34, table4_t(m13, m23, m33, m34), !star, classes >= 2});
      }
    }
  }
  return rows;
}

namespace {

bool same_tree(const Graph& a, const Graph& b) {
  return tree_canonical_code(a) == tree_canonical_code(b);
}

}  // namespace

VerificationReport verify_theorems(std::size_t n_max, std::size_t max_order, unsigned threads) {
  if (n_max > max_order) {
    throw std::out_of_range("verify_theorems: n_max " + std::to_string(n_max) +
                            " exceeds the enumeration cap " + std::to_string(max_order));
  }
  VerificationReport report;
  auto violation = [&](std::size_t n, const std::string& what) {
    report.violations.push_back("n=" + std::to_string(n) + ": " + what);
  };

  for (std::size_t n = 2; n <= n_max; ++n) {
    OrderCheck check;
    check.n = n;
    const TreeStream all(n, TreeClass::kAll, max_order);
    const TreeStream molecular(n, TreeClass::kMolecular, max_order);
    check.tree_count = all.count();
    check.molecular_count = molecular.count();

    const ExtremeSet lo = extreme_so2(all, false, threads);
    const ExtremeSet hi = extreme_so2(all, true, threads);
    check.min_all = lo.value;
    check.min_attainers = lo.attainers.size();
    check.max_all = hi.value;
    check.max_attainers = hi.attainers.size();

    if (n == 2) {
      check.notes.push_back("single edge: SO2 = 0, below the tree lower bound 6/5");
    } else {
      const TreeBounds bounds = theorem32_bounds(n);
      if (lo.value != bounds.lower) violation(n, "tree minimum " + lo.value.to_string() + " != 6/5");
      if (lo.attainers.size() != 1 || !same_tree(lo.attainers.front(), build_path(n))) {
        violation(n, "tree minimum not attained by the path alone");
      }
      if (hi.value != bounds.upper) {
        violation(n, "tree maximum " + hi.value.to_string() + " != " + bounds.upper.to_string());
      }
      if (hi.attainers.size() != 1 || !same_tree(hi.attainers.front(), build_star(n))) {
        violation(n, "tree maximum not attained by the star alone");
      }
    }

    if (n >= 5) {
      const ExtremeSet mol = extreme_so2(molecular, true, threads);
      const Rational predicted = theorem33_upper(n);
      const int residue = static_cast<int>(n % 4);
      check.max_molecular = mol.value;
      check.predicted_molecular = predicted;
      check.molecular_maximizers = mol.attainers;
      if (mol.value != predicted) {
        violation(n, "molecular maximum " + mol.value.to_string() + " != " + predicted.to_string());
      }
      for (const Graph& g : mol.attainers) {
        if (!is_in_family(g, residue)) {
          violation(n, "molecular maximizer outside T" + std::to_string(residue) + ": " +
                           edge_list_line(g));
        }
      }
      if (residue == 0 && n < 12) {
        check.notes.push_back("T0 at n=" + std::to_string(n) +
                              " has no degree-2 vertices (m24 = 0)");
      }
    }
    report.orders.push_back(std::move(check));
  }
  return report;
}

}  // namespace sombor
