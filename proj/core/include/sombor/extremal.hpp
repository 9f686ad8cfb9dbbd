// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sombor/enumeration.hpp"
#include "sombor/graph.hpp"
#include "sombor/rational.hpp"

namespace sombor {

Graph build_path(std::size_t n);
Graph build_star(std::size_t n);

/// The four families of molecular trees that maximise SO2 for n = 0, 1, 2, 3
/// (mod 4). Each is fixed by its edge-type counts:
///   T0: m14 = (n+4)/2, m24 = (n-8)/2, m44 = 1
///   T1: m14 = (n+3)/2, m24 = (n-5)/2
///   T2: m14 = n/2,     m24 = (n-4)/2, m12 = 1
///   T3: m14 = (n-1)/2, m24 = (n-7)/2, m13 = 2, m34 = 1
/// and every other m_ij zero.
struct FamilySignature {
  int residue;
  std::size_t min_order;

  bool admits(std::size_t n) const {
    return n >= min_order && n % 4 == static_cast<std::size_t>(residue);
  }
  /// Nonzero m_ij for order n; throws std::invalid_argument if !admits(n).
  std::map<DegreePair, std::size_t> edge_counts(std::size_t n) const;
};

/// Throws std::invalid_argument for residue outside 0..3.
FamilySignature family_signature(int residue);

/// Caterpillar representative of family `residue`: degree-4 hubs joined
/// through degree-2 vertices, the family's special feature at hub 0 (direct
/// hub-hub edge for T0, a pendant 2-1 arm for T2, a degree-3 vertex with two
/// leaves for T3), remaining hub slots filled with leaves.
Graph build_family_member(int residue, std::size_t n);

/// Degree-class adjacency test for family membership; also requires the
/// family's exact edge-type counts.
bool is_in_family(const Graph& g, int residue);

struct TreeBounds {
  Rational lower;
  Rational upper;
};

/// 6/5 <= SO2(T) <= (n^2-2n)(n-1)/(n^2-2n+2) over trees; requires n >= 3.
TreeBounds theorem32_bounds(std::size_t n);

/// Largest SO2 over molecular trees on n >= 5 vertices.
Rational theorem33_upper(std::size_t n);

class InconsistentProfile : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Right-hand sides of the solved degree/incidence system, i.e. m14, m24 and
/// n1..n4 expressed through n and m12, m13, m22, m23, m33, m34, m44.
struct MijSystemValues {
  Rational m14, m24, n1, n2, n3, n4;
  bool is_realizable() const;  // all six are nonnegative integers
};

/// Throws std::invalid_argument if the profile has fewer than three vertices
/// (the system assumes no edge joins two leaves) or a vertex of degree > 4.
MijSystemValues evaluate_mij_system(const EdgeTypeProfile& p);

struct MijSolution {
  std::size_t m14, m24, n1, n2, n3, n4;
  friend bool operator==(const MijSolution&, const MijSolution&) = default;
};

/// Like evaluate_mij_system, but throws InconsistentProfile unless every
/// value is a nonnegative integer.
MijSolution solve_mij_system(const EdgeTypeProfile& p);

/// SO2 of a molecular tree on n >= 3 vertices written through the seven
/// non-leading edge counts:
/// (126n-30)/170 - 36/85 m12 - 11/85 m13 - 63/85 m22 - 58/221 m23
///                - 47/85 m33 - 96/425 m34 - 39/85 m44.
Rational so2_reduced_form(const EdgeTypeProfile& p, std::size_t n);

/// Penalty t = 11/85 m13 + 58/221 m23 + 47/85 m33 + 96/425 m34 paid by a
/// molecular tree with one degree-3 vertex. Requires m13+m23+2m33+m34 = 3.
Rational table4_t(std::size_t m13, std::size_t m23, std::size_t m33, std::size_t m34);

struct Table4Row {
  std::size_t m13, m23, m33, m34;
  Rational t;
  /// Realisable in a molecular tree on n >= 5 vertices; (3,0,0,0) forces the star S4.
  bool feasible;
  /// Neighbours of the degree-3 vertex fall in at least two degree classes.
  bool multi_class;
};

/// Every nonnegative solution of m13+m23+2m33+m34 = 3 (13 rows).
std::vector<Table4Row> table4_rows();

struct OrderCheck {
  std::size_t n;
  std::size_t tree_count = 0;
  std::size_t molecular_count = 0;
  Rational min_all;
  std::size_t min_attainers = 0;
  Rational max_all;
  std::size_t max_attainers = 0;
  std::optional<Rational> max_molecular;
  std::optional<Rational> predicted_molecular;
  std::vector<Graph> molecular_maximizers;
  std::vector<std::string> notes;
};

struct VerificationReport {
  std::vector<OrderCheck> orders;
  std::vector<std::string> violations;
};

/// Brute-force check of the tree and molecular-tree bounds for 2 <= n <= n_max.
/// n = 2 is reported but not checked against the bounds (SO2(P2) = 0).
VerificationReport verify_theorems(std::size_t n_max, std::size_t max_order = kDefaultMaxOrder,
                                   unsigned threads = 1);

}  // namespace sombor
