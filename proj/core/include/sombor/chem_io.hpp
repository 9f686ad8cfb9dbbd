// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/rational.hpp"

namespace sombor {

/// Error while reading hydrogen-suppressed alkane SMILES; `position` is the
/// 0-based offset of the offending character (input length for end-of-input).
class SmilesError : public std::runtime_error {
 public:
  SmilesError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Carbon skeleton of an acyclic alkane written with 'C', '(' and ')' only.
/// Vertices are numbered in token order. Rejects empty input, any other
/// character, unbalanced or empty branches, a branch before the first atom,
/// and any carbon with more than four neighbours.
Graph parse_alkane_smiles(std::string_view smiles);

/// Depth-first SMILES for a molecular tree, starting at vertex 0.
std::string to_alkane_smiles(const Graph& tree);

struct MoleculeRecord {
  std::string name;
  std::string smiles;
  std::map<std::string, double> properties;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated dataset with header "name,smiles,<property>,...". Empty
/// cells leave the property absent. Throws DatasetError on unreadable files,
/// malformed numbers (row and column named), duplicate names, empty names,
/// SMILES that do not parse and rows with the wrong number of cells.
std::vector<MoleculeRecord> load_dataset(const std::filesystem::path& path);
std::vector<MoleculeRecord> read_dataset(std::istream& in);

/// Writes the dataset back with the given property columns.
void write_dataset(std::ostream& out, const std::vector<MoleculeRecord>& records,
                   const std::vector<std::string>& property_columns);

/// Exact SO2 of each record's carbon skeleton, in record order.
std::vector<std::pair<std::string, Rational>> so2_table(const std::vector<MoleculeRecord>& records);

}  // namespace sombor
