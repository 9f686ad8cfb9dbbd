// SPDX-License-Identifier: Apache-2.0

#include "sombor/chem_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>

#include "sombor/indices.hpp"

namespace sombor {

SmilesError::SmilesError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

Graph parse_alkane_smiles(std::string_view smiles) {
  if (smiles.empty()) throw SmilesError("empty SMILES", 0);

  std::vector<Edge> edges;
  std::vector<std::size_t> degree;
  std::optional<Vertex> previous;
  // Branch stack: the atom a branch hangs from, where it opened, whether it has an atom yet.
  struct Open {
    Vertex anchor;
    std::size_t position;
    bool has_atom;
  };
  std::vector<Open> stack;

  for (std::size_t pos = 0; pos < smiles.size(); ++pos) {
    const char ch = smiles[pos];
    switch (ch) {
      case 'C': {
        const auto atom = static_cast<Vertex>(degree.size());
        degree.push_back(0);
        if (previous) {
          if (++degree[*previous] > 4 || ++degree[atom] > 4) {
            throw SmilesError("carbon with more than four neighbours", pos);
          }
          edges.push_back({*previous, atom});
        }
        if (!stack.empty()) stack.back().has_atom = true;
        previous = atom;
        break;
      }
      case '(':
        if (!previous) throw SmilesError("branch before the first atom", pos);
        stack.push_back({*previous, pos, false});
        break;
      case ')':
        if (stack.empty()) throw SmilesError("unbalanced ')'", pos);
        if (!stack.back().has_atom) throw SmilesError("empty branch", pos);
        previous = stack.back().anchor;
        stack.pop_back();
        break;
      default:
        throw SmilesError(std::string("unsupported character '") + ch + "'", pos);
    }
  }
  if (!stack.empty()) throw SmilesError("unbalanced '('", stack.back().position);
  return Graph(degree.size(), edges);
}

namespace {

void emit_smiles(const Graph& g, Vertex v, std::optional<Vertex> parent, std::string& out) {
  out += 'C';
  std::vector<Vertex> children;
  for (Vertex w : g.neighbors(v)) {
    if (!parent || w != *parent) children.push_back(w);
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    const bool last = i + 1 == children.size();
    if (!last) out += '(';
    emit_smiles(g, children[i], v, out);
    if (!last) out += ')';
  }
}

// Cells may be wrapped in double quotes (names such as "2,2-dimethyl-hexane");
// a doubled quote inside a quoted cell is a literal quote.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t row) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch != '"') {
        cells.back() += ch;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.emplace_back();
    } else {
      cells.back() += ch;
    }
  }
  if (quoted) throw DatasetError("dataset row " + std::to_string(row) + ": unterminated quote");
  return cells;
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string to_alkane_smiles(const Graph& tree) {
  if (!is_molecular_tree(tree)) {
    throw std::invalid_argument("to_alkane_smiles: graph is not a molecular tree");
  }
  std::string out;
  emit_smiles(tree, 0, std::nullopt, out);
  return out;
}

std::vector<MoleculeRecord> read_dataset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DatasetError("dataset: missing header row");
  std::vector<std::string> header = split_csv_line(line, 1);
  for (auto& h : header) h = trim(h);
  if (header.size() < 2 || header[0] != "name" || header[1] != "smiles") {
    throw DatasetError("dataset: header must start with \"name,smiles\"");
  }

  std::vector<MoleculeRecord> records;
  std::set<std::string> seen;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv_line(line, row);
    const std::string where = "dataset row " + std::to_string(row);
    if (cells.size() != header.size()) {
      throw DatasetError(where + ": expected " + std::to_string(header.size()) + " cells, found " +
                         std::to_string(cells.size()));
    }
    MoleculeRecord rec;
    rec.name = trim(cells[0]);
    rec.smiles = trim(cells[1]);
    if (rec.name.empty()) throw DatasetError(where + ": empty name");
    if (!seen.insert(rec.name).second) {
      throw DatasetError(where + ": duplicate name \"" + rec.name + "\"");
    }
    try {
      parse_alkane_smiles(rec.smiles);
    } catch (const SmilesError& e) {
      throw DatasetError(where + " (" + rec.name + "): " + e.what());
    }
    for (std::size_t c = 2; c < cells.size(); ++c) {
      const std::string text = trim(cells[c]);
      if (text.empty()) continue;
      double value = 0.0;
      auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || end != text.data() + text.size()) {
        throw DatasetError(where + " (" + rec.name + "), column " + header[c] +
                           ": not a number: \"" + text + "\"");
      }
      rec.properties[header[c]] = value;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<MoleculeRecord> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset " + path.string());
  return read_dataset(in);
}

void write_dataset(std::ostream& out, const std::vector<MoleculeRecord>& records,
                   const std::vector<std::string>& property_columns) {
  out << "name,smiles";
  for (const auto& c : property_columns) out << ',' << csv_cell(c);
  out << '\n';
  for (const auto& rec : records) {
    out << csv_cell(rec.name) << ',' << csv_cell(rec.smiles);
    for (const auto& c : property_columns) {
      out << ',';
      if (auto it = rec.properties.find(c); it != rec.properties.end()) {
        out << format_decimal(it->second);
      }
    }
    out << '\n';
  }
}

std::vector<std::pair<std::string, Rational>> so2_table(const std::vector<MoleculeRecord>& records) {
  std::vector<std::pair<std::string, Rational>> out;
  out.reserve(records.size());
  for (const auto& rec : records) {
    out.emplace_back(rec.name, *so2(parse_alkane_smiles(rec.smiles)).exact);
  }
  return out;
}

}  // namespace sombor
