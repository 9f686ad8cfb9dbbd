// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include "sombor/chem_io.hpp"
#include "sombor/enumeration.hpp"
#include "sombor/extremal.hpp"
#include "sombor/indices.hpp"
#include "sombor/qspr.hpp"

namespace sombor::cli {

namespace {

enum class Format { kPlain, kTsv };

std::size_t max_order_from_env() {
  const char* raw = std::getenv("SOMBOR_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxOrder;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0) {
    throw std::invalid_argument("SOMBOR_MAX_N must be a positive integer, got \"" +
                                std::string(text) + "\"");
  }
  return value;
}

std::string exact_and_decimal(const Rational& r) {
  return r.to_string() + " (" + format_decimal(r.to_double()) + ")";
}

std::string value_text(const IndexValue& v) {
  return v.exact ? exact_and_decimal(*v.exact) : format_decimal(v.approx);
}

std::string degree_line(const Graph& g) {
  std::string s;
  for (std::size_t d : degrees(g)) {
    if (!s.empty()) s += ' ';
    s += std::to_string(d);
  }
  return s;
}

struct ComputeOptions {
  std::string index = "so2";
  std::string smiles;
  std::string input;
};

struct EnumerateOptions {
  std::size_t n = 0;
  bool molecular = false;
  std::string emit = "edgelist";
};

struct ExtremalOptions {
  std::optional<std::size_t> n;
  std::optional<std::size_t> verify_up_to;
  std::optional<int> family;
  bool maximizers = false;
  unsigned threads = 1;
};

struct FitOptions {
  std::string dataset;
  std::string index = "so2";
  std::string property;
  bool emit_points = false;
};

struct ParseOptions {
  std::string smiles;
};

void do_compute(const ComputeOptions& opt, Format fmt, std::ostream& out) {
  std::optional<Graph> g;
  if (!opt.smiles.empty()) {
    g = parse_alkane_smiles(opt.smiles);
  } else if (opt.input == "-") {
    g = read_edge_list(std::cin);
  } else {
    std::ifstream in(opt.input);
    if (!in) throw std::runtime_error("cannot open " + opt.input);
    g = read_edge_list(in);
  }
  const IndexValue v = compute_index(*g, opt.index);
  if (fmt == Format::kTsv) {
    out << "index\texact\tdecimal\n"
        << opt.index << '\t' << (v.exact ? v.exact->to_string() : "") << '\t'
        << format_decimal(v.approx) << '\n';
  } else {
    out << value_text(v) << '\n';
  }
}

void do_enumerate(const EnumerateOptions& opt, std::ostream& out) {
  const TreeStream stream(opt.n, opt.molecular ? TreeClass::kMolecular : TreeClass::kAll,
                          max_order_from_env());
  if (opt.emit == "count") {
    out << stream.count() << '\n';
    return;
  }
  stream.for_each([&](const Graph& g) { out << edge_list_line(g) << '\n'; });
}

void print_verification(const VerificationReport& report, Format fmt, std::ostream& out) {
  if (fmt == Format::kTsv) {
    out << "n\ttrees\tmolecular_trees\ttree_min\ttree_max\tmolecular_max\tmolecular_bound\t"
           "maximizers\n";
    for (const auto& o : report.orders) {
      out << o.n << '\t' << o.tree_count << '\t' << o.molecular_count << '\t'
          << o.min_all.to_string() << '\t' << o.max_all.to_string() << '\t'
          << (o.max_molecular ? o.max_molecular->to_string() : "") << '\t'
          << (o.predicted_molecular ? o.predicted_molecular->to_string() : "") << '\t'
          << o.molecular_maximizers.size() << '\n';
    }
    for (const auto& v : report.violations) out << "violation\t" << v << '\n';
    out << "violations\t" << report.violations.size() << '\n';
    return;
  }
  for (const auto& o : report.orders) {
    out << "n=" << o.n << ": " << o.tree_count << " trees, " << o.molecular_count
        << " molecular; tree SO2 in [" << o.min_all.to_string() << ", " << o.max_all.to_string()
        << "]";
    if (o.max_molecular) {
      out << "; molecular max " << o.max_molecular->to_string() << " (bound "
          << o.predicted_molecular->to_string() << ", " << o.molecular_maximizers.size()
          << " maximizer" << (o.molecular_maximizers.size() == 1 ? "" : "s") << ")";
    }
    out << '\n';
    for (const auto& note : o.notes) out << "  note: " << note << '\n';
  }
  for (const auto& v : report.violations) out << "violation: " << v << '\n';
  out << report.violations.size() << " violations\n";
}

void do_extremal(const ExtremalOptions& opt, Format fmt, std::ostream& out) {
  const std::size_t cap = max_order_from_env();
  if (!opt.n && !opt.verify_up_to) {
    throw CLI::RequiredError("extremal needs --n or --verify-up-to");
  }
  if (opt.n) {
    const std::size_t n = *opt.n;
    auto line = [&](std::string_view key, const Rational& r) {
      if (fmt == Format::kTsv) {
        out << key << '\t' << r.to_string() << '\t' << format_decimal(r.to_double()) << '\n';
      } else {
        out << key << ": " << exact_and_decimal(r) << '\n';
      }
    };
    out << (fmt == Format::kTsv ? "n\t" : "n: ") << n << '\n';
    if (n >= 3) {
      const TreeBounds b = theorem32_bounds(n);
      line("tree_lower", b.lower);
      line("tree_upper", b.upper);
    }
    if (n >= 5) line("molecular_upper", theorem33_upper(n));
    if (opt.family) {
      const Graph g = build_family_member(*opt.family, n);
      line("family_so2", *so2(g).exact);
      out << (fmt == Format::kTsv ? "family_edges\t" : "family edges: ") << edge_list_line(g)
          << '\n';
    }
    if (opt.maximizers) {
      const ExtremeSet best = argmax_so2(n, TreeClass::kMolecular, cap, opt.threads);
      line("molecular_max", best.value);
      out << (fmt == Format::kTsv ? "maximizers\t" : "maximizers: ") << best.attainers.size()
          << '\n';
      for (const auto& g : best.attainers) out << edge_list_line(g) << '\n';
    }
  }
  if (opt.verify_up_to) {
    print_verification(verify_theorems(*opt.verify_up_to, cap, opt.threads), fmt, out);
  }
}

void do_fit(const FitOptions& opt, Format fmt, std::ostream& out) {
  const std::vector<MoleculeRecord> records = load_dataset(opt.dataset);
  const std::vector<double> xs = column_values(records, opt.index);
  const std::vector<double> ys = column_values(records, opt.property);
  const RegressionFit fit = linear_fit(xs, ys);
  const char* sep = fmt == Format::kTsv ? "\t" : ": ";
  out << "index" << sep << opt.index << '\n'
      << "property" << sep << opt.property << '\n'
      << "sample_size" << sep << fit.sample_size << '\n'
      << "slope" << sep << format_decimal(fit.slope) << '\n'
      << "intercept" << sep << format_decimal(fit.intercept) << '\n'
      << "r" << sep << format_decimal(fit.r) << '\n'
      << "r_squared" << sep << format_decimal(fit.r_squared) << '\n';
  if (opt.emit_points) {
    const char* col = fmt == Format::kTsv ? "\t" : " ";
    out << "name" << col << "x" << col << "y" << col << "y_fit\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      out << records[i].name << col << format_decimal(xs[i]) << col << format_decimal(ys[i])
          << col << format_decimal(fit.predict(xs[i])) << '\n';
    }
  }
}

void do_parse(const ParseOptions& opt, Format fmt, std::ostream& out) {
  const Graph g = parse_alkane_smiles(opt.smiles);
  write_edge_list(out, g);
  out << (fmt == Format::kTsv ? "degrees\t" : "degrees: ") << degree_line(g) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second Sombor index and vertex-degree-based invariants of trees"};
  app.require_subcommand(1);

  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "tsv"}))
      ->capture_default_str();

  ComputeOptions compute_opt;
  auto* compute = app.add_subcommand("compute", "Evaluate an index on one graph");
  compute->add_option("--index", compute_opt.index, "so2|so|m1|m2|f|r|sci|sdd|mn")
      ->check(CLI::IsMember({"so2", "so", "m1", "m2", "f", "r", "sci", "sdd", "mn"}))
      ->capture_default_str();
  auto* smiles_flag = compute->add_option("--smiles", compute_opt.smiles, "Alkane SMILES");
  auto* input_flag =
      compute->add_option("--input", compute_opt.input, "Edge-list file (\"-\" for stdin)");
  smiles_flag->excludes(input_flag);

  EnumerateOptions enumerate_opt;
  auto* enumerate = app.add_subcommand("enumerate", "List non-isomorphic trees");
  enumerate->add_option("--n", enumerate_opt.n, "Number of vertices")->required();
  enumerate->add_flag("--molecular", enumerate_opt.molecular, "Only trees with max degree <= 4");
  enumerate->add_option("--emit", enumerate_opt.emit, "edgelist|count")
      ->check(CLI::IsMember({"edgelist", "count"}))
      ->capture_default_str();

  ExtremalOptions extremal_opt;
  auto* extremal = app.add_subcommand("extremal", "Extremal bounds, families and verification");
  extremal->add_option("--n", extremal_opt.n, "Number of vertices");
  extremal->add_option("--verify-up-to", extremal_opt.verify_up_to,
                       "Brute-force the bounds for all orders up to k");
  auto* family_flag = extremal->add_option("--family", extremal_opt.family,
                                           "Build the canonical member of T0..T3")
                          ->check(CLI::Range(0, 3));
  auto* maximizers_flag = extremal->add_flag("--maximizers", extremal_opt.maximizers,
                                             "Enumerate every molecular maximizer for --n");
  extremal->add_option("--threads", extremal_opt.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  FitOptions fit_opt;
  auto* fit = app.add_subcommand("fit", "Least-squares fit of a property against an index");
  fit->add_option("--dataset", fit_opt.dataset, "CSV dataset")->required();
  fit->add_option("--index", fit_opt.index, "Predictor index")->capture_default_str();
  fit->add_option("--property", fit_opt.property, "Property column (or index name)")->required();
  fit->add_flag("--emit-points", fit_opt.emit_points, "Also print (x, y, fitted y) per molecule");

  ParseOptions parse_opt;
  auto* parse = app.add_subcommand("parse", "Parse alkane SMILES into an edge list");
  parse->add_option("--smiles", parse_opt.smiles, "Alkane SMILES")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (compute->parsed() && smiles_flag->count() == 0 && input_flag->count() == 0) {
      throw CLI::RequiredError("compute needs --smiles or --input");
    }
    if (extremal->parsed() && !extremal_opt.n && (family_flag->count() || maximizers_flag->count())) {
      throw CLI::ValidationError("--family and --maximizers need --n");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << '\n' << app.help();
    return 2;
  }

  const Format fmt = format == "tsv" ? Format::kTsv : Format::kPlain;
  try {
    if (compute->parsed()) do_compute(compute_opt, fmt, out);
    if (enumerate->parsed()) do_enumerate(enumerate_opt, out);
    if (extremal->parsed()) do_extremal(extremal_opt, fmt, out);
    if (fit->parsed()) do_fit(fit_opt, fmt, out);
    if (parse->parsed()) do_parse(parse_opt, fmt, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sombor::cli
