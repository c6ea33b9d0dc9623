// meshdist: distribution tables, formula-vs-oracle verification, the
// nr 48 <-> nr 49 occurrence-preserving bijection, and OEIS b-file output
// for the built-in mesh-pattern catalogue.
//
// Exit codes: 0 success (including reported conjecture divergence),
//             1 violation of a proved result (formula/oracle mismatch,
//               equidistribution failure, broken containment structure),
//             2 usage or input error.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meshdist/meshdist.hpp"

namespace {

constexpr int kAbsoluteNMax = 10;
constexpr int kOrderCap = 16;
constexpr int kDefaultOrder = 12;

// A usage-level problem: reported on stderr, exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A violation of proved mathematics: reported on stderr, exit code 1.
class MathViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Selector {
  std::optional<int> nr;
  std::string pattern_literal;
};

meshdist::MeshPattern resolve_pattern(const Selector& sel) {
  if (sel.nr.has_value() && !sel.pattern_literal.empty())
    throw UsageError("pass exactly one of --nr / --pattern");
  if (sel.nr.has_value()) {
    if (!meshdist::catalog_has(*sel.nr))
      throw UsageError("no catalogued pattern with nr=" + std::to_string(*sel.nr));
    return meshdist::catalog_lookup(*sel.nr).pattern;
  }
  if (sel.pattern_literal.empty())
    throw UsageError("one of --nr / --pattern is required");
  try {
    return meshdist::parse_pattern(sel.pattern_literal);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --pattern: ") + e.what());
  }
}

// The catalogue number of a pattern, if it is catalogued.
std::optional<int> nr_of(const meshdist::MeshPattern& p) {
  for (const auto& entry : meshdist::catalog())
    if (entry.pattern == p) return entry.nr;
  return std::nullopt;
}

void check_n_range(int n, bool via_oracle, bool unsafe) {
  if (n < 0) throw UsageError("n must be >= 0");
  if (n > kAbsoluteNMax)
    throw UsageError("n is capped at " + std::to_string(kAbsoluteNMax));
  if (via_oracle && n > meshdist::kOracleCeiling && !unsafe)
    throw UsageError("exhaustive enumeration beyond n=" +
                     std::to_string(meshdist::kOracleCeiling) +
                     " requires --unsafe-n-max");
}

int resolve_order(std::optional<int> order_flag, int n_needed) {
  int order = order_flag.value_or(std::max(kDefaultOrder, n_needed));
  if (order > kOrderCap)
    throw UsageError("--order is capped at " + std::to_string(kOrderCap));
  if (order < n_needed)
    throw UsageError("--order must be at least the requested n");
  return order;
}

meshdist::DistributionTable compute_table(const meshdist::MeshPattern& pattern,
                                          int n_max, const std::string& source,
                                          std::optional<int> order_flag,
                                          const meshdist::OracleOptions& options,
                                          bool unsafe) {
  if (source == "oracle") {
    check_n_range(n_max, true, unsafe);
    return meshdist::brute_distribution(pattern, n_max, options);
  }
  if (source != "formula")
    throw UsageError("--source must be oracle or formula");
  check_n_range(n_max, false, unsafe);
  resolve_order(order_flag, n_max);  // validates the cap
  if (pattern == meshdist::strong_fixed_point_pattern())
    return meshdist::dist_by_tag("T1.1", n_max);
  std::optional<int> nr = nr_of(pattern);
  if (!nr.has_value() || !meshdist::has_formula_for_nr(*nr))
    throw UsageError(
        "no implemented enumeration formula for this pattern; use --source oracle");
  return meshdist::dist_formula_for_nr(*nr, n_max);
}

// --- dist ---------------------------------------------------------------------

struct DistArgs {
  Selector sel;
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<int> order;
  std::string source = "oracle";
  std::string format = "text";
  int shards = 0;
  bool unsafe = false;
};

int cmd_dist(const DistArgs& args) {
  if (args.n.has_value() == args.n_max.has_value())
    throw UsageError("pass exactly one of --n / --n-max");
  int n_max = args.n.has_value() ? *args.n : *args.n_max;
  meshdist::MeshPattern pattern = resolve_pattern(args.sel);
  meshdist::OracleOptions options;
  options.shard_count = args.shards;
  options.allow_hard_ceiling = args.unsafe;
  meshdist::DistributionTable table = compute_table(
      pattern, n_max, args.source, args.order, options, args.unsafe);
  if (args.n.has_value()) {
    std::cout << meshdist::format_row(
                     table.rows[static_cast<std::size_t>(*args.n)])
              << '\n';
    return 0;
  }
  if (args.format == "text") {
    if (table.conjectural) std::cout << "# conjectural\n";
    std::cout << meshdist::format_table_text(table);
  } else if (args.format == "json") {
    std::cout << meshdist::format_table_json(table) << '\n';
  } else if (args.format == "bfile") {
    std::cout << meshdist::format_b_file_flattened(table);
  } else {
    throw UsageError("--format must be text, json, or bfile");
  }
  return 0;
}

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
  bool all = false;
  std::string theorem_tag;
  std::string conjecture_tag;
  int n_max = 6;
  int shards = 0;
  bool unsafe = false;
};

int cmd_verify(const VerifyArgs& args) {
  int selected = (args.all ? 1 : 0) + (args.theorem_tag.empty() ? 0 : 1) +
                 (args.conjecture_tag.empty() ? 0 : 1);
  if (selected != 1)
    throw UsageError("pass exactly one of --all / --theorem / --conjecture");
  check_n_range(args.n_max, true, args.unsafe);
  meshdist::OracleOptions options;
  options.shard_count = args.shards;
  options.allow_hard_ceiling = args.unsafe;
  std::vector<meshdist::VerifyLine> lines;
  try {
    if (args.all) {
      lines = meshdist::verify_all(args.n_max, options);
    } else if (!args.theorem_tag.empty()) {
      lines = meshdist::verify_tag(args.theorem_tag, args.n_max, options);
    } else {
      const meshdist::ResultInfo& info = meshdist::result_lookup(args.conjecture_tag);
      if (!info.conjectural)
        throw UsageError("--conjecture expects a conjectural tag; " + info.tag +
                         " is proved (use --theorem)");
      lines = meshdist::verify_tag(args.conjecture_tag, args.n_max, options);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& line : lines)
    std::cout << meshdist::format_verify_line_json(line) << '\n';
  return meshdist::any_proved_mismatch(lines) ? 1 : 0;
}

// --- bijection ----------------------------------------------------------------

struct BijectionArgs {
  std::string map = "g";
  std::string perm;
  std::string nr_pair = "48,49";
  std::optional<int> n;
};

std::pair<int, int> parse_nr_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw UsageError("--nr-pair expects two comma-separated catalogue numbers");
  try {
    int a = std::stoi(text.substr(0, comma));
    int b = std::stoi(text.substr(comma + 1));
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("--nr-pair expects two comma-separated catalogue numbers");
  }
}

int cmd_bijection(const BijectionArgs& args) {
  if (args.perm.empty()) throw UsageError("--perm is required");
  meshdist::Permutation pi;
  try {
    pi = meshdist::parse_permutation(args.perm);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --perm: ") + e.what());
  }
  if (args.n.has_value() && *args.n != pi.size())
    throw UsageError("--n disagrees with the length of --perm");
  auto [nr_from, nr_to] = parse_nr_pair(args.nr_pair);
  if (!meshdist::catalog_has(nr_from) || !meshdist::catalog_has(nr_to))
    throw UsageError("--nr-pair must name catalogued patterns");
  meshdist::AvoiderCache cache;
  if (args.map == "f") {
    // f pairs the n-th avoider lists, so it enumerates all of S_n; the
    // structural maps below only enumerate within (much shorter) blocks.
    check_n_range(pi.size(), true, false);
    const auto& from = meshdist::catalog_lookup(nr_from).pattern;
    const auto& to = meshdist::catalog_lookup(nr_to).pattern;
    meshdist::Permutation image;
    try {
      image = meshdist::lex_bijection_f(pi, from, to, cache);
    } catch (const meshdist::equidistribution_violation& e) {
      throw MathViolation(e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::cout << meshdist::format_permutation_compact(image) << '\n';
    return 0;
  }
  if (args.map != "g" && args.map != "g-inv")
    throw UsageError("--map must be one of g, g-inv, f");
  if (!((nr_from == 48 && nr_to == 49) || (nr_from == 49 && nr_to == 48)))
    throw UsageError("--map g / g-inv are defined for --nr-pair 48,49");
  bool forward = args.map == "g";
  const auto& src_pattern = meshdist::catalog_lookup(forward ? 48 : 49).pattern;
  const auto& dst_pattern = meshdist::catalog_lookup(forward ? 49 : 48).pattern;
  long in_count = meshdist::count_occurrences(src_pattern, pi);
  if (in_count == 0)
    throw UsageError(
        "the permutation avoids the source pattern; avoiders are paired by --map f");
  meshdist::Permutation image;
  try {
    image = forward ? meshdist::map_g(pi, cache)
                    : meshdist::map_g_inverse(pi, cache);
  } catch (const meshdist::equidistribution_violation& e) {
    throw MathViolation(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());  // a block or zone beyond the size limits
  } catch (const std::logic_error& e) {
    throw MathViolation(e.what());
  }
  long out_count = meshdist::count_occurrences(dst_pattern, image);
  std::cout << meshdist::format_permutation_compact(image) << '\n';
  std::cout << "occurrences: input=" << in_count << " output=" << out_count
            << '\n';
  return out_count == in_count ? 0 : 1;
}

// --- bfile --------------------------------------------------------------------

struct BfileArgs {
  Selector sel;
  std::optional<int> column;
  bool flatten = false;
  int n_max = meshdist::kOracleCeiling;
  std::optional<int> order;
  std::string source = "oracle";
  int start = 1;
  int shards = 0;
  bool unsafe = false;
};

int cmd_bfile(const BfileArgs& args) {
  if (args.column.has_value() == args.flatten)
    throw UsageError("pass exactly one of --column / --flatten");
  meshdist::MeshPattern pattern = resolve_pattern(args.sel);
  meshdist::OracleOptions options;
  options.shard_count = args.shards;
  options.allow_hard_ceiling = args.unsafe;
  meshdist::DistributionTable table = compute_table(
      pattern, args.n_max, args.source, args.order, options, args.unsafe);
  if (args.flatten) {
    std::cout << meshdist::format_b_file_flattened(table, std::max(args.start, 0));
    return 0;
  }
  if (args.start < 0) throw UsageError("--start must be >= 0");
  std::cout << meshdist::format_b_file_column(table, *args.column, args.start);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Distributions of mesh-pattern occurrence statistics over permutations"};
  app.require_subcommand(1);

  DistArgs dist_args;
  CLI::App* dist = app.add_subcommand(
      "dist", "Print the distribution table or one row of it");
  dist->add_option("--nr", dist_args.sel.nr, "catalogue number of the pattern");
  dist->add_option("--pattern", dist_args.sel.pattern_literal,
                   "pattern literal, e.g. \"tau=12;R=(0,0)(0,1)\"");
  dist->add_option("--n", dist_args.n, "print the single row for this n");
  dist->add_option("--n-max", dist_args.n_max, "print rows 0..n_max");
  dist->add_option("--order", dist_args.order, "series truncation order");
  dist->add_option("--source", dist_args.source, "oracle | formula")
      ->capture_default_str();
  dist->add_option("--format", dist_args.format, "text | json | bfile")
      ->capture_default_str();
  dist->add_option("--shards", dist_args.shards, "oracle shard count");
  dist->add_flag("--unsafe-n-max", dist_args.unsafe,
                 "allow exhaustive enumeration at n=10");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check formulas against the exhaustive oracle (JSON lines)");
  verify->add_flag("--all", verify_args.all, "verify every registered result");
  verify->add_option("--theorem", verify_args.theorem_tag,
                     "verify one result tag, e.g. T3.10");
  verify->add_option("--conjecture", verify_args.conjecture_tag,
                     "verify one conjectural result tag, e.g. C6.1");
  verify->add_option("--n-max", verify_args.n_max, "verify for n = 0..n_max")
      ->capture_default_str();
  verify->add_option("--shards", verify_args.shards, "oracle shard count");
  verify->add_flag("--unsafe-n-max", verify_args.unsafe,
                   "allow exhaustive enumeration at n=10");

  BijectionArgs bijection_args;
  CLI::App* bijection = app.add_subcommand(
      "bijection", "Apply the avoider pairing f or the occurrence map g");
  bijection->add_option("--map", bijection_args.map, "g | g-inv | f")
      ->capture_default_str();
  bijection->add_option("--perm", bijection_args.perm,
                        "permutation, e.g. \"132\" or \"(15)(17)(16)9...\"");
  bijection->add_option("--nr-pair", bijection_args.nr_pair,
                        "source,target catalogue numbers")
      ->capture_default_str();
  bijection->add_option("--n", bijection_args.n,
                        "expected length of --perm (checked)");

  BfileArgs bfile_args;
  CLI::App* bfile = app.add_subcommand(
      "bfile", "Emit an OEIS-style b-file (index value lines)");
  bfile->add_option("--nr", bfile_args.sel.nr, "catalogue number of the pattern");
  bfile->add_option("--pattern", bfile_args.sel.pattern_literal,
                    "pattern literal");
  bfile->add_option("--column", bfile_args.column,
                    "emit the fixed-k column, indexed by n");
  bfile->add_flag("--flatten", bfile_args.flatten,
                  "emit the triangle row by row with a running index");
  bfile->add_option("--n-max", bfile_args.n_max, "last row to include")
      ->capture_default_str();
  bfile->add_option("--order", bfile_args.order, "series truncation order");
  bfile->add_option("--source", bfile_args.source, "oracle | formula")
      ->capture_default_str();
  bfile->add_option("--start", bfile_args.start, "first n to include")
      ->capture_default_str();
  bfile->add_option("--shards", bfile_args.shards, "oracle shard count");
  bfile->add_flag("--unsafe-n-max", bfile_args.unsafe,
                  "allow exhaustive enumeration at n=10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dist->parsed()) return cmd_dist(dist_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (bijection->parsed()) return cmd_bijection(bijection_args);
    if (bfile->parsed()) return cmd_bfile(bfile_args);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const MathViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
