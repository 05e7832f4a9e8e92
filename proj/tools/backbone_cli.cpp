// backbone: b-colorings, backbones and optimum counts of labeled trees.
//
// Exit codes: 0 success, 2 invalid input, 3 cap exceeded, 4 internal
// inconsistency (a failed cross-check).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "backbone/bcoloring.hpp"
#include "backbone/counting.hpp"
#include "backbone/enumeration.hpp"
#include "backbone/formulas.hpp"
#include "backbone/io.hpp"
#include "backbone/kernel.hpp"
#include "backbone/oracle.hpp"
#include "backbone/series.hpp"

namespace {

using namespace backbone;

enum ExitCode { kOk = 0, kInvalidInput = 2, kCapExceeded = 3, kInconsistent = 4 };

// Everything a run depends on.
struct RunConfig {
  std::string subcommand;
  std::string format = "text";
  std::string edges_path;
  std::string prufer_path;
  std::string inline_prufer;
  std::string inline_edges;
  std::size_t n = 0;
  bool up_to = false;
  bool yes_long = false;
  bool quiet = false;
  unsigned threads = 1;
  std::string which = "vc";
  std::size_t order = kDefaultSeriesOrder;
  bool rational = false;
  double tolerance = 1e-12;
  std::string color = "brown";
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::size_t oracle_cap = OracleConfig{}.max_vertices;
  std::size_t enum_cap = EnumerationConfig{}.max_n;
  std::size_t kernel_cap = KernelConfig{}.max_vertices;
};

constexpr std::size_t kLongEnumeration = 9;

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  try {
    return std::stoul(value);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("environment variable ") + name + " is not a count: " + value);
  }
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LabeledTree load_tree(const RunConfig& cfg) {
  const int given = !cfg.edges_path.empty() + !cfg.prufer_path.empty() + !cfg.inline_prufer.empty() +
                    !cfg.inline_edges.empty();
  if (given != 1) {
    throw InvalidInput("give exactly one of --edges, --prufer, --prufer-seq, --edge-data");
  }
  if (!cfg.edges_path.empty()) return parse_edge_list(read_source(cfg.edges_path));
  if (!cfg.inline_edges.empty()) return parse_edge_list(cfg.inline_edges);
  const std::string text = cfg.prufer_path.empty() ? cfg.inline_prufer : read_source(cfg.prufer_path);
  const PruferSequence code = parse_prufer(text);
  if (code.n == 1 && code.seq.empty()) return tree_from_edges(1, {});
  return tree_from_prufer(code);
}

void add_tree_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--edges", cfg.edges_path, "Edge-list file ('-' for stdin)");
  cmd->add_option("--prufer", cfg.prufer_path, "Prufer file: n followed by the entries");
  cmd->add_option("--prufer-seq", cfg.inline_prufer, "Inline Prufer code, e.g. \"4 1 1\"");
  cmd->add_option("--edge-data", cfg.inline_edges, "Inline edge list, e.g. \"3 1 2 2 3\"");
}

std::string fixed10(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(10) << v;
  return out.str();
}

int cmd_color(const RunConfig& cfg) {
  const LabeledTree tree = load_tree(cfg);
  const Tricoloring coloring = bcolor(tree);
  const BackboneReport report = backbone_from_coloring(coloring);
  if (!verify_condition_iii(tree, coloring).empty()) {
    std::cerr << "error: computed coloring fails the local characterization\n";
    return kInconsistent;
  }
  if (cfg.format == "json") {
    std::cout << nlohmann::json{{"coloring", coloring_to_json(coloring)},
                                {"backbones", backbone_to_json(report)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << format_coloring_text(coloring) << '\n' << format_backbone_text(report);
  }
  return kOk;
}

int cmd_count(const RunConfig& cfg) {
  const CountSummary s = summarize(load_tree(cfg));
  if (cfg.format == "text") {
    std::cout << "vc_size " << s.vc_size << "\nvc_count " << s.vc_count << "\nmm_size " << s.mm_size
              << "\nmm_count " << s.mm_count << "\nn_brown " << s.n_brown << "\nn_red " << s.n_red
              << "\nn_green " << s.n_green << '\n';
  } else {
    std::cout << summary_to_json(s).dump(2) << '\n';
  }
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  if (cfg.n == 0) throw InvalidInput("--n must be at least 1");
  if (cfg.n >= kLongEnumeration && !cfg.yes_long) {
    throw CapExceeded("n = " + std::to_string(cfg.n) +
                      " walks n^(n-2) trees; pass --yes-long to run it");
  }
  EnumerationConfig ec;
  ec.max_n = cfg.enum_cap;
  ec.threads = cfg.threads;
  const std::size_t first = cfg.up_to ? 1 : cfg.n;
  if (cfg.n > ec.max_n) {
    throw CapExceeded("enumeration cap is n = " + std::to_string(ec.max_n));
  }

  nlohmann::json rows = nlohmann::json::array();
  if (cfg.format == "csv" || cfg.format == "text") std::cout << totals_csv_header() << '\n';
  for (std::size_t n = first; n <= cfg.n; ++n) {
    if (!cfg.quiet) {
      ec.progress = [n](std::size_t done, std::size_t total) {
        std::cerr << "n=" << n << ": shard " << done << "/" << total << '\n';
      };
    }
    const EnumerationTotals totals = enumerate_totals(n, ec);
    if (cfg.format == "json") {
      rows.push_back(totals_to_json(totals));
    } else {
      std::cout << totals_csv_row(totals) << '\n' << std::flush;
    }
  }
  if (cfg.format == "json") std::cout << rows.dump(2) << '\n';
  return kOk;
}

int cmd_series(const RunConfig& cfg) {
  if (cfg.order < 1) throw InvalidInput("--order must be at least 1");
  Series s;
  if (cfg.which == "vc") s = series_F_vc(cfg.order);
  else if (cfg.which == "m") s = series_F_m(cfg.order);
  else if (cfg.which == "T") s = series_T(cfg.order);
  else if (cfg.which == "F") s = colored_tree_series(solve_color_system(cfg.order));
  else if (auto color = parse_color(cfg.which)) s = series_F_color(*color, cfg.order);
  else throw InvalidInput("unknown series '" + cfg.which + "' (vc, m, brown, red, green, T, F)");

  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 1; k <= cfg.order; ++k) {
    const std::string count = to_decimal(s.egf_count(k));
    const std::string coeff = to_fraction_string(s[k]);
    if (cfg.format == "json") {
      nlohmann::json row{{"n", k}, {"count", count}};
      if (cfg.rational) row["coefficient"] = coeff;
      rows.push_back(row);
    } else {
      const char sep = cfg.format == "csv" ? ',' : ' ';
      std::cout << k << sep << count;
      if (cfg.rational) std::cout << sep << coeff;
      std::cout << '\n';
    }
  }
  if (cfg.format == "json") std::cout << rows.dump(2) << '\n';
  return kOk;
}

int cmd_asymptotics(const RunConfig& cfg) {
  const AsymptoticConstants c = asymptotic_constants(cfg.tolerance);
  if (cfg.format == "json") {
    std::cout << nlohmann::json{{"t1", c.t1},
                                {"t1p", c.t1p},
                                {"brown", c.brown_frac},
                                {"red", c.red_frac},
                                {"green", c.green_frac},
                                {"cover", c.cover_frac}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "brown " << fixed10(c.brown_frac) << "\nred " << fixed10(c.red_frac) << "\ngreen "
              << fixed10(c.green_frac) << "\ncover " << fixed10(c.cover_frac) << '\n';
  }
  return kOk;
}

int cmd_closed_form(const RunConfig& cfg) {
  const auto color = parse_color(cfg.color);
  if (!color) throw InvalidInput("unknown color '" + cfg.color + "'");
  if (cfg.n == 0) throw InvalidInput("--n must be at least 1");
  const BigInt total = closed_form_color_total(*color, cfg.n);
  if (cfg.format == "json") {
    std::cout << nlohmann::json{{"color", cfg.color}, {"n", cfg.n}, {"total", to_decimal(total)},
                                {"fraction", to_fraction_string(closed_form_fraction(*color, cfg.n))}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << total << '\n';
  }
  return kOk;
}

int cmd_kernel(const RunConfig& cfg) {
  const LabeledTree tree = load_tree(cfg);
  const KernelConfig kc{cfg.kernel_cap};
  const KernelReport kernel = adjacency_kernel(tree, kc);
  const bool pass = check_kernel_coloring(tree, kc);
  std::string support;
  for (std::size_t i = 0; i < kernel.support.size(); ++i) {
    support += (i ? "," : "") + std::to_string(kernel.support[i]);
  }
  if (cfg.format == "json") {
    std::cout << nlohmann::json{{"dimension", kernel.dimension}, {"support", kernel.support}, {"check", pass}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "dim=" << kernel.dimension << " support=" << support
              << " check=" << (pass ? "pass" : "fail") << '\n';
  }
  return pass ? kOk : kInconsistent;
}

int cmd_sample(const RunConfig& cfg) {
  if (cfg.samples == 0) {
    const LabeledTree tree = sample_random_tree(cfg.n, cfg.seed);
    if (cfg.format == "json") {
      nlohmann::json edges = nlohmann::json::array();
      for (const Edge& e : tree.edges()) edges.push_back({e.u, e.v});
      std::cout << nlohmann::json{{"n", tree.size()}, {"edges", edges}}.dump() << '\n';
    } else {
      std::cout << format_edge_list(tree);
    }
    return kOk;
  }
  const ColorFractions f = monte_carlo_fractions(cfg.n, cfg.samples, cfg.seed);
  const AsymptoticConstants c = asymptotic_constants();
  if (cfg.format == "json") {
    std::cout << nlohmann::json{{"n", f.n},
                                {"samples", f.samples},
                                {"seed", cfg.seed},
                                {"engine", std::string(kRandomEngineName)},
                                {"brown", {{"mean", f.brown}, {"se", f.brown_se}}},
                                {"red", {{"mean", f.red}, {"se", f.red_se}}},
                                {"green", {{"mean", f.green}, {"se", f.green_se}}}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "n=" << f.n << " samples=" << f.samples << " seed=" << cfg.seed
              << " engine=" << kRandomEngineName << '\n';
    const auto line = [](const char* name, double mean, double se, double limit) {
      std::cout << name << " mean=" << fixed10(mean) << " se=" << fixed10(se)
                << " limit=" << fixed10(limit) << '\n';
    };
    line("brown", f.brown, f.brown_se, c.brown_frac);
    line("red", f.red, f.red_se, c.red_frac);
    line("green", f.green, f.green_se, c.green_frac);
  }
  return kOk;
}

int cmd_oracle(const RunConfig& cfg) {
  const LabeledTree tree = load_tree(cfg);
  const OracleConfig oc{cfg.oracle_cap};
  const auto covers = all_minimal_vertex_covers(tree, oc);
  const auto matchings = all_maximal_matchings(tree, oc);
  const Tricoloring from_covers = oracle_coloring_from_covers(tree, oc);
  const Tricoloring from_matchings = oracle_coloring_from_matchings(tree, oc);
  const Tricoloring fast = bcolor(tree);
  const bool agree = from_covers == fast && from_matchings == fast;

  if (cfg.format == "json") {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : covers) jc.push_back(c);
    nlohmann::json jm = nlohmann::json::array();
    for (const auto& m : matchings) {
      nlohmann::json edges = nlohmann::json::array();
      for (const Edge& e : m) edges.push_back({e.u, e.v});
      jm.push_back(edges);
    }
    std::cout << nlohmann::json{{"minimal_vertex_covers", jc},
                                {"maximal_matchings", jm},
                                {"coloring_from_covers", coloring_to_json(from_covers)},
                                {"coloring_from_matchings", coloring_to_json(from_matchings)},
                                {"agrees_with_bcolor", agree}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "minimal vertex covers (" << covers.size() << "):\n";
    for (const auto& c : covers) {
      std::cout << " ";
      for (const Vertex v : c) std::cout << ' ' << v;
      std::cout << '\n';
    }
    std::cout << "maximal matchings (" << matchings.size() << "):\n";
    for (const auto& m : matchings) {
      std::cout << " ";
      for (const Edge& e : m) std::cout << ' ' << e.u << '-' << e.v;
      std::cout << '\n';
    }
    std::cout << "coloring from covers:\n" << format_coloring_text(from_covers)
              << "coloring from matchings:\n" << format_coloring_text(from_matchings)
              << "agrees with bcolor: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kOk : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"b-colorings, backbones and optimum counts of labeled trees"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* color = app.add_subcommand("color", "b-coloring and both backbone descriptions");
  add_tree_input(color, cfg);

  auto* count = app.add_subcommand("count", "optimum sizes, counts and color counts");
  add_tree_input(count, cfg);
  count->callback([&] {
    if (app.get_option("--format")->count() == 0) cfg.format = "json";
  });

  auto* enumerate = app.add_subcommand("enumerate", "exact totals over all labeled trees");
  enumerate->add_option("--n", cfg.n, "Number of vertices")->required();
  enumerate->add_flag("--up-to", cfg.up_to, "Emit one row for every size 1..n");
  enumerate->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--yes-long", cfg.yes_long, "Allow n >= 9 (n = 10 walks 1e8 trees)");
  enumerate->add_flag("--quiet", cfg.quiet, "No progress on stderr");
  enumerate->callback([&] {
    if (app.get_option("--format")->count() == 0) cfg.format = "csv";
  });

  auto* series = app.add_subcommand("series", "n![x^n] of a generating function");
  series->add_option("which", cfg.which, "vc, m, brown, red, green, T or F");
  series->add_option("--order", cfg.order, "Truncation order / number of rows");
  series->add_flag("--rational", cfg.rational, "Also print the exact coefficient");

  auto* asymptotics = app.add_subcommand("asymptotics", "limiting color and cover fractions");
  asymptotics->add_option("--tolerance", cfg.tolerance, "Root bracket tolerance, in (0, 1e-6]");

  auto* closed = app.add_subcommand("closed-form", "N_c(n) from the binomial-sum closed forms");
  closed->add_option("--color", cfg.color, "brown, red or green");
  closed->add_option("--n", cfg.n, "Number of vertices")->required();

  auto* kernel = app.add_subcommand("kernel", "adjacency kernel against the b-coloring");
  add_tree_input(kernel, cfg);
  kernel->add_option("--cap", cfg.kernel_cap, "Maximum vertex count");

  auto* sample = app.add_subcommand("sample", "uniform random trees and Monte-Carlo fractions");
  sample->add_option("--n", cfg.n, "Number of vertices")->required();
  sample->add_option("--seed", cfg.seed, "Seed for mt19937_64");
  sample->add_option("--samples", cfg.samples, "Number of trees for Monte-Carlo fractions");

  auto* oracle = app.add_subcommand("oracle", "brute-force covers, matchings and colorings");
  add_tree_input(oracle, cfg);
  oracle->add_option("--cap", cfg.oracle_cap, "Maximum vertex count");

  try {
    cfg.oracle_cap = env_cap("BACKBONE_ORACLE_CAP", cfg.oracle_cap);
    cfg.enum_cap = env_cap("BACKBONE_ENUM_CAP", cfg.enum_cap);
    cfg.kernel_cap = env_cap("BACKBONE_KERNEL_CAP", cfg.kernel_cap);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (*color) return cmd_color(cfg);
    if (*count) return cmd_count(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*series) return cmd_series(cfg);
    if (*asymptotics) return cmd_asymptotics(cfg);
    if (*closed) return cmd_closed_form(cfg);
    if (*kernel) return cmd_kernel(cfg);
    if (*sample) return cmd_sample(cfg);
    if (*oracle) return cmd_oracle(cfg);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  }
  return kInvalidInput;
}
