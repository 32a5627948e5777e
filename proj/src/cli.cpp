#include "woi/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ostream>

#include "woi/json_io.hpp"
#include "woi/verify.hpp"

namespace woi::cli {

namespace {

constexpr unsigned kMaxPower = 6;

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string item = csv.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw parse_error(std::string(what) + ": bad integer list entry '" +
                        item + "'");
    }
    pos = comma + 1;
  }
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& csv,
                                         const char* what) {
  std::vector<std::size_t> out;
  for (int v : parse_int_list(csv, what)) {
    if (v <= 0) throw parse_error(std::string(what) + ": sizes must be >= 1");
    out.push_back(std::size_t(v));
  }
  return out;
}

Orientation parse_orientation(const std::string& text) {
  if (text == "natural") return Orientation::natural();
  if (text.rfind("seeded:", 0) == 0) {
    try {
      return Orientation::seeded(std::stoull(text.substr(7)));
    } catch (const std::exception&) {
      throw parse_error("--orient seeded: bad seed '" + text.substr(7) + "'");
    }
  }
  if (text.rfind("explicit:", 0) == 0) {
    std::vector<bool> flips;
    for (char c : text.substr(9)) {
      if (c == '+' || c == '0')
        flips.push_back(false);
      else if (c == '-' || c == '1')
        flips.push_back(true);
      else
        throw parse_error("--orient explicit: flags must be +/- or 0/1");
    }
    return Orientation::explicit_flips(std::move(flips));
  }
  throw parse_error("--orient: expected natural, seeded:<seed>, or "
                    "explicit:<flags>, got '" +
                    text + "'");
}

struct GraphSpec {
  std::string file;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 1;
  std::size_t length = 0;
  std::string parts;
  std::string weights;
  std::string orient = "natural";
};

void add_graph_options(CLI::App* cmd, GraphSpec& spec) {
  auto* file =
      cmd->add_option("--graph", spec.file, "Graph JSON file to load");
  auto* family =
      cmd->add_option("--family", spec.family,
                      "Built-in family: cycle|path|star|clique-sum|"
                      "multipartite")
          ->check(CLI::IsMember(
              {"cycle", "path", "star", "clique-sum", "multipartite"}));
  file->excludes(family);
  family->excludes(file);
  cmd->add_option("--n", spec.n,
                  "Cycle length / star spokes / clique-sum first parameter");
  cmd->add_option("--m", spec.m, "Clique-sum second parameter");
  cmd->add_option("--length", spec.length, "Path length (edges)");
  cmd->add_option("--parts", spec.parts,
                  "Multipartite part sizes, e.g. 2,1,1");
  cmd->add_option("--weights", spec.weights,
                  "Comma-separated vertex weights (default: all 1)");
  cmd->add_option("--orient", spec.orient,
                  "natural | seeded:<seed> | explicit:<+/- per edge>");
}

WeightedOrientedGraph build_graph(const GraphSpec& spec) {
  if (!spec.file.empty()) return load_graph_file(spec.file);
  if (spec.family.empty())
    throw parse_error("no graph given: use --graph FILE or --family NAME");
  Orientation orient = parse_orientation(spec.orient);
  auto weights_or_ones = [&](std::size_t count) {
    if (spec.weights.empty()) return std::vector<int>(count, 1);
    return parse_int_list(spec.weights, "--weights");
  };
  if (spec.family == "cycle") {
    if (spec.n == 0) throw parse_error("--family cycle needs --n");
    return make_cycle(spec.n, weights_or_ones(spec.n), orient);
  }
  if (spec.family == "path") {
    if (spec.length == 0) throw parse_error("--family path needs --length");
    return make_path(spec.length, weights_or_ones(spec.length + 1));
  }
  if (spec.family == "star") {
    if (spec.n == 0) throw parse_error("--family star needs --n");
    return make_star(spec.n, weights_or_ones(spec.n + 1), orient);
  }
  if (spec.family == "clique-sum") {
    if (spec.n == 0) throw parse_error("--family clique-sum needs --n");
    return make_clique_sum(spec.n, spec.m,
                           weights_or_ones(2 * spec.n + 2 * spec.m + 1));
  }
  // multipartite
  if (spec.parts.empty()) throw parse_error("--family multipartite needs --parts");
  std::vector<std::size_t> parts = parse_size_list(spec.parts, "--parts");
  std::size_t total = 0;
  for (std::size_t p : parts) total += p;
  return make_complete_multipartite(std::move(parts), weights_or_ones(total),
                                    orient);
}

unsigned jobs_default() {
  if (const char* env = std::getenv("WOI_JOBS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 256) return unsigned(v);
  }
  return 1;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void emit(std::ostream& out, Json j, bool timing, Clock::time_point start) {
  if (timing) j["elapsed_ms"] = ms_since(start);
  out << j.dump(2) << "\n";
}

Json ideal_with_text(const MonomialIdeal& ideal) {
  Json j = ideal_to_json(ideal);
  j["text"] = to_string(ideal);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Edge ideals of weighted oriented graphs: strong vertex "
               "covers, irreducible decompositions, ordinary vs symbolic "
               "powers, and theorem sweeps"};
  app.name("woi");
  app.require_subcommand(1);

  int code = 0;

  // ---- subcommands over a single graph ----------------------------------
  struct {
    GraphSpec graph;
    unsigned s = 2;
    std::size_t cap = kEnumerationCap;
    bool timing = false;
    bool all_covers = false;
    bool check_oracle = false;
    std::string family;
    unsigned s_max = 3;
  } one;

  auto add_common = [&](CLI::App* cmd, bool with_power) {
    add_graph_options(cmd, one.graph);
    if (with_power)
      cmd->add_option("-s,--power", one.s, "Power to compute (1..6)")
          ->check(CLI::Range(1u, kMaxPower));
    cmd->add_option("--max-vertices", one.cap,
                    "Vertex cap for cover enumeration (hard limit 32)");
    cmd->add_flag("--timing", one.timing,
                  "Add elapsed_ms to the report (off for byte-stable output)");
  };

  auto warn_normalized = [&](const WeightedOrientedGraph& g) {
    if (g.source_weights_normalized())
      err << "warning: source vertices had their weights reset to 1\n";
    return g;
  };

  CLI::App* edge_cmd =
      app.add_subcommand("edge-ideal", "Print the edge ideal I(D)");
  add_common(edge_cmd, false);
  edge_cmd->callback([&] {
    auto start = Clock::now();
    WeightedOrientedGraph g = warn_normalized(build_graph(one.graph));
    MonomialIdeal ideal = edge_ideal(g);
    emit(out,
         Json{{"graph", graph_to_json(g)}, {"ideal", ideal_with_text(ideal)}},
         one.timing, start);
  });

  CLI::App* covers_cmd = app.add_subcommand(
      "covers", "Enumerate strong vertex covers (or all covers with --all)");
  add_common(covers_cmd, false);
  covers_cmd->add_flag("--all", one.all_covers,
                       "List every vertex cover, not just the strong ones");
  covers_cmd->callback([&] {
    auto start = Clock::now();
    WeightedOrientedGraph g = warn_normalized(build_graph(one.graph));
    Json j{{"graph", graph_to_json(g)}};
    if (one.all_covers) {
      Json list = Json::array();
      for (const CoverPartition& p : enumerate_covers(g, one.cap))
        list.push_back(cover_to_json(g, p));
      j["count"] = list.size();
      j["covers"] = std::move(list);
    } else {
      StrongCoverCensus census = enumerate_strong_covers(g, one.cap);
      Json list = Json::array();
      for (const CoverPartition& p : census.strong_covers)
        list.push_back(cover_to_json(g, p));
      j["count"] = list.size();
      j["covers"] = std::move(list);
      j["maximal"] = census.maximal;
      j["total_cover_strong"] = is_total_cover_strong(g);
      j["minimal_strong_property"] = has_minimal_strong_property(g, one.cap);
    }
    emit(out, std::move(j), one.timing, start);
  });

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose",
      "Irreducible decomposition of I(D) indexed by strong covers");
  add_common(decompose_cmd, false);
  decompose_cmd->callback([&] {
    auto start = Clock::now();
    WeightedOrientedGraph g = warn_normalized(build_graph(one.graph));
    Json list = Json::array();
    for (const auto& [cover, ideal] : irreducible_decomposition(g, one.cap))
      list.push_back(Json{{"cover", cover_to_json(g, cover)},
                          {"ideal", ideal_with_text(ideal)}});
    emit(out,
         Json{{"graph", graph_to_json(g)},
              {"components", std::move(list)},
              {"intersects_to_edge_ideal", true}},
         one.timing, start);
  });

  CLI::App* symbolic_cmd = app.add_subcommand(
      "symbolic", "Symbolic power I(D)^(s) via the grouped pipeline");
  add_common(symbolic_cmd, true);
  symbolic_cmd->add_flag("--check-oracle", one.check_oracle,
                         "Also run the localized pipeline and compare");
  symbolic_cmd->callback([&] {
    auto start = Clock::now();
    WeightedOrientedGraph g = warn_normalized(build_graph(one.graph));
    MonomialIdeal grouped = symbolic_power_grouped(g, one.s, one.cap);
    Json j{{"graph", graph_to_json(g)},
           {"s", one.s},
           {"ideal", ideal_with_text(grouped)}};
    if (one.check_oracle) {
      bool agree = grouped == symbolic_power_localized(g, one.s, one.cap);
      j["oracle_agrees"] = agree;
      if (!agree) code = 1;
    }
    emit(out, std::move(j), one.timing, start);
  });

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Compare I(D)^s with I(D)^(s); exit 1 when they differ");
  add_common(compare_cmd, true);
  compare_cmd->callback([&] {
    auto start = Clock::now();
    WeightedOrientedGraph g = warn_normalized(build_graph(one.graph));
    EqualityReport report = compare_powers(g, one.s, one.cap);
    emit(out, report_to_json(report), one.timing, start);
    if (!report.methods_agree || !report.equal) code = 1;
  });

  CLI::App* phi_cmd = app.add_subcommand(
      "phi-check",
      "Check that resetting weighted sinks commutes with both powers");
  add_common(phi_cmd, true);
  phi_cmd->callback([&] {
    auto start = Clock::now();
    WeightedOrientedGraph g = warn_normalized(build_graph(one.graph));
    bool ok = phi_commutation_check(g, one.s, one.cap);
    emit(out, Json{{"s", one.s}, {"commutes", ok}}, one.timing, start);
    if (!ok) code = 1;
  });

  CLI::App* clamp_cmd = app.add_subcommand(
      "clamp-check",
      "Check that clamping weights at 2 preserves the strong-cover sets");
  add_common(clamp_cmd, true);
  clamp_cmd->callback([&] {
    auto start = Clock::now();
    WeightedOrientedGraph g = warn_normalized(build_graph(one.graph));
    bool ok = clamp_structure_check(g, one.s, one.cap);
    emit(out, Json{{"s", one.s}, {"structure_preserved", ok}}, one.timing,
         start);
    if (!ok) code = 1;
  });

  CLI::App* family_cmd = app.add_subcommand(
      "family", "Evaluate one theorem predicate on the given graph");
  family_cmd
      ->add_option("predicate", one.family,
                   "odd-cycle|clique-sum|multipartite|even-cycle|cycle-s2|"
                   "cycle-c6|natural-cycle|star|path")
      ->required();
  add_common(family_cmd, false);
  family_cmd->add_option("--s-max", one.s_max, "Largest power to test (2..6)")
      ->check(CLI::Range(2u, kMaxPower));
  family_cmd->callback([&] {
    auto start = Clock::now();
    std::optional<TheoremFamily> family = parse_family(one.family);
    if (!family) throw parse_error("unknown predicate '" + one.family + "'");
    WeightedOrientedGraph g = warn_normalized(build_graph(one.graph));
    TheoremVerdict verdict = theorem_predicate(g, *family, one.s_max, one.cap);
    emit(out, verdict_to_json(verdict), one.timing, start);
    if (verdict.outcome == TheoremVerdict::Outcome::Violated) code = 1;
  });

  // ---- sweep verification ----------------------------------------------
  struct {
    std::string family;
    std::uint64_t seed = 1729;
    unsigned s_max = 3;
    std::size_t samples = 10;
    std::size_t n = 5;
    std::size_t m = 1;
    std::vector<std::string> parts{"1,1,1", "2,1,1"};
    std::string alphabet = "1,2";
    std::string sizes = "5,7";
    std::string orders = "3,4";
    std::string lengths = "3,4,5";
    std::string interior = "2,3";
    std::string ends = "1,2";
    std::size_t orientations = 10;
    std::size_t count = 100;
    std::size_t max_n = 7;
    int max_weight = 3;
    unsigned jobs = jobs_default();
    std::size_t cap = kEnumerationCap;
    bool instances = false;
    bool timing = false;
  } sweep;

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run a theorem sweep over a family of instances");
  verify_cmd
      ->add_option("sweep", sweep.family,
                   "odd-cycle|clique-sum|multipartite|cycle|star|path|random")
      ->required()
      ->check(CLI::IsMember({"odd-cycle", "clique-sum", "multipartite",
                             "cycle", "star", "path", "random"}));
  verify_cmd->add_option("--seed", sweep.seed, "Base seed for seeded draws");
  verify_cmd->add_option("--s-max", sweep.s_max, "Largest power to test")
      ->check(CLI::Range(2u, kMaxPower));
  verify_cmd->add_option("--samples", sweep.samples,
                         "Seeded samples per configuration");
  verify_cmd->add_option("--n", sweep.n, "odd-cycle length / clique-sum n");
  verify_cmd->add_option("--m", sweep.m, "clique-sum m");
  verify_cmd->add_option("--parts", sweep.parts,
                         "Multipartite part configs (repeatable), e.g. 2,1,1");
  verify_cmd->add_option("--alphabet", sweep.alphabet,
                         "Weight alphabet, e.g. 1,2,3");
  verify_cmd->add_option("--sizes", sweep.sizes, "Cycle sizes for `cycle`");
  verify_cmd->add_option("--orders", sweep.orders, "Star spoke counts");
  verify_cmd->add_option("--lengths", sweep.lengths, "Path lengths");
  verify_cmd->add_option("--interior", sweep.interior,
                         "Interior weight alphabet for `path`");
  verify_cmd->add_option("--ends", sweep.ends,
                         "End weight alphabet for `path`");
  verify_cmd->add_option("--orientations", sweep.orientations,
                         "Seeded non-natural orientations for `odd-cycle`");
  verify_cmd->add_option("--count", sweep.count, "Random graphs for `random`");
  verify_cmd->add_option("--max-n", sweep.max_n,
                         "Largest vertex count for `random`");
  verify_cmd->add_option("--max-weight", sweep.max_weight,
                         "Largest weight for `random`");
  verify_cmd->add_option("--jobs", sweep.jobs,
                         "Worker threads (default: WOI_JOBS or 1)");
  verify_cmd->add_option("--max-vertices", sweep.cap,
                         "Vertex cap for cover enumeration (hard limit 32)");
  verify_cmd->add_flag("--instances", sweep.instances,
                       "Include the per-instance list in the report");
  verify_cmd->add_flag("--timing", sweep.timing,
                       "Add elapsed_ms to the report");
  verify_cmd->callback([&] {
    auto start = Clock::now();
    SweepOptions opts{sweep.jobs, sweep.cap};
    std::vector<int> alphabet = parse_int_list(sweep.alphabet, "--alphabet");
    SweepReport report;
    if (sweep.family == "odd-cycle") {
      report = sweep_odd_cycle(sweep.n, alphabet, sweep.orientations,
                               sweep.seed, sweep.s_max, opts);
    } else if (sweep.family == "clique-sum") {
      report =
          sweep_clique_sum(sweep.n, sweep.m, alphabet, sweep.s_max, opts);
    } else if (sweep.family == "multipartite") {
      std::vector<std::vector<std::size_t>> configs;
      for (const std::string& p : sweep.parts)
        configs.push_back(parse_size_list(p, "--parts"));
      report = sweep_multipartite(configs, alphabet, sweep.samples,
                                  sweep.seed, opts);
    } else if (sweep.family == "cycle") {
      report = sweep_cycle_dichotomy(parse_size_list(sweep.sizes, "--sizes"),
                                     opts);
    } else if (sweep.family == "star") {
      report = sweep_star(parse_size_list(sweep.orders, "--orders"), alphabet,
                          sweep.samples, sweep.seed, sweep.s_max, opts);
    } else if (sweep.family == "path") {
      report = sweep_path(parse_size_list(sweep.lengths, "--lengths"),
                          parse_int_list(sweep.interior, "--interior"),
                          parse_int_list(sweep.ends, "--ends"), sweep.s_max,
                          opts);
    } else {
      report = sweep_random_oracle(sweep.count, sweep.max_n, sweep.max_weight,
                                   sweep.s_max, sweep.seed, opts);
    }
    emit(out, report.to_json(sweep.instances), sweep.timing, start);
    if (!report.pass()) code = 1;
  });

  // CLI11's string-vector parse overload wants reversed arguments, so feed
  // it a plain argv instead.
  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("woi");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // Internal cross-check failures (pipeline disagreement, decomposition
    // identity) are verification failures, not usage errors.
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace woi::cli
