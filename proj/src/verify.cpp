#include "woi/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

#include "woi/rng.hpp"

namespace woi {

namespace {

using Outcome = TheoremVerdict::Outcome;
using Instance = std::pair<std::string, WeightedOrientedGraph>;
using Evaluator =
    std::function<InstanceResult(const WeightedOrientedGraph&)>;

SweepReport run_instances(std::string family, Json params,
                          std::vector<Instance> instances,
                          const Evaluator& eval, const SweepOptions& opts) {
  std::vector<InstanceResult> results(instances.size());
  auto eval_one = [&](std::size_t i) {
    const auto& [label, graph] = instances[i];
    InstanceResult r;
    try {
      r = eval(graph);
    } catch (const std::exception& e) {
      r.outcome = Outcome::Violated;
      r.detail = std::string("exception: ") + e.what();
    }
    r.label = label;
    r.graph = graph_to_json(graph);
    results[i] = std::move(r);
  };

  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || instances.size() <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) eval_one(i);
  } else {
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < instances.size(); i += jobs) eval_one(i);
      }));
    for (auto& f : workers) f.get();
  }

  SweepReport report;
  report.family = std::move(family);
  report.params = std::move(params);
  report.instances = std::move(results);
  for (const InstanceResult& r : report.instances) {
    switch (r.outcome) {
      case Outcome::Satisfied: ++report.satisfied; break;
      case Outcome::Violated: ++report.violated; break;
      case Outcome::Inconclusive: ++report.skipped; break;
    }
  }
  return report;
}

Evaluator predicate_evaluator(TheoremFamily family, unsigned s_max,
                              std::size_t cap) {
  return [family, s_max, cap](const WeightedOrientedGraph& g) {
    TheoremVerdict v = theorem_predicate(g, family, s_max, cap);
    InstanceResult r;
    r.hypothesis = v.hypothesis;
    r.tested_s = v.tested_s;
    r.equal_by_s = v.equal_by_s;
    r.outcome = v.outcome;
    r.detail = v.detail;
    return r;
  };
}

std::string weights_label(const std::vector<int>& w) {
  std::string out = "weights=";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string flips_label(const std::vector<bool>& flips) {
  std::string out = "orient=";
  for (bool f : flips) out += f ? '-' : '+';
  return out;
}

void for_each_pattern(std::size_t k, const std::vector<int>& alphabet,
                      const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<std::size_t> idx(k, 0);
  std::vector<int> pattern(k, alphabet.at(0));
  for (;;) {
    fn(pattern);
    std::size_t pos = 0;
    while (pos < k) {
      if (++idx[pos] < alphabet.size()) {
        pattern[pos] = alphabet[idx[pos]];
        break;
      }
      idx[pos] = 0;
      pattern[pos] = alphabet[0];
      ++pos;
    }
    if (pos == k) return;
  }
}

std::vector<int> draw_weights(SeededRng& rng, std::size_t k,
                              const std::vector<int>& alphabet) {
  std::vector<int> w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = rng.pick(alphabet);
  return w;
}

Json alphabet_json(const std::vector<int>& alphabet) {
  return Json(alphabet);
}

}  // namespace

Json SweepReport::to_json(bool include_instances) const {
  Json j{{"family", family},
         {"params", params},
         {"summary",
          {{"total", instances.size()},
           {"satisfied", satisfied},
           {"violated", violated},
           {"skipped", skipped}}}};
  Json failures = Json::array();
  for (const InstanceResult& r : instances)
    if (r.outcome == TheoremVerdict::Outcome::Violated)
      failures.push_back(r.label);
  j["failures"] = std::move(failures);
  if (include_instances) {
    Json list = Json::array();
    for (const InstanceResult& r : instances) {
      Json equal = Json::array();
      for (bool b : r.equal_by_s) equal.push_back(b);
      list.push_back({{"label", r.label},
                      {"hypothesis", r.hypothesis},
                      {"tested_s", r.tested_s},
                      {"equal_by_s", std::move(equal)},
                      {"outcome", outcome_name(r.outcome)},
                      {"detail", r.detail},
                      {"graph", r.graph}});
    }
    j["instances"] = std::move(list);
  }
  return j;
}

SweepReport sweep_odd_cycle(std::size_t n, const std::vector<int>& alphabet,
                            std::size_t seeded_orientations,
                            std::uint64_t seed, unsigned s_max,
                            const SweepOptions& opts) {
  std::vector<Instance> instances;
  for_each_pattern(n, alphabet, [&](const std::vector<int>& w) {
    instances.emplace_back("natural " + weights_label(w),
                           make_cycle(n, w));
  });
  SeededRng rng(seed);
  for (std::size_t k = 0; k < seeded_orientations; ++k) {
    std::vector<bool> flips(n);
    do {
      for (std::size_t i = 0; i < n; ++i) flips[i] = rng.coin();
      // Both consistent directions count as natural; redraw those.
    } while (std::all_of(flips.begin(), flips.end(),
                         [](bool f) { return f; }) ||
             std::none_of(flips.begin(), flips.end(),
                          [](bool f) { return f; }));
    std::vector<int> w = draw_weights(rng, n, alphabet);
    instances.emplace_back("seeded#" + std::to_string(k) + " " +
                               flips_label(flips) + " " + weights_label(w),
                           make_cycle(n, w, Orientation::explicit_flips(flips)));
  }
  return run_instances(
      "odd-cycle",
      Json{{"n", n},
           {"alphabet", alphabet_json(alphabet)},
           {"seeded_orientations", seeded_orientations},
           {"seed", seed},
           {"s_max", s_max}},
      std::move(instances),
      predicate_evaluator(TheoremFamily::OddCycle, s_max, opts.cap), opts);
}

SweepReport sweep_clique_sum(std::size_t n, std::size_t m,
                             const std::vector<int>& alphabet, unsigned s_max,
                             const SweepOptions& opts) {
  const std::size_t total = 2 * n + 2 * m + 1;
  std::vector<Instance> instances;
  for_each_pattern(total, alphabet, [&](const std::vector<int>& w) {
    instances.emplace_back(weights_label(w), make_clique_sum(n, m, w));
  });
  return run_instances(
      "clique-sum",
      Json{{"n", n},
           {"m", m},
           {"alphabet", alphabet_json(alphabet)},
           {"s_max", s_max}},
      std::move(instances),
      predicate_evaluator(TheoremFamily::CliqueSum, s_max, opts.cap), opts);
}

SweepReport sweep_multipartite(
    const std::vector<std::vector<std::size_t>>& part_configs,
    const std::vector<int>& alphabet, std::size_t samples, std::uint64_t seed,
    const SweepOptions& opts) {
  SeededRng rng(seed);
  std::vector<Instance> instances;
  for (const auto& parts : part_configs) {
    std::size_t total = 0, cross = 0;
    for (std::size_t s : parts) total += s;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        cross += parts[i] * parts[j];
    std::string parts_label;
    for (std::size_t s : parts)
      parts_label += (parts_label.empty() ? "" : ",") + std::to_string(s);
    for (std::size_t k = 0; k < samples; ++k) {
      std::vector<bool> flips(cross);
      for (std::size_t i = 0; i < cross; ++i) flips[i] = rng.coin();
      std::vector<int> w = draw_weights(rng, total, alphabet);
      instances.emplace_back(
          "parts=" + parts_label + " sample#" + std::to_string(k) + " " +
              flips_label(flips) + " " + weights_label(w),
          make_complete_multipartite(parts, w,
                                     Orientation::explicit_flips(flips)));
    }
  }
  return run_instances(
      "multipartite",
      Json{{"parts", part_configs},
           {"alphabet", alphabet_json(alphabet)},
           {"samples", samples},
           {"seed", seed}},
      std::move(instances),
      predicate_evaluator(TheoremFamily::Multipartite, 2, opts.cap), opts);
}

SweepReport sweep_cycle_dichotomy(const std::vector<std::size_t>& sizes,
                                  const SweepOptions& opts) {
  const std::vector<int> alphabet{1, 2};
  std::vector<Instance> instances;
  for (std::size_t n : sizes) {
    for_each_pattern(n, alphabet, [&](const std::vector<int>& w) {
      instances.emplace_back("n=" + std::to_string(n) + " " + weights_label(w),
                             make_cycle(n, w));
    });
  }
  std::size_t cap = opts.cap;
  Evaluator eval = [cap](const WeightedOrientedGraph& g) {
    InstanceResult r;
    bool nontrivial = !g.v_plus().empty();
    if (!nontrivial) {
      r.outcome = Outcome::Inconclusive;
      r.detail = "skipped: every weight trivial, dichotomy needs a weighted "
                 "vertex";
      return r;
    }
    r.hypothesis = g.v_plus().size() == g.vertex_count();
    r.tested_s = {2, 3};
    for (unsigned s : r.tested_s) {
      EqualityReport rep = compare_powers(g, s, cap);
      if (!rep.methods_agree)
        throw std::logic_error("symbolic pipelines disagree");
      r.equal_by_s.push_back(rep.equal);
    }
    if (r.hypothesis) {
      bool ok = r.equal_by_s[0] && r.equal_by_s[1];
      r.outcome = ok ? Outcome::Satisfied : Outcome::Violated;
      r.detail = ok ? "all weights nontrivial and powers agree at s=2,3"
                    : "all weights nontrivial but powers differ";
    } else {
      bool ok = !r.equal_by_s[0];
      r.outcome = ok ? Outcome::Satisfied : Outcome::Violated;
      r.detail = ok ? "mixed weights and powers already differ at s=2"
                    : "mixed weights but powers agree at s=2";
    }
    return r;
  };
  return run_instances("cycle-dichotomy", Json{{"sizes", sizes}},
                       std::move(instances), eval, opts);
}

SweepReport sweep_star(const std::vector<std::size_t>& orders,
                       const std::vector<int>& alphabet, std::size_t samples,
                       std::uint64_t seed, unsigned s_max,
                       const SweepOptions& opts) {
  SeededRng rng(seed);
  std::vector<Instance> instances;
  for (std::size_t n : orders) {
    for (std::size_t k = 0; k < samples; ++k) {
      std::vector<bool> flips(n);
      if (k == 0) {
        flips.assign(n, false);  // hub is a source
      } else if (k == 1) {
        flips.assign(n, true);  // hub is a sink
      } else {
        for (std::size_t i = 0; i < n; ++i) flips[i] = rng.coin();
      }
      std::vector<int> w = draw_weights(rng, n + 1, alphabet);
      instances.emplace_back(
          "n=" + std::to_string(n) + " sample#" + std::to_string(k) + " " +
              flips_label(flips) + " " + weights_label(w),
          make_star(n, w, Orientation::explicit_flips(flips)));
    }
  }
  return run_instances(
      "star",
      Json{{"orders", orders},
           {"alphabet", alphabet_json(alphabet)},
           {"samples", samples},
           {"seed", seed},
           {"s_max", s_max}},
      std::move(instances),
      predicate_evaluator(TheoremFamily::Star, s_max, opts.cap), opts);
}

SweepReport sweep_path(const std::vector<std::size_t>& lengths,
                       const std::vector<int>& interior,
                       const std::vector<int>& ends, unsigned s_max,
                       const SweepOptions& opts) {
  std::vector<Instance> instances;
  for (std::size_t len : lengths) {
    for_each_pattern(len - 1, interior, [&](const std::vector<int>& mid) {
      for (int end : ends) {
        std::vector<int> w;
        w.push_back(1);  // x0 is the source
        w.insert(w.end(), mid.begin(), mid.end());
        w.push_back(end);
        instances.emplace_back(
            "length=" + std::to_string(len) + " " + weights_label(w),
            make_path(len, w));
      }
    });
  }
  return run_instances(
      "path",
      Json{{"lengths", lengths},
           {"interior", alphabet_json(interior)},
           {"ends", alphabet_json(ends)},
           {"s_max", s_max}},
      std::move(instances),
      predicate_evaluator(TheoremFamily::Path, s_max, opts.cap), opts);
}

namespace {

WeightedOrientedGraph random_graph(SeededRng& rng, std::size_t max_n,
                                   int max_weight) {
  for (;;) {
    std::size_t n = 2 + rng.below(max_n - 1);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        if (!rng.coin()) continue;
        if (rng.coin())
          edges.emplace_back(names[u], names[v]);
        else
          edges.emplace_back(names[v], names[u]);
      }
    if (edges.empty()) continue;
    std::vector<int> weights(n);
    for (std::size_t v = 0; v < n; ++v)
      weights[v] = 1 + int(rng.below(std::uint64_t(max_weight)));
    return WeightedOrientedGraph(std::move(names), std::move(weights),
                                 std::move(edges));
  }
}

std::vector<std::vector<std::size_t>> strong_cover_sets(
    const WeightedOrientedGraph& g, std::size_t cap) {
  StrongCoverCensus census = enumerate_strong_covers(g, cap);
  std::vector<std::vector<std::size_t>> sets;
  for (const CoverPartition& p : census.strong_covers) sets.push_back(p.cover);
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

SweepReport sweep_random_oracle(std::size_t count, std::size_t max_n,
                                int max_weight, unsigned s_max,
                                std::uint64_t seed, const SweepOptions& opts) {
  SeededRng rng(seed);
  std::vector<Instance> instances;
  for (std::size_t k = 0; k < count; ++k) {
    WeightedOrientedGraph g = random_graph(rng, max_n, max_weight);
    instances.emplace_back("graph#" + std::to_string(k) + " n=" +
                               std::to_string(g.vertex_count()) + " m=" +
                               std::to_string(g.edge_count()),
                           std::move(g));
  }
  std::size_t cap = opts.cap;
  Evaluator eval = [cap, s_max](const WeightedOrientedGraph& g) {
    InstanceResult r;
    std::vector<std::string> fails;
    MonomialIdeal ideal = edge_ideal(g);
    for (unsigned s = 1; s <= s_max; ++s) {
      MonomialIdeal grouped = symbolic_power_grouped(g, s, cap);
      MonomialIdeal localized = symbolic_power_localized(g, s, cap);
      if (grouped != localized)
        fails.push_back("pipelines disagree at s=" + std::to_string(s));
      if (!is_subset(power(ideal, s), grouped))
        fails.push_back("ordinary power not inside symbolic at s=" +
                        std::to_string(s));
      if (s == 1 && grouped != ideal)
        fails.push_back("first symbolic power differs from edge ideal");
      r.tested_s.push_back(s);
      r.equal_by_s.push_back(grouped == power(ideal, s));
    }
    try {
      irreducible_decomposition(g, cap);
    } catch (const std::logic_error& e) {
      fails.push_back(e.what());
    }
    for (const CoverPartition& p : enumerate_covers(g, cap)) {
      bool definitional_minimal = true;
      for (std::size_t v : p.cover) {
        std::vector<std::size_t> smaller;
        for (std::size_t u : p.cover)
          if (u != v) smaller.push_back(u);
        if (is_vertex_cover(g, smaller)) {
          definitional_minimal = false;
          break;
        }
      }
      if (definitional_minimal != p.is_minimal)
        fails.push_back("L3 emptiness disagrees with definitional minimality");
      if (p.is_minimal && !p.is_strong)
        fails.push_back("minimal cover fails to be strong");
    }
    StrongCoverCensus census = enumerate_strong_covers(g, cap);
    for (const CoverPartition& p : census.strong_covers) {
      std::vector<Monomial> vars;
      for (std::size_t v : p.cover)
        vars.push_back(Monomial::variable(g.universe(), v));
      if (radical(irreducible_ideal(g, p)) !=
          MonomialIdeal::of(g.universe(), std::move(vars)))
        fails.push_back("radical of irreducible ideal is not the cover prime");
    }
    auto base_sets = strong_cover_sets(g, cap);
    if (base_sets != strong_cover_sets(clamp_weights_to_two(g), cap))
      fails.push_back("strong covers change under weight clamping");
    if (base_sets != strong_cover_sets(sink_weights_to_one(g).first, cap))
      fails.push_back("strong covers change under sink weight reset");
    std::vector<std::size_t> all;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    if (is_total_cover_strong(g) != partition_cover(g, all).is_strong)
      fails.push_back("total-cover shortcut disagrees with partition");

    r.hypothesis = true;
    if (fails.empty()) {
      r.outcome = Outcome::Satisfied;
      r.detail = "all invariants hold";
    } else {
      r.outcome = Outcome::Violated;
      std::ostringstream os;
      for (std::size_t i = 0; i < fails.size(); ++i)
        os << (i ? "; " : "") << fails[i];
      r.detail = os.str();
    }
    return r;
  };
  return run_instances(
      "random",
      Json{{"count", count},
           {"max_n", max_n},
           {"max_weight", max_weight},
           {"s_max", s_max},
           {"seed", seed}},
      std::move(instances), eval, opts);
}

}  // namespace woi
