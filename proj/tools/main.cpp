// Command-line front end: distance-based network indices (exact and sampled)
// and temporal link prediction over plain-text edge lists.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "disnet/graph.hpp"
#include "disnet/indices.hpp"
#include "disnet/linkpred.hpp"
#include "disnet/sampling.hpp"
#include "disnet/sssp.hpp"

namespace {

using nlohmann::json;

// All scores are printed with 12 significant digits. JSON output stores the
// reparsed printed value, so both formats carry identical numbers.
std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double printed_value(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

struct CommonOpts {
  std::string input;
  bool weighted = false;
  bool lcc = false;
  std::size_t threads = 0;
  std::string format = "tsv";
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_lcc = true) {
  cmd->add_option("--input", c.input, "edge list file")->required();
  cmd->add_flag("--weighted", c.weighted, "read a third column of positive edge weights");
  if (with_lcc)
    cmd->add_flag("--lcc", c.lcc, "restrict to the largest connected component");
  cmd->add_option("--threads", c.threads, "worker threads (0 = hardware)");
  cmd->add_option("--format", c.format, "output format: tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
}

disnet::Graph load_input(const CommonOpts& c) {
  disnet::Graph g = disnet::load_edge_list(c.input, c.weighted);
  if (c.lcc) g = disnet::largest_connected_component(g);
  return g;
}

disnet::UnreachablePolicy parse_policy(const std::string& name) {
  if (name == "substitute-n") return disnet::UnreachablePolicy::substitute_n;
  if (name == "harmonic-zero") return disnet::UnreachablePolicy::harmonic_zero;
  throw CLI::ValidationError("--policy", "unknown policy '" + name + "'");
}

struct KindInfo {
  disnet::IndexKind kind;
  const char* name;
};

KindInfo parse_kind(const std::string& name) {
  using disnet::IndexKind;
  if (name == "closeness" || name == "c") return {IndexKind::closeness, "closeness"};
  if (name == "dc") return {IndexKind::discriminative_closeness, "dc"};
  if (name == "hc" || name == "harmonic") return {IndexKind::harmonic_closeness, "hc"};
  if (name == "dhc") return {IndexKind::discriminative_harmonic_closeness, "dhc"};
  if (name == "eccentricity" || name == "e") return {IndexKind::eccentricity, "eccentricity"};
  if (name == "de") return {IndexKind::discriminative_eccentricity, "de"};
  throw CLI::ValidationError("--kind", "unknown index kind '" + name + "'");
}

disnet::PredMethod parse_method(const std::string& name) {
  if (name == "lidin") return disnet::PredMethod::lidin;
  if (name == "negspl") return disnet::PredMethod::negspl;
  if (name == "aa") return disnet::PredMethod::adamic_adar;
  throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

// ---------------------------------------------------------------- stats ----

struct StatsOpts {
  CommonOpts common;
  std::string labels_out;
  std::size_t dd_limit = 2000;
};

void run_stats(const StatsOpts& o) {
  const disnet::Graph g = disnet::load_edge_list(o.common.input, o.common.weighted);
  const disnet::ConnectedComponents cc = disnet::connected_components(g);
  const disnet::Graph lcc = disnet::largest_connected_component(g);

  if (!o.labels_out.empty()) {
    std::ofstream out(o.labels_out);
    if (!out) throw disnet::InputError(o.labels_out, 0, "cannot open for writing");
    disnet::write_label_map(g, out);
  }

  std::optional<double> dd;
  if (o.dd_limit > 0 && lcc.vertex_count() >= 2 && lcc.vertex_count() <= o.dd_limit)
    dd = disnet::compute_aggregates(lcc, disnet::UnreachablePolicy::substitute_n,
                                    o.common.threads)
             .discriminative_diameter;

  if (o.common.format == "json") {
    json j{{"n", g.vertex_count()},
           {"m", g.edge_count()},
           {"components", cc.count()},
           {"lcc_n", lcc.vertex_count()},
           {"lcc_m", lcc.edge_count()}};
    if (dd) j["discriminative_diameter"] = printed_value(*dd);
    std::cout << j.dump() << '\n';
    return;
  }
  std::cout << "n\t" << g.vertex_count() << '\n'
            << "m\t" << g.edge_count() << '\n'
            << "components\t" << cc.count() << '\n'
            << "lcc_n\t" << lcc.vertex_count() << '\n'
            << "lcc_m\t" << lcc.edge_count() << '\n';
  if (dd) std::cout << "discriminative_diameter\t" << fmt12(*dd) << '\n';
}

// -------------------------------------------------------------- indices ----

struct IndicesOpts {
  CommonOpts common;
  std::vector<std::string> kinds{"dc"};
  std::string policy;  // empty = per-kind default
  bool unnormalized = false;
  int digits = 9;
};

void run_indices(const IndicesOpts& o) {
  const disnet::Graph g = load_input(o.common);

  std::vector<KindInfo> kinds;
  for (const auto& name : o.kinds) kinds.push_back(parse_kind(name));

  std::vector<disnet::IndexVector> columns;
  std::vector<double> disc;
  for (const KindInfo& k : kinds) {
    const disnet::UnreachablePolicy policy =
        o.policy.empty() ? disnet::default_policy(k.kind) : parse_policy(o.policy);
    disnet::IndexVector iv =
        disnet::compute_index(g, k.kind, policy, o.common.threads, !o.unnormalized);
    disc.push_back(disnet::discriminability(iv, o.digits));
    columns.push_back(std::move(iv));
  }

  if (o.common.format == "json") {
    json j;
    for (const KindInfo& k : kinds) j["kinds"].push_back(k.name);
    json verts = json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      json row{{"vertex", g.label(static_cast<disnet::VertexId>(v))}};
      for (std::size_t c = 0; c < columns.size(); ++c)
        row[kinds[c].name] = printed_value(columns[c].scores[v]);
      verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    for (std::size_t c = 0; c < columns.size(); ++c)
      j["discriminability"][kinds[c].name] = printed_value(disc[c]);
    std::cout << j.dump() << '\n';
    return;
  }

  std::cout << "#vertex";
  for (const KindInfo& k : kinds) std::cout << '\t' << k.name;
  std::cout << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::cout << g.label(static_cast<disnet::VertexId>(v));
    for (const auto& col : columns) std::cout << '\t' << fmt12(col.scores[v]);
    std::cout << '\n';
  }
  for (std::size_t c = 0; c < columns.size(); ++c)
    std::cout << "discriminability_" << kinds[c].name << '\t' << fmt12(disc[c]) << '\n';
}

// ----------------------------------------------------------- aggregates ----

struct AggregatesOpts {
  CommonOpts common;
  std::string policy = "substitute-n";
};

void run_aggregates(const AggregatesOpts& o) {
  const disnet::Graph g = load_input(o.common);
  const disnet::GraphAggregates a =
      disnet::compute_aggregates(g, parse_policy(o.policy), o.common.threads);

  const std::pair<const char*, double> rows[] = {
      {"apl", a.apl},
      {"adpl", a.adpl},
      {"ae", a.ae},
      {"ade", a.ade},
      {"diameter", a.diameter},
      {"discriminative_diameter", a.discriminative_diameter},
      {"radius", a.radius},
      {"discriminative_radius", a.discriminative_radius},
  };
  if (o.common.format == "json") {
    json j;
    for (const auto& [name, value] : rows) j[name] = printed_value(value);
    std::cout << j.dump() << '\n';
    return;
  }
  for (const auto& [name, value] : rows) std::cout << name << '\t' << fmt12(value) << '\n';
}

// ------------------------------------------------------------- estimate ----

struct EstimateOpts {
  CommonOpts common;
  std::string kind = "adpl";
  std::string policy = "substitute-n";
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double sample_pct = 0.0;
  double epsilon = 0.0, delta = 0.0, bound = 0.0;
  bool exhaustive = false;
};

void run_estimate(const EstimateOpts& o, const CLI::App* cmd) {
  const bool has_samples = cmd->count("--samples") > 0;
  const bool has_pct = cmd->count("--sample-pct") > 0;
  const bool has_eps = cmd->count("--epsilon") > 0 || cmd->count("--delta") > 0 ||
                       cmd->count("--bound") > 0;
  const int selectors = int(has_samples) + int(has_pct) + int(has_eps) + int(o.exhaustive);
  if (selectors != 1)
    throw CLI::ValidationError(
        "estimate", "pick exactly one of --samples, --sample-pct, "
                    "--epsilon/--delta/--bound, --exhaustive");
  if (has_eps && (cmd->count("--epsilon") == 0 || cmd->count("--delta") == 0 ||
                  cmd->count("--bound") == 0))
    throw CLI::ValidationError("estimate",
                               "--epsilon, --delta and --bound go together");

  const disnet::Graph g = load_input(o.common);
  const disnet::UnreachablePolicy policy = parse_policy(o.policy);
  const disnet::EstimateKind kind =
      o.kind == "ade" ? disnet::EstimateKind::ade : disnet::EstimateKind::adpl;

  disnet::EstimateResult res;
  if (o.exhaustive) {
    res = disnet::estimate_exhaustive(g, kind, policy, o.common.threads);
  } else {
    std::size_t samples = o.samples;
    if (has_pct) {
      const double t = std::ceil(static_cast<double>(g.vertex_count()) * o.sample_pct / 100.0);
      samples = t < 1.0 ? 1 : static_cast<std::size_t>(t);
    } else if (has_eps) {
      samples = disnet::required_sample_size(o.epsilon, o.delta, o.bound);
    }
    res = kind == disnet::EstimateKind::ade
              ? disnet::estimate_ade(g, samples, o.seed, policy, o.common.threads)
              : disnet::estimate_adpl(g, samples, o.seed, policy, o.common.threads);
  }

  if (o.common.format == "json") {
    json j{{"estimate", printed_value(res.estimate)},
           {"samples", res.samples_used},
           {"seed", res.seed}};
    std::cout << j.dump() << '\n';
    return;
  }
  std::cout << "estimate\t" << fmt12(res.estimate) << '\n'
            << "samples\t" << res.samples_used << '\n'
            << "seed\t" << res.seed << '\n';
}

// ------------------------------------------------------------- linkpred ----

struct LinkpredOpts {
  std::string input;
  std::vector<double> ratios;
  std::vector<std::string> methods{"lidin", "negspl", "aa"};
  std::uint64_t seed = 0;
  std::size_t edge_cap = 0;
  std::size_t n_t = 0;
  std::size_t max_candidates = 10'000'000;
  std::size_t threads = 0;
  std::string format = "tsv";
};

void run_linkpred(const LinkpredOpts& o, const CLI::App* cmd) {
  const disnet::TemporalEdgeList edges = disnet::load_temporal_edge_list(o.input);

  std::vector<disnet::PredMethod> methods;
  for (const auto& name : o.methods) methods.push_back(parse_method(name));

  disnet::EvalOptions opts;
  if (cmd->count("--edge-cap") > 0) opts.edge_cap = o.edge_cap;
  if (cmd->count("--nt") > 0) opts.n_t = o.n_t;
  opts.score.threads = o.threads;
  opts.score.max_candidates = o.max_candidates;

  const std::vector<disnet::EvalRow> rows =
      disnet::evaluate(edges, o.ratios, methods, o.seed, opts);

  if (o.format == "json") {
    json j = json::array();
    for (const disnet::EvalRow& r : rows) {
      json row{{"ratio", printed_value(r.ratio)},
               {"method", disnet::method_name(r.method)},
               {"auc", r.auc ? json(printed_value(*r.auc)) : json()},
               {"q", r.q ? json(printed_value(*r.q)) : json()},
               {"test_pairs", r.test_pairs},
               {"nt", r.n_t}};
      j.push_back(std::move(row));
    }
    std::cout << j.dump() << '\n';
    return;
  }

  std::cout << "ratio\tmethod\tauc\tq\ttest_pairs\tnt\n";
  for (const disnet::EvalRow& r : rows) {
    std::cout << fmt12(r.ratio) << '\t' << disnet::method_name(r.method) << '\t'
              << (r.auc ? fmt12(*r.auc) : "-") << '\t' << (r.q ? fmt12(*r.q) : "-") << '\t'
              << r.test_pairs << '\t' << r.n_t << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-based network indices and link prediction"};
  app.require_subcommand(1);

  StatsOpts stats;
  CLI::App* stats_cmd = app.add_subcommand(
      "stats", "graph size, component structure, discriminative diameter");
  add_common(stats_cmd, stats.common, /*with_lcc=*/false);
  stats_cmd->add_option("--labels-out", stats.labels_out,
                        "write the dense-id/label map to this file");
  stats_cmd->add_option("--dd-limit", stats.dd_limit,
                        "compute the discriminative diameter only when the largest "
                        "component has at most this many vertices (0 = never)");

  IndicesOpts indices;
  CLI::App* indices_cmd =
      app.add_subcommand("indices", "per-vertex index scores and discriminability");
  add_common(indices_cmd, indices.common);
  indices_cmd
      ->add_option("--kind", indices.kinds,
                   "index kinds: closeness, dc, hc, dhc, eccentricity, de")
      ->delimiter(',');
  indices_cmd->add_option("--policy", indices.policy,
                          "unreachable-pair policy: substitute-n or harmonic-zero "
                          "(default depends on the kind)");
  indices_cmd->add_flag("--unnormalized", indices.unnormalized,
                        "report scores without the 1/(n-1) factor");
  indices_cmd->add_option("--digits", indices.digits,
                          "significant digits for the discriminability rounding");

  AggregatesOpts aggregates;
  CLI::App* aggregates_cmd =
      app.add_subcommand("aggregates", "averages, diameter and radius variants");
  add_common(aggregates_cmd, aggregates.common);
  aggregates_cmd->add_option("--policy", aggregates.policy,
                             "unreachable-pair policy: substitute-n or harmonic-zero");

  EstimateOpts estimate;
  CLI::App* estimate_cmd =
      app.add_subcommand("estimate", "sampled average path length estimators");
  add_common(estimate_cmd, estimate.common);
  estimate_cmd->add_option("--kind", estimate.kind, "adpl or ade")
      ->check(CLI::IsMember({"adpl", "ade"}));
  estimate_cmd->add_option("--policy", estimate.policy, "unreachable-pair policy");
  estimate_cmd->add_option("--seed", estimate.seed, "random seed");
  estimate_cmd->add_option("--samples", estimate.samples, "number of sampled sources");
  estimate_cmd->add_option("--sample-pct", estimate.sample_pct,
                           "sample size as a percentage of the vertex count");
  estimate_cmd->add_option("--epsilon", estimate.epsilon,
                           "absolute error bound for the Hoeffding sample size");
  estimate_cmd->add_option("--delta", estimate.delta, "failure probability");
  estimate_cmd->add_option("--bound", estimate.bound, "upper bound on the graph diameter");
  estimate_cmd->add_flag("--exhaustive", estimate.exhaustive,
                         "sweep every vertex once instead of sampling");

  LinkpredOpts linkpred;
  CLI::App* linkpred_cmd =
      app.add_subcommand("linkpred", "temporal link prediction: lidin, negspl, aa");
  linkpred_cmd->add_option("--input", linkpred.input, "temporal edge list file ('u v t')")
      ->required();
  linkpred_cmd->add_option("--ratio", linkpred.ratios, "training fractions in (0,1)")
      ->required()
      ->delimiter(',');
  linkpred_cmd->add_option("--method", linkpred.methods, "methods: lidin, negspl, aa")
      ->delimiter(',');
  linkpred_cmd->add_option("--seed", linkpred.seed, "random seed for the AUC draws");
  linkpred_cmd->add_option("--edge-cap", linkpred.edge_cap,
                           "use only this many earliest entries");
  linkpred_cmd->add_option("--nt", linkpred.n_t,
                           "AUC draw count (default: test entries / 10)");
  linkpred_cmd->add_option("--max-candidates", linkpred.max_candidates,
                           "refuse candidate sets larger than this");
  linkpred_cmd->add_option("--threads", linkpred.threads, "worker threads (0 = hardware)");
  linkpred_cmd->add_option("--format", linkpred.format, "output format: tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  stats_cmd->callback([&] { run_stats(stats); });
  indices_cmd->callback([&] { run_indices(indices); });
  aggregates_cmd->callback([&] { run_aggregates(aggregates); });
  estimate_cmd->callback([&] { run_estimate(estimate, estimate_cmd); });
  linkpred_cmd->callback([&] { run_linkpred(linkpred, linkpred_cmd); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  } catch (const disnet::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;  // input error
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;  // computation error
  }
  return 0;
}
