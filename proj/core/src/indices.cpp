#include "disnet/indices.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "disnet/numeric.hpp"
#include "disnet/parallel.hpp"
#include "index_terms.hpp"

namespace disnet {

namespace {

using detail::Reduce;

void require_pairs(const Graph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("index computation requires at least 2 vertices");
}

// One shortest-path sweep per source, in parallel; every source writes only
// its own slot, so the scores are independent of the worker count.
template <typename Term>
std::vector<double> sweep(const Graph& g, Reduce reduce, Term term, UnreachablePolicy policy,
                          std::size_t threads, bool normalized) {
  const std::size_t n = g.vertex_count();
  const double norm = 1.0 / static_cast<double>(n - 1);
  std::vector<double> scores(n);
  parallel_for_indexed(
      n, threads, [&g] { return SsspEngine(g); },
      [&](SsspEngine& engine, std::size_t v) {
        const SsspResult& r = engine.run(static_cast<VertexId>(v));
        const double acc = detail::accumulate_source(r, reduce, term, policy, n);
        scores[v] = normalized ? acc * norm : acc;
      });
  return scores;
}

}  // namespace

UnreachablePolicy default_policy(IndexKind kind) {
  switch (kind) {
    case IndexKind::harmonic_closeness:
    case IndexKind::discriminative_harmonic_closeness:
      return UnreachablePolicy::harmonic_zero;
    default:
      return UnreachablePolicy::substitute_n;
  }
}

IndexVector compute_index(const Graph& g, IndexKind kind, UnreachablePolicy policy,
                          std::size_t threads, bool normalized) {
  require_pairs(g);
  IndexVector out;
  out.kind = kind;
  out.policy = policy;
  out.normalized = normalized;
  switch (kind) {
    case IndexKind::closeness:
      out.scores = sweep(g, Reduce::sum, detail::DistanceTerm{}, policy, threads, normalized);
      break;
    case IndexKind::discriminative_closeness:
      out.scores =
          sweep(g, Reduce::sum, detail::DiscriminativeTerm{}, policy, threads, normalized);
      break;
    case IndexKind::harmonic_closeness:
      out.scores = sweep(g, Reduce::sum, detail::HarmonicTerm{}, policy, threads, normalized);
      break;
    case IndexKind::discriminative_harmonic_closeness:
      out.scores = sweep(g, Reduce::sum, detail::DiscriminativeHarmonicTerm{}, policy, threads,
                         normalized);
      break;
    case IndexKind::eccentricity:
      out.scores = sweep(g, Reduce::max, detail::DistanceTerm{}, policy, threads, normalized);
      break;
    case IndexKind::discriminative_eccentricity:
      out.scores =
          sweep(g, Reduce::max, detail::DiscriminativeTerm{}, policy, threads, normalized);
      break;
    case IndexKind::generalized:
      throw std::invalid_argument(
          "IndexKind::generalized requires compute_generalized_closeness");
  }
  return out;
}

IndexVector compute_index(const Graph& g, IndexKind kind, std::size_t threads) {
  return compute_index(g, kind, default_policy(kind), threads);
}

IndexVector compute_generalized_closeness(const Graph& g,
                                          const std::function<double(double)>& f,
                                          const std::function<double(double)>& g_fn,
                                          UnreachablePolicy policy, std::size_t threads) {
  require_pairs(g);
  if (!f || !g_fn) throw std::invalid_argument("f and g must be callable");
  const auto term = [&f, &g_fn](double d, double sigma) {
    const double value = f(d) * g_fn(sigma);
    if (!std::isfinite(value))
      throw std::domain_error("generalized closeness: f(d) * g(sigma) is not finite");
    return value;
  };
  IndexVector out;
  out.kind = IndexKind::generalized;
  out.policy = policy;
  out.scores = sweep(g, Reduce::sum, term, policy, threads, true);
  return out;
}

GraphAggregates compute_aggregates(const Graph& g, UnreachablePolicy policy,
                                   std::size_t threads) {
  require_pairs(g);
  const std::size_t n = g.vertex_count();
  const double norm = 1.0 / static_cast<double>(n - 1);

  // One sweep collects all four per-source quantities.
  std::vector<double> sum_d(n), sum_dd(n), max_d(n), max_dd(n);
  parallel_for_indexed(
      n, threads, [&g] { return SsspEngine(g); },
      [&](SsspEngine& engine, std::size_t v) {
        const SsspResult& r = engine.run(static_cast<VertexId>(v));
        sum_d[v] = detail::accumulate_source(r, Reduce::sum, detail::DistanceTerm{}, policy, n);
        sum_dd[v] =
            detail::accumulate_source(r, Reduce::sum, detail::DiscriminativeTerm{}, policy, n);
        max_d[v] = detail::accumulate_source(r, Reduce::max, detail::DistanceTerm{}, policy, n);
        max_dd[v] =
            detail::accumulate_source(r, Reduce::max, detail::DiscriminativeTerm{}, policy, n);
      });

  GraphAggregates agg;
  KahanSum apl, adpl, ae, ade;
  agg.diameter = max_d[0];
  agg.radius = max_d[0];
  agg.discriminative_diameter = max_dd[0];
  agg.discriminative_radius = max_dd[0];
  for (std::size_t v = 0; v < n; ++v) {
    apl.add(sum_d[v] * norm);
    adpl.add(sum_dd[v] * norm);
    ae.add(max_d[v] * norm);
    ade.add(max_dd[v] * norm);
    agg.diameter = std::max(agg.diameter, max_d[v]);
    agg.radius = std::min(agg.radius, max_d[v]);
    agg.discriminative_diameter = std::max(agg.discriminative_diameter, max_dd[v]);
    agg.discriminative_radius = std::min(agg.discriminative_radius, max_dd[v]);
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  agg.apl = apl.value() * inv_n;
  agg.adpl = adpl.value() * inv_n;
  agg.ae = ae.value() * inv_n;
  agg.ade = ade.value() * inv_n;
  return agg;
}

CenterPeriphery center_periphery(const Graph& g, bool discriminative,
                                 UnreachablePolicy policy, std::size_t threads) {
  const IndexVector ecc = compute_index(
      g, discriminative ? IndexKind::discriminative_eccentricity : IndexKind::eccentricity,
      policy, threads);
  double lo = ecc.scores[0], hi = ecc.scores[0];
  for (double s : ecc.scores) {
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  CenterPeriphery cp;
  for (std::size_t v = 0; v < ecc.scores.size(); ++v) {
    if (ecc.scores[v] == lo) cp.center.push_back(static_cast<VertexId>(v));
    if (ecc.scores[v] == hi) cp.periphery.push_back(static_cast<VertexId>(v));
  }
  return cp;
}

double discriminability(const IndexVector& index, int significant_digits) {
  if (index.scores.empty()) throw std::invalid_argument("discriminability of empty scores");
  if (significant_digits < 1 || significant_digits > 17)
    throw std::invalid_argument("significant_digits must be in [1, 17]");
  std::unordered_set<std::string> distinct;
  char buf[48];
  for (double s : index.scores) {
    std::snprintf(buf, sizeof buf, "%.*e", significant_digits - 1, s);
    distinct.emplace(buf);
  }
  return 100.0 * static_cast<double>(distinct.size()) /
         static_cast<double>(index.scores.size());
}

}  // namespace disnet
