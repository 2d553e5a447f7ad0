#pragma once

// Shared per-pair term functors and the per-source accumulation loop. Both
// the index sweeps and the sampled estimators go through accumulate_source,
// so a vertex's contribution is bit-identical no matter which API asked.

#include <algorithm>
#include <cstddef>

#include "disnet/sssp.hpp"

namespace disnet::detail {

// Terms are written as f(d) * g(sigma) products so the built-in kinds match
// compute_generalized_closeness with the equivalent functions bit for bit.
struct DistanceTerm {
  double operator()(double d, double) const { return d; }
};
struct DiscriminativeTerm {
  double operator()(double d, double sigma) const { return d * (1.0 / sigma); }
};
struct HarmonicTerm {
  double operator()(double d, double) const { return 1.0 / d; }
};
struct DiscriminativeHarmonicTerm {
  double operator()(double d, double sigma) const { return (1.0 / d) * sigma; }
};

enum class Reduce { sum, max };

/// Folds term(d, sigma) over all pairs (source, u), u != source, honoring the
/// unreachable policy: substitute_n feeds term(n, 1), harmonic_zero skips the
/// pair. Unnormalized; callers apply the 1/(n-1) factor.
template <typename Term>
double accumulate_source(const SsspResult& r, Reduce reduce, Term term,
                         UnreachablePolicy policy, std::size_t n) {
  double acc = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    if (u == r.source) continue;
    double x;
    if (r.reachable[u]) {
      x = term(r.dist[u], r.sigma[u]);
    } else if (policy == UnreachablePolicy::substitute_n) {
      x = term(static_cast<double>(n), 1.0);
    } else {
      continue;
    }
    if (reduce == Reduce::sum)
      acc += x;
    else
      acc = std::max(acc, x);
  }
  return acc;
}

}  // namespace disnet::detail
