#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "tmc/backtracking.hpp"
#include "tmc/core.hpp"
#include "tmc/matching_order.hpp"
#include "tmc/motif.hpp"
#include "tmc/parallel.hpp"
#include "tmc/rng.hpp"
#include "tmc/temporal_graph.hpp"

namespace tmc {

struct SamplerConfig {
  double p = 1.0;            // per-edge keep probability
  double q = 1.0;            // per-wedge keep probability (wedge sampler only)
  std::uint64_t seed = 0;
  unsigned workers = 1;

  void validate() const {
    if (!(p > 0.0) || p > 1.0) throw ConfigError("p must be in (0, 1]");
    if (!(q > 0.0) || q > 1.0) throw ConfigError("q must be in (0, 1]");
    if (workers == 0) throw ConfigError("workers must be >= 1");
  }
};

struct Estimate {
  double value = 0.0;
  std::uint64_t sampled_edges = 0;
  double elapsed_ms = 0.0;
  bool empty_sample = false;  // nothing survived the coin flips
  std::string algorithm;
  SamplerConfig config;
};

// Keep probability that makes the Chebyshev tail (1 - p) / (p eps^2) equal
// gamma: relative error above eps with probability at most gamma.
inline double planned_edge_probability(double eps, double gamma) {
  if (!(eps > 0.0) || !(gamma > 0.0)) throw ConfigError("eps and gamma must be > 0");
  return 1.0 / (1.0 + gamma * eps * eps);
}

inline bool edge_sampled(std::uint64_t seed, EdgeSeq seq, double p) {
  return coin(p, hash_key(seed, seq));
}

// Per-edge decisions keyed by input ordinal; indexable by e.seq.
inline std::vector<std::uint8_t> sample_mask(const TemporalGraph& g, double p,
                                             std::uint64_t seed) {
  std::vector<std::uint8_t> mask(g.num_edges(), 0);
  for (const TemporalEdge& e : g.edges()) {
    mask[e.seq] = edge_sampled(seed, e.seq, p) ? 1 : 0;
  }
  return mask;
}

// Shared by the batch estimator and the streaming finalizer so the scaled
// value is computed by one expression everywhere.
inline double scale_edge_estimate(std::uint64_t eta_total, double p, std::size_t l) {
  return static_cast<double>(eta_total) / (p * static_cast<double>(l));
}

// Bernoulli edge sampling: keep each edge with probability p, count the
// instances around every kept edge exactly, divide by p * l. Integer sums
// commute, so the result is identical for any worker count.
inline Estimate estimate_es(const TemporalGraph& g, const Motif& m, Timestamp delta,
                            const SamplerConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto orders = matching_orders(m);
  const auto edges = g.edges();
  std::atomic<std::uint64_t> sampled{0};
  std::uint64_t eta_total =
      parallel_sum(edges.size(), cfg.workers, [&](std::size_t b, std::size_t e) {
        BtScratch s;
        std::uint64_t sub = 0;
        std::uint64_t picked = 0;
        for (std::size_t i = b; i < e; ++i) {
          if (!edge_sampled(cfg.seed, edges[i].seq, cfg.p)) continue;
          ++picked;
          sub += local_count_total(g, m, orders, edges[i], delta, s);
        }
        sampled.fetch_add(picked, std::memory_order_relaxed);
        return sub;
      });
  Estimate est;
  est.value = scale_edge_estimate(eta_total, cfg.p, m.edge_count());
  est.sampled_edges = sampled.load();
  est.empty_sample = est.sampled_edges == 0 && !edges.empty();
  est.algorithm = "es";
  est.config = cfg;
  est.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return est;
}

}  // namespace tmc
