#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tmc/core.hpp"
#include "tmc/motif.hpp"
#include "tmc/parallel.hpp"
#include "tmc/rng.hpp"
#include "tmc/sampling.hpp"
#include "tmc/temporal_graph.hpp"
#include "tmc/wedge_plan.hpp"

namespace tmc {

// Plans precomputed per anchor position. A star has one forced plan; a
// triangle keeps both center choices and picks per edge by degree.
struct EwsPlans {
  MotifClass cls = MotifClass::General;
  std::array<std::array<WedgePlan, 2>, 3> plans;
};

inline EwsPlans make_ews_plans(const Motif& m) {
  MotifShape shape = classify(m);
  if (shape.cls == MotifClass::General) {
    throw UnsupportedMotifError(
        "wedge sampling needs a 3-vertex 3-edge motif; got k=" +
        std::to_string(m.vertex_count()) + " l=" + std::to_string(m.edge_count()));
  }
  EwsPlans out;
  out.cls = shape.cls;
  for (std::uint32_t j = 0; j < 3; ++j) {
    if (shape.cls == MotifClass::Star33) {
      out.plans[j][0] = out.plans[j][1] = wedge_plan(m, j, shape.center);
    } else {
      out.plans[j][0] = wedge_plan(m, j, m.edge(j).src);
      out.plans[j][1] = wedge_plan(m, j, m.edge(j).dst);
    }
  }
  return out;
}

// Incident edge count of v restricted to [lo, hi]. Used only to pick the
// cheaper wedge center, and computable identically from the batch graph and
// the streaming window, which keeps the two modes bit-compatible.
template <TemporalGraphLike G>
std::uint64_t window_degree(const G& g, VertexId v, Timestamp lo, Timestamp hi) {
  auto count = [&](std::span<const TemporalEdge> s) {
    return first_after(s, hi) - first_at_or_after(s, lo);
  };
  return count(g.out_list(v)) + count(g.in_list(v));
}

// Edges that can play the partner position against anchor edge e: incident to
// the center vertex in the right direction, inside the strict half-window on
// the correct side of e, far endpoint distinct from both anchor endpoints.
// f(cand, far) is called per candidate.
template <TemporalGraphLike G, class F>
void for_each_partner_candidate(const G& g, const WedgePlan& plan, const TemporalEdge& e,
                                Timestamp delta, F&& f) {
  const VertexId vc = plan.anchor_edge.src == plan.center ? e.src : e.dst;
  auto list = plan.partner_out ? g.out_list(vc) : g.in_list(vc);
  std::size_t a, b;
  if (plan.partner_after_anchor) {
    a = first_after(list, e.key());
    b = first_after(list, e.t + delta);
  } else {
    a = first_at_or_after(list, e.t - delta);
    b = first_at_or_after(list, e.key());
  }
  for (std::size_t i = a; i < b; ++i) {
    const TemporalEdge& cand = list[i];
    const VertexId far = plan.partner_out ? cand.dst : cand.src;
    if (far == e.src || far == e.dst) continue;
    f(cand, far);
  }
}

template <TemporalGraphLike G>
std::vector<TemporalEdge> partner_candidates(const G& g, const WedgePlan& plan,
                                             const TemporalEdge& e, Timestamp delta) {
  std::vector<TemporalEdge> out;
  for_each_partner_candidate(g, plan, e, delta,
                             [&](const TemporalEdge& c, VertexId) { out.push_back(c); });
  return out;
}

// Edges completing the wedge into a full instance, counted by binary search
// on the pair occurrence list. The window depends on where the missing
// position sits; bounds at wedge edges are strict in (t, seq), so a closing
// edge can never coincide with a wedge edge even on the same vertex pair.
template <TemporalGraphLike G>
std::uint64_t closing_count(const G& g, const WedgePlan& plan, const TemporalEdge& anchor,
                            const TemporalEdge& partner, VertexId far, Timestamp delta) {
  auto resolve = [&](std::uint32_t label) {
    if (label == plan.anchor_edge.src) return anchor.src;
    if (label == plan.anchor_edge.dst) return anchor.dst;
    return far;
  };
  auto occ = g.pair_occurrences(resolve(plan.third_edge.src), resolve(plan.third_edge.dst));
  const bool anchor_earlier = plan.anchor < plan.partner;
  const TimeKey ka = anchor_earlier ? anchor.key() : partner.key();
  const TimeKey kb = anchor_earlier ? partner.key() : anchor.key();
  std::size_t a, b;
  if (plan.third < plan.anchor && plan.third < plan.partner) {
    a = first_at_or_after(occ, kb.t - delta);
    b = first_at_or_after(occ, ka);
  } else if (plan.third > plan.anchor && plan.third > plan.partner) {
    a = first_after(occ, kb);
    b = first_after(occ, ka.t + delta);
  } else {
    a = first_after(occ, ka);
    b = first_at_or_after(occ, kb);
  }
  return b > a ? b - a : 0;
}

// Closing-edge total around one sampled anchor edge, all three anchor
// positions, partner candidates thinned with probability q. Wedge coins are
// keyed by (seed, anchor seq, position, partner seq). Shared between the
// batch estimator and the streaming flush.
template <TemporalGraphLike G>
std::uint64_t ews_edge_closing_sum(const G& g, const EwsPlans& plans,
                                   const TemporalEdge& e, Timestamp delta, double q,
                                   std::uint64_t seed) {
  if (e.src == e.dst) return 0;
  int tri_side = 0;
  if (plans.cls == MotifClass::Triangle33) {
    const std::uint64_t du = window_degree(g, e.src, e.t - delta, e.t + delta);
    const std::uint64_t dv = window_degree(g, e.dst, e.t - delta, e.t + delta);
    const bool pick_src = du < dv || (du == dv && e.src < e.dst);
    tri_side = pick_src ? 0 : 1;
  }
  std::uint64_t sum = 0;
  for (std::uint32_t j = 0; j < 3; ++j) {
    const WedgePlan& plan = plans.plans[j][tri_side];
    for_each_partner_candidate(
        g, plan, e, delta, [&](const TemporalEdge& cand, VertexId far) {
          if (!coin(q, hash_key(seed, e.seq, j, cand.seq))) return;
          sum += closing_count(g, plan, e, cand, far, delta);
        });
  }
  return sum;
}

inline double scale_wedge_estimate(std::uint64_t closing_total, double p, double q) {
  return static_cast<double>(closing_total) / (3.0 * p * q);
}

// Wedge sampler for triadic motifs: Bernoulli edges, Bernoulli partner
// wedges, exact closing counts. Unbiased for any p, q in (0, 1]; exact at
// p = q = 1.
inline Estimate estimate_ews(const TemporalGraph& g, const Motif& m, Timestamp delta,
                             const SamplerConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const EwsPlans plans = make_ews_plans(m);
  const auto edges = g.edges();
  std::atomic<std::uint64_t> sampled{0};
  std::uint64_t closing_total =
      parallel_sum(edges.size(), cfg.workers, [&](std::size_t b, std::size_t e) {
        std::uint64_t sub = 0;
        std::uint64_t picked = 0;
        for (std::size_t i = b; i < e; ++i) {
          if (!edge_sampled(cfg.seed, edges[i].seq, cfg.p)) continue;
          ++picked;
          sub += ews_edge_closing_sum(g, plans, edges[i], delta, cfg.q, cfg.seed);
        }
        sampled.fetch_add(picked, std::memory_order_relaxed);
        return sub;
      });
  Estimate est;
  est.value = scale_wedge_estimate(closing_total, cfg.p, cfg.q);
  est.sampled_edges = sampled.load();
  est.empty_sample = est.sampled_edges == 0 && !edges.empty();
  est.algorithm = "ews";
  est.config = cfg;
  est.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return est;
}

}  // namespace tmc
