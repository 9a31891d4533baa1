#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "tmc/core.hpp"
#include "tmc/matching_order.hpp"
#include "tmc/motif.hpp"
#include "tmc/parallel.hpp"
#include "tmc/temporal_graph.hpp"

namespace tmc {

struct NoEmit {
  void operator()(std::span<const TemporalEdge>) const {}
};

// Reused across anchors and edges so the hot path does not allocate.
struct BtScratch {
  std::vector<VertexId> vmap;       // motif label -> vertex, kNoVertex if free
  std::vector<TemporalEdge> edges;  // pattern position -> matched edge
  std::vector<char> mapped;         // pattern position occupied
};

namespace detail {

inline bool vertex_used(const BtScratch& s, VertexId v) {
  for (VertexId u : s.vmap) {
    if (u == v) return true;
  }
  return false;
}

inline bool seq_used(const BtScratch& s, EdgeSeq seq) {
  for (std::size_t p = 0; p < s.mapped.size(); ++p) {
    if (s.mapped[p] && s.edges[p].seq == seq) return true;
  }
  return false;
}

// Depth-first extension. At each step the candidate window is the
// intersection of the strict key bounds from the nearest mapped positions on
// both sides (which enforces the pattern order and edge distinctness) with
// the closed duration bounds [t_max - delta, t_min + delta].
template <TemporalGraphLike G, class Emit>
std::uint64_t bt_extend(const G& g, const Motif& m, std::span<const std::uint32_t> order,
                        Timestamp delta, BtScratch& s, std::size_t depth, Emit& emit) {
  const std::size_t l = order.size();
  if (depth == l) {
    emit(std::span<const TemporalEdge>(s.edges.data(), l));
    return 1;
  }
  const std::uint32_t pos = order[depth];
  int prev = -1, next = -1;
  for (int p = static_cast<int>(pos) - 1; p >= 0; --p) {
    if (s.mapped[p]) {
      prev = p;
      break;
    }
  }
  for (std::size_t p = pos + 1; p < l; ++p) {
    if (s.mapped[p]) {
      next = static_cast<int>(p);
      break;
    }
  }
  // Keys grow along the pattern order, so the extreme mapped positions carry
  // the min and max timestamps.
  std::size_t mn = 0;
  while (!s.mapped[mn]) ++mn;
  std::size_t mx = l - 1;
  while (!s.mapped[mx]) --mx;
  const Timestamp lo_t = s.edges[mx].t - delta;
  const Timestamp hi_t = s.edges[mn].t + delta;

  auto range_of = [&](std::span<const TemporalEdge> list) {
    std::size_t a = first_at_or_after(list, lo_t);
    if (prev >= 0) a = std::max(a, first_after(list, s.edges[prev].key()));
    std::size_t b = first_after(list, hi_t);
    if (next >= 0) b = std::min(b, first_at_or_after(list, s.edges[next].key()));
    return std::pair<std::size_t, std::size_t>{a, b > a ? b : a};
  };

  const MotifEdge& pe = m.edge(pos);
  const VertexId ma = s.vmap[pe.src];
  const VertexId mb = s.vmap[pe.dst];
  std::uint64_t total = 0;

  if (ma != kNoVertex && mb != kNoVertex) {
    auto ol = g.out_list(ma);
    auto il = g.in_list(mb);
    auto [oa, ob] = range_of(ol);
    auto [ia, ib] = range_of(il);
    const bool use_out = ob - oa <= ib - ia;  // scan the shorter list
    auto list = use_out ? ol : il;
    const std::size_t a = use_out ? oa : ia;
    const std::size_t b = use_out ? ob : ib;
    for (std::size_t i = a; i < b; ++i) {
      const TemporalEdge& cand = list[i];
      if (use_out ? cand.dst != mb : cand.src != ma) continue;
      assert(!seq_used(s, cand.seq));
      s.mapped[pos] = 1;
      s.edges[pos] = cand;
      total += bt_extend(g, m, order, delta, s, depth + 1, emit);
      s.mapped[pos] = 0;
    }
  } else if (ma != kNoVertex) {
    auto ol = g.out_list(ma);
    auto [a, b] = range_of(ol);
    for (std::size_t i = a; i < b; ++i) {
      const TemporalEdge& cand = ol[i];
      if (vertex_used(s, cand.dst)) continue;
      assert(!seq_used(s, cand.seq));
      s.vmap[pe.dst] = cand.dst;
      s.mapped[pos] = 1;
      s.edges[pos] = cand;
      total += bt_extend(g, m, order, delta, s, depth + 1, emit);
      s.vmap[pe.dst] = kNoVertex;
      s.mapped[pos] = 0;
    }
  } else if (mb != kNoVertex) {
    auto il = g.in_list(mb);
    auto [a, b] = range_of(il);
    for (std::size_t i = a; i < b; ++i) {
      const TemporalEdge& cand = il[i];
      if (vertex_used(s, cand.src)) continue;
      assert(!seq_used(s, cand.seq));
      s.vmap[pe.src] = cand.src;
      s.mapped[pos] = 1;
      s.edges[pos] = cand;
      total += bt_extend(g, m, order, delta, s, depth + 1, emit);
      s.vmap[pe.src] = kNoVertex;
      s.mapped[pos] = 0;
    }
  } else {
    throw InternalError("matching order lost connectivity");
  }
  return total;
}

}  // namespace detail

// Instances containing edge e at the order's anchor position. The anchor
// binds both endpoints at once; a self loop can never satisfy the injective
// vertex map.
template <TemporalGraphLike G, class Emit>
std::uint64_t enumerate_local_with(BtScratch& s, const G& g, const Motif& m,
                                   const MatchingOrder& order, const TemporalEdge& e,
                                   Timestamp delta, Emit& emit) {
  if (e.src == e.dst) return 0;
  const std::size_t l = m.edge_count();
  s.vmap.assign(m.vertex_count(), kNoVertex);
  s.edges.assign(l, TemporalEdge{});
  s.mapped.assign(l, 0);
  const std::uint32_t pos = order.positions[0];
  const MotifEdge& pe = m.edge(pos);
  s.vmap[pe.src] = e.src;
  s.vmap[pe.dst] = e.dst;
  s.mapped[pos] = 1;
  s.edges[pos] = e;
  return detail::bt_extend(g, m, order.positions, delta, s, 1, emit);
}

template <TemporalGraphLike G, class Emit = NoEmit>
std::uint64_t enumerate_local(const G& g, const Motif& m, const MatchingOrder& order,
                              const TemporalEdge& e, Timestamp delta, Emit emit = {}) {
  BtScratch s;
  return enumerate_local_with(s, g, m, order, e, delta, emit);
}

struct LocalCount {
  std::vector<std::uint64_t> per_anchor;
  std::uint64_t total = 0;
};

// Sum over all anchor positions, scratch supplied by the caller.
template <TemporalGraphLike G>
std::uint64_t local_count_total(const G& g, const Motif& m,
                                std::span<const MatchingOrder> orders,
                                const TemporalEdge& e, Timestamp delta, BtScratch& s) {
  std::uint64_t sum = 0;
  NoEmit noop;
  for (const MatchingOrder& o : orders) {
    sum += enumerate_local_with(s, g, m, o, e, delta, noop);
  }
  return sum;
}

template <TemporalGraphLike G>
LocalCount local_count(const G& g, const Motif& m, std::span<const MatchingOrder> orders,
                       const TemporalEdge& e, Timestamp delta) {
  LocalCount lc;
  lc.per_anchor.reserve(orders.size());
  BtScratch s;
  NoEmit noop;
  for (const MatchingOrder& o : orders) {
    std::uint64_t c = enumerate_local_with(s, g, m, o, e, delta, noop);
    lc.per_anchor.push_back(c);
    lc.total += c;
  }
  return lc;
}

// Every instance is found once per anchor position, so the grand total is an
// exact multiple of the pattern length; anything else is a bug worth failing
// loudly over.
inline std::uint64_t count_exact(const TemporalGraph& g, const Motif& m, Timestamp delta,
                                 unsigned workers = 1) {
  const auto orders = matching_orders(m);
  const auto edges = g.edges();
  std::uint64_t total =
      parallel_sum(edges.size(), workers, [&](std::size_t b, std::size_t e) {
        BtScratch s;
        std::uint64_t sub = 0;
        for (std::size_t i = b; i < e; ++i) {
          sub += local_count_total(g, m, orders, edges[i], delta, s);
        }
        return sub;
      });
  if (total % m.edge_count() != 0) {
    throw InternalError("per-edge totals not divisible by pattern length");
  }
  return total / m.edge_count();
}

}  // namespace tmc
