#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tmc/core.hpp"
#include "tmc/motif.hpp"
#include "tmc/temporal_graph.hpp"

namespace tmc {

namespace detail {

// Incremental label unification for one edge subsequence. Both directions of
// the mapping are tracked so it stays a bijection.
struct Unifier {
  std::vector<VertexId> label_to_vertex;
  std::vector<std::uint32_t> vertex_to_label;  // sized on demand

  void reset(std::size_t k, std::size_t n) {
    label_to_vertex.assign(k, kNoVertex);
    vertex_to_label.assign(n, kNoLabel);
  }

  static constexpr std::uint32_t kNoLabel = static_cast<std::uint32_t>(-1);

  // Binds label -> v if consistent; reports what it bound so the caller can
  // undo on backtrack. Returns false on conflict.
  bool bind(std::uint32_t label, VertexId v, bool& fresh) {
    fresh = false;
    if (label_to_vertex[label] != kNoVertex) return label_to_vertex[label] == v;
    if (vertex_to_label[v] != kNoLabel) return false;
    label_to_vertex[label] = v;
    vertex_to_label[v] = label;
    fresh = true;
    return true;
  }

  void unbind(std::uint32_t label) {
    VertexId v = label_to_vertex[label];
    label_to_vertex[label] = kNoVertex;
    vertex_to_label[v] = kNoLabel;
  }
};

inline std::uint64_t bf_extend(std::span<const TemporalEdge> edges, const Motif& m,
                               Timestamp delta, Timestamp t_first, std::size_t from,
                               std::size_t depth, Unifier& u) {
  const std::size_t l = m.edge_count();
  if (depth == l) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const TemporalEdge& e = edges[i];
    if (e.t - t_first > delta) break;  // sorted, nothing later can fit
    const MotifEdge& pe = m.edge(depth);
    bool fresh_src = false, fresh_dst = false;
    if (!u.bind(pe.src, e.src, fresh_src)) continue;
    if (!u.bind(pe.dst, e.dst, fresh_dst)) {
      if (fresh_src) u.unbind(pe.src);
      continue;
    }
    total += bf_extend(edges, m, delta, t_first, i + 1, depth + 1, u);
    if (fresh_dst) u.unbind(pe.dst);
    if (fresh_src) u.unbind(pe.src);
  }
  return total;
}

}  // namespace detail

// Reference count straight from the definition: every strictly (t, seq)
// increasing edge subsequence of length l whose span fits in delta, checked by
// direct label unification. Shares nothing with the adjacency-driven engine;
// exists to keep that engine honest.
inline std::uint64_t brute_force_count(const TemporalGraph& g, const Motif& m,
                                       Timestamp delta) {
  const auto edges = g.edges();
  const std::size_t l = m.edge_count();
  if (edges.size() < l) return 0;
  detail::Unifier u;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i + l <= edges.size(); ++i) {
    const TemporalEdge& e = edges[i];
    const MotifEdge& pe = m.edge(0);
    u.reset(m.vertex_count(), g.num_vertices());
    bool fresh_src = false, fresh_dst = false;
    if (!u.bind(pe.src, e.src, fresh_src)) continue;
    if (!u.bind(pe.dst, e.dst, fresh_dst)) continue;
    total += detail::bf_extend(edges, m, delta, e.t, i + 1, 1, u);
  }
  return total;
}

}  // namespace tmc
