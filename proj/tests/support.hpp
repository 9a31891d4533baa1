#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tmc/tmc.hpp"

namespace tsup {

using tmc::Motif;
using tmc::MotifEdge;
using tmc::TemporalGraph;
using tmc::Timestamp;

// Directed triangle 0->1->2->0 at t = 1, 2, 3.
inline TemporalGraph tri_graph() {
  return TemporalGraph::from_triples({{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
}

inline std::vector<std::array<std::int64_t, 3>> random_rows(std::mt19937_64& rng,
                                                            int max_n, int max_m) {
  std::uniform_int_distribution<int> nd(2, max_n);
  const int n = nd(rng);
  std::uniform_int_distribution<int> md(1, max_m);
  const int m = md(rng);
  // Timestamps collide often on purpose; ties must go through the seq break.
  std::uniform_int_distribution<std::int64_t> td(0, std::max(1, m));
  std::uniform_int_distribution<int> vd(0, n - 1);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::vector<std::array<std::int64_t, 3>> rows;
  rows.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::int64_t u = vd(rng);
    std::int64_t v = ud(rng) < 0.03 ? u : vd(rng);  // a few self loops
    rows.push_back({u, v, td(rng)});
  }
  return rows;
}

inline TemporalGraph random_graph(std::mt19937_64& rng, int max_n, int max_m) {
  return TemporalGraph::from_triples(random_rows(rng, max_n, max_m));
}

// Time-sorted rows for streaming runs.
inline std::vector<std::array<std::int64_t, 3>> random_sorted_rows(std::mt19937_64& rng,
                                                                   int n, int m,
                                                                   int max_gap) {
  std::uniform_int_distribution<int> vd(0, n - 1);
  std::uniform_int_distribution<int> gd(0, max_gap);
  std::vector<std::array<std::int64_t, 3>> rows;
  rows.reserve(static_cast<std::size_t>(m));
  std::int64_t t = 0;
  for (int i = 0; i < m; ++i) {
    t += gd(rng);
    rows.push_back({vd(rng), vd(rng), t});
  }
  return rows;
}

// Fixed-size uniform graph, dense enough that sampling fixtures have plenty
// of instances to find.
inline TemporalGraph dense_fixture(std::uint64_t seed, int n, int m,
                                   std::int64_t t_range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> vd(0, n - 1), td(0, t_range);
  std::vector<std::array<std::int64_t, 3>> rows;
  rows.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    rows.push_back({vd(rng), vd(rng), td(rng)});
  }
  return TemporalGraph::from_triples(rows);
}

// Connected pattern with 1..max_l edges; labels stay dense by construction.
inline Motif random_connected_motif(std::mt19937_64& rng, int max_l) {
  std::uniform_int_distribution<int> ld(1, max_l);
  const int l = ld(rng);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::vector<MotifEdge> pattern;
  std::uint32_t k = 2;
  pattern.push_back(ud(rng) < 0.5 ? MotifEdge{0, 1} : MotifEdge{1, 0});
  while (static_cast<int>(pattern.size()) < l) {
    std::uint32_t a, b;
    if (ud(rng) < 0.45) {
      a = static_cast<std::uint32_t>(rng() % k);  // grow by a fresh label
      b = k++;
    } else {
      a = static_cast<std::uint32_t>(rng() % k);
      do {
        b = static_cast<std::uint32_t>(rng() % k);
      } while (b == a);
    }
    pattern.push_back(ud(rng) < 0.5 ? MotifEdge{a, b} : MotifEdge{b, a});
  }
  return Motif::from_pattern(std::move(pattern));
}

// Random anchored order that keeps the partial match connected; used to check
// that per-anchor counts do not depend on the extension order.
inline std::vector<std::uint32_t> random_valid_order(std::mt19937_64& rng, const Motif& m,
                                                     std::uint32_t anchor) {
  const std::size_t l = m.edge_count();
  std::vector<std::uint32_t> order{anchor};
  std::vector<char> used(l, 0), matched(m.vertex_count(), 0);
  used[anchor] = 1;
  matched[m.edge(anchor).src] = matched[m.edge(anchor).dst] = 1;
  while (order.size() < l) {
    std::vector<std::uint32_t> eligible;
    for (std::uint32_t p = 0; p < l; ++p) {
      if (!used[p] && (matched[m.edge(p).src] || matched[m.edge(p).dst])) {
        eligible.push_back(p);
      }
    }
    std::uint32_t pick = eligible[rng() % eligible.size()];
    used[pick] = 1;
    matched[m.edge(pick).src] = matched[m.edge(pick).dst] = 1;
    order.push_back(pick);
  }
  return order;
}

}  // namespace tsup
