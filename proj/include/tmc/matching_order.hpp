#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tmc/core.hpp"
#include "tmc/motif.hpp"

namespace tmc {

// Order in which pattern positions are matched when the anchor edge is pinned
// first. positions[0] == anchor; every later position shares a label with an
// earlier one, so the partial match always stays connected.
struct MatchingOrder {
  std::uint32_t anchor = 0;
  std::vector<std::uint32_t> positions;
};

namespace detail {

inline bool shares_label(const MotifEdge& e, std::span<const char> matched) {
  return matched[e.src] || matched[e.dst];
}

}  // namespace detail

// Greedy order for one anchor. Among the positions adjacent to the matched
// set, the pattern's first or last position wins (those pin down the tightest
// time window for everything after); first beats last, and with neither
// available the smallest adjacent position is taken.
inline MatchingOrder matching_order_for(const Motif& m, std::uint32_t anchor) {
  const std::size_t l = m.edge_count();
  MatchingOrder ord;
  ord.anchor = anchor;
  ord.positions.reserve(l);
  ord.positions.push_back(anchor);
  std::vector<char> used(l, 0);
  std::vector<char> matched(m.vertex_count(), 0);
  used[anchor] = 1;
  matched[m.edge(anchor).src] = 1;
  matched[m.edge(anchor).dst] = 1;
  while (ord.positions.size() < l) {
    std::uint32_t pick = static_cast<std::uint32_t>(l);
    auto eligible = [&](std::uint32_t p) {
      return !used[p] && detail::shares_label(m.edge(p), matched);
    };
    if (eligible(0)) {
      pick = 0;
    } else if (eligible(static_cast<std::uint32_t>(l - 1))) {
      pick = static_cast<std::uint32_t>(l - 1);
    } else {
      for (std::uint32_t p = 0; p < l; ++p) {
        if (eligible(p)) {
          pick = p;
          break;
        }
      }
    }
    if (pick == l) throw InternalError("matching order stuck; motif not connected");
    used[pick] = 1;
    matched[m.edge(pick).src] = 1;
    matched[m.edge(pick).dst] = 1;
    ord.positions.push_back(pick);
  }
  return ord;
}

// One order per anchor position.
inline std::vector<MatchingOrder> matching_orders(const Motif& m) {
  std::vector<MatchingOrder> out;
  out.reserve(m.edge_count());
  for (std::uint32_t j = 0; j < m.edge_count(); ++j) {
    out.push_back(matching_order_for(m, j));
  }
  return out;
}

// Anchored permutation whose every step stays connected; used by tests and by
// the order-invariance checks.
inline bool is_valid_matching_order(const Motif& m, std::span<const std::uint32_t> positions) {
  const std::size_t l = m.edge_count();
  if (positions.size() != l) return false;
  std::vector<char> used(l, 0);
  std::vector<char> matched(m.vertex_count(), 0);
  for (std::size_t i = 0; i < l; ++i) {
    std::uint32_t p = positions[i];
    if (p >= l || used[p]) return false;
    if (i > 0 && !detail::shares_label(m.edge(p), matched)) return false;
    used[p] = 1;
    matched[m.edge(p).src] = 1;
    matched[m.edge(p).dst] = 1;
  }
  return true;
}

}  // namespace tmc
