#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <concepts>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tmc/core.hpp"

namespace tmc {

namespace detail {

inline Timestamp time_of(const TemporalEdge& e) { return e.t; }
inline Timestamp time_of(const TimeKey& k) { return k.t; }
inline TimeKey key_of(const TemporalEdge& e) { return e.key(); }
inline TimeKey key_of(const TimeKey& k) { return k; }

}  // namespace detail

// Binary searches over (t, seq)-sorted sequences. Time bounds see ties as a
// block; key bounds split them.
template <class E>
std::size_t first_at_or_after(std::span<const E> s, Timestamp t) {
  return static_cast<std::size_t>(
      std::partition_point(s.begin(), s.end(),
                           [&](const E& x) { return detail::time_of(x) < t; }) -
      s.begin());
}

template <class E>
std::size_t first_after(std::span<const E> s, Timestamp t) {
  return static_cast<std::size_t>(
      std::partition_point(s.begin(), s.end(),
                           [&](const E& x) { return detail::time_of(x) <= t; }) -
      s.begin());
}

template <class E>
std::size_t first_at_or_after(std::span<const E> s, TimeKey k) {
  return static_cast<std::size_t>(
      std::partition_point(s.begin(), s.end(),
                           [&](const E& x) { return detail::key_of(x) < k; }) -
      s.begin());
}

template <class E>
std::size_t first_after(std::span<const E> s, TimeKey k) {
  return static_cast<std::size_t>(
      std::partition_point(s.begin(), s.end(),
                           [&](const E& x) { return detail::key_of(x) <= k; }) -
      s.begin());
}

// Counting engines are written against this surface so the batch graph and
// the streaming window interchange freely. All lists are (t, seq)-sorted.
template <class G>
concept TemporalGraphLike = requires(const G& g, VertexId v) {
  { g.num_vertices() } -> std::convertible_to<std::size_t>;
  { g.out_list(v) } -> std::convertible_to<std::span<const TemporalEdge>>;
  { g.in_list(v) } -> std::convertible_to<std::span<const TemporalEdge>>;
  { g.pair_occurrences(v, v) } -> std::convertible_to<std::span<const TimeKey>>;
};

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

// Original vertex token -> dense id, first appearance order.
using NameMap = std::unordered_map<std::string, VertexId, StringHash, std::equal_to<>>;

inline VertexId densify(NameMap& names, std::vector<std::string>& order,
                        std::string_view token) {
  auto it = names.find(token);
  if (it != names.end()) return it->second;
  VertexId id = static_cast<VertexId>(order.size());
  order.emplace_back(token);
  names.emplace(order.back(), id);
  return id;
}

enum class Dir { Out, In, Both };

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  Timestamp time_span = 0;
  // Max edges incident to one vertex inside any [t, t+delta] window anchored
  // at an incident edge, and the longest per-pair occurrence list.
  std::uint64_t d_delta = 0;
  std::uint64_t h = 0;
};

class TemporalGraph {
 public:
  struct RawEdge {
    VertexId src;
    VertexId dst;
    Timestamp t;
  };

  TemporalGraph() = default;

  // Edges arrive in input order; seq is the position in `raw`. Vertex ids must
  // already be dense against `names`.
  static TemporalGraph build(std::vector<RawEdge> raw, std::vector<std::string> names) {
    TemporalGraph g;
    g.names_ = std::move(names);
    g.edges_.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      g.edges_.push_back({raw[i].src, raw[i].dst, raw[i].t, static_cast<EdgeSeq>(i)});
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const TemporalEdge& a, const TemporalEdge& b) { return a.key() < b.key(); });
    g.build_indexes();
    return g;
  }

  // Convenience for fixtures: integer tokens, densified by first appearance.
  static TemporalGraph from_triples(const std::vector<std::array<std::int64_t, 3>>& rows) {
    NameMap names;
    std::vector<std::string> order;
    std::vector<RawEdge> raw;
    raw.reserve(rows.size());
    for (const auto& r : rows) {
      VertexId u = densify(names, order, std::to_string(r[0]));
      VertexId v = densify(names, order, std::to_string(r[1]));
      raw.push_back({u, v, r[2]});
    }
    return build(std::move(raw), std::move(order));
  }

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const TemporalEdge> edges() const { return edges_; }
  const std::string& vertex_name(VertexId v) const { return names_[v]; }

  std::span<const TemporalEdge> out_list(VertexId v) const {
    return {out_adj_.data() + out_off_[v], out_off_[v + 1] - out_off_[v]};
  }
  std::span<const TemporalEdge> in_list(VertexId v) const {
    return {in_adj_.data() + in_off_[v], in_off_[v + 1] - in_off_[v]};
  }

  std::span<const TimeKey> pair_occurrences(VertexId src, VertexId dst) const {
    auto it = pair_ranges_.find(pair_key(src, dst));
    if (it == pair_ranges_.end()) return {};
    return {pair_flat_.data() + it->second.off, it->second.len};
  }

  // In + out incident edge count; a self loop contributes to both ends.
  std::uint64_t degree(VertexId v) const { return degree_[v]; }

  Timestamp min_time() const { return edges_.empty() ? 0 : edges_.front().t; }
  Timestamp max_time() const { return edges_.empty() ? 0 : edges_.back().t; }

  // Edges with t in [lo, hi], a contiguous run of the sorted edge array.
  std::span<const TemporalEdge> time_slice(Timestamp lo, Timestamp hi) const {
    std::span<const TemporalEdge> all = edges_;
    std::size_t a = first_at_or_after(all, lo);
    std::size_t b = first_after(all, hi);
    if (b <= a) return {};
    return all.subspan(a, b - a);
  }

  // Structural equality: same original-token edge multiset with the same
  // timestamps; seq values are input ordinals and deliberately excluded.
  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
      return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const TemporalEdge& x = a.edges_[i];
      const TemporalEdge& y = b.edges_[i];
      if (x.t != y.t || a.names_[x.src] != b.names_[y.src] ||
          a.names_[x.dst] != b.names_[y.dst])
        return false;
    }
    return true;
  }

 private:
  static std::uint64_t pair_key(VertexId src, VertexId dst) {
    return (static_cast<std::uint64_t>(src) << 32) | dst;
  }

  struct PairRange {
    std::size_t off;
    std::size_t len;
  };

  void build_indexes() {
    const std::size_t n = names_.size();
    const std::size_t m = edges_.size();
    out_off_.assign(n + 1, 0);
    in_off_.assign(n + 1, 0);
    degree_.assign(n, 0);
    for (const TemporalEdge& e : edges_) {
      ++out_off_[e.src + 1];
      ++in_off_[e.dst + 1];
      ++degree_[e.src];
      ++degree_[e.dst];
    }
    for (std::size_t v = 0; v < n; ++v) {
      out_off_[v + 1] += out_off_[v];
      in_off_[v + 1] += in_off_[v];
    }
    out_adj_.resize(m);
    in_adj_.resize(m);
    std::vector<std::size_t> opos(out_off_.begin(), out_off_.end() - 1);
    std::vector<std::size_t> ipos(in_off_.begin(), in_off_.end() - 1);
    // Filling in global (t, seq) order keeps every per-vertex list sorted.
    for (const TemporalEdge& e : edges_) {
      out_adj_[opos[e.src]++] = e;
      in_adj_[ipos[e.dst]++] = e;
    }

    std::vector<std::pair<std::uint64_t, TimeKey>> tmp;
    tmp.reserve(m);
    for (const TemporalEdge& e : edges_) {
      tmp.emplace_back(pair_key(e.src, e.dst), e.key());
    }
    std::sort(tmp.begin(), tmp.end());
    pair_flat_.resize(m);
    pair_ranges_.clear();
    std::size_t i = 0;
    while (i < m) {
      std::size_t j = i;
      while (j < m && tmp[j].first == tmp[i].first) {
        pair_flat_[j] = tmp[j].second;
        ++j;
      }
      pair_ranges_.emplace(tmp[i].first, PairRange{i, j - i});
      i = j;
    }
  }

  std::vector<TemporalEdge> edges_;  // (t, seq) sorted
  std::vector<std::string> names_;
  std::vector<std::size_t> out_off_, in_off_;
  std::vector<TemporalEdge> out_adj_, in_adj_;
  std::vector<TimeKey> pair_flat_;
  std::unordered_map<std::uint64_t, PairRange> pair_ranges_;
  std::vector<std::uint64_t> degree_;
};

// Edges between src and dst with t inside the given interval; each bound is
// closed unless its _open flag is set.
inline std::size_t count_pair_edges(const TemporalGraph& g, VertexId src, VertexId dst,
                                    Timestamp lo, Timestamp hi, bool lo_open = false,
                                    bool hi_open = false) {
  std::span<const TimeKey> occ = g.pair_occurrences(src, dst);
  std::size_t a = lo_open ? first_after(occ, lo) : first_at_or_after(occ, lo);
  std::size_t b = hi_open ? first_at_or_after(occ, hi) : first_after(occ, hi);
  return b > a ? b - a : 0;
}

// Incident edges of v with t in [lo, hi], merged over the requested
// direction(s) in (t, seq) order. A self loop shows up once.
template <TemporalGraphLike G>
std::vector<TemporalEdge> incident_edges(const G& g, VertexId v, Timestamp lo,
                                         Timestamp hi, Dir dir) {
  auto window = [&](std::span<const TemporalEdge> s) {
    std::size_t a = first_at_or_after(s, lo);
    std::size_t b = first_after(s, hi);
    return b > a ? s.subspan(a, b - a) : s.subspan(0, 0);
  };
  std::vector<TemporalEdge> out;
  if (dir == Dir::Out) {
    auto s = window(g.out_list(v));
    out.assign(s.begin(), s.end());
    return out;
  }
  if (dir == Dir::In) {
    auto s = window(g.in_list(v));
    out.assign(s.begin(), s.end());
    return out;
  }
  auto a = window(g.out_list(v));
  auto b = window(g.in_list(v));
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].key() == b[j].key()) {  // self loop, present in both lists
      out.push_back(a[i]);
      ++i;
      ++j;
    } else if (a[i].key() < b[j].key()) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

inline GraphStats graph_stats(const TemporalGraph& g, Timestamp delta) {
  GraphStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  s.time_span = g.max_time() - g.min_time();
  std::vector<Timestamp> ts;
  for (VertexId v = 0; v < s.n; ++v) {
    auto out = g.out_list(v);
    auto in = g.in_list(v);
    ts.clear();
    std::size_t i = 0, j = 0;
    while (i < out.size() && j < in.size()) {
      if (out[i].key() == in[j].key()) {
        ts.push_back(out[i].t);
        ++i;
        ++j;
      } else if (out[i].key() < in[j].key()) {
        ts.push_back(out[i++].t);
      } else {
        ts.push_back(in[j++].t);
      }
    }
    for (; i < out.size(); ++i) ts.push_back(out[i].t);
    for (; j < in.size(); ++j) ts.push_back(in[j].t);
    std::size_t hi = 0;
    for (std::size_t lo = 0; lo < ts.size(); ++lo) {
      if (hi < lo) hi = lo;
      while (hi + 1 < ts.size() && ts[hi + 1] <= ts[lo] + delta) ++hi;
      s.d_delta = std::max(s.d_delta, static_cast<std::uint64_t>(hi - lo + 1));
    }
  }
  for (VertexId v = 0; v < s.n; ++v) {
    // Longest pair list: probe each distinct out-neighbor run once.
    auto out = g.out_list(v);
    for (const TemporalEdge& e : out) {
      s.h = std::max(s.h, static_cast<std::uint64_t>(g.pair_occurrences(v, e.dst).size()));
    }
  }
  return s;
}

// ---- edge-list text ----
//
// One edge per line: src dst t, separated by spaces, tabs or commas. Lines
// whose first non-blank char is '#' or '%' are comments. A single leading
// header line is tolerated when its timestamp field is not numeric.

class EdgeRecordScanner {
 public:
  struct Record {
    std::string_view src;
    std::string_view dst;
    Timestamp t = 0;
  };

  // Returns false for blank, comment and the one tolerated header line.
  bool scan(std::string_view line, Record& out) {
    ++line_no_;
    std::size_t nf = split(line);
    if (nf == 0) return false;
    if (fields_[0].front() == '#' || fields_[0].front() == '%') return false;
    if (nf != 3) {
      throw ParseError("expected 3 fields (src dst t), got " + std::to_string(nf), line_no_);
    }
    Timestamp t;
    if (!parse_int(fields_[2], t)) {
      if (!seen_data_ && !header_skipped_) {
        header_skipped_ = true;
        return false;
      }
      throw ParseError("timestamp is not an integer: '" + std::string(fields_[2]) + "'",
                       line_no_);
    }
    seen_data_ = true;
    out = {fields_[0], fields_[1], t};
    return true;
  }

  std::size_t line_no() const { return line_no_; }

  static bool parse_int(std::string_view s, Timestamp& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && p == last;
  }

 private:
  std::size_t split(std::string_view line) {
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; };
    std::size_t nf = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_sep(line[i])) ++i;
      if (i >= line.size()) break;
      std::size_t b = i;
      while (i < line.size() && !is_sep(line[i])) ++i;
      if (nf < fields_.size()) fields_[nf] = line.substr(b, i - b);
      ++nf;
    }
    return nf;
  }

  std::array<std::string_view, 4> fields_;
  std::size_t line_no_ = 0;
  bool seen_data_ = false;
  bool header_skipped_ = false;
};

inline TemporalGraph parse_edge_list(std::istream& in) {
  EdgeRecordScanner scanner;
  NameMap names;
  std::vector<std::string> order;
  std::vector<TemporalGraph::RawEdge> raw;
  std::string line;
  EdgeRecordScanner::Record rec;
  while (std::getline(in, line)) {
    if (!scanner.scan(line, rec)) continue;
    VertexId u = densify(names, order, rec.src);
    VertexId v = densify(names, order, rec.dst);
    raw.push_back({u, v, rec.t});
  }
  return TemporalGraph::build(std::move(raw), std::move(order));
}

inline void write_edge_list(const TemporalGraph& g, std::ostream& out) {
  for (const TemporalEdge& e : g.edges()) {
    out << g.vertex_name(e.src) << ' ' << g.vertex_name(e.dst) << ' ' << e.t << '\n';
  }
}

}  // namespace tmc
