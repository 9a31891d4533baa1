#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmc/core.hpp"
#include "tmc/temporal_graph.hpp"

namespace tmc {

struct MotifEdge {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  friend constexpr bool operator==(const MotifEdge&, const MotifEdge&) = default;
};

// An ordered directed pattern: edge i must be matched strictly before edge
// i + 1 in (t, seq) order. Labels are dense 0..k-1; the same directed pair may
// repeat. Self loops and disconnected patterns are rejected.
class Motif {
 public:
  static Motif from_pattern(std::vector<MotifEdge> pattern) {
    Motif m;
    m.pattern_ = std::move(pattern);
    m.validate();
    return m;
  }

  std::size_t edge_count() const { return pattern_.size(); }
  std::size_t vertex_count() const { return k_; }
  std::span<const MotifEdge> pattern() const { return pattern_; }
  const MotifEdge& edge(std::size_t i) const { return pattern_[i]; }

  friend bool operator==(const Motif& a, const Motif& b) {
    return a.pattern_ == b.pattern_;
  }

 private:
  void validate() {
    if (pattern_.empty()) throw MotifError("motif has no edges");
    std::uint32_t maxl = 0;
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
      if (pattern_[i].src == pattern_[i].dst) {
        throw MotifError("motif edge " + std::to_string(i + 1) + " is a self loop");
      }
      maxl = std::max({maxl, pattern_[i].src, pattern_[i].dst});
    }
    k_ = maxl + 1;
    std::vector<char> seen(k_, 0);
    for (const MotifEdge& e : pattern_) seen[e.src] = seen[e.dst] = 1;
    for (std::uint32_t v = 0; v < k_; ++v) {
      if (!seen[v]) {
        throw MotifError("motif vertex " + std::to_string(v) +
                         " is unused; labels must be dense");
      }
    }
    // Connectivity over the undirected label graph.
    std::vector<char> reach(k_, 0);
    std::vector<std::uint32_t> stack{pattern_[0].src};
    reach[pattern_[0].src] = 1;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (const MotifEdge& e : pattern_) {
        std::uint32_t o = kNoLabel;
        if (e.src == v) o = e.dst;
        else if (e.dst == v) o = e.src;
        if (o != kNoLabel && !reach[o]) {
          reach[o] = 1;
          stack.push_back(o);
        }
      }
    }
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
      if (!reach[pattern_[i].src]) {
        throw MotifError("motif edge " + std::to_string(i + 1) +
                         " is disconnected from the rest of the pattern");
      }
    }
  }

  static constexpr std::uint32_t kNoLabel = static_cast<std::uint32_t>(-1);

  std::vector<MotifEdge> pattern_;
  std::uint32_t k_ = 0;
};

// Same line format as the edge list, minus the timestamp: one "u v" per line,
// labels are arbitrary tokens densified by first appearance.
inline Motif parse_motif(std::istream& in) {
  NameMap names;
  std::vector<std::string> order;
  std::vector<MotifEdge> pattern;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = line;
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; };
    while (i < sv.size()) {
      while (i < sv.size() && is_sep(sv[i])) ++i;
      if (i >= sv.size()) break;
      std::size_t b = i;
      while (i < sv.size() && !is_sep(sv[i])) ++i;
      fields.push_back(sv.substr(b, i - b));
    }
    if (fields.empty()) continue;
    if (fields[0].front() == '#' || fields[0].front() == '%') continue;
    if (fields.size() != 2) {
      throw ParseError("expected 2 fields (u v), got " + std::to_string(fields.size()),
                       line_no);
    }
    std::uint32_t u = densify(names, order, fields[0]);
    std::uint32_t v = densify(names, order, fields[1]);
    pattern.push_back({u, v});
  }
  return Motif::from_pattern(std::move(pattern));
}

inline Motif parse_motif_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_motif(in);
}

inline const std::map<std::string, std::vector<MotifEdge>, std::less<>>& builtin_motifs() {
  static const std::map<std::string, std::vector<MotifEdge>, std::less<>> table = {
      {"triangle-cyclic", {{0, 1}, {1, 2}, {2, 0}}},
      {"triangle-cw", {{0, 1}, {2, 1}, {2, 0}}},
      {"star-out3", {{0, 1}, {0, 2}, {0, 1}}},
      {"star-mixed", {{0, 1}, {2, 0}, {0, 1}}},
      {"cycle4", {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
      {"wedge-out", {{0, 1}, {0, 2}}},
  };
  return table;
}

inline Motif builtin_motif(std::string_view name) {
  const auto& table = builtin_motifs();
  auto it = table.find(name);
  if (it == table.end()) {
    std::string msg = "unknown motif '" + std::string(name) + "'; built-ins:";
    for (const auto& [k, v] : table) msg += " " + k;
    throw MotifError(msg);
  }
  return Motif::from_pattern(it->second);
}

enum class MotifClass { General, Star33, Triangle33 };

struct MotifShape {
  MotifClass cls = MotifClass::General;
  std::uint32_t center = 0;  // star center label, Star33 only
};

// 3-vertex 3-edge patterns split cleanly: either the three undirected vertex
// pairs are pairwise distinct (triangle) or one label sits on every edge
// (star). Everything else is General.
inline MotifShape classify(const Motif& m) {
  if (m.vertex_count() != 3 || m.edge_count() != 3) return {MotifClass::General, 0};
  auto und = [](const MotifEdge& e) {
    return std::pair{std::min(e.src, e.dst), std::max(e.src, e.dst)};
  };
  auto p0 = und(m.edge(0)), p1 = und(m.edge(1)), p2 = und(m.edge(2));
  if (p0 != p1 && p1 != p2 && p0 != p2) return {MotifClass::Triangle33, 0};
  for (std::uint32_t c = 0; c < 3; ++c) {
    bool all = true;
    for (const MotifEdge& e : m.pattern()) {
      if (e.src != c && e.dst != c) all = false;
    }
    if (all) return {MotifClass::Star33, c};
  }
  throw InternalError("3x3 motif is neither star nor triangle");
}

inline const char* motif_class_name(MotifClass c) {
  switch (c) {
    case MotifClass::Star33: return "star";
    case MotifClass::Triangle33: return "triangle";
    default: return "general";
  }
}

}  // namespace tmc
