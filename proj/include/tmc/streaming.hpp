#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tmc/backtracking.hpp"
#include "tmc/core.hpp"
#include "tmc/matching_order.hpp"
#include "tmc/motif.hpp"
#include "tmc/rng.hpp"
#include "tmc/sampling.hpp"
#include "tmc/temporal_graph.hpp"
#include "tmc/wedge_sampling.hpp"

namespace tmc {

namespace detail {

// Front-evictable sorted list exposing a contiguous span; amortized O(1)
// pops via deferred compaction.
template <class T>
struct EvictableList {
  std::vector<T> data;
  std::size_t head = 0;

  std::span<const T> view() const { return {data.data() + head, data.size() - head}; }
  bool empty() const { return head == data.size(); }
  void push_back(const T& x) { data.push_back(x); }
  void pop_front() {
    ++head;
    if (head > 64 && head * 2 > data.size()) {
      data.erase(data.begin(), data.begin() + static_cast<std::ptrdiff_t>(head));
      head = 0;
    }
  }
};

}  // namespace detail

// Sliding retention of the most recent 2*delta of the stream, indexed the
// same way as TemporalGraph so the counting templates run on it unchanged.
// Edges arrive in (t, seq) order, so every per-vertex and per-pair list stays
// sorted and eviction always removes list heads.
class WindowGraph {
 public:
  std::size_t num_vertices() const { return out_.size(); }

  std::span<const TemporalEdge> out_list(VertexId v) const { return out_[v].view(); }
  std::span<const TemporalEdge> in_list(VertexId v) const { return in_[v].view(); }

  std::span<const TimeKey> pair_occurrences(VertexId src, VertexId dst) const {
    auto it = pairs_.find(pair_key(src, dst));
    if (it == pairs_.end()) return {};
    return it->second.view();
  }

  VertexId ensure_vertex(std::string_view token) {
    auto it = names_.find(token);
    if (it != names_.end()) return it->second;
    VertexId id = static_cast<VertexId>(order_.size());
    order_.emplace_back(token);
    names_.emplace(order_.back(), id);
    out_.emplace_back();
    in_.emplace_back();
    return id;
  }

  const std::string& vertex_name(VertexId v) const { return order_[v]; }

  void append(const TemporalEdge& e) {
    window_.push_back(e);
    out_[e.src].push_back(e);
    in_[e.dst].push_back(e);
    pairs_[pair_key(e.src, e.dst)].push_back(e.key());
  }

  void evict_before(Timestamp cutoff) {
    while (!window_.empty() && window_.front().t < cutoff) {
      const TemporalEdge e = window_.front();
      window_.pop_front();
      out_[e.src].pop_front();
      in_[e.dst].pop_front();
      auto it = pairs_.find(pair_key(e.src, e.dst));
      it->second.pop_front();
      if (it->second.empty()) pairs_.erase(it);
    }
  }

  std::size_t window_edge_count() const { return window_.size(); }

 private:
  static std::uint64_t pair_key(VertexId src, VertexId dst) {
    return (static_cast<std::uint64_t>(src) << 32) | dst;
  }

  std::deque<TemporalEdge> window_;
  std::vector<detail::EvictableList<TemporalEdge>> out_, in_;
  std::unordered_map<std::uint64_t, detail::EvictableList<TimeKey>> pairs_;
  NameMap names_;
  std::vector<std::string> order_;
};

static_assert(TemporalGraphLike<WindowGraph>);

enum class StreamAlgo { Es, Ews };

// One pass over a time-sorted edge stream. Sampled edges wait until an edge
// strictly past their t + delta arrives (their forward neighborhood is then
// complete in the window) and are counted against the window exactly like the
// batch estimators, same coins included, so finalize() reproduces the batch
// value bit for bit.
class StreamCounter {
 public:
  StreamCounter(Motif m, Timestamp delta, SamplerConfig cfg, StreamAlgo algo)
      : motif_(std::move(m)), delta_(delta), cfg_(cfg), algo_(algo) {
    cfg_.validate();
    if (algo_ == StreamAlgo::Ews) {
      plans_ = make_ews_plans(motif_);
    } else {
      orders_ = matching_orders(motif_);
    }
    start_ = std::chrono::steady_clock::now();
  }

  void push(std::string_view src, std::string_view dst, Timestamp t) {
    if (finalized_) throw Error("stream already finalized");
    if (records_ > 0 && t < last_t_) {
      throw StreamOrderError("record " + std::to_string(records_ + 1) + " (" +
                             std::string(src) + " " + std::string(dst) + " " +
                             std::to_string(t) + "): timestamp goes backwards, previous was " +
                             std::to_string(last_t_));
    }
    last_t_ = t;
    ++records_;
    TemporalEdge e{win_.ensure_vertex(src), win_.ensure_vertex(dst), t,
                   static_cast<EdgeSeq>(seq_++)};
    win_.append(e);
    if (edge_sampled(cfg_.seed, e.seq, cfg_.p)) {
      pending_.push_back(e);
      ++sampled_;
    }
    while (!pending_.empty() && pending_.front().t + delta_ < t) flush_front();
    win_.evict_before(t - 2 * delta_);
  }

  void push(std::int64_t src, std::int64_t dst, Timestamp t) {
    char a[24], b[24];
    auto ra = std::to_chars(a, a + sizeof(a), src);
    auto rb = std::to_chars(b, b + sizeof(b), dst);
    push(std::string_view(a, ra.ptr - a), std::string_view(b, rb.ptr - b), t);
  }

  Estimate finalize() {
    if (finalized_) throw Error("stream already finalized");
    finalized_ = true;
    while (!pending_.empty()) flush_front();
    Estimate est;
    est.value = algo_ == StreamAlgo::Es
                    ? scale_edge_estimate(eta_total_, cfg_.p, motif_.edge_count())
                    : scale_wedge_estimate(closing_total_, cfg_.p, cfg_.q);
    est.sampled_edges = sampled_;
    est.empty_sample = sampled_ == 0 && records_ > 0;
    est.algorithm = algo_ == StreamAlgo::Es ? "stream-es" : "stream-ews";
    est.config = cfg_;
    est.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
    return est;
  }

  // Diagnostics, handy in tests and for memory accounting.
  std::size_t window_edge_count() const { return win_.window_edge_count(); }
  std::size_t pending_count() const { return pending_.size(); }
  std::uint64_t records() const { return records_; }
  std::size_t vertices_seen() const { return win_.num_vertices(); }

 private:
  void flush_front() {
    const TemporalEdge e = pending_.front();
    pending_.pop_front();
    if (algo_ == StreamAlgo::Es) {
      eta_total_ += local_count_total(win_, motif_, orders_, e, delta_, scratch_);
    } else {
      closing_total_ += ews_edge_closing_sum(win_, plans_, e, delta_, cfg_.q, cfg_.seed);
    }
  }

  Motif motif_;
  Timestamp delta_;
  SamplerConfig cfg_;
  StreamAlgo algo_;
  std::vector<MatchingOrder> orders_;
  EwsPlans plans_;
  WindowGraph win_;
  std::deque<TemporalEdge> pending_;
  BtScratch scratch_;
  std::uint64_t seq_ = 0;
  std::uint64_t records_ = 0;
  std::uint64_t sampled_ = 0;
  std::uint64_t eta_total_ = 0;
  std::uint64_t closing_total_ = 0;
  Timestamp last_t_ = 0;
  bool finalized_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace tmc
