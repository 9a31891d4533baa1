#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "support.hpp"
#include "tmc/backtracking.hpp"
#include "tmc/brute_force.hpp"

using namespace tmc;

namespace {

// Checks one emitted instance against the definition: strict (t, seq) order
// along the pattern, span within delta, injective and consistent label map.
void require_instance(const Motif& m, std::span<const TemporalEdge> inst,
                      Timestamp delta) {
  REQUIRE(inst.size() == m.edge_count());
  for (std::size_t i = 0; i + 1 < inst.size(); ++i) {
    REQUIRE(inst[i].key() < inst[i + 1].key());
  }
  Timestamp lo = inst.front().t, hi = inst.front().t;
  for (const TemporalEdge& e : inst) {
    lo = std::min(lo, e.t);
    hi = std::max(hi, e.t);
  }
  REQUIRE(hi - lo <= delta);
  std::map<std::uint32_t, VertexId> bind;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (auto [label, v] : {std::pair{m.edge(i).src, inst[i].src},
                            std::pair{m.edge(i).dst, inst[i].dst}}) {
      auto it = bind.emplace(label, v).first;
      REQUIRE(it->second == v);
    }
  }
  std::set<VertexId> used;
  for (auto [label, v] : bind) used.insert(v);
  REQUIRE(used.size() == bind.size());
}

}  // namespace

TEST_CASE("directed triangle fixture counts by anchor") {
  TemporalGraph g = tsup::tri_graph();
  Motif m = builtin_motif("triangle-cyclic");
  auto orders = matching_orders(m);

  CHECK(count_exact(g, m, 2) == 1);
  CHECK(count_exact(g, m, 1) == 0);

  auto edges = g.edges();
  LocalCount c0 = local_count(g, m, orders, edges[0], 2);
  CHECK(c0.per_anchor == std::vector<std::uint64_t>{1, 0, 0});
  LocalCount c1 = local_count(g, m, orders, edges[1], 2);
  CHECK(c1.per_anchor == std::vector<std::uint64_t>{0, 1, 0});
  LocalCount c2 = local_count(g, m, orders, edges[2], 2);
  CHECK(c2.per_anchor == std::vector<std::uint64_t>{0, 0, 1});
}

TEST_CASE("emitted instance carries the matched edges in pattern order") {
  TemporalGraph g = tsup::tri_graph();
  Motif m = builtin_motif("triangle-cyclic");
  auto order = matching_order_for(m, 0);
  std::vector<std::vector<EdgeSeq>> seen;
  for (const TemporalEdge& e : g.edges()) {
    enumerate_local(g, m, order, e, 2, [&](std::span<const TemporalEdge> inst) {
      require_instance(m, inst, 2);
      std::vector<EdgeSeq> seqs;
      for (const TemporalEdge& ie : inst) seqs.push_back(ie.seq);
      seen.push_back(std::move(seqs));
    });
  }
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] == std::vector<EdgeSeq>{0, 1, 2});
}

TEST_CASE("single edge pattern counts plain directed edges") {
  TemporalGraph g = TemporalGraph::from_triples({{0, 1, 5}, {1, 1, 6}, {2, 0, 7}});
  Motif m = Motif::from_pattern({{0, 1}});
  CHECK(count_exact(g, m, 0) == 2);  // the self loop never matches
  CHECK(brute_force_count(g, m, 0) == 2);
}

TEST_CASE("repeated pair pattern on parallel edges") {
  TemporalGraph g = TemporalGraph::from_triples({{0, 1, 1}, {0, 1, 2}, {0, 1, 3}});
  Motif m = Motif::from_pattern({{0, 1}, {0, 1}});
  CHECK(count_exact(g, m, 2) == 3);
  CHECK(count_exact(g, m, 1) == 2);
  CHECK(count_exact(g, m, 0) == 0);
  CHECK(brute_force_count(g, m, 2) == 3);
}

TEST_CASE("star with a duplicate spoke position") {
  TemporalGraph g = TemporalGraph::from_triples({{0, 1, 1}, {0, 2, 2}, {0, 1, 3}});
  Motif m = builtin_motif("star-out3");
  CHECK(count_exact(g, m, 2) == 1);
  CHECK(count_exact(g, m, 1) == 0);
  CHECK(brute_force_count(g, m, 2) == 1);
}

TEST_CASE("equal timestamps break ties by input order") {
  Motif m = builtin_motif("triangle-cyclic");
  TemporalGraph fwd = TemporalGraph::from_triples({{0, 1, 5}, {1, 2, 5}, {2, 0, 5}});
  TemporalGraph rev = TemporalGraph::from_triples({{2, 0, 5}, {1, 2, 5}, {0, 1, 5}});
  CHECK(count_exact(fwd, m, 0) == 1);
  CHECK(count_exact(rev, m, 0) == 0);
  CHECK(brute_force_count(fwd, m, 0) == 1);
  CHECK(brute_force_count(rev, m, 0) == 0);
}

TEST_CASE("trivial inputs") {
  TemporalGraph empty = TemporalGraph::from_triples({});
  Motif m = builtin_motif("triangle-cyclic");
  CHECK(count_exact(empty, m, 10) == 0);
  CHECK(brute_force_count(empty, m, 10) == 0);

  TemporalGraph two = TemporalGraph::from_triples({{0, 1, 1}, {1, 2, 2}});
  CHECK(count_exact(two, m, 10) == 0);  // fewer edges than pattern positions

  TemporalGraph loops = TemporalGraph::from_triples({{0, 0, 1}, {1, 1, 2}, {2, 2, 3}});
  CHECK(count_exact(loops, m, 10) == 0);
}

TEST_CASE("matches the reference count on random graphs, built-in motifs") {
  std::mt19937_64 rng(101);
  const Timestamp deltas[] = {0, 1, 3, 100};
  for (int rep = 0; rep < 60; ++rep) {
    TemporalGraph g = tsup::random_graph(rng, 8, 40);
    for (const auto& [name, pattern] : builtin_motifs()) {
      Motif m = builtin_motif(name);
      Timestamp delta = deltas[rep % 4];
      INFO("rep " << rep << " motif " << name << " delta " << delta);
      REQUIRE(count_exact(g, m, delta) == brute_force_count(g, m, delta));
    }
  }
}

TEST_CASE("matches the reference count on random motifs") {
  std::mt19937_64 rng(202);
  for (int rep = 0; rep < 50; ++rep) {
    TemporalGraph g = tsup::random_graph(rng, 7, 30);
    Motif m = tsup::random_connected_motif(rng, 4);
    Timestamp delta = static_cast<Timestamp>(rng() % 12);
    INFO("rep " << rep << " l " << m.edge_count() << " delta " << delta);
    REQUIRE(count_exact(g, m, delta) == brute_force_count(g, m, delta));
  }
}

TEST_CASE("per-anchor sums each equal the exact count") {
  std::mt19937_64 rng(303);
  for (int rep = 0; rep < 20; ++rep) {
    TemporalGraph g = tsup::random_graph(rng, 7, 30);
    Motif m = rep % 2 ? builtin_motif("triangle-cyclic") : tsup::random_connected_motif(rng, 4);
    Timestamp delta = static_cast<Timestamp>(1 + rng() % 8);
    auto orders = matching_orders(m);
    std::uint64_t exact = count_exact(g, m, delta);
    std::vector<std::uint64_t> sums(m.edge_count(), 0);
    for (const TemporalEdge& e : g.edges()) {
      LocalCount lc = local_count(g, m, orders, e, delta);
      for (std::size_t j = 0; j < sums.size(); ++j) sums[j] += lc.per_anchor[j];
    }
    for (std::size_t j = 0; j < sums.size(); ++j) {
      INFO("rep " << rep << " anchor " << j);
      REQUIRE(sums[j] == exact);
    }
  }
}

TEST_CASE("per-edge counts do not depend on the extension order") {
  std::mt19937_64 rng(404);
  for (int rep = 0; rep < 25; ++rep) {
    TemporalGraph g = tsup::random_graph(rng, 6, 25);
    Motif m = tsup::random_connected_motif(rng, 4);
    Timestamp delta = static_cast<Timestamp>(rng() % 10);
    for (std::uint32_t j = 0; j < m.edge_count(); ++j) {
      MatchingOrder greedy = matching_order_for(m, j);
      MatchingOrder shuffled{j, tsup::random_valid_order(rng, m, j)};
      for (const TemporalEdge& e : g.edges()) {
        REQUIRE(enumerate_local(g, m, greedy, e, delta) ==
                enumerate_local(g, m, shuffled, e, delta));
      }
    }
  }
}

TEST_CASE("counts grow with delta") {
  std::mt19937_64 rng(505);
  for (int rep = 0; rep < 15; ++rep) {
    TemporalGraph g = tsup::random_graph(rng, 8, 40);
    Motif m = builtin_motif("triangle-cyclic");
    std::uint64_t prev = 0;
    for (Timestamp delta : {0, 1, 2, 4, 8, 1000}) {
      std::uint64_t c = count_exact(g, m, delta);
      REQUIRE(c >= prev);
      prev = c;
    }
  }
}

TEST_CASE("worker count never changes the exact total") {
  std::mt19937_64 rng(606);
  for (int rep = 0; rep < 10; ++rep) {
    TemporalGraph g = tsup::random_graph(rng, 8, 50);
    Motif m = rep % 2 ? builtin_motif("cycle4") : builtin_motif("star-mixed");
    std::uint64_t one = count_exact(g, m, 5, 1);
    CHECK(count_exact(g, m, 5, 3) == one);
    CHECK(count_exact(g, m, 5, 8) == one);
  }
}

TEST_CASE("anchor-0 enumeration emits every instance exactly once") {
  std::mt19937_64 rng(707);
  for (int rep = 0; rep < 25; ++rep) {
    TemporalGraph g = tsup::random_graph(rng, 7, 30);
    Motif m = tsup::random_connected_motif(rng, 3);
    Timestamp delta = static_cast<Timestamp>(rng() % 10);
    auto order = matching_order_for(m, 0);
    std::vector<std::vector<EdgeSeq>> all;
    for (const TemporalEdge& e : g.edges()) {
      enumerate_local(g, m, order, e, delta, [&](std::span<const TemporalEdge> inst) {
        require_instance(m, inst, delta);
        std::vector<EdgeSeq> seqs;
        for (const TemporalEdge& ie : inst) seqs.push_back(ie.seq);
        all.push_back(std::move(seqs));
      });
    }
    std::sort(all.begin(), all.end());
    REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    REQUIRE(all.size() == brute_force_count(g, m, delta));
  }
}
