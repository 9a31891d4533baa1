#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "support.hpp"
#include "tmc/backtracking.hpp"
#include "tmc/streaming.hpp"

using namespace tmc;

namespace {

Estimate run_stream(const std::vector<std::array<std::int64_t, 3>>& rows, const Motif& m,
                    Timestamp delta, SamplerConfig cfg, StreamAlgo algo) {
  StreamCounter sc(m, delta, cfg, algo);
  for (const auto& r : rows) sc.push(r[0], r[1], r[2]);
  return sc.finalize();
}

}  // namespace

TEST_CASE("backwards timestamps are rejected with the offending record") {
  StreamCounter sc(builtin_motif("triangle-cyclic"), 5, SamplerConfig{}, StreamAlgo::Es);
  sc.push(0, 1, 10);
  sc.push(1, 2, 10);  // ties are fine
  try {
    sc.push(2, 0, 9);
    FAIL("expected StreamOrderError");
  } catch (const StreamOrderError& e) {
    std::string msg = e.what();
    CHECK(msg.find("record 3") != std::string::npos);
    CHECK(msg.find("previous was 10") != std::string::npos);
  }
  CHECK(sc.records() == 2);  // the bad record was never admitted
}

TEST_CASE("a sorted stream reproduces the batch estimate bit for bit") {
  std::mt19937_64 rng(71);
  struct Case {
    const char* motif;
    StreamAlgo algo;
    double p, q;
  };
  const Case cases[] = {
      {"triangle-cyclic", StreamAlgo::Es, 1.0, 1.0},
      {"cycle4", StreamAlgo::Es, 0.4, 1.0},
      {"star-out3", StreamAlgo::Es, 0.3, 1.0},
      {"triangle-cyclic", StreamAlgo::Ews, 1.0, 1.0},
      {"triangle-cw", StreamAlgo::Ews, 0.5, 0.5},
      {"star-mixed", StreamAlgo::Ews, 0.4, 0.7},
  };
  for (int rep = 0; rep < 12; ++rep) {
    auto rows = tsup::random_sorted_rows(rng, 8, 200, 3);
    TemporalGraph g = TemporalGraph::from_triples(rows);
    const Timestamp delta = static_cast<Timestamp>(2 + rng() % 12);
    for (const Case& c : cases) {
      Motif m = builtin_motif(c.motif);
      SamplerConfig cfg;
      cfg.p = c.p;
      cfg.q = c.q;
      cfg.seed = rng();
      Estimate batch = c.algo == StreamAlgo::Es ? estimate_es(g, m, delta, cfg)
                                                : estimate_ews(g, m, delta, cfg);
      Estimate stream = run_stream(rows, m, delta, cfg, c.algo);
      INFO("rep " << rep << " motif " << c.motif << " p " << c.p << " q " << c.q
                  << " delta " << delta);
      REQUIRE(stream.value == batch.value);  // bitwise, not approx
      REQUIRE(stream.sampled_edges == batch.sampled_edges);
    }
  }
}

TEST_CASE("full-probability streaming is the exact count") {
  std::mt19937_64 rng(72);
  for (int rep = 0; rep < 8; ++rep) {
    auto rows = tsup::random_sorted_rows(rng, 6, 120, 2);
    TemporalGraph g = TemporalGraph::from_triples(rows);
    const Timestamp delta = static_cast<Timestamp>(rng() % 8);
    Motif m = rep % 2 ? builtin_motif("triangle-cyclic") : builtin_motif("cycle4");
    Estimate est = run_stream(rows, m, delta, SamplerConfig{}, StreamAlgo::Es);
    REQUIRE(est.value == static_cast<double>(count_exact(g, m, delta)));
    CHECK(est.algorithm == "stream-es");
  }
}

TEST_CASE("the retention window holds exactly the last two delta of the stream") {
  const Timestamp delta = 2;
  StreamCounter sc(builtin_motif("triangle-cyclic"), delta, SamplerConfig{}, StreamAlgo::Es);
  std::vector<std::array<std::int64_t, 3>> rows = {
      {0, 1, 0}, {1, 2, 0}, {2, 0, 4}, {0, 1, 5}, {1, 2, 7}, {2, 0, 12}};
  std::vector<std::int64_t> pushed;
  for (const auto& r : rows) {
    sc.push(r[0], r[1], r[2]);
    pushed.push_back(r[2]);
    std::size_t expect = 0;
    for (std::int64_t t : pushed) {
      if (t >= r[2] - 2 * delta) ++expect;
    }
    CHECK(sc.window_edge_count() == expect);
    CHECK(sc.pending_count() <= sc.window_edge_count());
  }
  sc.finalize();
}

TEST_CASE("finalize is terminal") {
  StreamCounter sc(builtin_motif("triangle-cyclic"), 2, SamplerConfig{}, StreamAlgo::Es);
  sc.push(0, 1, 1);
  sc.finalize();
  CHECK_THROWS_AS(sc.finalize(), Error);
  CHECK_THROWS_AS(sc.push(1, 2, 2), Error);
}

TEST_CASE("an empty stream finalizes to zero") {
  StreamCounter sc(builtin_motif("triangle-cyclic"), 2, SamplerConfig{}, StreamAlgo::Es);
  Estimate est = sc.finalize();
  CHECK(est.value == 0.0);
  CHECK(!est.empty_sample);
  CHECK(sc.records() == 0);
}

TEST_CASE("all-equal timestamps flush only at finalize and still match batch") {
  std::vector<std::array<std::int64_t, 3>> rows;
  std::mt19937_64 rng(73);
  for (int i = 0; i < 40; ++i) {
    rows.push_back({static_cast<std::int64_t>(rng() % 5),
                    static_cast<std::int64_t>(rng() % 5), 9});
  }
  TemporalGraph g = TemporalGraph::from_triples(rows);
  Motif m = builtin_motif("triangle-cyclic");
  StreamCounter sc(m, 0, SamplerConfig{}, StreamAlgo::Es);
  for (const auto& r : rows) sc.push(r[0], r[1], r[2]);
  CHECK(sc.pending_count() == 40);  // nothing can flush before the stream ends
  Estimate est = sc.finalize();
  CHECK(est.value == static_cast<double>(count_exact(g, m, 0)));
}

TEST_CASE("streaming accepts string vertex names") {
  StreamCounter sc(builtin_motif("triangle-cyclic"), 10, SamplerConfig{}, StreamAlgo::Es);
  sc.push("alice", "bob", 1);
  sc.push("bob", "carol", 2);
  sc.push("carol", "alice", 3);
  Estimate est = sc.finalize();
  CHECK(est.value == 1.0);
}

TEST_CASE("wedge streaming rejects non-triadic motifs up front") {
  CHECK_THROWS_AS(
      StreamCounter(builtin_motif("cycle4"), 5, SamplerConfig{}, StreamAlgo::Ews),
      UnsupportedMotifError);
}

TEST_CASE("negative timestamps stream fine") {
  std::vector<std::array<std::int64_t, 3>> rows = {
      {0, 1, -30}, {1, 2, -29}, {2, 0, -28}};
  TemporalGraph g = TemporalGraph::from_triples(rows);
  Motif m = builtin_motif("triangle-cyclic");
  Estimate est = run_stream(rows, m, 2, SamplerConfig{}, StreamAlgo::Es);
  CHECK(est.value == static_cast<double>(count_exact(g, m, 2)));
  CHECK(est.value == 1.0);
}
