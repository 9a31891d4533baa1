// Command-line front end: exact counts, sampled estimates, streaming,
// oracle cross-checks and a small benchmark harness. Reports go to stdout as
// a single JSON object or fixed-header CSV; logs go to stderr.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmc/tmc.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string graph;
  std::string motif_spec;
  tmc::Timestamp delta = 0;
  double p = 0.01;
  double q = 1.0;
  std::uint64_t seed = 0;
  int runs = 1;
  std::string format = "json";
  unsigned workers = 1;
  double eps = 0.0;
  double gamma = 0.0;
  bool planned = false;  // p came from --eps/--gamma
  std::string algo = "es";
};

struct GraphEcho {
  std::string path;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  tmc::Timestamp time_span = 0;
};

// One report line; aggregate rows carry run = -1.
struct RunRow {
  std::string algorithm;
  int run = 0;
  std::optional<std::uint64_t> seed;
  double estimate = 0.0;
  bool integral_estimate = false;
  std::optional<double> exact;
  std::optional<double> relative_error;
  double elapsed_ms = 0.0;
  std::optional<std::uint64_t> sampled_edges;
  bool empty_sample = false;
};

std::optional<double> rel_error(double estimate, double exact) {
  if (exact == 0.0) return std::nullopt;
  return std::abs(estimate - exact) / exact;
}

tmc::Motif resolve_motif(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw tmc::ParseError("cannot open motif file '" + spec.substr(1) + "'");
    return tmc::parse_motif(in);
  }
  return tmc::builtin_motif(spec);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json row_to_json(const RunRow& r) {
  json j;
  j["algorithm"] = r.algorithm;
  j["run"] = r.run < 0 ? json("mean") : json(r.run);
  if (r.integral_estimate) {
    j["estimate"] = static_cast<std::uint64_t>(r.estimate);
  } else {
    j["estimate"] = r.estimate;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.seed) j["seed"] = *r.seed;
  if (r.sampled_edges) {
    j["sampled_edges"] = *r.sampled_edges;
    j["empty_sample"] = r.empty_sample;
  }
  if (r.exact) {
    j["exact"] = static_cast<std::uint64_t>(*r.exact);
    j["relative_error"] = r.relative_error ? json(*r.relative_error) : json();
  }
  return j;
}

void write_csv(std::ostream& out, const Options& opt, const GraphEcho& g,
               const std::vector<RunRow>& rows) {
  out << "command,algorithm,motif,delta,p,q,seed,run,workers,estimate,exact,"
         "relative_error,elapsed_ms,n,m,time_span,sampled_edges\n";
  for (const RunRow& r : rows) {
    out << opt.command << ',' << r.algorithm << ',' << opt.motif_spec << ','
        << opt.delta << ',' << fmt_double(opt.p) << ',' << fmt_double(opt.q) << ',';
    if (r.seed) out << *r.seed;
    out << ',';
    if (r.run < 0) {
      out << "mean";
    } else {
      out << r.run;
    }
    out << ',' << opt.workers << ',' << fmt_double(r.estimate) << ',';
    if (r.exact) out << fmt_double(*r.exact);
    out << ',';
    if (r.relative_error) out << fmt_double(*r.relative_error);
    out << ',' << fmt_double(r.elapsed_ms) << ',' << g.n << ',' << g.m << ','
        << g.time_span << ',';
    if (r.sampled_edges) out << *r.sampled_edges;
    out << '\n';
  }
}

json base_report(const Options& opt, const GraphEcho& g) {
  json j;
  j["command"] = opt.command;
  j["graph"] = {{"path", g.path}, {"n", g.n}, {"m", g.m}, {"time_span", g.time_span}};
  j["delta"] = opt.delta;
  j["p"] = opt.p;
  j["q"] = opt.q;
  j["seed"] = opt.seed;
  j["runs"] = opt.runs;
  j["workers"] = opt.workers;
  if (opt.planned) {
    j["planner"] = {{"eps", opt.eps}, {"gamma", opt.gamma}, {"p", opt.p}};
  }
  return j;
}

void add_motif_echo(json& j, const Options& opt, const tmc::Motif& m) {
  j["motif"] = {{"spec", opt.motif_spec},
                {"k", m.vertex_count()},
                {"l", m.edge_count()},
                {"class", tmc::motif_class_name(tmc::classify(m).cls)}};
}

void emit(const Options& opt, const GraphEcho& g, json& report,
          const std::vector<RunRow>& rows) {
  if (opt.format == "csv") {
    write_csv(std::cout, opt, g, rows);
    return;
  }
  json arr = json::array();
  for (const RunRow& r : rows) arr.push_back(row_to_json(r));
  report["results"] = std::move(arr);
  std::cout << report.dump(2) << '\n';
}

RunRow estimate_row(const tmc::Estimate& est, int run) {
  RunRow r;
  r.algorithm = est.algorithm;
  r.run = run;
  r.seed = est.config.seed;
  r.estimate = est.value;
  r.elapsed_ms = est.elapsed_ms;
  r.sampled_edges = est.sampled_edges;
  r.empty_sample = est.empty_sample;
  if (est.empty_sample) {
    std::cerr << "warning: run " << run << " sampled no edges; estimate is 0\n";
  }
  return r;
}

double timed_exact(const tmc::TemporalGraph& g, const tmc::Motif& m,
                   tmc::Timestamp delta, unsigned workers, std::uint64_t& out,
                   double& ms) {
  auto t0 = std::chrono::steady_clock::now();
  out = tmc::count_exact(g, m, delta, workers);
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
           .count();
  return static_cast<double>(out);
}

int run_batch(const Options& opt) {
  tmc::TemporalGraph graph = tmc::load_edge_list(opt.graph);
  GraphEcho echo{opt.graph, graph.num_vertices(), graph.num_edges(),
                 graph.max_time() - graph.min_time()};

  if (opt.command == "stats") {
    tmc::GraphStats s = tmc::graph_stats(graph, opt.delta);
    if (opt.format == "csv") {
      std::cout << "n,m,time_span,d_delta,h\n"
                << s.n << ',' << s.m << ',' << s.time_span << ',' << s.d_delta << ','
                << s.h << '\n';
      return 0;
    }
    json j = base_report(opt, echo);
    j["stats"] = {{"n", s.n},
                  {"m", s.m},
                  {"time_span", s.time_span},
                  {"d_delta", s.d_delta},
                  {"h", s.h}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }

  tmc::Motif motif = resolve_motif(opt.motif_spec);
  json report = base_report(opt, echo);
  add_motif_echo(report, opt, motif);
  std::vector<RunRow> rows;

  tmc::SamplerConfig cfg;
  cfg.p = opt.p;
  cfg.q = opt.q;
  cfg.workers = opt.workers;

  if (opt.command == "exact") {
    std::uint64_t c = 0;
    double ms = 0.0;
    timed_exact(graph, motif, opt.delta, opt.workers, c, ms);
    RunRow r;
    r.algorithm = "exact";
    r.estimate = static_cast<double>(c);
    r.integral_estimate = true;
    r.elapsed_ms = ms;
    rows.push_back(r);
    report["estimate"] = c;
    emit(opt, echo, report, rows);
    return 0;
  }

  if (opt.command == "oracle") {
    std::uint64_t engine = 0;
    double ms = 0.0;
    timed_exact(graph, motif, opt.delta, opt.workers, engine, ms);
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t reference = tmc::brute_force_count(graph, motif, opt.delta);
    double ref_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    RunRow r;
    r.algorithm = "exact";
    r.estimate = static_cast<double>(engine);
    r.integral_estimate = true;
    r.exact = static_cast<double>(reference);
    r.relative_error = rel_error(r.estimate, static_cast<double>(reference));
    r.elapsed_ms = ms;
    rows.push_back(r);
    const bool match = engine == reference;
    report["estimate"] = engine;
    report["oracle"] = {{"engine", engine},
                        {"reference", reference},
                        {"reference_ms", ref_ms},
                        {"match", match}};
    emit(opt, echo, report, rows);
    if (!match) {
      std::cerr << "oracle mismatch: engine " << engine << " reference " << reference
                << '\n';
      return 5;
    }
    return 0;
  }

  if (opt.command == "es" || opt.command == "ews") {
    double sum = 0.0;
    for (int r = 0; r < opt.runs; ++r) {
      cfg.seed = opt.seed + static_cast<std::uint64_t>(r);
      tmc::Estimate est = opt.command == "es"
                              ? tmc::estimate_es(graph, motif, opt.delta, cfg)
                              : tmc::estimate_ews(graph, motif, opt.delta, cfg);
      rows.push_back(estimate_row(est, r));
      sum += est.value;
    }
    report["estimate"] = opt.runs == 1 ? rows[0].estimate : sum / opt.runs;
    emit(opt, echo, report, rows);
    return 0;
  }

  if (opt.command == "bench") {
    std::uint64_t c = 0;
    double exact_ms = 0.0;
    const double exact = timed_exact(graph, motif, opt.delta, opt.workers, c, exact_ms);
    RunRow er;
    er.algorithm = "exact";
    er.estimate = exact;
    er.integral_estimate = true;
    er.elapsed_ms = exact_ms;
    rows.push_back(er);

    std::vector<std::string> algos{"es"};
    if (tmc::classify(motif).cls != tmc::MotifClass::General) algos.push_back("ews");

    json agg;
    for (const std::string& algo : algos) {
      double time_sum = 0.0, err_sum = 0.0, est_sum = 0.0;
      bool have_err = exact != 0.0;
      for (int r = 0; r < opt.runs; ++r) {
        cfg.seed = opt.seed + static_cast<std::uint64_t>(r);
        tmc::Estimate est = algo == "es" ? tmc::estimate_es(graph, motif, opt.delta, cfg)
                                         : tmc::estimate_ews(graph, motif, opt.delta, cfg);
        RunRow row = estimate_row(est, r);
        row.algorithm = algo;
        row.exact = exact;
        row.relative_error = rel_error(est.value, exact);
        rows.push_back(row);
        time_sum += est.elapsed_ms;
        est_sum += est.value;
        if (have_err) err_sum += *row.relative_error;
      }
      RunRow mean;
      mean.algorithm = algo;
      mean.run = -1;
      mean.estimate = est_sum / opt.runs;
      mean.exact = exact;
      mean.elapsed_ms = time_sum / opt.runs;
      if (have_err) mean.relative_error = err_sum / opt.runs;
      rows.push_back(mean);
      agg[algo] = {{"mean_estimate", mean.estimate},
                   {"mean_relative_error",
                    have_err ? json(*mean.relative_error) : json()},
                   {"mean_time_ms", mean.elapsed_ms},
                   {"runs", opt.runs}};
    }
    report["estimate"] = c;
    report["exact"] = c;
    report["bench"] = {{"exact_time_ms", exact_ms}, {"algorithms", std::move(agg)}};
    emit(opt, echo, report, rows);
    return 0;
  }

  throw tmc::InternalError("unhandled command " + opt.command);
}

int run_stream(const Options& opt) {
  if (opt.runs != 1) {
    throw tmc::ConfigError("stream consumes its input once; --runs must be 1");
  }
  tmc::Motif motif = resolve_motif(opt.motif_spec);
  tmc::SamplerConfig cfg;
  cfg.p = opt.p;
  cfg.q = opt.q;
  cfg.seed = opt.seed;
  const tmc::StreamAlgo algo =
      opt.algo == "ews" ? tmc::StreamAlgo::Ews : tmc::StreamAlgo::Es;
  tmc::StreamCounter counter(motif, opt.delta, cfg, algo);

  tmc::LineSource src(opt.graph);
  tmc::EdgeRecordScanner scanner;
  tmc::EdgeRecordScanner::Record rec;
  std::string line;
  tmc::Timestamp first_t = 0, last_t = 0;
  bool any = false;
  while (src.next(line)) {
    if (!scanner.scan(line, rec)) continue;
    counter.push(rec.src, rec.dst, rec.t);
    if (!any) first_t = rec.t;
    last_t = rec.t;
    any = true;
  }

  GraphEcho echo{opt.graph, counter.vertices_seen(), counter.records(),
                 any ? last_t - first_t : 0};
  tmc::Estimate est = counter.finalize();
  json report = base_report(opt, echo);
  add_motif_echo(report, opt, motif);
  report["estimate"] = est.value;
  std::vector<RunRow> rows{estimate_row(est, 0)};
  emit(opt, echo, report, rows);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"temporal motif counting: exact, sampled and streaming"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--graph", opt.graph, "edge list path (.gz ok; '-' is stdin)");
  app.add_option("--motif", opt.motif_spec, "built-in motif name or @file");
  auto* delta_opt = app.add_option("--delta", opt.delta, "time window, timestamp units");
  app.add_option("--p", opt.p, "edge keep probability");
  app.add_option("--q", opt.q, "wedge keep probability (ews)");
  app.add_option("--seed", opt.seed, "rng seed; run r uses seed+r");
  app.add_option("--runs", opt.runs, "repeated runs for samplers")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--workers", opt.workers, "worker threads");
  auto* eps_opt = app.add_option("--eps", opt.eps, "target relative error (plans p)");
  auto* gamma_opt =
      app.add_option("--gamma", opt.gamma, "tail probability for --eps (plans p)");

  for (const char* name : {"exact", "es", "ews", "stream", "oracle", "bench", "stats"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
  }
  app.get_subcommand("stream")
      ->add_option("--algo", opt.algo, "stream estimator")
      ->check(CLI::IsMember({"es", "ews"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  opt.command = app.get_subcommands().front()->get_name();
  if (opt.graph.empty()) throw tmc::ConfigError("--graph is required");
  if (!*delta_opt) throw tmc::ConfigError("--delta is required");
  if (opt.command != "stats" && opt.motif_spec.empty()) {
    throw tmc::ConfigError("--motif is required");
  }
  if ((eps_opt->count() > 0) != (gamma_opt->count() > 0)) {
    throw tmc::ConfigError("--eps and --gamma must be given together");
  }
  if (eps_opt->count() > 0) {
    opt.p = tmc::planned_edge_probability(opt.eps, opt.gamma);
    opt.planned = true;
    std::cerr << "planned p = " << opt.p << " for eps " << opt.eps << " gamma "
              << opt.gamma << '\n';
  }

  return opt.command == "stream" ? run_stream(opt) : run_batch(opt);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tmc::UnsupportedMotifError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const tmc::StreamOrderError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const tmc::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const tmc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
