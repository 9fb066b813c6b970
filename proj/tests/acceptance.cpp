// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
// usage: stargenus_acceptance <path-to-stargenus-cli> <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "process.hpp"
#include "stargenus/stargenus.hpp"
#include "support.hpp"

namespace sg = stargenus;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Corpus {
  std::vector<sg::StarGraph> graphs;
  std::size_t exhaustive = 0;
  std::size_t random = 0;
};

Corpus build_corpus() {
  Corpus c;
  c.graphs = sg::testing::small_corpus();
  c.exhaustive = c.graphs.size();
  for (auto& g : sg::testing::random_corpus(250, 10, 20240611)) c.graphs.push_back(std::move(g));
  c.random = c.graphs.size() - c.exhaustive;
  return c;
}

// 1. surgery count = 1 + corank on random diagrams, under 5 s
Outcome surgery_corank() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1000);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const sg::ChordDiagram d = sg::testing::random_diagram(rng, 1 + rng() % 12);
    if (sg::surgery(d) != 1 + sg::intersection_matrix(d).corank()) ++bad;
  }
  const double t = seconds_since(start);
  std::ostringstream msg;
  msg << "1000 diagrams, " << bad << " mismatches, " << t << " s (limit 5 s)";
  return {bad == 0 && t < 5.0, msg.str()};
}

// 2. matrix minimum = face-tracing minimum, under 60 s
Outcome oracle_equivalence(const Corpus& corpus) {
  const auto start = Clock::now();
  std::size_t bad = 0;
  std::string first;
  for (const auto& g : corpus.graphs) {
    const auto genus = sg::min_genus(g, 0).min_genus;
    const auto oracle = sg::oracle_min_genus(g, {sg::kDefaultOracleCap, 0}).min_genus;
    if (genus != oracle) {
      if (first.empty()) first = sg::to_stg(g);
      ++bad;
    }
  }
  const double t = seconds_since(start);
  std::ostringstream msg;
  msg << corpus.exhaustive << " exhaustive + " << corpus.random << " random graphs, " << bad << " mismatches, " << t
      << " s (limit 60 s)";
  if (!first.empty()) msg << "; first mismatch:\n" << first;
  return {bad == 0 && corpus.random >= 200 && t < 60.0, msg.str()};
}

// 3. every permissible partition: rank formula = traced genus
Outcome per_partition(const Corpus& corpus) {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (const auto& g : corpus.graphs) {
    for (const auto& c : sg::check_all_partitions(sg::build_pipeline(g))) {
      ++checked;
      if (static_cast<long long>(c.matrix_genus) != c.traced_genus) ++bad;
    }
  }
  std::ostringstream msg;
  msg << checked << " partitions, " << bad << " mismatches";
  return {bad == 0 && checked > 0, msg.str()};
}

// 4. fixture values
Outcome fixture_values() {
  namespace fx = sg::fixtures;
  std::ostringstream msg;
  bool ok = true;
  auto expect = [&](const char* name, const sg::StarGraph& g, std::size_t want) {
    const std::size_t got = sg::min_genus(g).min_genus;
    const std::size_t oracle = sg::oracle_min_genus(g).min_genus;
    msg << name << "=" << got << " ";
    ok = ok && got == want && oracle == want;
  };
  expect("G8", fx::g8(), 0);
  expect("GHopf", fx::ghopf(), 0);
  expect("GT3f", fx::gt3f(), 0);
  expect("GT3c", fx::gt3c(), 1);
  bool refused = false;
  try {
    sg::min_genus(fx::gx());
  } catch (const sg::NotSourceSink&) {
    refused = true;
  }
  const bool cover_ok = sg::find_source_sink_orientation(sg::double_cover(fx::gx())).has_value();
  msg << "GX refused=" << refused << " cover source-sink=" << cover_ok;
  return {ok && refused && cover_ok, msg.str()};
}

double best_time(const std::function<void()>& fn, int repeats) {
  double best = 1e100;
  for (int i = 0; i < repeats; ++i) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

// 5. planarity agrees with min_genus == 0; quadratic scaling on chains
Outcome planarity(const Corpus& corpus) {
  std::size_t bad = 0;
  for (const auto& g : corpus.graphs) {
    const auto p = sg::build_pipeline(g);
    if (sg::is_planar(p.expanded).planar != (sg::min_genus(p).min_genus == 0)) ++bad;
  }
  std::vector<double> times;
  bool planar = true;
  for (std::size_t k : {1000, 2000, 4000}) {
    const sg::StarGraph g = sg::fixtures::chain(k);
    times.push_back(best_time([&] { planar = planar && sg::is_planar(g).planar; }, 3));
  }
  const double r1 = times[1] / times[0];
  const double r2 = times[2] / times[1];
  std::ostringstream msg;
  msg << bad << " disagreements on " << corpus.graphs.size() << " graphs; chain 1000/2000/4000: " << times[0] << " / "
      << times[1] << " / " << times[2] << " s, ratios " << r1 << " " << r2 << " (limit 4.5, 10 s)";
  return {bad == 0 && planar && r1 <= 4.5 && r2 <= 4.5 && times[2] < 10.0, msg.str()};
}

// 6. circuits, classifications, even ranks, partition counts
Outcome structural(const Corpus& corpus) {
  std::size_t violations = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (first.empty()) first = what;
    ++violations;
  };
  for (const auto& g : corpus.graphs) {
    try {
      const auto p = sg::build_pipeline(g);
      for (const auto& problem : sg::check_rs_circuit(g, p.rs.transitions, p.rs.circuit)) fail(problem);
      if (!p.matrix.is_symmetric() || !p.matrix.has_zero_diagonal()) fail("matrix not alternating");
      if (p.matrix.rank() % 2 != 0) fail("odd rank");
      const std::size_t n = p.matrix.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::min<std::size_t>(n, 12)); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> (i % 12)) & 1U) idx.push_back(i);
        }
        if (p.matrix.principal_submatrix(idx).rank() % 2 != 0) fail("odd principal rank");
      }
      const auto parts = sg::enumerate_permissible_partitions(p.expanded);
      std::vector<std::vector<sg::Side>> sides;
      for (const auto& part : parts) {
        sides.push_back(sg::chord_sides(p.expanded, part));
        if (!sg::is_permissible(p.expanded, sides.back())) fail("impermissible partition");
      }
      std::sort(sides.begin(), sides.end());
      if (std::adjacent_find(sides.begin(), sides.end()) != sides.end()) fail("repeated partition");
      if (parts.size() != (std::size_t{1} << g.vertex_count())) fail("wrong partition count");
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  std::ostringstream msg;
  msg << violations << " violations on " << corpus.graphs.size() << " graphs";
  if (!first.empty()) msg << " (first: " << first << ")";
  return {violations == 0, msg.str()};
}

// 7. byte-identical CLI output across runs and thread counts
Outcome determinism(const std::string& cli, const fs::path& dir) {
  fs::create_directories(dir);
  std::vector<std::string> files;
  auto add = [&](const std::string& name, const sg::StarGraph& g) {
    const std::string path = (dir / (name + ".stg")).string();
    sg::testing::write_file(path, sg::to_stg(g));
    files.push_back(path);
  };
  for (const char* name : {"g8", "gx", "ghopf", "gt3f", "gt3c"}) add(name, sg::fixtures::by_name(name));
  add("chain8", sg::fixtures::chain(8));
  add("random", *sg::fixtures::random_graph(7, 4, 2, true));
  add("random_any", *sg::fixtures::random_graph(7, 4, 2));

  std::vector<std::string> commands;
  for (const auto& f : files) {
    for (const char* cmd : {"validate", "orient", "cover", "circuit", "diagram", "genus", "planar", "oracle", "check"}) {
      commands.push_back(std::string(cmd) + " " + f);
      commands.push_back(std::string(cmd) + " " + f + " --json");
    }
    commands.push_back("check " + f + " --all-partitions --json");
  }
  for (const char* gen : {"g8", "gx", "ghopf", "gt3f", "gt3c", "chain --k 5", "random --seed 7 --n4 4 --n6 2",
                          "random --seed 7 --n4 4 --n6 2 --source-sink"}) {
    commands.push_back(std::string("generate ") + gen);
  }

  std::size_t differing = 0;
  std::string first;
  for (const auto& c : commands) {
    const bool threaded = c.rfind("generate", 0) != 0 && c.rfind("cover", 0) != 0;
    std::vector<std::string> variants = {c, c};
    if (threaded) {
      variants.push_back(c + " --threads 1");
      variants.push_back(c + " --threads 3");
      variants.push_back(c + " --threads 8");
    }
    std::vector<sg::testing::ProcessResult> results;
    for (const auto& v : variants) results.push_back(sg::testing::run_command(cli + " " + v + " 2>&1"));
    for (const auto& r : results) {
      if (r.out != results.front().out || r.status != results.front().status) {
        if (first.empty()) first = c;
        ++differing;
        break;
      }
    }
  }
  std::ostringstream msg;
  msg << commands.size() << " commands, " << differing << " nondeterministic";
  if (!first.empty()) msg << " (first: " << first << ")";
  return {differing == 0, msg.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: stargenus_acceptance <stargenus-cli> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path scratch = argv[2];

  const Corpus corpus = build_corpus();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"surgery count vs corank", surgery_corank},
      {"oracle equivalence", [&] { return oracle_equivalence(corpus); }},
      {"per-partition genus", [&] { return per_partition(corpus); }},
      {"fixture values", fixture_values},
      {"planarity agreement and scaling", [&] { return planarity(corpus); }},
      {"structural invariants", [&] { return structural(corpus); }},
      {"cli determinism", [&] { return determinism(cli, scratch); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << " " << criteria[i].first << ": " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
