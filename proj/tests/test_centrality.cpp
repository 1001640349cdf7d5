#include <cmath>
#include <map>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "scngen/centrality.hpp"
#include "scngen/csv.hpp"
#include "scngen/pipeline.hpp"
#include "support/fixtures.hpp"

using scngen::betweenness_centrality;
using scngen::CentralityReport;
using scngen::closeness_centrality;
using scngen::CollaborationGraph;
using scngen::compute_centrality;
using scngen::degree_centrality;
using scngen::load_documents;
using scngen::load_gazetteer;
using scngen::Measure;
using scngen::measure_from_string;
using scngen::run_extraction;
using scngen::top_k;
using testsupport::data_file;
using testsupport::to_library_graph;
using testsupport::to_oracle_graph;

namespace {

CollaborationGraph k4_pendant_graph() {
  const auto records =
      load_documents(data_file("docs_k4_pendant.csv"), {}).records;
  const auto gazetteer = load_gazetteer(data_file("gazetteer_core.csv"));
  return run_extraction(records, gazetteer).graph;
}

// measure name -> id -> score, from the hand-computed fixture table.
std::map<std::string, std::map<std::string, double>> expected_table() {
  std::map<std::string, std::map<std::string, double>> table;
  const auto rows =
      scngen::read_csv_file(data_file("k4_pendant_expected.csv"));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r].fields;
    table[f[0]][f[1]] = std::stod(f[2]);
  }
  return table;
}

}  // namespace

TEST_CASE("hand-computed scores for the K4-plus-pendant graph") {
  const auto graph = k4_pendant_graph();
  const auto expected = expected_table();
  REQUIRE(expected.size() == 3);

  for (const auto& [name, want] : expected) {
    const auto measure = measure_from_string(name);
    REQUIRE(measure.has_value());
    const auto report = compute_centrality(graph, *measure);
    REQUIRE(report.scores.size() == want.size());
    for (const auto& [id, score] : want) {
      CAPTURE(name, id);
      REQUIRE(report.scores.count(id) == 1);
      CHECK_THAT(report.scores.at(id),
                 Catch::Matchers::WithinAbs(score, 1e-12));
    }
  }
}

TEST_CASE("a path of three nodes puts all brokerage on the middle") {
  const auto records = load_documents(data_file("docs_path3.csv"), {}).records;
  const auto gazetteer = load_gazetteer(data_file("gazetteer_core.csv"));
  const auto graph = run_extraction(records, gazetteer).graph;
  REQUIRE(graph.nodes() == std::set<std::string>{"ARC", "DOD", "FEMA"});

  const auto degree = degree_centrality(graph);
  CHECK(degree.scores.at("ARC") == 2.0);
  CHECK(degree.scores.at("FEMA") == 1.0);
  CHECK(degree.scores.at("DOD") == 1.0);

  const auto closeness = closeness_centrality(graph);
  CHECK_THAT(closeness.scores.at("ARC"), Catch::Matchers::WithinAbs(1.0, 1e-12));
  CHECK_THAT(closeness.scores.at("FEMA"),
             Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-12));

  const auto betweenness = betweenness_centrality(graph);
  CHECK(betweenness.scores.at("ARC") == 1.0);
  CHECK(betweenness.scores.at("FEMA") == 0.0);
  CHECK(betweenness.scores.at("DOD") == 0.0);
}

TEST_CASE("degenerate graphs score zero everywhere") {
  CollaborationGraph g;
  g.add_node("ONLY");
  for (const Measure m :
       {Measure::degree, Measure::closeness, Measure::betweenness}) {
    const auto report = compute_centrality(g, m);
    CHECK(report.scores.at("ONLY") == 0.0);
  }

  g.add_node("OTHER");  // two nodes, still no edges
  CHECK(closeness_centrality(g).scores.at("ONLY") == 0.0);
  CHECK(compute_centrality(CollaborationGraph{}, Measure::degree).scores.empty());
}

TEST_CASE("the disconnection correction down-weights small components") {
  // Two separate pairs: each node reaches one neighbor at distance one, so
  // the raw inverse farness of 1 is scaled by 1/(n-1) = 1/3.
  const auto g = scngen::build_interactions({
      {"d1", {"A", "B"}},
      {"d2", {"C", "D"}},
  });
  const auto closeness = closeness_centrality(g);
  for (const char* id : {"A", "B", "C", "D"}) {
    CHECK_THAT(closeness.scores.at(id),
               Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-12));
  }
}

TEST_CASE("complete, star, and cycle shapes agree with hand values") {
  std::set<std::string> five;
  for (int i = 0; i < 5; ++i) five.insert("N" + std::to_string(i));
  const auto k5 = scngen::build_interactions({{"d", five}});
  for (const auto& id : five) {
    CHECK(degree_centrality(k5).scores.at(id) == 4.0);
    CHECK_THAT(closeness_centrality(k5).scores.at(id),
               Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK(betweenness_centrality(k5).scores.at(id) == 0.0);
  }

  CollaborationGraph star;
  for (const char* leaf : {"L1", "L2", "L3", "L4"})
    star.add_co_occurrence("HUB", leaf);
  CHECK(betweenness_centrality(star).scores.at("HUB") == 6.0);  // C(4,2)
  CHECK(betweenness_centrality(star).scores.at("L1") == 0.0);
  CHECK_THAT(closeness_centrality(star).scores.at("HUB"),
             Catch::Matchers::WithinAbs(1.0, 1e-12));
  CHECK_THAT(closeness_centrality(star).scores.at("L2"),
             Catch::Matchers::WithinAbs(4.0 / 7.0, 1e-12));

  CollaborationGraph cycle;
  for (int i = 0; i < 5; ++i) {
    cycle.add_co_occurrence("C" + std::to_string(i),
                            "C" + std::to_string((i + 1) % 5));
  }
  for (int i = 0; i < 5; ++i) {
    const std::string id = "C" + std::to_string(i);
    CHECK(betweenness_centrality(cycle).scores.at(id) == 1.0);
    CHECK_THAT(closeness_centrality(cycle).scores.at(id),
               Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-12));
  }
}

TEST_CASE("all three measures match the reference algorithms") {
  std::mt19937 rng(8080);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = rng() % 8;
    const unsigned density = 100 + rng() % 700;
    const auto small = oracle::random_graph(rng, n, density);
    const auto g = to_library_graph(small);
    const auto mirror = to_oracle_graph(g);
    CAPTURE(round, n, density);

    const auto degree = degree_centrality(g).scores;
    CHECK(degree == oracle::degree_scores(mirror));

    const auto closeness = closeness_centrality(g).scores;
    const auto closeness_ref = oracle::closeness_scores(mirror);
    REQUIRE(closeness.size() == closeness_ref.size());
    for (const auto& [id, score] : closeness_ref) {
      CAPTURE(id);
      CHECK_THAT(closeness.at(id), Catch::Matchers::WithinAbs(score, 1e-9));
    }

    const auto betweenness = betweenness_centrality(g).scores;
    const auto betweenness_ref = oracle::betweenness_scores(mirror);
    REQUIRE(betweenness.size() == betweenness_ref.size());
    for (const auto& [id, score] : betweenness_ref) {
      CAPTURE(id);
      CHECK_THAT(betweenness.at(id), Catch::Matchers::WithinAbs(score, 1e-9));
    }
  }
}

TEST_CASE("top_k ranks by score, then by ID") {
  CentralityReport report;
  report.scores = {{"ARC", 2.0}, {"DHS", 3.0}, {"DOD", 3.0},
                   {"FEMA", 5.0}, {"HHS", 1.0}};
  const auto top3 = top_k(report, 3);
  REQUIRE(top3.size() == 3);
  CHECK(top3[0] == std::pair<std::string, double>{"FEMA", 5.0});
  CHECK(top3[1] == std::pair<std::string, double>{"DHS", 3.0});  // tie: ID order
  CHECK(top3[2] == std::pair<std::string, double>{"DOD", 3.0});

  CHECK(top_k(report, 99).size() == 5);
  CHECK(top_k(report, 0).empty());
  CHECK(top_k(report, 3) == top_k(report, 3));
}

TEST_CASE("measure names round trip") {
  for (const Measure m :
       {Measure::degree, Measure::closeness, Measure::betweenness}) {
    CHECK(measure_from_string(scngen::to_string(m)) == m);
  }
  CHECK_FALSE(measure_from_string("eigenvector").has_value());
  CHECK_FALSE(measure_from_string("").has_value());
}
