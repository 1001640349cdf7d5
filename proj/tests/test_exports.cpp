#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "scngen/exports.hpp"
#include "support/fixtures.hpp"

using Catch::Matchers::ContainsSubstring;
using scngen::CentralityReport;
using scngen::CollaborationGraph;
using scngen::data_error;
using scngen::format_score;
using scngen::Measure;
using scngen::Mention;
using scngen::read_graph_csv;
using scngen::write_centrality_csv;
using scngen::write_dot;
using scngen::write_edges_csv;
using scngen::write_graphml;
using scngen::write_mentions_csv;
using scngen::write_nodes_csv;
using testsupport::TempDir;
using testsupport::write_text;

namespace {
CollaborationGraph sample_graph() {
  CollaborationGraph g;
  g.add_co_occurrence("DOE", "FEMA");
  g.add_co_occurrence("DOE", "FEMA");
  g.add_co_occurrence("FEMA", "NRCC");
  g.add_node("HHS");
  return g;
}

template <typename Fn>
std::string render(Fn&& fn) {
  std::ostringstream out;
  fn(out);
  return out.str();
}
}  // namespace

TEST_CASE("format_score is compact and round-trippable") {
  CHECK(format_score(4.0) == "4");
  CHECK(format_score(0.0) == "0");
  CHECK(format_score(0.8) == "0.8");
  CHECK(format_score(2.0 / 3.0) == "0.6666666667");
  CHECK(format_score(4.0 / 7.0) == "0.5714285714");
  CHECK(format_score(1e-12) == "1e-12");
  CHECK(format_score(123456.5) == "123456.5");
}

TEST_CASE("node and edge files are sorted and exact") {
  const auto g = sample_graph();
  CHECK(render([&](std::ostream& o) { write_nodes_csv(g, o); }) ==
        "stakeholder_id\nDOE\nFEMA\nHHS\nNRCC\n");
  CHECK(render([&](std::ostream& o) { write_edges_csv(g, o); }) ==
        "source,target,weight\nDOE,FEMA,2\nFEMA,NRCC,1\n");
}

TEST_CASE("mention files quote awkward surfaces") {
  Mention m;
  m.doc_id = "MA-1";
  m.start_char = 4;
  m.end_char = 16;
  m.surface = "Corps, Army";
  m.stakeholder_id = "USACE";
  CHECK(render([&](std::ostream& o) { write_mentions_csv({m}, o); }) ==
        "doc_id,start_char,end_char,surface,stakeholder_id\n"
        "MA-1,4,16,\"Corps, Army\",USACE\n");
}

TEST_CASE("centrality files use the score formatter") {
  CentralityReport report;
  report.measure = Measure::closeness;
  report.scores = {{"DHS", 0.8}, {"FEMA", 1.0}, {"NRCC", 4.0 / 7.0}};
  CHECK(render([&](std::ostream& o) { write_centrality_csv(report, o); }) ==
        "stakeholder_id,score\nDHS,0.8\nFEMA,1\nNRCC,0.5714285714\n");
}

TEST_CASE("graphml carries nodes, edges, and weights") {
  const auto text =
      render([&](std::ostream& o) { write_graphml(sample_graph(), o); });
  CHECK_THAT(text, ContainsSubstring("<?xml version=\"1.0\""));
  CHECK_THAT(text, ContainsSubstring("edgedefault=\"undirected\""));
  CHECK_THAT(text, ContainsSubstring("<node id=\"HHS\"/>"));
  CHECK_THAT(text,
             ContainsSubstring("<edge source=\"DOE\" target=\"FEMA\">"
                               "<data key=\"weight\">2</data></edge>"));
}

TEST_CASE("graphml escapes XML metacharacters in IDs") {
  CollaborationGraph g;
  g.add_co_occurrence("R&D", "A<B>");
  const auto text = render([&](std::ostream& o) { write_graphml(g, o); });
  CHECK_THAT(text, ContainsSubstring("<node id=\"R&amp;D\"/>"));
  CHECK_THAT(text, ContainsSubstring("<node id=\"A&lt;B&gt;\"/>"));
}

TEST_CASE("dot output is exact for a small graph") {
  CHECK(render([&](std::ostream& o) { write_dot(sample_graph(), o); }) ==
        "graph {\n"
        "  \"DOE\";\n"
        "  \"FEMA\";\n"
        "  \"HHS\";\n"
        "  \"NRCC\";\n"
        "  \"DOE\" -- \"FEMA\" [weight=2];\n"
        "  \"FEMA\" -- \"NRCC\" [weight=1];\n"
        "}\n");
}

TEST_CASE("dot quoting escapes quotes and backslashes") {
  CollaborationGraph g;
  g.add_node("SAY\"HI\"");
  g.add_node("BACK\\SLASH");
  const auto text = render([&](std::ostream& o) { write_dot(g, o); });
  CHECK_THAT(text, ContainsSubstring("\"SAY\\\"HI\\\"\";"));
  CHECK_THAT(text, ContainsSubstring("\"BACK\\\\SLASH\";"));
}

TEST_CASE("node and edge files read back into the same graph") {
  std::mt19937 rng(606);
  for (int round = 0; round < 50; ++round) {
    // Random weights need their own pass; the oracle graphs are unweighted.
    CollaborationGraph g;
    const std::size_t n = rng() % 7;
    for (std::size_t i = 0; i < n; ++i) g.add_node("N" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t w = rng() % 4;
        for (std::size_t k = 0; k < w; ++k)
          g.add_co_occurrence("N" + std::to_string(i), "N" + std::to_string(j));
      }
    }

    TempDir tmp;
    scngen::write_file(tmp.file("nodes.csv"),
                       [&](std::ostream& o) { write_nodes_csv(g, o); });
    scngen::write_file(tmp.file("edges.csv"),
                       [&](std::ostream& o) { write_edges_csv(g, o); });
    const auto back = read_graph_csv(tmp.file("nodes.csv"), tmp.file("edges.csv"));
    CAPTURE(round);
    CHECK(back == g);
  }
}

TEST_CASE("graph readback rejects malformed datasets") {
  TempDir tmp;
  write_text(tmp.file("nodes.csv"), "stakeholder_id\nFEMA\nDOE\n");
  write_text(tmp.file("edges.csv"), "source,target,weight\nDOE,FEMA,1\n");

  write_text(tmp.file("bad_nodes.csv"), "id\nFEMA\n");
  CHECK_THROWS_AS(read_graph_csv(tmp.file("bad_nodes.csv"), tmp.file("edges.csv")),
                  data_error);

  write_text(tmp.file("bad_edges.csv"), "a,b,w\nDOE,FEMA,1\n");
  CHECK_THROWS_AS(read_graph_csv(tmp.file("nodes.csv"), tmp.file("bad_edges.csv")),
                  data_error);

  write_text(tmp.file("zero_weight.csv"), "source,target,weight\nDOE,FEMA,0\n");
  CHECK_THROWS_AS(
      read_graph_csv(tmp.file("nodes.csv"), tmp.file("zero_weight.csv")),
      data_error);

  write_text(tmp.file("bad_weight.csv"), "source,target,weight\nDOE,FEMA,x\n");
  CHECK_THROWS_AS(
      read_graph_csv(tmp.file("nodes.csv"), tmp.file("bad_weight.csv")),
      data_error);

  write_text(tmp.file("empty_node.csv"), "stakeholder_id,note\n,x\n");
  CHECK_THROWS_AS(
      read_graph_csv(tmp.file("empty_node.csv"), tmp.file("edges.csv")),
      data_error);
}

TEST_CASE("write_file surfaces unwritable paths") {
  CHECK_THROWS_AS(
      scngen::write_file("/nonexistent-dir/out.csv",
                         [](std::ostream& o) { o << "x"; }),
      data_error);
}
