#pragma once
// Structured dataset writers: the node and edge datasets as delimited text,
// plus GraphML and DOT for external network tools, and the mention dataset
// for extraction audits. All outputs are sorted so files are diff-stable.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "scngen/centrality.hpp"
#include "scngen/csv.hpp"
#include "scngen/errors.hpp"
#include "scngen/matcher.hpp"
#include "scngen/network.hpp"

namespace scngen {

/// Shortest round-trippable decimal form, e.g. "4", "0.8", "0.5714285714".
inline std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

inline void write_nodes_csv(const CollaborationGraph& g, std::ostream& out) {
  out << "stakeholder_id\n";
  for (const auto& id : g.nodes()) out << csv_escape(id) << '\n';
}

inline void write_edges_csv(const CollaborationGraph& g, std::ostream& out) {
  out << "source,target,weight\n";
  for (const auto& e : g.edges()) {
    write_csv_row(out, {e.a, e.b, std::to_string(e.weight)});
  }
}

inline void write_mentions_csv(const std::vector<Mention>& mentions,
                               std::ostream& out) {
  out << "doc_id,start_char,end_char,surface,stakeholder_id\n";
  for (const auto& m : mentions) {
    write_csv_row(out, {m.doc_id, std::to_string(m.start_char),
                        std::to_string(m.end_char), m.surface,
                        m.stakeholder_id});
  }
}

inline void write_centrality_csv(const CentralityReport& report,
                                 std::ostream& out) {
  out << "stakeholder_id,score\n";
  for (const auto& [id, score] : report.scores)
    write_csv_row(out, {id, format_score(score)});
}

namespace detail {
inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}
}  // namespace detail

inline void write_graphml(const CollaborationGraph& g, std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" "
         "attr.type=\"int\"/>\n"
      << "  <graph edgedefault=\"undirected\">\n";
  for (const auto& id : g.nodes())
    out << "    <node id=\"" << detail::xml_escape(id) << "\"/>\n";
  for (const auto& e : g.edges()) {
    out << "    <edge source=\"" << detail::xml_escape(e.a) << "\" target=\""
        << detail::xml_escape(e.b) << "\"><data key=\"weight\">" << e.weight
        << "</data></edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

inline void write_dot(const CollaborationGraph& g, std::ostream& out) {
  out << "graph {\n";
  for (const auto& id : g.nodes())
    out << "  " << detail::dot_quote(id) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << detail::dot_quote(e.a) << " -- " << detail::dot_quote(e.b)
        << " [weight=" << e.weight << "];\n";
  }
  out << "}\n";
}

/// Rebuilds a graph from previously exported node and edge datasets.
inline CollaborationGraph read_graph_csv(const std::filesystem::path& nodes_path,
                                         const std::filesystem::path& edges_path) {
  CollaborationGraph g;
  const auto node_rows = read_csv_file(nodes_path);
  if (node_rows.empty() || node_rows[0].fields.empty() ||
      node_rows[0].fields[0] != "stakeholder_id")
    throw data_error("node dataset header must be 'stakeholder_id' in " +
                     nodes_path.string());
  for (std::size_t r = 1; r < node_rows.size(); ++r) {
    if (node_rows[r].fields[0].empty())
      throw data_error("empty stakeholder_id at line " +
                       std::to_string(node_rows[r].line) + " of " +
                       nodes_path.string());
    g.add_node(node_rows[r].fields[0]);
  }

  const auto edge_rows = read_csv_file(edges_path);
  if (edge_rows.empty() || edge_rows[0].fields.size() < 3 ||
      edge_rows[0].fields[0] != "source" ||
      edge_rows[0].fields[1] != "target" ||
      edge_rows[0].fields[2] != "weight")
    throw data_error("edge dataset header must be 'source,target,weight' in " +
                     edges_path.string());
  for (std::size_t r = 1; r < edge_rows.size(); ++r) {
    const auto& row = edge_rows[r];
    if (row.fields.size() < 3)
      throw data_error("edge row at line " + std::to_string(row.line) +
                       ": expected 3 fields");
    int weight = 0;
    try {
      weight = std::stoi(row.fields[2]);
    } catch (const std::exception&) {
      weight = 0;
    }
    if (weight < 1)
      throw data_error("edge row at line " + std::to_string(row.line) +
                       ": weight must be a positive integer, got '" +
                       row.fields[2] + "'");
    for (int i = 0; i < weight; ++i)
      g.add_co_occurrence(row.fields[0], row.fields[1]);
  }
  return g;
}

template <typename WriteFn>
inline void write_file(const std::filesystem::path& path, WriteFn&& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write file: " + path.string());
  fn(out);
}

}  // namespace scngen
