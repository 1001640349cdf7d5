#pragma once
// Command-line front end: extract, metrics, eval, slices,
// validate-gazetteer. Configuration precedence is defaults < config file <
// flags. Exit codes: 0 success, 1 usage/config error, 2 data error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scngen/centrality.hpp"
#include "scngen/config.hpp"
#include "scngen/errors.hpp"
#include "scngen/evaluation.hpp"
#include "scngen/exports.hpp"
#include "scngen/gazetteer.hpp"
#include "scngen/ingestion.hpp"
#include "scngen/network.hpp"
#include "scngen/pipeline.hpp"

namespace scngen::cli {

namespace detail {

// Flag values collected by CLI11; only set flags override the config file.
struct Overrides {
  std::optional<std::string> config_path;
  std::optional<std::string> documents;
  std::optional<std::string> gazetteer;
  std::optional<std::string> gold;
  std::optional<std::string> out_dir;
  std::optional<std::string> delimiter;
  std::optional<std::string> doc_id_column;
  std::optional<std::string> date_column;
  std::optional<std::string> agency_column;
  std::optional<std::string> text_column;
  std::optional<std::string> date_format;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::optional<std::string> formats;
  std::optional<unsigned> jobs;
  bool lenient_dates = false;

  std::string measure = "all";
  std::size_t top = 5;
  std::optional<std::size_t> sample;
  std::optional<std::uint32_t> seed;
  bool machine = false;
  unsigned window_days = 0;
};

inline PipelineConfig resolve_config(const Overrides& ov) {
  PipelineConfig cfg;
  if (ov.config_path) cfg = load_config_file(*ov.config_path);

  DateBounds bounds;
  if (cfg.date_range) {
    bounds.from = cfg.date_range->start;
    bounds.to = cfg.date_range->end;
  }
  auto apply = [&](const char* key, const std::optional<std::string>& value) {
    if (value) apply_config_key(cfg, bounds, key, *value);
  };
  apply("documents", ov.documents);
  apply("gazetteer", ov.gazetteer);
  apply("gold", ov.gold);
  apply("output_dir", ov.out_dir);
  apply("delimiter", ov.delimiter);
  apply("doc_id_column", ov.doc_id_column);
  apply("date_column", ov.date_column);
  apply("agency_column", ov.agency_column);
  apply("text_column", ov.text_column);
  apply("date_format", ov.date_format);
  apply("from", ov.from);
  apply("to", ov.to);
  apply("formats", ov.formats);
  if (ov.jobs) cfg.jobs = *ov.jobs;
  if (ov.lenient_dates) cfg.lenient_dates = true;
  resolve_date_bounds(cfg, bounds);
  validate_mapping(cfg.mapping);
  return cfg;
}

inline void require_path(const std::filesystem::path& p, const char* what,
                         const char* flag) {
  if (p.empty())
    throw config_error(std::string(what) + " not set (use " + flag +
                       " or the config file)");
}

inline std::vector<DocumentRecord> load_corpus(const PipelineConfig& cfg) {
  require_path(cfg.documents_path, "documents path", "--documents");
  LoadOptions opts;
  opts.delimiter = cfg.delimiter;
  opts.lenient_dates = cfg.lenient_dates;
  auto loaded = load_documents(cfg.documents_path, cfg.mapping, opts);
  if (cfg.date_range)
    return filter_by_date(loaded.records, *cfg.date_range);
  return loaded.records;
}

inline Gazetteer load_dictionary(const PipelineConfig& cfg,
                                 GazetteerStats* stats = nullptr) {
  require_path(cfg.gazetteer_path, "gazetteer path", "--gazetteer");
  return load_gazetteer(cfg.gazetteer_path, cfg.delimiter, stats);
}

inline void write_graph_artifacts(const PipelineConfig& cfg,
                                  const CollaborationGraph& graph,
                                  const std::vector<Mention>& mentions) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  if (cfg.wants_format("nodes-csv"))
    write_file(cfg.output_dir / "nodes.csv",
               [&](std::ostream& o) { write_nodes_csv(graph, o); });
  if (cfg.wants_format("edges-csv"))
    write_file(cfg.output_dir / "edges.csv",
               [&](std::ostream& o) { write_edges_csv(graph, o); });
  if (cfg.wants_format("mentions-csv"))
    write_file(cfg.output_dir / "mentions.csv",
               [&](std::ostream& o) { write_mentions_csv(mentions, o); });
  if (cfg.wants_format("graphml"))
    write_file(cfg.output_dir / "graph.graphml",
               [&](std::ostream& o) { write_graphml(graph, o); });
  if (cfg.wants_format("dot"))
    write_file(cfg.output_dir / "graph.dot",
               [&](std::ostream& o) { write_dot(graph, o); });
}

inline int cmd_extract(const Overrides& ov, std::ostream& out) {
  const PipelineConfig cfg = resolve_config(ov);
  const Gazetteer gazetteer = load_dictionary(cfg);
  const auto records = load_corpus(cfg);
  const auto result = run_extraction(records, gazetteer, cfg.jobs);
  write_graph_artifacts(cfg, result.graph, result.all_mentions());
  out << "documents processed: " << records.size() << "\n";
  out << "unique stakeholders: " << result.graph.node_count() << "\n";
  out << "unique interactions: " << result.graph.edge_count() << "\n";
  return 0;
}

inline std::vector<Measure> requested_measures(const std::string& name) {
  if (name == "all")
    return {Measure::degree, Measure::closeness, Measure::betweenness};
  const auto m = measure_from_string(name);
  if (!m)
    throw config_error("unknown measure '" + name +
                       "' (expected degree, closeness, betweenness or all)");
  return {*m};
}

inline int cmd_metrics(const Overrides& ov, std::ostream& out) {
  const PipelineConfig cfg = resolve_config(ov);
  const auto measures = requested_measures(ov.measure);
  if (ov.top < 1) throw config_error("--top must be >= 1");

  namespace fs = std::filesystem;
  const fs::path nodes_file = cfg.output_dir / "nodes.csv";
  const fs::path edges_file = cfg.output_dir / "edges.csv";
  CollaborationGraph graph;
  if (fs::exists(nodes_file) && fs::exists(edges_file)) {
    graph = read_graph_csv(nodes_file, edges_file);
  } else {
    const Gazetteer gazetteer = load_dictionary(cfg);
    graph = run_extraction(load_corpus(cfg), gazetteer, cfg.jobs).graph;
  }

  fs::create_directories(cfg.output_dir);
  for (const Measure m : measures) {
    const auto report = compute_centrality(graph, m);
    const std::string name(to_string(m));
    write_file(cfg.output_dir / ("centrality_" + name + ".csv"),
               [&](std::ostream& o) { write_centrality_csv(report, o); });
    out << "top " << ov.top << " by " << name << ":\n";
    const auto ranked = top_k(report, ov.top);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      out << "  " << (i + 1) << ". " << ranked[i].first << " "
          << format_score(ranked[i].second) << "\n";
    }
  }
  return 0;
}

inline int cmd_eval(const Overrides& ov, std::ostream& out) {
  const PipelineConfig cfg = resolve_config(ov);
  if (cfg.gold_path.empty())
    throw config_error("eval requires a gold file (use --gold or the config file)");
  const Gazetteer gazetteer = load_dictionary(cfg);
  const auto records = load_corpus(cfg);
  const auto gold = load_gold(cfg.gold_path, cfg.delimiter);

  std::map<std::string, const GoldAnnotation*> gold_by_doc;
  for (const auto& ga : gold) gold_by_doc.emplace(ga.doc_id, &ga);

  std::set<std::string> corpus_ids;
  for (const auto& r : records) corpus_ids.insert(r.doc_id);
  for (const auto& ga : gold) {
    if (!corpus_ids.count(ga.doc_id))
      throw data_error("gold document '" + ga.doc_id +
                       "' is not in the corpus");
  }

  // Evaluation runs over the gold-annotated documents, in corpus order,
  // optionally subsampled.
  std::vector<DocumentRecord> gold_records;
  for (const auto& r : records) {
    if (gold_by_doc.count(r.doc_id)) gold_records.push_back(r);
  }
  std::vector<DocumentRecord> selected = gold_records;
  if (ov.sample) {
    if (!ov.seed)
      throw config_error("--sample requires an explicit --seed");
    selected = sample_documents(gold_records, *ov.sample, *ov.seed);
  }

  const PhraseMatcher matcher(gazetteer);
  std::map<std::string, std::vector<Mention>> extractions;
  std::vector<GoldAnnotation> selected_gold;
  for (const auto& rec : selected) {
    extractions[rec.doc_id] = matcher.extract(rec).mentions;
    selected_gold.push_back(*gold_by_doc.at(rec.doc_id));
  }
  const EvalReport report = evaluate(extractions, selected_gold);
  out << (ov.machine ? format_report_kv(report) : format_report_text(report));
  return 0;
}

inline int cmd_slices(const Overrides& ov, std::ostream& out,
                      std::ostream& err) {
  const PipelineConfig cfg = resolve_config(ov);
  if (!cfg.date_range)
    throw config_error("slices requires a date range (--from/--to or config)");
  if (ov.window_days < 1) throw config_error("--window-days must be >= 1");
  const Gazetteer gazetteer = load_dictionary(cfg);

  // The corpus here is intentionally not pre-filtered: each window filter
  // is applied against the full record list.
  require_path(cfg.documents_path, "documents path", "--documents");
  LoadOptions opts;
  opts.delimiter = cfg.delimiter;
  opts.lenient_dates = cfg.lenient_dates;
  const auto records = load_documents(cfg.documents_path, cfg.mapping, opts).records;

  const DateRange& range = *cfg.date_range;
  const long long span_days =
      (range.end.to_days() - range.start.to_days()).count() + 1;
  if (static_cast<long long>(ov.window_days) > span_days) {
    err << "warning: window of " << ov.window_days
        << " days exceeds the " << span_days
        << "-day range; emitting a single window\n";
  }
  std::vector<DateRange> windows;
  for (Date start = range.start; start <= range.end;
       start = start.plus_days(int(ov.window_days))) {
    Date end = start.plus_days(int(ov.window_days) - 1);
    if (range.end < end) end = range.end;
    windows.push_back(DateRange{start, end});
  }

  const auto graphs = temporal_slices(records, gazetteer, windows);

  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  std::ofstream summary(cfg.output_dir / "windows.csv", std::ios::binary);
  if (!summary)
    throw data_error("cannot write file: " +
                     (cfg.output_dir / "windows.csv").string());
  summary << "window,start,end,documents,nodes,edges,new_nodes,new_edges\n";

  std::set<std::string> prev_nodes;
  std::set<std::pair<std::string, std::string>> prev_edges;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    const auto& graph = graphs[w];
    char prefix[32];
    std::snprintf(prefix, sizeof prefix, "window_%03zu", w + 1);
    write_file(cfg.output_dir / (std::string(prefix) + "_nodes.csv"),
               [&](std::ostream& o) { write_nodes_csv(graph, o); });
    write_file(cfg.output_dir / (std::string(prefix) + "_edges.csv"),
               [&](std::ostream& o) { write_edges_csv(graph, o); });

    std::size_t new_nodes = 0;
    for (const auto& id : graph.nodes())
      if (!prev_nodes.count(id)) ++new_nodes;
    std::set<std::pair<std::string, std::string>> edges_now;
    std::size_t new_edges = 0;
    for (const auto& e : graph.edges()) {
      edges_now.emplace(e.a, e.b);
      if (!prev_edges.count({e.a, e.b})) ++new_edges;
    }
    const std::size_t docs_in_window =
        filter_by_date(records, windows[w]).size();

    out << "window " << (w + 1) << ": " << windows[w].start.iso() << ".."
        << windows[w].end.iso() << " documents=" << docs_in_window
        << " nodes=" << graph.node_count() << " edges=" << graph.edge_count()
        << " new_nodes=" << new_nodes << " new_edges=" << new_edges << "\n";
    summary << (w + 1) << "," << windows[w].start.iso() << ","
            << windows[w].end.iso() << "," << docs_in_window << ","
            << graph.node_count() << ","
            << graph.edge_count() << "," << new_nodes << "," << new_edges
            << "\n";

    prev_nodes = graph.nodes();
    prev_edges = std::move(edges_now);
  }
  return 0;
}

inline int cmd_validate_gazetteer(const Overrides& ov, std::ostream& out) {
  const PipelineConfig cfg = resolve_config(ov);
  GazetteerStats stats;
  load_dictionary(cfg, &stats);
  out << "surfaces: " << stats.surfaces << "\n";
  out << "stakeholder ids: " << stats.ids << "\n";
  out << "duplicate rows dropped: " << stats.duplicate_rows_dropped << "\n";
  return 0;
}

inline void add_common_options(CLI::App* cmd, Overrides& ov) {
  cmd->add_option("--config", ov.config_path, "Config file (key = value)");
  cmd->add_option("--documents", ov.documents, "Document dataset path");
  cmd->add_option("--gazetteer", ov.gazetteer, "Gazetteer dictionary path");
  cmd->add_option("--gold", ov.gold, "Gold annotation path");
  cmd->add_option("--out", ov.out_dir, "Output directory");
  cmd->add_option("--delimiter", ov.delimiter,
                  "Field delimiter (single character or 'tab')");
  cmd->add_option("--doc-id-column", ov.doc_id_column, "Document ID column");
  cmd->add_option("--date-column", ov.date_column, "Date column");
  cmd->add_option("--agency-column", ov.agency_column, "Agency column");
  cmd->add_option("--text-column", ov.text_column, "SOW text column");
  cmd->add_option("--date-format", ov.date_format,
                  "Date format for the date column (default %Y-%m-%d)");
  cmd->add_option("--from", ov.from, "Window start, ISO date");
  cmd->add_option("--to", ov.to, "Window end, ISO date");
  cmd->add_option("--jobs", ov.jobs, "Worker threads for extraction");
  cmd->add_flag("--lenient-dates", ov.lenient_dates,
                "Skip rows with unparseable dates instead of failing");
}

}  // namespace detail

/// Runs the CLI on `args` (program name excluded). Returns the process
/// exit code; all output goes to the given streams.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  detail::Overrides ov;
  int rc = 0;

  CLI::App app{"Stakeholder collaboration network generation from response-task texts"};
  app.require_subcommand(1);

  auto* extract = app.add_subcommand(
      "extract", "Extract mentions and write node/edge/mention datasets");
  detail::add_common_options(extract, ov);
  extract->add_option("--format", ov.formats,
                      "Comma-separated list: nodes-csv,edges-csv,graphml,dot,mentions-csv");
  extract->callback([&] { rc = detail::cmd_extract(ov, out); });

  auto* metrics = app.add_subcommand(
      "metrics", "Compute centrality reports and print top-k stakeholders");
  detail::add_common_options(metrics, ov);
  metrics->add_option("--measure", ov.measure,
                      "degree, closeness, betweenness or all");
  metrics->add_option("--top", ov.top, "How many stakeholders to print");
  metrics->callback([&] { rc = detail::cmd_metrics(ov, out); });

  auto* eval = app.add_subcommand(
      "eval", "Score extraction quality against gold annotations");
  detail::add_common_options(eval, ov);
  eval->add_option("--sample", ov.sample,
                   "Evaluate a random sample of this many gold documents");
  eval->add_option("--seed", ov.seed, "Seed for --sample (required with it)");
  eval->add_flag("--machine", ov.machine, "Key=value output");
  eval->callback([&] { rc = detail::cmd_eval(ov, out); });

  auto* slices = app.add_subcommand(
      "slices", "Per-window network datasets over the date range");
  detail::add_common_options(slices, ov);
  slices->add_option("--window-days", ov.window_days, "Days per window")
      ->required();
  slices->callback([&] { rc = detail::cmd_slices(ov, out, err); });

  auto* validate = app.add_subcommand("validate-gazetteer",
                                      "Load and validate the dictionary");
  detail::add_common_options(validate, ov);
  validate->callback([&] { rc = detail::cmd_validate_gazetteer(ov, out); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const config_error& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const data_error& e) {
    err << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace scngen::cli
