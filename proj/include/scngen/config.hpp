#pragma once
// Pipeline configuration: a flat key = value file plus CLI overrides.
// Lines starting with '#' and blank lines are ignored. Unknown keys are
// rejected so typos fail fast.
//
// Keys: documents, gazetteer, gold, output_dir, delimiter, doc_id_column,
// date_column, agency_column, text_column, date_format, from, to, formats,
// lenient_dates, jobs. `from`/`to` are always ISO dates (YYYY-MM-DD);
// `date_format` applies to the document file's date column only.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scngen/date.hpp"
#include "scngen/errors.hpp"
#include "scngen/gazetteer.hpp"
#include "scngen/ingestion.hpp"

namespace scngen {

inline const std::vector<std::string>& known_export_formats() {
  static const std::vector<std::string> formats = {
      "nodes-csv", "edges-csv", "graphml", "dot", "mentions-csv"};
  return formats;
}

struct PipelineConfig {
  std::filesystem::path documents_path;
  std::filesystem::path gazetteer_path;
  std::filesystem::path gold_path;  // optional; empty means unset
  std::filesystem::path output_dir = "out";
  ColumnMapping mapping;
  std::optional<DateRange> date_range;
  char delimiter = ',';
  bool lenient_dates = false;
  std::vector<std::string> export_formats = {"nodes-csv", "edges-csv",
                                             "mentions-csv"};
  unsigned jobs = 1;

  bool wants_format(const std::string& name) const {
    for (const auto& f : export_formats) {
      if (f == name) return true;
    }
    return false;
  }
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim_ascii(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline char parse_delimiter(const std::string& value) {
  if (value == "\\t" || value == "tab") return '\t';
  if (value.size() != 1)
    throw config_error("delimiter must be a single character, got '" + value +
                       "'");
  return value[0];
}

inline Date parse_config_date(const std::string& value, const char* key) {
  const auto d = parse_date(value, kIsoDateFormat);
  if (!d)
    throw config_error(std::string(key) + " must be an ISO date (YYYY-MM-DD), got '" +
                       value + "'");
  return *d;
}

}  // namespace detail

inline std::vector<std::string> parse_format_list(const std::string& value) {
  const auto items = detail::split_list(value);
  for (const auto& f : items) {
    bool known = false;
    for (const auto& k : known_export_formats()) known = known || k == f;
    if (!known) {
      std::string options;
      for (const auto& k : known_export_formats()) {
        if (!options.empty()) options += ", ";
        options += k;
      }
      throw config_error("unknown export format '" + f + "' (known: " +
                         options + ")");
    }
  }
  if (items.empty()) throw config_error("formats list is empty");
  return items;
}

/// Applies one key to the config. Both the config file parser and the CLI
/// flag overrides funnel through here. `from`/`to` are collected separately
/// because the range is only valid once both ends are known.
struct DateBounds {
  std::optional<Date> from;
  std::optional<Date> to;
};

inline void apply_config_key(PipelineConfig& cfg, DateBounds& bounds,
                             const std::string& key,
                             const std::string& value) {
  if (key == "documents") cfg.documents_path = value;
  else if (key == "gazetteer") cfg.gazetteer_path = value;
  else if (key == "gold") cfg.gold_path = value;
  else if (key == "output_dir") cfg.output_dir = value;
  else if (key == "delimiter") cfg.delimiter = detail::parse_delimiter(value);
  else if (key == "doc_id_column") cfg.mapping.doc_id_column = value;
  else if (key == "date_column") cfg.mapping.date_column = value;
  else if (key == "agency_column") cfg.mapping.agency_column = value;
  else if (key == "text_column") cfg.mapping.text_column = value;
  else if (key == "date_format") cfg.mapping.date_format = value;
  else if (key == "from") bounds.from = detail::parse_config_date(value, "from");
  else if (key == "to") bounds.to = detail::parse_config_date(value, "to");
  else if (key == "formats") cfg.export_formats = parse_format_list(value);
  else if (key == "lenient_dates") {
    if (value == "true") cfg.lenient_dates = true;
    else if (value == "false") cfg.lenient_dates = false;
    else throw config_error("lenient_dates must be true or false, got '" +
                            value + "'");
  } else if (key == "jobs") {
    try {
      const int n = std::stoi(value);
      if (n < 1) throw config_error("jobs must be >= 1");
      cfg.jobs = unsigned(n);
    } catch (const config_error&) {
      throw;
    } catch (const std::exception&) {
      throw config_error("jobs must be a positive integer, got '" + value +
                         "'");
    }
  } else {
    throw config_error("unknown config key '" + key + "'");
  }
}

/// Resolves collected from/to bounds into cfg.date_range. Both or neither
/// must be present.
inline void resolve_date_bounds(PipelineConfig& cfg, const DateBounds& bounds) {
  if (bounds.from.has_value() != bounds.to.has_value())
    throw config_error("'from' and 'to' must be given together");
  if (bounds.from) {
    if (!(*bounds.from <= *bounds.to))
      throw config_error("date range start " + bounds.from->iso() +
                         " is after end " + bounds.to->iso());
    cfg.date_range = DateRange{*bounds.from, *bounds.to};
  }
}

inline PipelineConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path.string());

  PipelineConfig cfg;
  DateBounds bounds;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string trimmed = detail::trim_ascii(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw config_error(path.string() + " line " + std::to_string(lineno) +
                         ": expected 'key = value'");
    const std::string key = detail::trim_ascii(trimmed.substr(0, eq));
    const std::string value = detail::trim_ascii(trimmed.substr(eq + 1));
    if (key.empty())
      throw config_error(path.string() + " line " + std::to_string(lineno) +
                         ": empty key");
    try {
      apply_config_key(cfg, bounds, key, value);
    } catch (const config_error& e) {
      throw config_error(path.string() + " line " + std::to_string(lineno) +
                         ": " + e.what());
    }
  }
  resolve_date_bounds(cfg, bounds);
  return cfg;
}

}  // namespace scngen
