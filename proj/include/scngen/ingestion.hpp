#pragma once
// Work-order ingestion: delimited files in, canonical document records out.
// A ColumnMapping adapts whatever column names an export uses to the record
// schema; a DateRange filters records to the analysis window.

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scngen/csv.hpp"
#include "scngen/date.hpp"
#include "scngen/errors.hpp"

namespace scngen {

struct DocumentRecord {
  std::string doc_id;
  Date date;
  std::optional<std::string> assigned_agency;
  std::string text;  // the statement of work, verbatim

  friend bool operator==(const DocumentRecord&, const DocumentRecord&) = default;
};

struct ColumnMapping {
  std::string doc_id_column = "id";
  std::string date_column = "date";
  std::string agency_column = "agency";
  std::string text_column = "sow";
  std::string date_format = std::string(kIsoDateFormat);
};

/// Throws config_error unless all four column names are distinct and
/// non-empty and the date format is supported.
inline void validate_mapping(const ColumnMapping& m) {
  const std::vector<const std::string*> cols = {
      &m.doc_id_column, &m.date_column, &m.agency_column, &m.text_column};
  for (const auto* c : cols) {
    if (c->empty()) throw config_error("column mapping has an empty column name");
  }
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      if (*cols[i] == *cols[j])
        throw config_error("column mapping repeats column name '" + *cols[i] +
                           "'");
    }
  }
  if (!valid_date_format(m.date_format))
    throw config_error("unsupported date format '" + m.date_format +
                       "' (supported fields: %Y %m %d %H %M %S)");
}

struct LoadOptions {
  char delimiter = ',';
  // Strict mode (default) fails the whole load on an unparseable date;
  // lenient mode skips the row and counts it.
  bool lenient_dates = false;
};

struct LoadResult {
  std::vector<DocumentRecord> records;
  std::size_t skipped_rows = 0;
};

inline LoadResult load_documents(const std::filesystem::path& path,
                                 const ColumnMapping& mapping,
                                 const LoadOptions& options = {}) {
  validate_mapping(mapping);
  const auto rows = read_csv_file(path, options.delimiter);
  if (rows.empty())
    throw data_error("document file has no header row: " + path.string());

  const auto& header = rows[0].fields;
  auto column_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw config_error("column '" + name + "' not found in header of " +
                       path.string());
  };
  const std::size_t id_col = column_index(mapping.doc_id_column);
  const std::size_t date_col = column_index(mapping.date_column);
  const std::size_t agency_col = column_index(mapping.agency_column);
  const std::size_t text_col = column_index(mapping.text_column);
  const std::size_t max_col =
      std::max({id_col, date_col, agency_col, text_col});

  LoadResult result;
  std::map<std::string, std::size_t> seen_ids;  // doc_id -> data row
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where =
        "row " + std::to_string(r) + " (line " + std::to_string(row.line) + ")";
    if (row.fields.size() <= max_col)
      throw data_error(where + ": expected at least " +
                       std::to_string(max_col + 1) + " fields, got " +
                       std::to_string(row.fields.size()));

    DocumentRecord rec;
    rec.doc_id = row.fields[id_col];
    if (rec.doc_id.empty()) throw data_error(where + ": empty document ID");

    const auto [it, inserted] = seen_ids.emplace(rec.doc_id, r);
    if (!inserted)
      throw data_error("duplicate document ID '" + rec.doc_id + "' at " +
                       where + " (first seen at row " +
                       std::to_string(it->second) + ")");

    const auto date = parse_date(row.fields[date_col], mapping.date_format);
    if (!date) {
      if (options.lenient_dates) {
        ++result.skipped_rows;
        continue;
      }
      throw data_error(where + ": cannot parse date '" + row.fields[date_col] +
                       "' with format '" + mapping.date_format + "'");
    }
    rec.date = *date;
    if (!row.fields[agency_col].empty())
      rec.assigned_agency = row.fields[agency_col];
    rec.text = row.fields[text_col];
    result.records.push_back(std::move(rec));
  }
  return result;
}

/// Records whose date lies in `range`, original order preserved.
inline std::vector<DocumentRecord> filter_by_date(
    const std::vector<DocumentRecord>& records, const DateRange& range) {
  std::vector<DocumentRecord> out;
  for (const auto& r : records) {
    if (range.contains(r.date)) out.push_back(r);
  }
  return out;
}

}  // namespace scngen
