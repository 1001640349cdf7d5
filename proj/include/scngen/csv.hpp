#pragma once
// Minimal RFC 4180 style delimited-text reader/writer. Fields may be quoted;
// quoted fields may contain the delimiter, doubled quotes, and newlines.
// Blank lines are skipped. Rows remember the physical line they started on
// so load errors can point at the offending input.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "scngen/errors.hpp"

namespace scngen {

struct CsvRow {
  std::size_t line = 0;  // 1-based physical line where the row starts
  std::vector<std::string> fields;
};

inline std::vector<CsvRow> read_csv(std::istream& in, char delimiter = ',') {
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  // UTF-8 BOM, if present, is not data.
  std::string_view text = content;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<CsvRow> rows;
  std::vector<std::string> fields;
  std::string field;
  std::size_t line = 1;
  std::size_t row_line = 1;
  bool in_quotes = false;
  bool field_started = false;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = fields.size() == 1 && fields[0].empty();
    if (!blank) rows.push_back(CsvRow{row_line, std::move(fields)});
    fields.clear();
    row_line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
          if (i + 1 < text.size() && text[i + 1] != delimiter &&
              text[i + 1] != '\n' && text[i + 1] != '\r') {
            throw data_error("malformed quoted field at line " +
                             std::to_string(line));
          }
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
    } else if (c == '"' && !field_started && field.empty()) {
      in_quotes = true;
      field_started = true;
    } else if (c == delimiter) {
      end_field();
    } else if (c == '\n') {
      ++line;
      end_record();
    } else if (c == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') {
        ++i;
        ++line;
        end_record();
      } else {
        field.push_back(c);
      }
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) {
    throw data_error("unterminated quoted field at end of input (row at line " +
                     std::to_string(row_line) + ")");
  }
  if (field_started || !field.empty() || !fields.empty()) end_record();
  return rows;
}

inline std::vector<CsvRow> read_csv_file(const std::filesystem::path& path,
                                         char delimiter = ',') {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open file: " + path.string());
  return read_csv(in, delimiter);
}

inline std::string csv_escape(std::string_view field, char delimiter = ',') {
  const bool needs_quotes =
      field.find(delimiter) != std::string_view::npos ||
      field.find('"') != std::string_view::npos ||
      field.find('\n') != std::string_view::npos ||
      field.find('\r') != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline void write_csv_row(std::ostream& out,
                          const std::vector<std::string>& fields,
                          char delimiter = ',') {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(delimiter);
    out << csv_escape(fields[i], delimiter);
  }
  out.put('\n');
}

}  // namespace scngen
