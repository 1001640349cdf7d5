#pragma once
// Stakeholder dictionary: surface forms (full names and abbreviations)
// mapped to canonical stakeholder IDs. Multiple surfaces may share one ID;
// one normalized surface may never carry two different IDs.
//
// IDs are canonicalized to upper case so case variants of the same ID do
// not produce phantom duplicate nodes downstream.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scngen/csv.hpp"
#include "scngen/errors.hpp"
#include "scngen/tokenizer.hpp"

namespace scngen {

struct GazetteerEntry {
  std::string surface;         // as written in the dictionary
  std::string stakeholder_id;  // canonical (upper case)

  friend bool operator==(const GazetteerEntry&, const GazetteerEntry&) = default;
};

/// Lowercases and tokenizes a surface with the shared tokenizer.
inline std::vector<std::string> normalize_surface(std::string_view surface) {
  return token_texts(tokenize(surface));
}

inline std::string canonical_id(std::string_view id) {
  std::string out(id);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') c = char(c - ('a' - 'A'));
  }
  return out;
}

namespace detail {
inline std::string trim_ascii(std::string_view s) {
  std::size_t b = 0, e = s.size();
  auto ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (b < e && ws(s[b])) ++b;
  while (e > b && ws(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

inline bool has_whitespace(std::string_view s) {
  for (const char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v')
      return true;
  }
  return false;
}

inline std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}
}  // namespace detail

class Gazetteer {
public:
  Gazetteer() = default;

  const std::vector<GazetteerEntry>& entries() const { return entries_; }
  std::size_t surface_count() const { return entries_.size(); }
  std::size_t id_count() const { return ids_.size(); }
  const std::set<std::string>& stakeholder_ids() const { return ids_; }

  /// Lookup table from normalized token sequence to canonical ID.
  const std::map<std::vector<std::string>, std::string>& index() const {
    return index_;
  }

  std::optional<std::string> lookup(
      const std::vector<std::string>& normalized_tokens) const {
    const auto it = index_.find(normalized_tokens);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Gazetteer& a, const Gazetteer& b) {
    return a.entries_ == b.entries_;
  }

  enum class AddOutcome { added, exact_duplicate };

  /// Validates and inserts an entry. The entry's ID is canonicalized.
  /// Throws data_error on an empty normalized surface, a whitespace ID, or
  /// a normalized-surface conflict with a different ID.
  AddOutcome insert(GazetteerEntry entry) {
    entry.surface = detail::trim_ascii(entry.surface);
    entry.stakeholder_id = canonical_id(detail::trim_ascii(entry.stakeholder_id));
    if (entry.stakeholder_id.empty())
      throw data_error("gazetteer entry '" + entry.surface +
                       "' has an empty stakeholder ID");
    if (detail::has_whitespace(entry.stakeholder_id))
      throw data_error("stakeholder ID '" + entry.stakeholder_id +
                       "' contains whitespace");
    auto normalized = normalize_surface(entry.surface);
    if (normalized.empty())
      throw data_error("gazetteer surface '" + entry.surface +
                       "' normalizes to an empty token sequence");

    const auto it = index_.find(normalized);
    if (it != index_.end()) {
      if (it->second != entry.stakeholder_id) {
        throw data_error("gazetteer conflict: surface '" + entry.surface +
                         "' (normalized \"" + detail::join(normalized) +
                         "\") maps to both '" + it->second + "' and '" +
                         entry.stakeholder_id + "'");
      }
      for (const auto& existing : entries_) {
        if (existing == entry) return AddOutcome::exact_duplicate;
      }
      // Same ID, new spelling: keep it as an additional alias.
    } else {
      index_.emplace(std::move(normalized), entry.stakeholder_id);
    }
    ids_.insert(entry.stakeholder_id);
    entries_.push_back(std::move(entry));
    return AddOutcome::added;
  }

private:
  std::vector<GazetteerEntry> entries_;
  std::map<std::vector<std::string>, std::string> index_;
  std::set<std::string> ids_;
};

/// Value-semantics insert: returns a gazetteer containing `entry`.
/// Re-adding an existing (surface, id) pair returns the input unchanged.
inline Gazetteer add_entry(const Gazetteer& g, const GazetteerEntry& entry) {
  Gazetteer out = g;
  out.insert(entry);
  return out;
}

struct GazetteerStats {
  std::size_t surfaces = 0;
  std::size_t ids = 0;
  std::size_t duplicate_rows_dropped = 0;
};

/// Loads a two-column delimited dictionary with header
/// `surface,stakeholder_id`. Exact duplicate rows are dropped (counted in
/// `stats`); conflicting rows are fatal.
inline Gazetteer load_gazetteer(const std::filesystem::path& path,
                                char delimiter = ',',
                                GazetteerStats* stats = nullptr) {
  const auto rows = read_csv_file(path, delimiter);
  if (rows.empty())
    throw data_error("gazetteer file is empty: " + path.string());
  const auto& header = rows[0].fields;
  if (header.size() < 2 || detail::trim_ascii(header[0]) != "surface" ||
      detail::trim_ascii(header[1]) != "stakeholder_id") {
    throw data_error("gazetteer header must be 'surface,stakeholder_id' in " +
                     path.string());
  }

  Gazetteer g;
  std::size_t dropped = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() < 2)
      throw data_error("gazetteer row at line " + std::to_string(row.line) +
                       ": expected 2 fields, got " +
                       std::to_string(row.fields.size()));
    try {
      if (g.insert({row.fields[0], row.fields[1]}) ==
          Gazetteer::AddOutcome::exact_duplicate)
        ++dropped;
    } catch (const data_error& e) {
      throw data_error(path.string() + " line " + std::to_string(row.line) +
                       ": " + e.what());
    }
  }
  if (stats) *stats = {g.surface_count(), g.id_count(), dropped};
  return g;
}

inline void save_gazetteer(const Gazetteer& g, std::ostream& out,
                           char delimiter = ',') {
  write_csv_row(out, {"surface", "stakeholder_id"}, delimiter);
  for (const auto& e : g.entries())
    write_csv_row(out, {e.surface, e.stakeholder_id}, delimiter);
}

inline void save_gazetteer(const Gazetteer& g,
                           const std::filesystem::path& path,
                           char delimiter = ',') {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write file: " + path.string());
  save_gazetteer(g, out, delimiter);
}

}  // namespace scngen
