#pragma once
// Extraction-quality scoring against gold annotations.
//
// Two families of numbers are reported side by side: the count-ratio
// accuracy (total extracted / total desired), which compares totals only
// and can reward compensating errors, and standard precision/recall/F1
// computed by per-document multiset intersection of stakeholder IDs.
// Desired stakeholders are counted at mention granularity, so one document
// may want the same ID several times.

#include <cstdio>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scngen/csv.hpp"
#include "scngen/errors.hpp"
#include "scngen/gazetteer.hpp"
#include "scngen/ingestion.hpp"
#include "scngen/matcher.hpp"

namespace scngen {

struct GoldAnnotation {
  std::string doc_id;
  std::map<std::string, int> desired;  // stakeholder_id -> desired count

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [id, c] : desired) n += std::size_t(c);
    return n;
  }
};

/// Gold file format: `doc_id,stakeholder_id`, one row per desired mention.
/// Rows are grouped per document (first-appearance order); IDs are
/// canonicalized the same way the gazetteer canonicalizes them.
inline std::vector<GoldAnnotation> load_gold(const std::filesystem::path& path,
                                             char delimiter = ',') {
  const auto rows = read_csv_file(path, delimiter);
  if (rows.empty()) throw data_error("gold file is empty: " + path.string());
  const auto& header = rows[0].fields;
  if (header.size() < 2 || header[0] != "doc_id" ||
      header[1] != "stakeholder_id")
    throw data_error("gold header must be 'doc_id,stakeholder_id' in " +
                     path.string());

  std::vector<GoldAnnotation> gold;
  std::map<std::string, std::size_t> position;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() < 2 || row.fields[0].empty() ||
        row.fields[1].empty())
      throw data_error("gold row at line " + std::to_string(row.line) +
                       ": expected non-empty doc_id and stakeholder_id");
    const auto [it, inserted] = position.emplace(row.fields[0], gold.size());
    if (inserted) gold.push_back(GoldAnnotation{row.fields[0], {}});
    ++gold[it->second].desired[canonical_id(row.fields[1])];
  }
  return gold;
}

struct EvalReport {
  std::size_t documents = 0;
  std::size_t extracted_total = 0;
  std::size_t desired_total = 0;
  // Undefined (nullopt) when desired_total is zero.
  std::optional<double> count_ratio;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool over_extraction() const {
    return count_ratio.has_value() && *count_ratio > 1.0;
  }
};

/// Scores extractions against gold. Every gold doc_id must have an entry in
/// `extractions` (an empty mention list is fine).
inline EvalReport evaluate(
    const std::map<std::string, std::vector<Mention>>& extractions,
    const std::vector<GoldAnnotation>& gold) {
  EvalReport report;
  report.documents = gold.size();
  std::size_t true_positives = 0;
  for (const auto& ga : gold) {
    const auto it = extractions.find(ga.doc_id);
    if (it == extractions.end())
      throw data_error("no extraction entry for gold document '" + ga.doc_id +
                       "'");
    std::map<std::string, int> extracted_counts;
    for (const auto& m : it->second) ++extracted_counts[m.stakeholder_id];
    report.extracted_total += it->second.size();
    for (const auto& [id, want] : ga.desired) {
      report.desired_total += std::size_t(want);
      const auto e = extracted_counts.find(id);
      if (e != extracted_counts.end())
        true_positives += std::size_t(std::min(want, e->second));
    }
  }
  if (report.desired_total > 0) {
    report.count_ratio =
        double(report.extracted_total) / double(report.desired_total);
  }
  report.precision = report.extracted_total > 0
                         ? double(true_positives) / double(report.extracted_total)
                         : (report.desired_total == 0 ? 1.0 : 0.0);
  report.recall = report.desired_total > 0
                      ? double(true_positives) / double(report.desired_total)
                      : (report.extracted_total == 0 ? 1.0 : 0.0);
  report.f1 = (report.precision + report.recall) > 0.0
                  ? 2.0 * report.precision * report.recall /
                        (report.precision + report.recall)
                  : 0.0;
  return report;
}

namespace detail {
// Unbiased bounded draw by rejection. mt19937's output sequence is fixed by
// the standard, so results are identical across platforms; the standard
// distributions are not, which is why this exists.
inline std::uint32_t bounded_draw(std::mt19937& rng, std::uint32_t n) {
  // The limit stays 64-bit: for n a power of two it equals 2^32, which a
  // 32-bit value would truncate to 0 and reject every draw forever.
  const std::uint64_t span = std::uint64_t(1) << 32;
  const std::uint64_t limit = span - span % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return std::uint32_t(x % n);
}
}  // namespace detail

/// Uniform sample of n records without replacement (partial Fisher-Yates).
/// Deterministic for a fixed seed, on every platform.
inline std::vector<DocumentRecord> sample_documents(
    const std::vector<DocumentRecord>& records, std::size_t n,
    std::uint32_t seed) {
  if (n > records.size())
    throw config_error("cannot sample " + std::to_string(n) + " of " +
                       std::to_string(records.size()) + " documents");
  std::vector<std::size_t> index(records.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  std::mt19937 rng(seed);
  std::vector<DocumentRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j =
        i + detail::bounded_draw(rng, std::uint32_t(index.size() - i));
    std::swap(index[i], index[j]);
    out.push_back(records[index[i]]);
  }
  return out;
}

inline std::string format_report_text(const EvalReport& r) {
  std::ostringstream out;
  char buf[64];
  out << "documents evaluated: " << r.documents << "\n";
  out << "extracted stakeholders: " << r.extracted_total << "\n";
  out << "desired stakeholders: " << r.desired_total << "\n";
  if (r.count_ratio) {
    std::snprintf(buf, sizeof buf, "%.2f%%", *r.count_ratio * 100.0);
    out << "count-ratio accuracy: " << buf;
    if (r.over_extraction()) out << " (over-extraction: ratio exceeds 1)";
    out << "\n";
  } else {
    out << "count-ratio accuracy: undefined (no desired stakeholders)\n";
  }
  std::snprintf(buf, sizeof buf, "%.4f", r.precision);
  out << "precision: " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.4f", r.recall);
  out << "recall: " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.4f", r.f1);
  out << "f1: " << buf << "\n";
  return out.str();
}

inline std::string format_report_kv(const EvalReport& r) {
  std::ostringstream out;
  char buf[64];
  out << "documents=" << r.documents << "\n";
  out << "extracted_total=" << r.extracted_total << "\n";
  out << "desired_total=" << r.desired_total << "\n";
  if (r.count_ratio) {
    std::snprintf(buf, sizeof buf, "%.6f", *r.count_ratio);
    out << "count_ratio=" << buf << "\n";
  } else {
    out << "count_ratio=undefined\n";
  }
  out << "over_extraction=" << (r.over_extraction() ? "true" : "false") << "\n";
  std::snprintf(buf, sizeof buf, "%.6f", r.precision);
  out << "precision=" << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.6f", r.recall);
  out << "recall=" << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.6f", r.f1);
  out << "f1=" << buf << "\n";
  return out.str();
}

}  // namespace scngen
