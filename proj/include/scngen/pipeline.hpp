#pragma once
// Corpus-level extraction: one matcher, many documents. Documents may be
// processed by several worker threads; every result lands in the slot of
// its source document, so the merged output is identical for any thread
// count.

#include <atomic>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "scngen/gazetteer.hpp"
#include "scngen/ingestion.hpp"
#include "scngen/matcher.hpp"
#include "scngen/network.hpp"

namespace scngen {

struct CorpusExtraction {
  std::vector<std::set<std::string>> ids_per_doc;   // parallel to records
  std::vector<std::vector<Mention>> mentions_per_doc;
  CollaborationGraph graph;

  std::vector<Mention> all_mentions() const {
    std::vector<Mention> out;
    for (const auto& ms : mentions_per_doc)
      out.insert(out.end(), ms.begin(), ms.end());
    return out;
  }

  std::map<std::string, std::vector<Mention>> mentions_by_doc(
      const std::vector<DocumentRecord>& records) const {
    std::map<std::string, std::vector<Mention>> out;
    for (std::size_t i = 0; i < records.size(); ++i)
      out[records[i].doc_id] = mentions_per_doc[i];
    return out;
  }
};

inline CorpusExtraction run_extraction(
    const std::vector<DocumentRecord>& records, const PhraseMatcher& matcher,
    unsigned jobs = 1) {
  CorpusExtraction result;
  result.ids_per_doc.resize(records.size());
  result.mentions_per_doc.resize(records.size());

  const unsigned workers =
      std::max(1u, std::min(jobs, unsigned(records.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      auto ex = matcher.extract(records[i]);
      result.ids_per_doc[i] = std::move(ex.stakeholder_ids);
      result.mentions_per_doc[i] = std::move(ex.mentions);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < records.size();
             i = next.fetch_add(1)) {
          auto ex = matcher.extract(records[i]);
          result.ids_per_doc[i] = std::move(ex.stakeholder_ids);
          result.mentions_per_doc[i] = std::move(ex.mentions);
        }
      });
    }
    for (auto& t : threads) t.join();
  }

  std::vector<DocStakeholders> doc_sets;
  doc_sets.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i)
    doc_sets.emplace_back(records[i].doc_id, result.ids_per_doc[i]);
  result.graph = build_interactions(doc_sets);
  return result;
}

inline CorpusExtraction run_extraction(
    const std::vector<DocumentRecord>& records, const Gazetteer& g,
    unsigned jobs = 1) {
  return run_extraction(records, PhraseMatcher(g), jobs);
}

}  // namespace scngen
