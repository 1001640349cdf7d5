#pragma once
// Dictionary matcher over token sequences. The gazetteer is compiled once
// into a token-level trie; each document is scanned left to right taking
// the longest phrase that matches at the current position
// (leftmost-longest). Matched spans never overlap; the scan resumes after
// each match.
//
// Matching is exact at token boundaries, so "ARC" never fires inside
// "march". Context is ignored, which reproduces the known false-positive
// class ("FAA regulations..." still yields FAA).

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scngen/gazetteer.hpp"
#include "scngen/ingestion.hpp"
#include "scngen/tokenizer.hpp"

namespace scngen {

inline constexpr std::string_view kStakeholderLabel = "stakeholder";

struct Mention {
  std::string doc_id;
  std::size_t first_token = 0;  // inclusive token span
  std::size_t last_token = 0;
  std::size_t start_char = 0;  // byte span in the original text
  std::size_t end_char = 0;
  std::string surface;  // text exactly as it appears in the document
  std::string stakeholder_id;
  std::string label{kStakeholderLabel};

  friend bool operator==(const Mention&, const Mention&) = default;
};

struct Extraction {
  std::set<std::string> stakeholder_ids;
  std::vector<Mention> mentions;
};

class PhraseMatcher {
public:
  explicit PhraseMatcher(const Gazetteer& g) {
    nodes_.emplace_back();
    for (const auto& [tokens, id] : g.index()) {
      std::size_t cur = 0;
      for (const auto& t : tokens) {
        const auto it = nodes_[cur].children.find(t);
        if (it != nodes_[cur].children.end()) {
          cur = it->second;
        } else {
          const std::size_t next = nodes_.size();
          nodes_[cur].children.emplace(t, next);
          nodes_.emplace_back();
          cur = next;
        }
      }
      nodes_[cur].terminal = true;
      nodes_[cur].stakeholder_id = id;
    }
  }

  /// Mentions in document order. `text` is the string the tokens were
  /// produced from; mention surfaces are sliced out of it.
  std::vector<Mention> match(std::span<const Token> tokens,
                             std::string_view text,
                             std::string_view doc_id) const {
    std::vector<Mention> out;
    std::size_t i = 0;
    while (i < tokens.size()) {
      std::size_t cur = 0;
      std::size_t best_len = 0;
      const std::string* best_id = nullptr;
      for (std::size_t j = i; j < tokens.size(); ++j) {
        const auto it = nodes_[cur].children.find(tokens[j].text);
        if (it == nodes_[cur].children.end()) break;
        cur = it->second;
        if (nodes_[cur].terminal) {
          best_len = j - i + 1;
          best_id = &nodes_[cur].stakeholder_id;
        }
      }
      if (best_id) {
        Mention m;
        m.doc_id = std::string(doc_id);
        m.first_token = i;
        m.last_token = i + best_len - 1;
        m.start_char = tokens[i].start_char;
        m.end_char = tokens[m.last_token].end_char;
        m.surface =
            std::string(text.substr(m.start_char, m.end_char - m.start_char));
        m.stakeholder_id = *best_id;
        out.push_back(std::move(m));
        i += best_len;
      } else {
        ++i;
      }
    }
    return out;
  }

  Extraction extract(const DocumentRecord& doc) const {
    Extraction e;
    e.mentions = match(tokenize(doc.text), doc.text, doc.doc_id);
    for (const auto& m : e.mentions) e.stakeholder_ids.insert(m.stakeholder_id);
    return e;
  }

private:
  struct TrieNode {
    std::map<std::string, std::size_t, std::less<>> children;
    std::string stakeholder_id;
    bool terminal = false;
  };
  std::vector<TrieNode> nodes_;
};

// One-shot conveniences. Corpus-scale callers should build a PhraseMatcher
// once and reuse it.

inline std::vector<Mention> match_entities(std::span<const Token> tokens,
                                           std::string_view text,
                                           std::string_view doc_id,
                                           const Gazetteer& g) {
  return PhraseMatcher(g).match(tokens, text, doc_id);
}

inline Extraction extract_stakeholders(const DocumentRecord& doc,
                                       const Gazetteer& g) {
  return PhraseMatcher(g).extract(doc);
}

}  // namespace scngen
