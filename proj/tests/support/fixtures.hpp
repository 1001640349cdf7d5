#pragma once
// Shared scaffolding for the test binaries: fixture locations, a scratch
// directory guard, synthetic dictionary/corpus generators sized to the
// production workload, and converters between the library graph and the
// oracle graph.

#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "scngen/scngen.hpp"

namespace testsupport {

// The unit test binary gets the committed fixture directory at compile
// time; the acceptance binary overwrites this from argv.
inline std::filesystem::path& data_dir_ref() {
  static std::filesystem::path dir =
#ifdef SCNGEN_TEST_DATA_DIR
      SCNGEN_TEST_DATA_DIR;
#else
      "tests/data";
#endif
  return dir;
}

inline std::filesystem::path data_file(std::string_view name) {
  return data_dir_ref() / name;
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    std::ostringstream name;
    name << "scngen_test_" << ::getpid() << "_" << counter.fetch_add(1);
    path_ = std::filesystem::temp_directory_path() / name.str();
    std::filesystem::create_directories(path_);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(std::string_view name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text(const std::filesystem::path& p,
                       std::string_view content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

inline scngen::DocumentRecord make_doc(std::string id, std::string_view iso,
                                       std::string text) {
  scngen::DocumentRecord rec;
  rec.doc_id = std::move(id);
  rec.date = *scngen::parse_date(iso, scngen::kIsoDateFormat);
  rec.text = std::move(text);
  return rec;
}

inline scngen::CollaborationGraph to_library_graph(
    const oracle::SmallGraph& g) {
  scngen::CollaborationGraph out;
  for (const auto& id : g.ids) out.add_node(id);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g.adj[i][j]) out.add_co_occurrence(g.ids[i], g.ids[j]);
    }
  }
  return out;
}

inline oracle::SmallGraph to_oracle_graph(const scngen::CollaborationGraph& g) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.a, e.b);
  return oracle::make_graph(g.nodes(), edges);
}

// Synthetic dictionary sized like the production one: 102 IDs, each with a
// long-form surface "Division of Sector <n>", the first 91 also with the
// short alias "ORG<nnn>", for 193 surfaces total.
inline constexpr std::size_t kBigGazetteerIds = 102;
inline constexpr std::size_t kBigGazetteerSurfaces = 193;

inline std::string big_id(std::size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "ORG%03zu", k);
  return buf;
}

inline scngen::Gazetteer big_gazetteer() {
  scngen::Gazetteer g;
  for (std::size_t k = 0; k < kBigGazetteerIds; ++k) {
    const std::string id = big_id(k);
    g.insert({"Division of Sector " + std::to_string(k), id});
    if (k < 91) g.insert({id, id});
  }
  return g;
}

inline void write_big_gazetteer(const std::filesystem::path& path) {
  scngen::save_gazetteer(big_gazetteer(), path);
}

// 294 synthetic work orders of 40 to 80 words with 2 to 5 dictionary
// surfaces spliced in at random positions. The filler vocabulary shares no
// word with any dictionary surface, so only the spliced surfaces can match.
inline std::vector<scngen::DocumentRecord> big_corpus(
    std::uint32_t seed = 20170825) {
  static const std::vector<std::string> filler = {
      "the",        "teams",     "shall",     "provide",   "support",
      "response",   "field",     "staging",   "logistics", "site",
      "assessments", "restore",  "power",     "water",     "debris",
      "removal",    "operations", "daily",    "reporting", "supplies",
      "transport",  "temporary", "housing",   "mission",   "requested",
      "deliver",    "generators", "fuel",     "routes",    "cleared"};
  std::mt19937 rng(seed);
  auto pick = [&](std::size_t n) { return std::size_t(rng() % n); };

  std::vector<scngen::DocumentRecord> docs;
  docs.reserve(294);
  for (std::size_t i = 0; i < 294; ++i) {
    const std::size_t words = 40 + pick(41);
    std::vector<std::string> parts;
    parts.reserve(words + 5);
    for (std::size_t w = 0; w < words; ++w)
      parts.push_back(filler[pick(filler.size())]);
    const std::size_t agencies = 2 + pick(4);
    for (std::size_t a = 0; a < agencies; ++a) {
      const std::size_t k = pick(kBigGazetteerIds);
      const bool alias = k < 91 && (rng() & 1);
      const std::string surface =
          alias ? big_id(k) : "Division of Sector " + std::to_string(k);
      parts.insert(parts.begin() + long(pick(parts.size() + 1)), surface);
    }
    std::string text;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (p) text.push_back(' ');
      text += parts[p];
    }
    char idbuf[16];
    std::snprintf(idbuf, sizeof idbuf, "MA-%04zu", i + 1);
    scngen::DocumentRecord rec;
    rec.doc_id = idbuf;
    rec.date = scngen::Date{2017, 8, 25}.plus_days(int(i % 42));
    rec.text = std::move(text);
    docs.push_back(std::move(rec));
  }
  return docs;
}

inline void write_corpus_csv(const std::vector<scngen::DocumentRecord>& docs,
                             const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  scngen::write_csv_row(out, {"id", "date", "agency", "sow"});
  for (const auto& d : docs) {
    scngen::write_csv_row(
        out, {d.doc_id, d.date.iso(), d.assigned_agency.value_or(""), d.text});
  }
}

inline std::string lowercased(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
  }
  return out;
}

/// Random case flip on every ASCII letter.
inline std::string random_recase(std::mt19937& rng, std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    const bool upper = (rng() & 1) != 0;
    if (c >= 'a' && c <= 'z' && upper) {
      c = char(c - 'a' + 'A');
    } else if (c >= 'A' && c <= 'Z' && !upper) {
      c = char(c - 'A' + 'a');
    }
  }
  return out;
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = scngen::cli::run_cli(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace testsupport
