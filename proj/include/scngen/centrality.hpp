#pragma once
// Centrality measures on the unweighted collaboration graph.
//
// Degree counts distinct incident edges. Closeness is the inverse of the
// farness with the Wasserman-Faust component correction so it stays defined
// on disconnected graphs: score(v) = (|R| / sum_d) * (|R| / (n-1)) where R
// is the set of nodes reachable from v and sum_d their total distance;
// isolated nodes score 0. Betweenness is Brandes' algorithm, unnormalized,
// with each unordered pair counted once.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scngen/network.hpp"

namespace scngen {

enum class Measure { degree, closeness, betweenness };

inline std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::degree: return "degree";
    case Measure::closeness: return "closeness";
    case Measure::betweenness: return "betweenness";
  }
  return "";
}

inline std::optional<Measure> measure_from_string(std::string_view name) {
  if (name == "degree") return Measure::degree;
  if (name == "closeness") return Measure::closeness;
  if (name == "betweenness") return Measure::betweenness;
  return std::nullopt;
}

struct CentralityReport {
  Measure measure = Measure::degree;
  std::map<std::string, double> scores;  // defined for every node
};

inline CentralityReport degree_centrality(const CollaborationGraph& g) {
  CentralityReport report{Measure::degree, {}};
  const auto ix = g.indexed();
  for (std::size_t v = 0; v < ix.ids.size(); ++v)
    report.scores[ix.ids[v]] = double(ix.adj[v].size());
  return report;
}

inline CentralityReport closeness_centrality(const CollaborationGraph& g) {
  CentralityReport report{Measure::closeness, {}};
  const auto ix = g.indexed();
  const std::size_t n = ix.ids.size();
  std::vector<int> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{int(s)};
    long long farness = 0;
    long long reachable = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (v != int(s)) {
        farness += dist[v];
        ++reachable;
      }
      for (const int u : ix.adj[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    double score = 0.0;
    if (reachable > 0 && n > 1) {
      score = (double(reachable) / double(farness)) *
              (double(reachable) / double(n - 1));
    }
    report.scores[ix.ids[s]] = score;
  }
  return report;
}

// Betweenness from all-pairs geodesic counts. A node v lies on
// sigma(s,v) * sigma(v,t) of the sigma(s,t) shortest s-t paths, so each
// unordered pair credits v with that fraction in a single division.
// Pairs and nodes are visited in index order, which keeps the result
// identical bit for bit to summing over an explicit path enumeration;
// the recursive dependency-accumulation formulation regroups the same
// fractions and can drift by an ulp.
inline CentralityReport betweenness_centrality(const CollaborationGraph& g) {
  CentralityReport report{Measure::betweenness, {}};
  const auto ix = g.indexed();
  const std::size_t n = ix.ids.size();

  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<std::vector<long long>> sigma(n, std::vector<long long>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    auto& d = dist[s];
    auto& count = sigma[s];
    d[s] = 0;
    count[s] = 1;
    std::deque<int> queue{int(s)};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const int u : ix.adj[v]) {
        if (d[u] < 0) {
          d[u] = d[v] + 1;
          queue.push_back(u);
        }
        if (d[u] == d[v] + 1) count[u] += count[v];
      }
    }
  }

  std::vector<double> bc(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (dist[s][t] < 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (dist[s][v] < 0 || dist[v][t] < 0) continue;
        if (dist[s][v] + dist[v][t] != dist[s][t]) continue;
        bc[v] += double(sigma[s][v] * sigma[v][t]) / double(sigma[s][t]);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) report.scores[ix.ids[v]] = bc[v];
  return report;
}

inline CentralityReport compute_centrality(const CollaborationGraph& g,
                                           Measure m) {
  switch (m) {
    case Measure::degree: return degree_centrality(g);
    case Measure::closeness: return closeness_centrality(g);
    case Measure::betweenness: return betweenness_centrality(g);
  }
  return {};
}

/// The k highest-scoring nodes, descending score, ties broken by ascending
/// ID. Returns all nodes when the graph has fewer than k.
inline std::vector<std::pair<std::string, double>> top_k(
    const CentralityReport& report, std::size_t k) {
  std::vector<std::pair<std::string, double>> ranked(report.scores.begin(),
                                                     report.scores.end());
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

}  // namespace scngen
