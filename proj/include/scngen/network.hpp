#pragma once
// The stakeholder collaboration network: an undirected simple graph with
// stakeholder IDs as nodes and task co-involvement as edges. Edge weights
// count the documents in which both endpoints occur; the analyses treat the
// graph as unweighted and keep weights for export only.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scngen/errors.hpp"
#include "scngen/ingestion.hpp"
#include "scngen/matcher.hpp"

namespace scngen {

struct Edge {
  std::string a;  // a < b lexicographically
  std::string b;
  int weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class CollaborationGraph {
public:
  void add_node(const std::string& id) { nodes_.insert(id); }

  /// Records one co-occurrence of a and b, inserting both nodes and
  /// bumping the canonical edge's weight.
  void add_co_occurrence(const std::string& a, const std::string& b) {
    if (a == b) throw std::invalid_argument("self loop: " + a);
    nodes_.insert(a);
    nodes_.insert(b);
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    ++weights_[std::move(key)];
  }

  const std::set<std::string>& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return weights_.size(); }

  bool has_edge(const std::string& a, const std::string& b) const {
    return weight(a, b) > 0;
  }

  int weight(const std::string& a, const std::string& b) const {
    const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    const auto it = weights_.find(key);
    return it == weights_.end() ? 0 : it->second;
  }

  /// Number of distinct incident edges.
  std::size_t degree(const std::string& v) const {
    std::size_t d = 0;
    for (const auto& [pair, w] : weights_) {
      if (pair.first == v || pair.second == v) ++d;
    }
    return d;
  }

  /// Edges sorted by canonical (a, b) pair.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(weights_.size());
    for (const auto& [pair, w] : weights_)
      out.push_back(Edge{pair.first, pair.second, w});
    return out;
  }

  // Integer-indexed view for the graph algorithms: ids sorted, adjacency
  // lists sorted.
  struct Indexed {
    std::vector<std::string> ids;
    std::map<std::string, int> index;
    std::vector<std::vector<int>> adj;
  };

  Indexed indexed() const {
    Indexed ix;
    ix.ids.assign(nodes_.begin(), nodes_.end());
    for (std::size_t i = 0; i < ix.ids.size(); ++i)
      ix.index.emplace(ix.ids[i], int(i));
    ix.adj.resize(ix.ids.size());
    for (const auto& [pair, w] : weights_) {
      const int u = ix.index.at(pair.first);
      const int v = ix.index.at(pair.second);
      ix.adj[u].push_back(v);
      ix.adj[v].push_back(u);
    }
    for (auto& nbrs : ix.adj) std::sort(nbrs.begin(), nbrs.end());
    return ix;
  }

  friend bool operator==(const CollaborationGraph& x,
                         const CollaborationGraph& y) {
    return x.nodes_ == y.nodes_ && x.weights_ == y.weights_;
  }

private:
  std::set<std::string> nodes_;
  std::map<std::pair<std::string, std::string>, int> weights_;
};

using DocStakeholders = std::pair<std::string, std::set<std::string>>;

/// Builds the co-occurrence graph: every document with k stakeholders
/// contributes all C(k,2) unordered pairs; documents with k <= 1
/// contribute nodes only.
inline CollaborationGraph build_interactions(
    const std::vector<DocStakeholders>& doc_sets) {
  CollaborationGraph g;
  for (const auto& [doc_id, ids] : doc_sets) {
    for (const auto& id : ids) g.add_node(id);
    for (auto it = ids.begin(); it != ids.end(); ++it) {
      for (auto jt = std::next(it); jt != ids.end(); ++jt)
        g.add_co_occurrence(*it, *jt);
    }
  }
  return g;
}

/// Maximal connected node sets, largest first; equal sizes ordered by
/// smallest member ID. The first element is the giant component.
inline std::vector<std::set<std::string>> connected_components(
    const CollaborationGraph& g) {
  const auto ix = g.indexed();
  const std::size_t n = ix.ids.size();
  std::vector<bool> seen(n, false);
  std::vector<std::set<std::string>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::set<std::string> comp;
    std::vector<int> stack{int(s)};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.insert(ix.ids[v]);
      for (const int u : ix.adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    components.push_back(std::move(comp));
  }
  std::sort(components.begin(), components.end(),
            [](const std::set<std::string>& a, const std::set<std::string>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return *a.begin() < *b.begin();
            });
  return components;
}

namespace detail {

inline std::vector<int> intersect_sorted(const std::vector<int>& a,
                                         const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Bron-Kerbosch with pivoting. P and X are sorted.
inline void bron_kerbosch(std::vector<int>& clique, std::vector<int> p,
                          std::vector<int> x,
                          const std::vector<std::vector<int>>& adj,
                          std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(clique);
    return;
  }
  // Pivot: the candidate with the most neighbors in P.
  int pivot = -1;
  std::size_t best = 0;
  bool first = true;
  for (const auto* side : {&p, &x}) {
    for (const int u : *side) {
      const std::size_t overlap = detail::intersect_sorted(p, adj[u]).size();
      if (first || overlap > best) {
        pivot = u;
        best = overlap;
        first = false;
      }
    }
  }
  std::vector<int> candidates;
  std::set_difference(p.begin(), p.end(), adj[pivot].begin(), adj[pivot].end(),
                      std::back_inserter(candidates));
  for (const int v : candidates) {
    clique.push_back(v);
    bron_kerbosch(clique, intersect_sorted(p, adj[v]),
                  intersect_sorted(x, adj[v]), adj, out);
    clique.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace detail

/// All maximal cliques, each sorted internally; the list is sorted by size
/// descending, then lexicographically.
inline std::vector<std::vector<std::string>> maximal_cliques(
    const CollaborationGraph& g) {
  const auto ix = g.indexed();
  std::vector<int> p(ix.ids.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = int(i);
  std::vector<std::vector<int>> raw;
  std::vector<int> clique;
  if (!p.empty()) detail::bron_kerbosch(clique, std::move(p), {}, ix.adj, raw);

  std::vector<std::vector<std::string>> out;
  out.reserve(raw.size());
  for (const auto& c : raw) {
    std::vector<std::string> ids;
    ids.reserve(c.size());
    for (const int v : c) ids.push_back(ix.ids[v]);
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<std::string>& a,
               const std::vector<std::string>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  return out;
}

/// One collaboration graph per window: extraction plus build_interactions
/// over the records falling in that window. Windows must be well formed.
inline std::vector<CollaborationGraph> temporal_slices(
    const std::vector<DocumentRecord>& records, const Gazetteer& g,
    const std::vector<DateRange>& windows) {
  if (windows.empty()) throw config_error("temporal_slices: no windows given");
  for (const auto& w : windows) {
    if (!(w.start <= w.end))
      throw config_error("invalid window: " + w.start.iso() + " > " +
                         w.end.iso());
  }
  const PhraseMatcher matcher(g);
  std::vector<CollaborationGraph> out;
  out.reserve(windows.size());
  for (const auto& w : windows) {
    std::vector<DocStakeholders> doc_sets;
    for (const auto& rec : filter_by_date(records, w)) {
      doc_sets.emplace_back(rec.doc_id, matcher.extract(rec).stakeholder_ids);
    }
    out.push_back(build_interactions(doc_sets));
  }
  return out;
}

}  // namespace scngen
