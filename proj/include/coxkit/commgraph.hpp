#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxkit/coxeter.hpp"

namespace coxkit {

enum class EdgeStatus {
  Witnessed,        // an element separating the two operator words is known
  NoEdgeProven,     // the operator words agree on all of W
  UnknownAtCutoff,  // no witness within the search radius, no proof either
};

struct EdgeLabel {
  enum class Kind { Unlabeled, Finite, Infinity };
  Kind kind = Kind::Unlabeled;
  int value = 0;  // for Finite

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Decision for one unordered pair of vertices {vertices[u], vertices[v]}, u < v.
struct PairRecord {
  std::size_t u = 0;
  std::size_t v = 0;
  EdgeStatus status = EdgeStatus::NoEdgeProven;
  std::optional<Element> witness;
  std::size_t radius = 0;           // search radius (or kmax) behind UnknownAtCutoff
  std::optional<EdgeLabel> label;  // labeled graphs only

  bool is_edge() const { return status == EdgeStatus::Witnessed || label.has_value(); }
  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

/// G_k(W,S) or the labeled graph G(W,S) on the proper nonempty subsets of S.
struct CommGraph {
  const CoxeterSystem* system = nullptr;
  bool labeled = false;
  unsigned k = 2;     // G_k; for labeled graphs the underlying graph is G_2
  unsigned kmax = 0;  // labeled graphs only
  std::vector<GeneratorSet> vertices;
  std::vector<PairRecord> pairs;  // every unordered pair, lexicographic in (u, v)

  const PairRecord& pair(GeneratorSet a, GeneratorSet b) const;
  /// Pairs that are edges (witnessed, or carrying a label).
  std::vector<PairRecord> edges() const;
  std::size_t vertex_index(GeneratorSet a) const;

  friend bool operator==(const CommGraph& a, const CommGraph& b) {
    return a.system == b.system && a.labeled == b.labeled && a.k == b.k && a.kmax == b.kmax &&
           a.vertices == b.vertices && a.pairs == b.pairs;
  }
};

struct GraphOptions {
  std::size_t cutoff = 8;  // witness search radius for infinite parabolics
  unsigned kmax = 8;
  unsigned threads = 1;
};

/// Proper nonempty subsets of S sorted by (size, lexicographic list of sorted member names).
std::vector<GeneratorSet> graph_vertices(const CoxeterSystem& system);

/// Whether the two alternating operator words of length k in P^I, P^J disagree on w.
bool alternating_words_differ(const Element& w, GeneratorSet I, GeneratorSet J, unsigned k);

/// Decision for the pair {I, J} in E_k.
PairRecord decide_pair(const CoxeterSystem& system, GeneratorSet I, GeneratorSet J, unsigned k,
                       const GraphOptions& options);

CommGraph graph_g2(const CoxeterSystem& system, const GraphOptions& options = {});
CommGraph graph_gk(const CoxeterSystem& system, unsigned k, const GraphOptions& options = {});
CommGraph labeled_graph(const CoxeterSystem& system, const GraphOptions& options = {});

enum class GraphFormat { Dot, Json };
std::string emit(const CommGraph& graph, GraphFormat format);
/// Inverse of emit(..., Json) for a graph over `system`.
CommGraph parse_graph(const std::string& json_text, const CoxeterSystem& system);

/// "{s,t}"
std::string vertex_name(const CoxeterSystem& system, GeneratorSet J);

}  // namespace coxkit
