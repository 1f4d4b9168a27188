#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobox/cointerval.hpp"
#include "cobox/graph.hpp"

namespace cobox {

enum class CoverKind { cointerval, threshold };

enum class CaseTaken {
  clique_or_star,          // "1"
  big_leaf,                // "2"
  two_cuts,                // "3a"
  many_cuts,               // "3b"
  threshold_two_cuts,      // "3*-2cuts"
  threshold_many_cuts,     // "3*-many"
};

struct CoverElement {
  EdgeSubgraph subgraph;
  /// Present for elements that are big ants of the residual graph they were
  /// taken from.
  std::optional<BigAnt> ant;
};

struct Cover {
  CoverKind kind = CoverKind::cointerval;
  std::vector<CoverElement> elements;

  std::size_t size() const { return elements.size(); }
};

/// One pass of the covering loop.
struct IterationTrace {
  /// The component H. Empty unless CoverOptions::record_components is set
  /// (always filled for case 1, where it equals `removed`).
  VertexSet component;
  CaseTaken case_taken = CaseTaken::clique_or_star;
  std::optional<VertexSet> chosen_block;
  std::optional<Vertex> protected_vertex;
  std::optional<std::pair<Vertex, Vertex>> apexes;
  VertexSet removed;
  std::size_t element_index = 0;
};

struct CoverResult {
  Cover cover;
  std::vector<IterationTrace> traces;
};

struct CoverOptions {
  /// Costs a component traversal per iteration.
  bool record_components = true;
  /// Per-iteration check that every edge at a removed vertex lies in the
  /// element just added.
  bool check_invariants = true;
};

/// Minimum co-interval cover of a block graph built from big ants.
///
/// Each iteration takes a component H of the residual graph: a clique or
/// star is added whole (case 1); otherwise a leaf block Q with |Q| >= 3
/// contributes Q_v (case 2); otherwise a near-leaf block Q with protected
/// vertex v (its anchor, else its smallest cut-vertex) contributes Q_{u,v}
/// when it has two cut-vertices (3a) or Q_{u,w} for the two smallest other
/// cut-vertices (3b). The block structure of the residual graph is
/// maintained incrementally; see cover_engine.cpp for the scheduling order.
/// Throws NotBlockGraphError for other graphs.
CoverResult min_cointerval_cover(const Graph& g, const CoverOptions& options = {});

/// Same loop with case 3 replaced by its threshold variant: Q_u for the
/// smallest non-protected cut-vertex u.
CoverResult min_threshold_cover(const Graph& g, const CoverOptions& options = {});

int coboxicity(const Graph& g);
int cothdim(const Graph& g);

struct VerificationReport {
  std::vector<std::size_t> not_subgraph;
  std::vector<std::size_t> recognition_failures;
  EdgeList uncovered;

  bool valid() const { return not_subgraph.empty() && recognition_failures.empty() && uncovered.empty(); }
};

VerificationReport verify_cover(const Graph& g, const Cover& c);

/// Replays the traces against g and reports every departure from the case
/// rules: each element must be the big ant of its block in the residual
/// graph, the block must have the class the case requires, the removed set
/// must match the case formula, and every residual edge at a removed vertex
/// must be covered by that iteration's element. Empty result means clean.
std::vector<std::string> audit_cover(const Graph& g, const CoverResult& result);

struct BoxRepresentation {
  int dimension = 1;
  std::map<Vertex, std::vector<Interval>> boxes;
};

/// Axis i carries a co-interval representation of element i; vertices not
/// in element i span that whole axis. An empty cover gives dimension 1 with
/// identical boxes. Throws InputError for covers that fail verify_cover.
BoxRepresentation cover_to_box_representation(const Graph& g, const Cover& c);

/// Boxes of x and y are disjoint iff xy is an edge, for every pair.
bool represents_complement(const Graph& g, const BoxRepresentation& boxes);

/// ceil((n-1)/3); InputError for n < 1.
int path_coboxicity(int n);

std::string to_string(CoverKind k);
std::string to_string(CaseTaken c);
CoverKind parse_cover_kind(const std::string& name);
CaseTaken parse_case_taken(const std::string& name);

}  // namespace cobox
