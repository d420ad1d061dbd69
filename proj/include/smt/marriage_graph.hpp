#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smt/instance.hpp"
#include "smt/matching.hpp"

#include <json.hpp>

namespace smt {

// Directed graph on the acceptable pairs: an edge u -> v between two pairs
// sharing a person points toward the pair the shared person weakly prefers.
// Two pairs the shared person ties produce edges in both directions; with a
// strict order exactly one of the two directions exists.
struct MarriageGraph {
  std::vector<Pair> vertices;                // canonical pair order
  std::vector<std::pair<int, int>> edges;    // (tail, head), sorted
  std::vector<std::vector<int>> successors;  // out-neighbours per vertex
};

MarriageGraph build_marriage_graph(const InstanceIndex& index);

// Whether judge ranks a in the closed interval spanned by b and c:
// a equals one of them, or a is weakly better than one and strictly worse
// than the other. Singles sit strictly below all listed partners. Non-single
// arguments must be listed by judge.
bool lies_between(const InstanceIndex& index, PersonId judge, const Partner& a,
                  const Partner& b, const Partner& c);

// Subgraph of the marriage graph induced by the pairs (m,w) where w lies
// between m's partners in the two matchings and m lies between w's. Both
// matchings must be stable (else PreconditionError naming a blocking pair).
//
// The union of the two matchings is always contained in the vertex set; the
// isolated vertices are exactly the pairs common to both matchings; and the
// number of nontrivial components is the adjacency measure: the matchings
// are adjacent vertices of the stable matching polytope exactly when there
// is one nontrivial component.
struct BetweenSubgraph {
  std::vector<Pair> all_pairs;  // canonical pair order of the instance
  Matching first, second;

  std::vector<int> vertices;               // pair indices, ascending
  std::vector<std::pair<int, int>> edges;  // induced edges, sorted

  // Components with at least one edge, each a sorted list of pair indices;
  // ordered (and 1-numbered) by their smallest pair index.
  std::vector<std::vector<int>> nontrivial_components;
  std::vector<int> isolated;  // vertices with no incident edge, ascending

  // Per pair index: -1 not a vertex, 0 isolated, k >= 1 the component number.
  std::vector<int> component_of;

  int nontrivial_count() const {
    return static_cast<int>(nontrivial_components.size());
  }
};

BetweenSubgraph build_between_subgraph(const InstanceIndex& index,
                                       const Matching& first,
                                       const Matching& second);

// The vertices of one person together with the edges among them. Every edge
// of the subgraph lies in some person's block (each edge joins two pairs
// sharing a person). Throws PreconditionError when the person occurs in no
// vertex of the subgraph.
struct PersonBlock {
  PersonId owner;
  std::vector<int> vertices;               // ascending pair indices
  std::vector<std::pair<int, int>> edges;  // induced, sorted
};

PersonBlock person_block(const BetweenSubgraph& subgraph, PersonId owner);

// Pairs in both matchings == vertices without incident edges.
std::vector<int> isolated_vertices(const BetweenSubgraph& subgraph);

// DOT / JSON exports. Vertices are labelled "m1,w2"; each edge carries a
// rep attribute naming which side the shared person is on; between-subgraph
// vertices carry their component number (0 = isolated).
std::string to_dot(const MarriageGraph& graph);
nlohmann::json to_json(const MarriageGraph& graph);
std::string to_dot(const BetweenSubgraph& subgraph);
nlohmann::json to_json(const BetweenSubgraph& subgraph);

}  // namespace smt
