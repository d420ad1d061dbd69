#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smt/instance.hpp"
#include "smt/marriage_graph.hpp"
#include "smt/matching.hpp"

#include <json.hpp>

namespace smt {

// Adjacency on the stable matching polytope, decided combinatorially: two
// distinct stable matchings are adjacent vertices exactly when their
// between-subgraph has one nontrivial component.
struct AdjacencyVerdict {
  bool adjacent = false;
  int nontrivial_components = 0;
};

AdjacencyVerdict are_adjacent(const InstanceIndex& index,
                              const Matching& first, const Matching& second);

// A path from first to second along skeleton edges, switching one
// between-subgraph component at a time (components in their numbering
// order). Length = number of nontrivial components, so the skeleton distance
// is at most that; both endpoints are included. first == second gives the
// one-element path.
std::vector<Matching> path_between(const InstanceIndex& index,
                                   const Matching& first,
                                   const Matching& second);

// The 1-skeleton: all stable matchings (canonical order) with an edge for
// each adjacent pair.
struct SkeletonGraph {
  std::vector<Matching> nodes;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  std::vector<std::vector<int>> adjacency;

  // Node index of the given matching, or -1.
  int node_of(const Matching& matching) const;
};

SkeletonGraph build_skeleton(const InstanceIndex& index,
                             int cap = kDefaultEnumerationCap);

// BFS over skeleton edges. Both matchings must be nodes.
int distance(const SkeletonGraph& skeleton, const Matching& first,
             const Matching& second);

// Largest pairwise distance; 0 for a skeleton with at most one node. Always
// at most floor((num_men + num_women)/3), and at most floor(n/4) when no
// preference list has a tie.
int diameter(const SkeletonGraph& skeleton);

// For non-adjacent stable matchings, two other stable matchings whose
// incidence vectors sum to x_first + x_second: switch only the first
// nontrivial component of the between-subgraph, resp. all the others. The
// four matchings are pairwise distinct. nullopt when the inputs are equal
// or adjacent (fewer than two nontrivial components).
std::optional<std::pair<Matching, Matching>> non_adjacency_witness(
    const InstanceIndex& index, const Matching& first, const Matching& second);

std::string to_dot(const SkeletonGraph& skeleton);
nlohmann::json to_json(const SkeletonGraph& skeleton);

}  // namespace smt
