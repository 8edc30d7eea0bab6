#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "propuse/corpus.hpp"
#include "propuse/elicitor.hpp"

namespace propuse {

// Item reference graph: an edge (I, I') means I uses I'. Validation has
// already rejected cycles, so the graph is a DAG.
struct DependencyGraph {
  std::vector<std::string> nodes;  // library item order
  std::map<std::string, std::vector<std::string>> edges;  // sorted targets

  bool contains(const std::string& item) const {
    return edges.find(item) != edges.end();
  }
};

DependencyGraph build_graph(const Library& lib);

// Everything `item` transitively uses, itself included.
// Throws UnknownItem for ids outside the graph.
std::set<std::string> reachable(const DependencyGraph& g,
                                const std::string& item);

// Indirect need by its definition: the union of direct(I').pairs over every
// I' reachable from `item`. Naive recomputation per call; kept as the
// reference against which the memoized closure is tested.
// Throws MissingDirectEntry when a reachable item has no direct entry.
NeedSet indirect_needs(const std::string& item, const DependencyGraph& g,
                       const std::map<std::string, NeedSet>& direct);

// Memoized closure over the whole graph: each node's indirect set is its
// direct set unioned with the already-computed sets of its uses targets,
// processed in reverse topological order.
std::map<std::string, NeedSet> indirect_needs_all(
    const DependencyGraph& g, const std::map<std::string, NeedSet>& direct);

}  // namespace propuse
