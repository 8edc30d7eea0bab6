#include "propuse/depgraph.hpp"

#include <algorithm>

namespace propuse {

DependencyGraph build_graph(const Library& lib) {
  DependencyGraph g;
  g.nodes.reserve(lib.items.size());
  for (const Item& item : lib.items) {
    g.nodes.push_back(item.id);
    g.edges.emplace(item.id, std::vector<std::string>(item.uses.begin(),
                                                      item.uses.end()));
  }
  return g;
}

std::set<std::string> reachable(const DependencyGraph& g,
                                const std::string& item) {
  if (!g.contains(item)) throw UnknownItem("unknown item: " + item);
  std::set<std::string> seen;
  std::vector<const std::string*> stack = {&item};
  while (!stack.empty()) {
    const std::string& current = *stack.back();
    stack.pop_back();
    if (!seen.insert(current).second) continue;
    for (const std::string& target : g.edges.at(current)) {
      if (seen.find(target) == seen.end()) stack.push_back(&target);
    }
  }
  return seen;
}

namespace {

const NeedSet& direct_entry(const std::map<std::string, NeedSet>& direct,
                            const std::string& item) {
  auto it = direct.find(item);
  if (it == direct.end()) {
    throw MissingDirectEntry("no direct need entry for item: " + item);
  }
  return it->second;
}

}  // namespace

NeedSet indirect_needs(const std::string& item, const DependencyGraph& g,
                       const std::map<std::string, NeedSet>& direct) {
  NeedSet out{item, {}, NeedSet::Mode::Indirect};
  for (const std::string& reached : reachable(g, item)) {
    const NeedSet& d = direct_entry(direct, reached);
    out.pairs.insert(d.pairs.begin(), d.pairs.end());
  }
  return out;
}

std::map<std::string, NeedSet> indirect_needs_all(
    const DependencyGraph& g, const std::map<std::string, NeedSet>& direct) {
  std::map<std::string, NeedSet> memo;
  // post-order DFS: a node is finished only after all its uses targets
  auto visit = [&](auto&& self, const std::string& item) -> const NeedSet& {
    auto done = memo.find(item);
    if (done != memo.end()) return done->second;
    NeedSet out{item, direct_entry(direct, item).pairs,
                NeedSet::Mode::Indirect};
    for (const std::string& target : g.edges.at(item)) {
      const NeedSet& sub = self(self, target);
      out.pairs.insert(sub.pairs.begin(), sub.pairs.end());
    }
    return memo.emplace(item, std::move(out)).first->second;
  };
  for (const std::string& item : g.nodes) visit(visit, item);
  return memo;
}

}  // namespace propuse
