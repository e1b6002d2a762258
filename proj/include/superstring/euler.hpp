// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef SUPERSTRING_EULER_HPP
#define SUPERSTRING_EULER_HPP

#include <superstring/core.hpp>
#include <superstring/graph.hpp>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace superstring {

namespace detail {

  struct component {
    std::vector<node_id> nodes;    // sorted by label
    std::vector<node_id> surplus;  // one entry per unit of out - in, by label
    std::vector<node_id> deficit;  // one entry per unit of in - out, by label

    std::size_t imbalance() const noexcept { return surplus.size(); }
  };

  class disjoint_sets {
  public:
    explicit disjoint_sets(std::size_t n)
      : parent_(n)
    {
      std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x)
    {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  private:
    std::vector<std::size_t> parent_;
  };

  /// Weakly connected components that carry at least one edge, ordered by
  /// their lexicographically smallest node label.
  inline std::vector<component> edge_components(di_multigraph const& g)
  {
    auto const n      = g.node_count();
    auto       sets   = disjoint_sets(n);
    auto       in     = std::vector<std::size_t>(n, 0);
    auto       out    = std::vector<std::size_t>(n, 0);
    for (auto const& e : g.edges()) {
      ++out[e.src];
      ++in[e.dst];
      sets.unite(e.src, e.dst);
    }

    auto by_label = std::vector<node_id>(n);
    std::iota(by_label.begin(), by_label.end(), node_id{0});
    std::ranges::sort(by_label, [&](node_id a, node_id b) {
      return g.label(a) < g.label(b);
    });

    auto slot       = std::vector<std::size_t>(n, std::numeric_limits<std::size_t>::max());
    auto components = std::vector<component>{};
    for (auto const v : by_label) {
      if (in[v] + out[v] == 0) continue;
      auto const root = sets.find(v);
      if (slot[root] == std::numeric_limits<std::size_t>::max()) {
        slot[root] = components.size();
        components.emplace_back();
      }
      auto& c = components[slot[root]];
      c.nodes.push_back(v);
      for (auto i = in[v]; i < out[v]; ++i) c.surplus.push_back(v);
      for (auto i = out[v]; i < in[v]; ++i) c.deficit.push_back(v);
    }
    return components;
  }

  inline void require_edges(di_multigraph const& g)
  {
    if (g.edge_count() == 0)
      throw error(error_code::empty_graph, "graph has no edges");
  }

} // namespace detail

/// Minimum number of edges that must be added to `g` so that it has an
/// eulerian path: sum over edge-carrying weak components of
/// max(d_i, 1), minus one, where d_i is the component's total out-degree
/// surplus.
inline std::size_t added_edge_lower_bound(di_multigraph const& g)
{
  detail::require_edges(g);
  std::size_t total = 0;
  for (auto const& c : detail::edge_components(g))
    total += std::max<std::size_t>(c.imbalance(), 1);
  return total - 1;
}

/// Completes `g` with the minimum number of added edges and returns an
/// eulerian path over the result.
///
/// Deterministic: components are taken in order of their smallest node
/// label. Inside a component the start is the smallest surplus node (or the
/// smallest node when balanced); the j-th deficit unit is linked to the
/// (j+1)-th surplus unit, both in label order, and the last deficit unit is
/// the component's end. Consecutive components are chained end to start.
/// The walk is Hierholzer's, taking original edges before added ones and
/// otherwise the smallest label, then the smallest destination label.
inline euler_plan min_euler_completion(di_multigraph const& g)
{
  detail::require_edges(g);

  auto       completed  = g;
  auto const components = detail::edge_components(g);

  auto starts = std::vector<node_id>{};
  auto ends   = std::vector<node_id>{};
  for (auto const& c : components) {
    if (c.surplus.empty()) {
      starts.push_back(c.nodes.front());
      ends.push_back(c.nodes.front());
      continue;
    }
    for (std::size_t j = 0; j + 1 < c.surplus.size(); ++j)
      completed.add_edge(c.deficit[j], c.surplus[j + 1], {}, edge_origin::added);
    starts.push_back(c.surplus.front());
    ends.push_back(c.deficit.back());
  }
  for (std::size_t i = 0; i + 1 < components.size(); ++i)
    completed.add_edge(ends[i], starts[i + 1], {}, edge_origin::added);

  auto const& edges = completed.edges();
  auto adjacency = std::vector<std::vector<std::size_t>>(completed.node_count());
  for (std::size_t i = 0; i < edges.size(); ++i) adjacency[edges[i].src].push_back(i);
  for (auto& out : adjacency) {
    std::ranges::sort(out, [&](std::size_t a, std::size_t b) {
      auto const& ea = edges[a];
      auto const& eb = edges[b];
      if (ea.origin != eb.origin) return ea.origin == edge_origin::original;
      if (ea.label != eb.label) return ea.label < eb.label;
      if (ea.dst != eb.dst) return completed.label(ea.dst) < completed.label(eb.dst);
      return a < b;
    });
  }

  constexpr auto none  = std::numeric_limits<std::size_t>::max();
  auto           next  = std::vector<std::size_t>(completed.node_count(), 0);
  auto           stack = std::vector<std::pair<node_id, std::size_t>>{{starts.front(), none}};
  auto           path  = std::vector<std::size_t>{};
  path.reserve(edges.size());
  while (!stack.empty()) {
    auto const [v, via] = stack.back();
    if (next[v] < adjacency[v].size()) {
      auto const e = adjacency[v][next[v]++];
      stack.emplace_back(edges[e].dst, e);
    } else {
      if (via != none) path.push_back(via);
      stack.pop_back();
    }
  }
  std::ranges::reverse(path);
  assert(path.size() == edges.size());

  return {std::move(completed), std::move(path), starts.front()};
}

/// A 2-SCS instance: two-symbol strings, each required `multiplicity` times.
struct pair_2scs {
  struct entry {
    char        first;
    char        second;
    std::size_t multiplicity = 1;
  };

  std::vector<entry> pairs;
};

/// The graph with one node per symbol and `multiplicity` parallel edges per
/// pair.
inline di_multigraph pair_graph(pair_2scs const& p)
{
  auto g = di_multigraph(1);
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    auto const& e = p.pairs[i];
    if (e.multiplicity == 0)
      throw error(error_code::domain_error,
                  "pair " + std::to_string(i) + " has multiplicity 0", i);
    auto const src = g.add_node(std::string(1, e.first));
    auto const dst = g.add_node(std::string(1, e.second));
    for (std::size_t m = 0; m < e.multiplicity; ++m)
      g.add_edge(src, dst, std::string{e.first, e.second});
  }
  return g;
}

/// Shortest string containing every pair consecutively at least its
/// multiplicity times: the node symbols along a minimum eulerian completion.
inline std::string solve_2scs(pair_2scs const& p)
{
  auto const plan = min_euler_completion(pair_graph(p));
  auto       out  = plan.graph.label(plan.start);
  for (auto const idx : plan.sequence)
    out += plan.graph.label(plan.graph.edges()[idx].dst);
  return out;
}

} // namespace superstring

#endif
