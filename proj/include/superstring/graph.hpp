// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef SUPERSTRING_GRAPH_HPP
#define SUPERSTRING_GRAPH_HPP

#include <superstring/core.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace superstring {

/// Dense table of pairwise maximum overlaps between instance strings.
class overlap_graph {
public:
  explicit overlap_graph(instance const& inst)
    : n_(inst.n())
    , weights_(n_ * n_, 0)
  {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j) weights_[i * n_ + j] = max_overlap(inst[i], inst[j]);
  }

  std::size_t size() const noexcept { return n_; }

  std::size_t weight(std::size_t from, std::size_t to) const
  {
    return weights_[from * n_ + to];
  }

private:
  std::size_t              n_;
  std::vector<std::size_t> weights_;
};

inline overlap_graph build_overlap_graph(instance const& inst)
{
  return overlap_graph(inst);
}

using node_id = std::size_t;

enum class edge_origin { original, added };

struct di_edge {
  node_id     src;
  node_id     dst;
  std::string label; // empty for added edges
  edge_origin origin = edge_origin::original;
};

/// Directed multigraph over string-labelled nodes. Node labels are unique;
/// parallel edges and self loops are allowed. `k` is the overlap length that
/// consecutive original edges share through their common node.
class di_multigraph {
public:
  explicit di_multigraph(std::size_t k = 0)
    : k_(k)
  {}

  std::size_t k() const noexcept { return k_; }

  node_id add_node(std::string_view label)
  {
    auto [it, inserted] = index_.try_emplace(std::string(label), labels_.size());
    if (inserted) labels_.emplace_back(label);
    return it->second;
  }

  std::size_t add_edge(node_id src, node_id dst, std::string label,
                       edge_origin origin = edge_origin::original)
  {
    edges_.push_back({src, dst, std::move(label), origin});
    return edges_.size() - 1;
  }

  /// Edge for string `w`, from pref(w, k) to suff(w, k).
  std::size_t add_string_edge(std::string_view w)
  {
    auto const src = add_node(prefix(w, k_));
    auto const dst = add_node(suffix(w, k_));
    return add_edge(src, dst, std::string(w));
  }

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::string const& label(node_id v) const { return labels_[v]; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  std::vector<di_edge> const& edges() const noexcept { return edges_; }

  std::optional<node_id> find(std::string_view label) const
  {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

private:
  std::size_t                    k_;
  std::vector<std::string>       labels_;
  std::map<std::string, node_id> index_;
  std::vector<di_edge>           edges_;
};

/// de Bruijn graph on the (r-1)-spectrum: one edge per instance string.
inline di_multigraph build_debruijn(instance const& inst)
{
  if (inst.r() < 3)
    throw error(error_code::r_too_small,
                "de Bruijn construction needs r >= 3, got r = "
                  + std::to_string(inst.r()));
  auto g = di_multigraph(inst.r() - 1);
  for (auto const& s : inst.strings()) g.add_string_edge(s);
  return g;
}

struct contig_set {
  std::vector<std::string> contigs;
  std::size_t              source_k = 0;
};

/// Spectrum graph whose k-mers are only the k-length prefixes and suffixes
/// of the contigs; one edge per contig occurrence.
inline di_multigraph build_generalized_spectrum(contig_set const& cs,
                                                std::size_t       k)
{
  auto g = di_multigraph(k);
  for (std::size_t i = 0; i < cs.contigs.size(); ++i) {
    if (cs.contigs[i].size() < k + 1)
      throw error(error_code::contig_too_short,
                  "contig " + std::to_string(i) + " has length "
                    + std::to_string(cs.contigs[i].size())
                    + ", needs at least " + std::to_string(k + 1),
                  i);
    g.add_string_edge(cs.contigs[i]);
  }
  return g;
}

/// An eulerian walk over a completed graph. Edges of `graph` with origin
/// `added` were inserted by the completion; `sequence` indexes each edge of
/// `graph` exactly once.
struct euler_plan {
  di_multigraph            graph;
  std::vector<std::size_t> sequence;
  node_id                  start = 0;

  std::string const& start_node() const { return graph.label(start); }

  std::vector<di_edge> added_edges() const
  {
    auto out = std::vector<di_edge>{};
    for (auto const& e : graph.edges())
      if (e.origin == edge_origin::added) out.push_back(e);
    return out;
  }

  di_edge const& step(std::size_t i) const { return graph.edges()[sequence[i]]; }
};

namespace detail {

  template <typename OnRun>
  void for_each_run(euler_plan const& plan, std::size_t k, OnRun&& on_run)
  {
    auto current = std::string{};
    bool open    = false;
    for (auto const idx : plan.sequence) {
      auto const& e = plan.graph.edges()[idx];
      if (e.origin == edge_origin::added) {
        if (open) on_run(std::move(current));
        current.clear();
        open = false;
        continue;
      }
      if (open)
        current.append(std::string_view(e.label).substr(k));
      else
        current = e.label;
      open = true;
    }
    if (open) on_run(std::move(current));
  }

} // namespace detail

/// Spells the walk: consecutive original edges are merged on their shared
/// k-mer, an added edge contributes nothing and its neighbours are
/// concatenated.
inline std::string expand_path(euler_plan const& plan, std::size_t k)
{
  auto out = std::string{};
  detail::for_each_run(plan, k, [&](std::string run) { out += run; });
  return out;
}

/// Cuts the walk at every added edge; each maximal run of original edges
/// becomes one contig, in walk order.
inline contig_set extract_contigs(euler_plan const& plan, std::size_t k)
{
  auto cs     = contig_set{};
  cs.source_k = k;
  detail::for_each_run(plan, k,
                       [&](std::string run) { cs.contigs.push_back(std::move(run)); });
  return cs;
}

/// Number of original-original adjacencies in the walk.
inline std::size_t count_junctions(euler_plan const& plan)
{
  std::size_t junctions = 0;
  for (std::size_t i = 1; i < plan.sequence.size(); ++i)
    if (plan.step(i - 1).origin == edge_origin::original
        && plan.step(i).origin == edge_origin::original)
      ++junctions;
  return junctions;
}

/// One edge per line: `src dst label origin`. Added edges print `-` as label.
inline void write_edge_list(std::ostream& os, di_multigraph const& g)
{
  for (auto const& e : g.edges()) {
    os << g.label(e.src) << ' ' << g.label(e.dst) << ' '
       << (e.label.empty() ? std::string("-") : e.label) << ' '
       << (e.origin == edge_origin::original ? "original" : "added") << '\n';
  }
}

} // namespace superstring

#endif
