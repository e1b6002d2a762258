// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef SUPERSTRING_HIERARCHY_HPP
#define SUPERSTRING_HIERARCHY_HPP

#include <superstring/core.hpp>
#include <superstring/euler.hpp>
#include <superstring/graph.hpp>

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>

namespace superstring {

namespace detail {

  inline void require_debruijn_length(instance const& inst)
  {
    if (inst.r() < 3)
      throw error(error_code::r_too_small,
                  "hierarchical algorithms need r >= 3, got r = "
                    + std::to_string(inst.r()));
  }

  inline level_record record_level(std::size_t level, di_multigraph const& g,
                                   euler_plan const& plan, std::size_t contigs,
                                   std::size_t length)
  {
    return {
      .level       = level,
      .k           = g.k(),
      .nodes       = g.node_count(),
      .edges       = g.edge_count(),
      .added_edges = plan.graph.edge_count() - g.edge_count(),
      .contigs     = contigs,
      .junctions   = count_junctions(plan),
      .length      = length,
    };
  }

} // namespace detail

/// Solves every level from overlap r-1 down to r-levels. Each level builds a
/// spectrum graph on the previous level's contigs (the instance strings for
/// level 1), completes it to an eulerian path and cuts the walk into new
/// contigs; the last level's walk is spelled out as the superstring.
inline superstring_solution solve_hierarchical(instance const& inst,
                                               std::size_t     levels)
{
  detail::require_debruijn_length(inst);
  if (levels < 1 || levels > inst.r() - 2)
    throw error(error_code::bad_level_count,
                "level count must be in [1, " + std::to_string(inst.r() - 2)
                  + "], got " + std::to_string(levels));

  auto trace   = hierarchy_trace{};
  auto contigs = contig_set{};
  auto text    = std::string{};
  for (std::size_t level = 1; level <= levels; ++level) {
    auto const k     = inst.r() - level;
    auto const graph = level == 1 ? build_debruijn(inst)
                                  : build_generalized_spectrum(contigs, k);
    auto const plan  = min_euler_completion(graph);
    contigs          = extract_contigs(plan, k);

    std::size_t length = 0;
    for (auto const& c : contigs.contigs) length += c.size();
    trace.levels.push_back(
      detail::record_level(level, graph, plan, contigs.contigs.size(), length));

    if (level == levels) text = expand_path(plan, k);
  }
  assert(text.size() == trace.levels.back().length);

  auto tag = levels == 1   ? algorithm_tag{algorithm_kind::tau}
             : levels == 2 ? algorithm_tag{algorithm_kind::gamma}
                           : algorithm_tag{algorithm_kind::hierarchical, levels};
  return make_solution(inst, std::move(text), tag, std::move(trace));
}

/// One-step solution: the de Bruijn graph on the (r-1)-spectrum, completed
/// and spelled out.
inline superstring_solution solve_tau(instance const& inst)
{
  detail::require_debruijn_length(inst);
  auto const graph = build_debruijn(inst);
  auto const plan  = min_euler_completion(graph);
  auto       text  = expand_path(plan, graph.k());

  auto trace = hierarchy_trace{};
  trace.levels.push_back(detail::record_level(
    1, graph, plan, extract_contigs(plan, graph.k()).contigs.size(),
    text.size()));
  return make_solution(inst, std::move(text), {algorithm_kind::tau},
                       std::move(trace));
}

/// Two-step solution: contigs of the (r-1) stage are re-assembled on the
/// generalized (r-2)-spectrum of their ends.
inline superstring_solution solve_gamma(instance const& inst)
{
  detail::require_debruijn_length(inst);
  auto trace = hierarchy_trace{};

  auto const first      = build_debruijn(inst);
  auto const first_plan = min_euler_completion(first);
  auto const contigs    = extract_contigs(first_plan, first.k());

  std::size_t first_length = 0;
  for (auto const& c : contigs.contigs) {
    assert(c.size() >= inst.r());
    first_length += c.size();
  }
  trace.levels.push_back(detail::record_level(
    1, first, first_plan, contigs.contigs.size(), first_length));

  auto const second      = build_generalized_spectrum(contigs, inst.r() - 2);
  auto const second_plan = min_euler_completion(second);
  auto       text        = expand_path(second_plan, second.k());
  trace.levels.push_back(detail::record_level(
    2, second, second_plan,
    extract_contigs(second_plan, second.k()).contigs.size(), text.size()));

  return make_solution(inst, std::move(text), {algorithm_kind::gamma},
                       std::move(trace));
}

} // namespace superstring

#endif
