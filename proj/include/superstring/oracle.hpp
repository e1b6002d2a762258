// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef SUPERSTRING_ORACLE_HPP
#define SUPERSTRING_ORACLE_HPP

#include <superstring/core.hpp>
#include <superstring/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace superstring {

inline constexpr std::size_t default_opt_cap = 20;

/// A maximum-weight hamiltonian path of the overlap graph. Its weight is the
/// largest achievable compression, so `opt_length` is the length of a
/// shortest superstring and `superstring` spells one.
struct hamiltonian_result {
  std::vector<std::size_t> order;
  std::size_t              weight     = 0;
  std::size_t              opt_length = 0;
  std::string              superstring;
};

namespace detail {

  /// Subset dynamic programme over (visited set, last node). `Cell` must
  /// hold the largest path weight and a -1 marker for unreachable states.
  template <typename Cell>
  std::vector<std::size_t> held_karp_order(overlap_graph const& og)
  {
    auto const     n      = og.size();
    auto const     full   = (std::size_t{1} << n) - 1;
    constexpr Cell absent = -1;
    auto           dp     = std::vector<Cell>((full + 1) * n, absent);
    auto const at = [&](std::size_t mask, std::size_t last) -> Cell& {
      return dp[mask * n + last];
    };

    for (std::size_t v = 0; v < n; ++v) at(std::size_t{1} << v, v) = 0;
    for (std::size_t mask = 1; mask <= full; ++mask) {
      for (std::size_t last = 0; last < n; ++last) {
        auto const here = at(mask, last);
        if (here == absent) continue;
        for (std::size_t next = 0; next < n; ++next) {
          if (mask & (std::size_t{1} << next)) continue;
          auto const candidate =
            static_cast<Cell>(here + static_cast<Cell>(og.weight(last, next)));
          auto& slot = at(mask | (std::size_t{1} << next), next);
          if (candidate > slot) slot = candidate;
        }
      }
    }

    std::size_t last = 0;
    for (std::size_t v = 1; v < n; ++v)
      if (at(full, v) > at(full, last)) last = v;

    auto order = std::vector<std::size_t>{last};
    auto mask  = full;
    while (order.size() < n) {
      auto const rest = mask & ~(std::size_t{1} << last);
      for (std::size_t prev = 0; prev < n; ++prev) {
        if (!(rest & (std::size_t{1} << prev)) || at(rest, prev) == absent) continue;
        if (at(rest, prev) + static_cast<Cell>(og.weight(prev, last)) == at(mask, last)) {
          order.push_back(prev);
          mask = rest;
          last = prev;
          break;
        }
      }
    }
    return {order.rbegin(), order.rend()};
  }

} // namespace detail

inline hamiltonian_result heldkarp_opt(instance const&   inst,
                                       std::size_t const cap = default_opt_cap)
{
  if (inst.n() > cap)
    throw error(error_code::instance_too_large,
                "exact optimum limited to n <= " + std::to_string(cap)
                  + ", got n = " + std::to_string(inst.n()));
  if (inst.n() >= std::numeric_limits<std::size_t>::digits)
    throw error(error_code::instance_too_large,
                "subset table cannot index n = " + std::to_string(inst.n()));

  auto const og        = build_overlap_graph(inst);
  auto const max_total = (inst.r() - 1) * inst.n();
  auto const order =
    max_total < std::size_t(std::numeric_limits<std::int16_t>::max())
      ? detail::held_karp_order<std::int16_t>(og)
    : max_total < std::size_t(std::numeric_limits<std::int32_t>::max())
      ? detail::held_karp_order<std::int32_t>(og)
      : detail::held_karp_order<std::int64_t>(og);

  auto result  = hamiltonian_result{};
  result.order = order;
  result.superstring = inst[order.front()];
  for (std::size_t i = 1; i < order.size(); ++i) {
    auto const w = og.weight(order[i - 1], order[i]);
    result.weight += w;
    result.superstring.append(std::string_view(inst[order[i]]).substr(w));
  }
  result.opt_length = inst.r() * inst.n() - result.weight;
  return result;
}

/// Repeatedly merges the two distinct strings with the largest maximum
/// overlap. Ties go to the pair whose merge is lexicographically smallest.
inline superstring_solution greedy_scs(instance const& inst)
{
  auto pool = std::vector<std::string>(inst.strings().begin(), inst.strings().end());
  auto const m = pool.size();
  auto ov      = std::vector<std::size_t>(m * m, 0);
  auto alive   = std::vector<bool>(m, true);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) ov[i * m + j] = max_overlap(pool[i], pool[j]);

  for (std::size_t remaining = m; remaining > 1; --remaining) {
    std::size_t best_i = m, best_j = m, best_w = 0;
    auto        best_merge = std::string{};
    for (std::size_t i = 0; i < m; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || !alive[j]) continue;
        auto const w = ov[i * m + j];
        if (best_i != m && w < best_w) continue;
        auto merged = pool[i] + pool[j].substr(w);
        if (best_i != m && w == best_w && merged >= best_merge) continue;
        best_i = i, best_j = j, best_w = w;
        best_merge = std::move(merged);
      }
    }

    pool[best_i]  = std::move(best_merge);
    alive[best_j] = false;
    pool[best_j].clear();
    for (std::size_t x = 0; x < m; ++x) {
      if (!alive[x] || x == best_i) continue;
      ov[best_i * m + x] = max_overlap(pool[best_i], pool[x]);
      ov[x * m + best_i] = max_overlap(pool[x], pool[best_i]);
    }
  }

  for (std::size_t i = 0; i < m; ++i)
    if (alive[i]) return make_solution(inst, std::move(pool[i]), {algorithm_kind::greedy});
  return make_solution(inst, {}, {algorithm_kind::greedy});
}

/// Overlap counts of a hierarchical solution against a hamiltonian path.
/// t1/t2 are the realized overlaps of length r-1/r-2 in the solution;
/// vbar1/vbar2 the path edges of those weights, v the lighter path edges.
struct overlap_usage_report {
  std::size_t t1    = 0;
  std::size_t t2    = 0;
  std::size_t t     = 0;
  std::size_t vbar1 = 0;
  std::size_t vbar2 = 0;
  std::size_t vbar  = 0;
  std::size_t v     = 0;

  bool property_holds() const noexcept { return t >= vbar; }
};

inline overlap_usage_report overlap_usage(superstring_solution const& sol,
                                          instance const&             inst,
                                          hamiltonian_result const&   h)
{
  if (!sol.trace || sol.trace->levels.empty())
    throw error(error_code::missing_trace,
                "solution '" + sol.algorithm.name() + "' carries no level trace");

  auto report = overlap_usage_report{};
  auto const& levels = sol.trace->levels;
  report.t1 = levels[0].junctions;
  report.t2 = levels.size() > 1 ? levels[1].junctions : 0;
  report.t  = report.t1 + report.t2;

  auto const r = inst.r();
  for (std::size_t i = 1; i < h.order.size(); ++i) {
    auto const w = max_overlap(inst[h.order[i - 1]], inst[h.order[i]]);
    if (w == r - 1)
      ++report.vbar1;
    else if (w + 2 == r)
      ++report.vbar2;
    else
      ++report.v;
  }
  report.vbar = report.vbar1 + report.vbar2;
  return report;
}

} // namespace superstring

#endif
