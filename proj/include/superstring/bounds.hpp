// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef SUPERSTRING_BOUNDS_HPP
#define SUPERSTRING_BOUNDS_HPP

#include <superstring/core.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace superstring::bounds {

/// Best approximation ratio known for general SCS, 2 + 11/30.
inline constexpr double general_bound = 2.0 + 11.0 / 30.0;

namespace detail {

  inline void require_domain(int r, double x, int min_r)
  {
    if (r < min_r)
      throw error(error_code::domain_error,
                  "r must be >= " + std::to_string(min_r) + ", got "
                    + std::to_string(r));
    if (!(x >= 0.0) || x >= r)
      throw error(error_code::domain_error,
                  "x must lie in [0, r), got " + std::to_string(x));
  }

} // namespace detail

/// Ratio of the two-level hierarchical algorithm at x = w(H)/n.
inline double hier_term(int r, double x)
{
  detail::require_domain(r, x, 3);
  return (4.0 + (r - 2) * (r - x - 1.0)) / (2.0 * (r - x));
}

/// Ratio of the single-level (r-1)-spectrum algorithm.
inline double golovnev_term(int r, double x)
{
  detail::require_domain(r, x, 2);
  return (double(r) * r - 2.0 * r + 2.0 - (r - 1) * x) / (r - x);
}

/// Ratio obtained from a 2/3-approximate maximum hamiltonian path.
inline double atsp_term(int r, double x)
{
  detail::require_domain(r, x, 2);
  return (r - 2.0 / 3.0 * x) / (r - x);
}

/// Ratio of the `levels`-level algorithm when every merged overlap is only
/// credited with the smallest one, r - levels. Equals hier_term at 2 levels.
inline double level_term(int r, double x, int levels)
{
  detail::require_domain(r, x, 3);
  if (levels < 2 || levels > r - 1)
    throw error(error_code::domain_error,
                "levels must lie in [2, r-1], got " + std::to_string(levels));
  double const l = levels;
  return (l * l + (r - l) * (r - x - 1.0)) / (l * (r - x));
}

struct envelope_optimum {
  double value  = 0.0;
  double argmax = 0.0;
};

using term_fn = std::function<double(double)>;

/// max over x in [lo, hi] of min over `terms`.
///
/// Scans a uniform grid, then adds every pairwise crossing of two terms that
/// a grid cell brackets, located by bisection. A pointwise minimum of
/// monotone pieces peaks at a crossing or an endpoint, so the candidate set
/// contains the optimum. Ties keep the smallest x.
inline envelope_optimum maximize_envelope(std::vector<term_fn> const& terms,
                                          double lo, double hi,
                                          double grid_step = 1e-4)
{
  auto const envelope = [&](double x) {
    auto m = terms.front()(x);
    for (std::size_t i = 1; i < terms.size(); ++i) m = std::min(m, terms[i](x));
    return m;
  };

  auto best     = envelope_optimum{envelope(lo), lo};
  auto consider = [&](double x) {
    auto const v = envelope(x);
    if (v > best.value || (v == best.value && x < best.argmax)) best = {v, x};
  };

  auto const cells = std::max<std::size_t>(1, std::size_t(std::ceil((hi - lo) / grid_step)));
  auto const x_at = [&](std::size_t i) {
    return i == cells ? hi : lo + (hi - lo) * double(i) / double(cells);
  };
  auto values = std::vector<double>(terms.size());
  auto next   = std::vector<double>(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) values[t] = terms[t](lo);

  for (std::size_t i = 0; i < cells; ++i) {
    auto const a = x_at(i);
    auto const b = x_at(i + 1);
    for (std::size_t t = 0; t < terms.size(); ++t) next[t] = terms[t](b);
    consider(b);

    for (std::size_t p = 0; p < terms.size(); ++p) {
      for (std::size_t q = p + 1; q < terms.size(); ++q) {
        auto const da = values[p] - values[q];
        auto const db = next[p] - next[q];
        if (!(da * db < 0.0)) continue;
        auto left = a, right = b;
        for (int it = 0; it < 200 && right - left > 0.0; ++it) {
          auto const mid = 0.5 * (left + right);
          if (mid <= left || mid >= right) break;
          auto const dm = terms[p](mid) - terms[q](mid);
          if ((dm < 0.0) == (da < 0.0))
            left = mid;
          else
            right = mid;
        }
        consider(left);
        consider(right);
      }
    }
    values.swap(next);
  }
  return best;
}

/// Single-level ratio: max over x of min(golovnev, atsp), for r >= 2.
inline envelope_optimum alpha(int r)
{
  if (r < 2)
    throw error(error_code::domain_error, "alpha needs r >= 2, got " + std::to_string(r));
  return maximize_envelope(
    {[r](double x) { return golovnev_term(r, x); },
     [r](double x) { return atsp_term(r, x); }},
    0.0, r - 1.0);
}

/// Two-level ratio: max over x of min(hier, golovnev, atsp), for r >= 3.
inline envelope_optimum beta(int r)
{
  if (r < 3)
    throw error(error_code::domain_error, "beta needs r >= 3, got " + std::to_string(r));
  return maximize_envelope(
    {[r](double x) { return hier_term(r, x); },
     [r](double x) { return golovnev_term(r, x); },
     [r](double x) { return atsp_term(r, x); }},
    0.0, r - 1.0);
}

struct bound_report {
  int    r              = 0;
  double alpha          = 0.0;
  double beta           = 0.0;
  double argmax_x_alpha = 0.0;
  double argmax_x_beta  = 0.0;
  double general_bound  = bounds::general_bound;
};

inline bound_report report(int r)
{
  auto const a = alpha(r);
  auto const b = beta(r);
  return {r, a.value, b.value, a.argmax, b.argmax, general_bound};
}

struct curve_sample {
  double x;
  double term_hier;
  double term_golovnev;
  double term_atsp;
  double envelope;
  std::vector<std::optional<double>> level_terms; // aligned with ratio_curve::levels
};

struct ratio_curve {
  int                       r = 0;
  std::vector<int>          levels; // extra levels (>= 3) sampled per x
  std::vector<curve_sample> samples;
};

/// Samples every term on x = 0, step, 2*step, ... <= r-1 for each r in
/// [r_min, r_max]. Level 2 is the hier term itself; other requested levels
/// get their own column, empty where the level exceeds r-1.
inline std::vector<ratio_curve> emit_curves(int r_min, int r_max,
                                            std::vector<int> const& levels,
                                            double step)
{
  if (r_min < 3 || r_min > r_max)
    throw error(error_code::domain_error,
                "need 3 <= r_min <= r_max, got [" + std::to_string(r_min) + ", "
                  + std::to_string(r_max) + "]");
  if (!(step > 0.0))
    throw error(error_code::domain_error, "sampling step must be positive");

  auto extra = std::set<int>{};
  for (auto const l : levels) {
    if (l < 2)
      throw error(error_code::domain_error,
                  "levels must be >= 2, got " + std::to_string(l));
    if (l != 2) extra.insert(l);
  }

  auto curves = std::vector<ratio_curve>{};
  for (int r = r_min; r <= r_max; ++r) {
    auto         curve = ratio_curve{r, {extra.begin(), extra.end()}, {}};
    double const hi    = r - 1.0;
    for (std::size_t i = 0;; ++i) {
      auto x = double(i) * step;
      if (x > hi * (1.0 + 1e-12)) break;
      x = std::min(x, hi);
      auto s = curve_sample{x, hier_term(r, x), golovnev_term(r, x), atsp_term(r, x), 0.0, {}};
      s.envelope = std::min({s.term_hier, s.term_golovnev, s.term_atsp});
      for (auto const l : curve.levels)
        s.level_terms.push_back(l <= r - 1 ? std::optional(level_term(r, x, l))
                                           : std::nullopt);
      curve.samples.push_back(std::move(s));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

namespace detail {

  inline std::string format_double(double v)
  {
    char buf[64];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
  }

} // namespace detail

/// CSV with header `r,x,term_hier,term_golovnev,term_atsp,envelope` followed
/// by one `term_l<L>` column per extra level. Shortest round-trip decimals,
/// LF line endings.
inline void write_curves_csv(std::ostream& os, std::vector<ratio_curve> const& curves)
{
  auto levels = std::set<int>{};
  for (auto const& c : curves) levels.insert(c.levels.begin(), c.levels.end());

  os << "r,x,term_hier,term_golovnev,term_atsp,envelope";
  for (auto const l : levels) os << ",term_l" << l;
  os << '\n';

  using detail::format_double;
  for (auto const& c : curves) {
    for (auto const& s : c.samples) {
      os << c.r << ',' << format_double(s.x) << ',' << format_double(s.term_hier)
         << ',' << format_double(s.term_golovnev) << ','
         << format_double(s.term_atsp) << ',' << format_double(s.envelope);
      for (auto const l : levels) {
        os << ',';
        auto const it = std::ranges::find(c.levels, l);
        if (it == c.levels.end()) continue;
        auto const& v = s.level_terms[std::size_t(it - c.levels.begin())];
        if (v) os << format_double(*v);
      }
      os << '\n';
    }
  }
}

} // namespace superstring::bounds

#endif
