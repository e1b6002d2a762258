// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef SUPERSTRING_CORE_HPP
#define SUPERSTRING_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace superstring {

enum class error_code {
  empty_input,
  unequal_lengths,
  duplicate_string,
  r_too_small,
  contig_too_short,
  empty_graph,
  bad_level_count,
  instance_too_large,
  missing_trace,
  domain_error,
  io_error,
  parse_error,
  infeasible_generation,
};

constexpr std::string_view to_string(error_code code) noexcept
{
  switch (code) {
    case error_code::empty_input: return "EmptyInput";
    case error_code::unequal_lengths: return "UnequalLengths";
    case error_code::duplicate_string: return "DuplicateString";
    case error_code::r_too_small: return "RTooSmall";
    case error_code::contig_too_short: return "ContigTooShort";
    case error_code::empty_graph: return "EmptyGraph";
    case error_code::bad_level_count: return "BadLevelCount";
    case error_code::instance_too_large: return "InstanceTooLarge";
    case error_code::missing_trace: return "MissingTrace";
    case error_code::domain_error: return "DomainError";
    case error_code::io_error: return "IoError";
    case error_code::parse_error: return "ParseError";
    case error_code::infeasible_generation: return "InfeasibleGeneration";
  }
  return "Unknown";
}

/// Every failure raised by the library. `index` names the offending input
/// element (string index, contig index, line number) when there is one.
class error : public std::runtime_error {
public:
  error(error_code code, std::string const& what,
        std::optional<std::size_t> index = std::nullopt)
    : std::runtime_error(std::string(to_string(code)) + ": " + what)
    , code_(code)
    , index_(index)
  {}

  error_code code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

private:
  error_code                 code_;
  std::optional<std::size_t> index_;
};

inline std::string_view prefix(std::string_view w, std::size_t k)
{
  return w.substr(0, k);
}

inline std::string_view suffix(std::string_view w, std::size_t k)
{
  return w.substr(w.size() - k);
}

/// Length of the longest suffix of `u` that is also a prefix of `v`, capped
/// at min(|u|, |v|) - 1 so containment is never reported.
///
/// Runs the Knuth-Morris-Pratt automaton of `v` over `u`: the state after the
/// last character of `u` is the longest prefix of `v` ending there.
inline std::size_t max_overlap(std::string_view u, std::string_view v)
{
  if (u.empty() || v.empty()) return 0;

  auto failure = std::vector<std::size_t>(v.size(), 0);
  for (std::size_t i = 1, k = 0; i < v.size(); ++i) {
    while (k > 0 && v[i] != v[k]) k = failure[k - 1];
    if (v[i] == v[k]) ++k;
    failure[i] = k;
  }

  std::size_t state = 0;
  for (char const c : u) {
    if (state == v.size()) state = failure[state - 1];
    while (state > 0 && c != v[state]) state = failure[state - 1];
    if (c == v[state]) ++state;
  }

  auto const cap = std::min(u.size(), v.size()) - 1;
  while (state > cap) state = failure[state - 1];
  return state;
}

/// u followed by v with their maximum overlap merged.
inline std::string merge(std::string_view u, std::string_view v)
{
  auto out = std::string(u);
  out.append(v.substr(max_overlap(u, v)));
  return out;
}

/// A validated r-SCS input: n >= 1 pairwise distinct strings of one length
/// r >= 2.
class instance {
public:
  std::span<std::string const> strings() const noexcept { return strings_; }
  std::string const& operator[](std::size_t i) const { return strings_[i]; }
  std::size_t r() const noexcept { return strings_.front().size(); }
  std::size_t n() const noexcept { return strings_.size(); }

  friend bool operator==(instance const&, instance const&) = default;

  friend instance validate_instance(std::vector<std::string> raw);

private:
  explicit instance(std::vector<std::string> strings)
    : strings_(std::move(strings))
  {}

  std::vector<std::string> strings_;
};

inline instance validate_instance(std::vector<std::string> raw)
{
  if (raw.empty()) throw error(error_code::empty_input, "no input strings");

  auto const r = raw.front().size();
  if (r < 2)
    throw error(error_code::r_too_small, "strings must have length >= 2", 0);

  auto seen = std::unordered_set<std::string_view>{};
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != r)
      throw error(error_code::unequal_lengths,
                  "string " + std::to_string(i) + " has length "
                    + std::to_string(raw[i].size()) + ", expected "
                    + std::to_string(r),
                  i);
    if (!seen.insert(raw[i]).second)
      throw error(error_code::duplicate_string,
                  "string " + std::to_string(i) + " (" + raw[i]
                    + ") occurs more than once",
                  i);
  }
  return instance(std::move(raw));
}

inline bool is_superstring(std::string_view text, instance const& inst)
{
  return std::ranges::all_of(inst.strings(), [text](auto const& s) {
    return text.find(s) != std::string_view::npos;
  });
}

enum class algorithm_kind { naive, greedy, tau, gamma, hierarchical, opt };

struct algorithm_tag {
  algorithm_kind kind   = algorithm_kind::naive;
  std::size_t    levels = 0; // only for hierarchical

  std::string name() const
  {
    switch (kind) {
      case algorithm_kind::naive: return "naive";
      case algorithm_kind::greedy: return "greedy";
      case algorithm_kind::tau: return "tau";
      case algorithm_kind::gamma: return "gamma";
      case algorithm_kind::hierarchical:
        return "hier:" + std::to_string(levels);
      case algorithm_kind::opt: return "opt";
    }
    return "unknown";
  }

  friend bool operator==(algorithm_tag const&, algorithm_tag const&) = default;
};

/// One stage of a hierarchical run. `junctions` counts the places where two
/// consecutive original edges of the stage's eulerian plan were merged on
/// their shared k-mer, i.e. overlaps of exactly `k` realized in the output.
struct level_record {
  std::size_t level;
  std::size_t k;
  std::size_t nodes;
  std::size_t edges;
  std::size_t added_edges;
  std::size_t contigs;
  std::size_t junctions;
  std::size_t length;
};

struct hierarchy_trace {
  std::vector<level_record> levels;
};

struct superstring_solution {
  std::string                    text;
  algorithm_tag                  algorithm;
  std::size_t                    naive_length = 0;
  std::optional<hierarchy_trace> trace;

  std::size_t length() const noexcept { return text.size(); }
  std::size_t compression() const noexcept { return naive_length - text.size(); }
};

inline superstring_solution
make_solution(instance const& inst, std::string text, algorithm_tag tag,
              std::optional<hierarchy_trace> trace = std::nullopt)
{
  return {std::move(text), tag, inst.r() * inst.n(), std::move(trace)};
}

inline superstring_solution naive_concat(instance const& inst)
{
  auto text = std::string{};
  text.reserve(inst.r() * inst.n());
  for (auto const& s : inst.strings()) text += s;
  return make_solution(inst, std::move(text), {algorithm_kind::naive});
}

} // namespace superstring

#endif
