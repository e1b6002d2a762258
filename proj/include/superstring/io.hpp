// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#ifndef SUPERSTRING_IO_HPP
#define SUPERSTRING_IO_HPP

#include <superstring/core.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace superstring::io {

enum class input_format { lines, fasta };

namespace detail {

  inline std::string_view rstrip(std::string_view s)
  {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  }

} // namespace detail

/// One string per line; trailing whitespace stripped, blank lines skipped.
inline std::vector<std::string> read_lines(std::istream& in)
{
  auto out  = std::vector<std::string>{};
  auto line = std::string{};
  while (std::getline(in, line)) {
    auto const s = detail::rstrip(line);
    if (!s.empty()) out.emplace_back(s);
  }
  return out;
}

/// FASTA records: `>` header lines, sequence lines concatenated and
/// uppercased. `;` lines are comments.
inline std::vector<std::string> read_fasta(std::istream& in)
{
  auto out         = std::vector<std::string>{};
  auto line        = std::string{};
  auto header_line = std::size_t{0};
  bool in_record   = false;

  auto const close_record = [&] {
    if (in_record && out.back().empty())
      throw error(error_code::parse_error,
                  "line " + std::to_string(header_line) + ": record has no sequence",
                  header_line);
  };

  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto const s = detail::rstrip(line);
    if (s.empty() || s.front() == ';') continue;
    if (s.front() == '>') {
      close_record();
      out.emplace_back();
      in_record   = true;
      header_line = lineno;
      continue;
    }
    if (!in_record)
      throw error(error_code::parse_error,
                  "line " + std::to_string(lineno) + ": sequence data before first header",
                  lineno);
    for (char const c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      out.back().push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  close_record();
  return out;
}

inline instance parse_input(std::istream& in, input_format format)
{
  return validate_instance(format == input_format::lines ? read_lines(in)
                                                         : read_fasta(in));
}

inline instance parse_input(std::string const& path, input_format format)
{
  auto in = std::ifstream(path);
  if (!in) throw error(error_code::io_error, "cannot open '" + path + "'");
  return parse_input(in, format);
}

inline void write_lines(std::ostream& os, instance const& inst)
{
  for (auto const& s : inst.strings()) os << s << '\n';
}

/// Symbols used by the generator; the first four spell DNA.
inline constexpr std::string_view generator_alphabet = "ACGTBDEFHIJKLMNOPQRSUVWXYZ";

struct generation_config {
  std::size_t                n             = 7;
  std::size_t                r             = 5;
  std::size_t                alphabet_size = 4;
  std::uint64_t              seed          = 1;
  std::optional<std::size_t> reference_length = std::nullopt; // read-simulation mode when set
};

struct generated {
  instance    inst;
  std::string reference; // empty in uniform mode
};

/// Deterministic random instance. Uniform mode draws distinct random
/// r-strings; reference mode draws distinct r-substrings of one random
/// reference string.
inline generated generate(generation_config const& cfg)
{
  auto const sigma = cfg.alphabet_size;
  if (sigma == 0 || sigma > generator_alphabet.size())
    throw error(error_code::infeasible_generation,
                "alphabet size must be in [1, "
                  + std::to_string(generator_alphabet.size()) + "]");

  // sigma^r >= n, computed without overflow
  std::size_t distinct = 1;
  for (std::size_t i = 0; i < cfg.r && distinct < cfg.n; ++i) distinct *= sigma;
  if (cfg.n == 0 || distinct < cfg.n)
    throw error(error_code::infeasible_generation,
                std::to_string(sigma) + "^" + std::to_string(cfg.r)
                  + " strings cannot hold " + std::to_string(cfg.n) + " distinct ones");
  if (cfg.r < 2)
    throw error(error_code::infeasible_generation, "strings must have length >= 2");

  auto rng    = std::mt19937_64(cfg.seed);
  auto symbol = std::uniform_int_distribution<std::size_t>(0, sigma - 1);
  auto random_string = [&](std::size_t len) {
    auto s = std::string(len, ' ');
    for (auto& c : s) c = generator_alphabet[symbol(rng)];
    return s;
  };

  auto out  = std::vector<std::string>{};
  auto seen = std::set<std::string>{};

  if (!cfg.reference_length) {
    while (out.size() < cfg.n) {
      auto s = random_string(cfg.r);
      if (seen.insert(s).second) out.push_back(std::move(s));
    }
    return {validate_instance(std::move(out)), {}};
  }

  auto const len = *cfg.reference_length;
  if (len < cfg.r)
    throw error(error_code::infeasible_generation,
                "reference length " + std::to_string(len) + " is shorter than r");
  auto const reference = random_string(len);
  auto       windows   = std::set<std::string>{};
  for (std::size_t p = 0; p + cfg.r <= len; ++p) windows.insert(reference.substr(p, cfg.r));
  if (windows.size() < cfg.n)
    throw error(error_code::infeasible_generation,
                "reference has only " + std::to_string(windows.size())
                  + " distinct windows, need " + std::to_string(cfg.n));

  auto position = std::uniform_int_distribution<std::size_t>(0, len - cfg.r);
  while (out.size() < cfg.n) {
    auto s = reference.substr(position(rng), cfg.r);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return {validate_instance(std::move(out)), reference};
}

inline instance generate_instance(generation_config const& cfg)
{
  return generate(cfg).inst;
}

} // namespace superstring::io

#endif
