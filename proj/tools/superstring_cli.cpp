// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include <superstring/superstring.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace ss = superstring;
using json   = nlohmann::ordered_json;

namespace {

constexpr int exit_ok     = 0;
constexpr int exit_domain = 2;
constexpr int exit_usage  = 64;
constexpr int exit_io     = 74;

constexpr std::size_t elide_above = 10000;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct input_options {
  std::string path;
  std::string format = "lines";
};

void add_input(CLI::App& cmd, input_options& in)
{
  cmd.add_option("--input,-i", in.path, "Instance file")->required();
  cmd.add_option("--format", in.format, "Input format")
    ->check(CLI::IsMember({"lines", "fasta"}));
}

ss::instance load(input_options const& in)
{
  return ss::io::parse_input(in.path, in.format == "fasta" ? ss::io::input_format::fasta
                                                           : ss::io::input_format::lines);
}

ss::algorithm_tag parse_algorithm(std::string const& s)
{
  using enum ss::algorithm_kind;
  if (s == "naive") return {naive};
  if (s == "greedy") return {greedy};
  if (s == "tau") return {tau};
  if (s == "gamma") return {gamma};
  if (s == "opt") return {opt};
  if (s.starts_with("hier:")) {
    std::size_t levels = 0;
    auto const* first  = s.data() + 5;
    auto const* last   = s.data() + s.size();
    auto const [ptr, ec] = std::from_chars(first, last, levels);
    if (ec == std::errc{} && ptr == last && first != last && levels >= 1)
      return {hierarchical, levels};
  }
  throw usage_error("unknown algorithm '" + s + "'");
}

/// Held-Karp cap: the flag wins over SUPERSTRING_OPT_CAP.
std::size_t opt_cap(std::optional<std::size_t> flag)
{
  if (flag) return *flag;
  if (auto const* env = std::getenv("SUPERSTRING_OPT_CAP")) {
    std::size_t value = 0;
    auto const  end   = env + std::char_traits<char>::length(env);
    auto const [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || env == end)
      throw usage_error("SUPERSTRING_OPT_CAP is not an unsigned integer");
    return value;
  }
  return ss::default_opt_cap;
}

ss::superstring_solution run(ss::instance const& inst, ss::algorithm_tag tag,
                             std::size_t cap)
{
  using enum ss::algorithm_kind;
  switch (tag.kind) {
    case naive: return ss::naive_concat(inst);
    case greedy: return ss::greedy_scs(inst);
    case tau: return ss::solve_tau(inst);
    case gamma: return ss::solve_gamma(inst);
    case hierarchical: return ss::solve_hierarchical(inst, tag.levels);
    case opt: {
      auto h = ss::heldkarp_opt(inst, cap);
      return ss::make_solution(inst, std::move(h.superstring), tag);
    }
  }
  throw ss::error(ss::error_code::domain_error, "unhandled algorithm");
}

std::optional<std::size_t> optimum(ss::instance const& inst, std::size_t cap)
{
  if (inst.n() > cap) return std::nullopt;
  return ss::heldkarp_opt(inst, cap).opt_length;
}

json to_json(ss::instance const& inst, ss::superstring_solution const& sol,
             std::optional<std::size_t> opt)
{
  auto j           = json::object();
  j["algorithm"]   = sol.algorithm.name();
  j["n"]           = inst.n();
  j["r"]           = inst.r();
  j["superstring"] = sol.text;
  j["length"]      = sol.length();
  j["compression"] = sol.compression();
  j["opt_length"]  = opt ? json(*opt) : json(nullptr);
  j["ratio_vs_opt"] =
    opt ? json(double(sol.length()) / double(*opt)) : json(nullptr);
  return j;
}

std::string elide(std::string const& s)
{
  if (s.size() <= elide_above) return s;
  return s.substr(0, 60) + "... (" + std::to_string(s.size()) + " characters)";
}

std::string fixed(double v, int digits = 4)
{
  auto os = std::ostringstream{};
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

bool interactive() { return ::isatty(::fileno(stdout)) != 0; }

// --- solve -----------------------------------------------------------------

struct solve_options {
  input_options              input;
  std::string                algo = "gamma";
  bool                       as_json = false;
  std::optional<std::size_t> cap;
};

int cmd_solve(solve_options const& o)
{
  auto const tag  = parse_algorithm(o.algo);
  auto const cap  = opt_cap(o.cap);
  auto const inst = load(o.input);
  auto const sol  = run(inst, tag, cap);
  auto const opt  = tag.kind == ss::algorithm_kind::opt ? std::optional{sol.length()}
                                                        : optimum(inst, cap);

  if (o.as_json) {
    std::cout << to_json(inst, sol, opt).dump(2) << '\n';
    return exit_ok;
  }
  std::cout << "algorithm     " << sol.algorithm.name() << '\n'
            << "n             " << inst.n() << '\n'
            << "r             " << inst.r() << '\n'
            << "length        " << sol.length() << '\n'
            << "compression   " << sol.compression() << '\n'
            << "opt_length    " << (opt ? std::to_string(*opt) : "unavailable") << '\n'
            << "ratio_vs_opt  "
            << (opt ? fixed(double(sol.length()) / double(*opt)) : "unavailable") << '\n'
            << "superstring   " << elide(sol.text) << '\n';
  return exit_ok;
}

// --- compare ---------------------------------------------------------------

struct compare_options {
  input_options              input;
  std::vector<std::size_t>   levels;
  bool                       as_json = false;
  std::optional<std::size_t> cap;
};

struct compare_row {
  std::string                             name;
  std::optional<ss::superstring_solution> sol;
  std::string                             reason; // set when sol is empty
};

int cmd_compare(compare_options const& o)
{
  auto const cap  = opt_cap(o.cap);
  auto const inst = load(o.input);

  using enum ss::algorithm_kind;
  auto tags = std::vector<ss::algorithm_tag>{{naive}, {tau}, {gamma}};
  for (auto const l : o.levels)
    if (l >= 3) tags.push_back({hierarchical, l});
  tags.push_back({greedy});
  tags.push_back({opt});

  auto rows = std::vector<compare_row>{};
  for (auto const& tag : tags) {
    if (tag.kind == opt && inst.n() > cap) {
      rows.push_back({tag.name(), std::nullopt, "n exceeds cap " + std::to_string(cap)});
      continue;
    }
    try {
      rows.push_back({tag.name(), run(inst, tag, cap), {}});
    } catch (ss::error const& e) {
      rows.push_back({tag.name(), std::nullopt, std::string(to_string(e.code()))});
    }
  }
  auto const opt_length = rows.back().sol ? std::optional{rows.back().sol->length()}
                                          : std::nullopt;

  if (o.as_json) {
    auto arr = json::array();
    for (auto const& row : rows) {
      if (row.sol) {
        arr.push_back(to_json(inst, *row.sol, opt_length));
        continue;
      }
      auto j = json::object();
      j["algorithm"]    = row.name;
      j["n"]            = inst.n();
      j["r"]            = inst.r();
      j["superstring"]  = nullptr;
      j["length"]       = nullptr;
      j["compression"]  = nullptr;
      j["opt_length"]   = opt_length ? json(*opt_length) : json(nullptr);
      j["ratio_vs_opt"] = nullptr;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << '\n';
    return exit_ok;
  }

  auto cells = std::vector<std::vector<std::string>>{
    {"algorithm", "length", "compression", "ratio_vs_opt"}};
  for (auto const& row : rows) {
    if (!row.sol) {
      cells.push_back({row.name, "unavailable", "unavailable", "unavailable"});
      continue;
    }
    cells.push_back(
      {row.name, std::to_string(row.sol->length()), std::to_string(row.sol->compression()),
       opt_length ? fixed(double(row.sol->length()) / double(*opt_length))
                  : "unavailable"});
  }

  if (!interactive()) {
    for (auto const& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c)
        std::cout << (c ? "\t" : "") << line[c];
      std::cout << '\n';
    }
    return exit_ok;
  }
  auto width = std::vector<std::size_t>(cells.front().size(), 0);
  for (auto const& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (auto const& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c)
      std::cout << std::left << std::setw(int(width[c] + 2)) << line[c];
    std::cout << '\n';
  }
  for (auto const& row : rows)
    if (!row.sol) std::cout << row.name << ": " << row.reason << '\n';
  return exit_ok;
}

// --- verify ----------------------------------------------------------------

struct verify_options {
  input_options input;
  std::string   candidate;
  bool          as_json = false;
};

int cmd_verify(verify_options const& o)
{
  auto const inst = load(o.input);
  auto       in   = std::ifstream(o.candidate);
  if (!in) throw ss::error(ss::error_code::io_error, "cannot open '" + o.candidate + "'");
  auto text = std::string{};
  for (auto const& line : ss::io::read_lines(in)) text += line;

  auto missing = std::vector<std::string>{};
  for (auto const& s : inst.strings())
    if (text.find(s) == std::string::npos) missing.push_back(s);

  if (o.as_json) {
    auto j       = json::object();
    j["valid"]   = missing.empty();
    j["length"]  = text.size();
    j["missing"] = missing;
    std::cout << j.dump(2) << '\n';
  } else if (missing.empty()) {
    std::cout << "valid superstring of length " << text.size() << '\n';
  } else {
    std::cout << "not a superstring: " << missing.size() << " of " << inst.n()
              << " strings missing, first " << missing.front() << '\n';
  }
  return missing.empty() ? exit_ok : exit_domain;
}

// --- bounds ----------------------------------------------------------------

struct bounds_options {
  int              r_min = 3;
  int              r_max = 12;
  std::vector<int> levels{2};
  double           step = 0.01;
  std::string      out;
};

int cmd_bounds(bounds_options const& o)
{
  if (o.r_min > o.r_max)
    throw usage_error("--r-min " + std::to_string(o.r_min) + " exceeds --r-max "
                      + std::to_string(o.r_max));
  if (o.r_min < 3) throw usage_error("--r-min must be at least 3");
  if (!(o.step > 0.0)) throw usage_error("--step must be positive");

  auto const curves = ss::bounds::emit_curves(o.r_min, o.r_max, o.levels, o.step);
  if (o.out.empty()) {
    ss::bounds::write_curves_csv(std::cout, curves);
  } else {
    auto file = std::ofstream(o.out);
    if (!file) throw ss::error(ss::error_code::io_error, "cannot write '" + o.out + "'");
    ss::bounds::write_curves_csv(file, curves);
    if (!file.flush())
      throw ss::error(ss::error_code::io_error, "write to '" + o.out + "' failed");
  }

  // the summary goes to stderr when stdout carries the CSV
  auto& summary = o.out.empty() ? std::cerr : std::cout;
  summary << "r\talpha\tbeta\tgeneral\n";
  for (int r = o.r_min; r <= o.r_max; ++r) {
    auto const rep = ss::bounds::report(r);
    summary << r << '\t' << fixed(rep.alpha, 6) << '\t' << fixed(rep.beta, 6) << '\t'
            << fixed(rep.general_bound, 6) << '\n';
  }
  return exit_ok;
}

// --- gen -------------------------------------------------------------------

struct gen_options {
  ss::io::generation_config  cfg;
  std::optional<std::size_t> reference_length;
  std::string                out;
  bool                       show_reference = false;
};

int cmd_gen(gen_options const& o)
{
  auto cfg             = o.cfg;
  cfg.reference_length = o.reference_length;
  auto const g         = ss::io::generate(cfg);

  if (o.show_reference && !g.reference.empty()) std::cerr << g.reference << '\n';
  if (o.out.empty()) {
    ss::io::write_lines(std::cout, g.inst);
    return exit_ok;
  }
  auto file = std::ofstream(o.out);
  if (!file) throw ss::error(ss::error_code::io_error, "cannot write '" + o.out + "'");
  ss::io::write_lines(file, g.inst);
  if (!file.flush()) throw ss::error(ss::error_code::io_error, "write to '" + o.out + "' failed");
  return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
  auto app = CLI::App{"Approximate and exact shortest common superstrings of equal-length strings"};
  app.require_subcommand(1);

  auto solve = solve_options{};
  auto* s    = app.add_subcommand("solve", "Run one algorithm on an instance");
  add_input(*s, solve.input);
  s->add_option("--algo,-a", solve.algo, "naive|greedy|tau|gamma|hier:L|opt");
  s->add_flag("--json", solve.as_json, "JSON report");
  s->add_option("--opt-cap", solve.cap, "Largest n solved exactly");

  auto compare = compare_options{};
  auto* c      = app.add_subcommand("compare", "Run every algorithm on an instance");
  add_input(*c, compare.input);
  c->add_option("--levels", compare.levels, "Extra hierarchy depths (>= 3)");
  c->add_flag("--json", compare.as_json, "JSON array of reports");
  c->add_option("--opt-cap", compare.cap, "Largest n solved exactly");

  auto verify = verify_options{};
  auto* v     = app.add_subcommand("verify", "Check that a candidate contains every string");
  add_input(*v, verify.input);
  v->add_option("--candidate,candidate", verify.candidate, "Candidate superstring file")
    ->required();
  v->add_flag("--json", verify.as_json, "JSON result");

  auto bounds = bounds_options{};
  auto* b     = app.add_subcommand("bounds", "Export approximation-ratio curves as CSV");
  b->add_option("--r-min", bounds.r_min, "Smallest r");
  b->add_option("--r-max", bounds.r_max, "Largest r");
  b->add_option("--levels", bounds.levels, "Hierarchy depths to sample");
  b->add_option("--step", bounds.step, "Sampling step in x");
  b->add_option("--out,-o", bounds.out, "CSV path (stdout if omitted)");

  auto gen = gen_options{};
  auto* g  = app.add_subcommand("gen", "Generate a random instance");
  g->add_option("--count,-n", gen.cfg.n, "Number of strings");
  g->add_option("--length,-r", gen.cfg.r, "String length");
  g->add_option("--alphabet-size", gen.cfg.alphabet_size, "Alphabet size");
  g->add_option("--seed", gen.cfg.seed, "RNG seed");
  g->add_option("--reference-length", gen.reference_length,
                "Sample windows of a random reference of this length");
  g->add_flag("--show-reference", gen.show_reference, "Print the reference to stderr");
  g->add_option("--out,-o", gen.out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve);
    if (c->parsed()) return cmd_compare(compare);
    if (v->parsed()) return cmd_verify(verify);
    if (b->parsed()) return cmd_bounds(bounds);
    if (g->parsed()) return cmd_gen(gen);
  } catch (usage_error const& e) {
    std::cerr << "superstring: " << e.what() << '\n';
    return exit_usage;
  } catch (ss::error const& e) {
    std::cerr << "superstring: " << e.what() << '\n';
    return e.code() == ss::error_code::io_error ? exit_io : exit_domain;
  }
  return exit_usage;
}
