// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include <catch2/catch_amalgamated.hpp>

#include <superstring/euler.hpp>
#include <superstring/graph.hpp>

#include "oracles.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace ss = superstring;

namespace {

ss::pair_2scs fig3_pairs()
{
  auto p = ss::pair_2scs{};
  for (auto const* s : {"AB", "BC", "BD", "DE", "FG", "HI", "JK"})
    p.pairs.push_back({s[0], s[1], 1});
  return p;
}

ss::pair_2scs random_pairs(std::mt19937& rng, std::size_t max_symbols,
                           std::size_t max_pairs, std::size_t max_multiplicity)
{
  auto symbols = std::uniform_int_distribution<std::size_t>(1, max_symbols)(rng);
  auto count   = std::uniform_int_distribution<std::size_t>(1, max_pairs)(rng);
  auto sym     = std::uniform_int_distribution<std::size_t>(0, symbols - 1);
  auto mult    = std::uniform_int_distribution<std::size_t>(1, max_multiplicity);
  auto p       = ss::pair_2scs{};
  for (std::size_t i = 0; i < count; ++i)
    p.pairs.push_back({char('A' + sym(rng)), char('A' + sym(rng)), mult(rng)});
  return p;
}

} // namespace

TEST_CASE("completion of a forest of short paths", "[euler]")
{
  auto const g    = ss::pair_graph(fig3_pairs());
  auto const plan = ss::min_euler_completion(g);

  CHECK(plan.added_edges().size() == 4);
  CHECK(plan.sequence.size() == 11);
  CHECK(ss::added_edge_lower_bound(g) == 4);
  CHECK(oracle::is_valid_euler_plan(plan, g));

  // smallest surplus node of the first component; C->B closes it internally,
  // the rest chain components in label order
  CHECK(plan.start_node() == "A");
  auto added = std::set<std::pair<std::string, std::string>>{};
  for (auto const& e : plan.added_edges())
    added.emplace(plan.graph.label(e.src), plan.graph.label(e.dst));
  CHECK(added
        == std::set<std::pair<std::string, std::string>>{
          {"C", "B"}, {"E", "F"}, {"G", "H"}, {"I", "J"}});
}

TEST_CASE("completion of the SE de Bruijn graph", "[euler]")
{
  auto const inst = ss::validate_instance(
    {"ACGCA", "CGCAT", "GCATG", "CGCAG", "CAGTC", "CAGCA", "CATAA"});
  auto const g    = ss::build_debruijn(inst);
  auto const plan = ss::min_euler_completion(g);
  CHECK(plan.added_edges().size() == 4);
  CHECK(ss::added_edge_lower_bound(g) == 4);
  CHECK(plan.start_node() == "ACGC");
  CHECK(oracle::is_valid_euler_plan(plan, g));
}

TEST_CASE("balanced graphs need no added edges", "[euler]")
{
  auto g       = ss::di_multigraph(1);
  auto const a = g.add_node("A");
  auto const b = g.add_node("B");
  g.add_edge(a, b, "AB");
  g.add_edge(b, a, "BA");
  auto const plan = ss::min_euler_completion(g);
  CHECK(plan.added_edges().empty());
  CHECK(ss::added_edge_lower_bound(g) == 0);
  CHECK(plan.start_node() == "A");
  CHECK(oracle::is_valid_euler_plan(plan, g));

  g.add_node("Z"); // isolated nodes do not count
  CHECK(ss::added_edge_lower_bound(g) == 0);
  CHECK(ss::min_euler_completion(g).added_edges().empty());
}

TEST_CASE("empty graphs are rejected", "[euler]")
{
  auto g = ss::di_multigraph(1);
  g.add_node("A");
  CHECK_THROWS_AS(ss::min_euler_completion(g), ss::error);
  CHECK_THROWS_AS(ss::added_edge_lower_bound(g), ss::error);
  CHECK_THROWS_AS(ss::solve_2scs({}), ss::error);
}

TEST_CASE("solve_2scs", "[euler][2scs]")
{
  auto const fig3 = ss::solve_2scs(fig3_pairs());
  CHECK(fig3.size() == 12);
  for (auto const* s : {"AB", "BC", "BD", "DE", "FG", "HI", "JK"})
    CHECK(fig3.find(s) != std::string::npos);

  CHECK(ss::solve_2scs({{{'A', 'B', 1}}}) == "AB");

  auto const triple = ss::pair_2scs{{{'A', 'B', 3}}};
  CHECK(oracle::brute_2scs_length(triple) == 6);
  CHECK(ss::solve_2scs(triple) == "ABABAB");

  // self loops overlap with themselves
  auto const loop = ss::pair_2scs{{{'A', 'A', 2}}};
  CHECK(ss::solve_2scs(loop) == "AAA");
  CHECK(oracle::brute_2scs_length(loop) == 3);
}

TEST_CASE("solve_2scs is optimal", "[euler][2scs][property]")
{
  auto rng = std::mt19937(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto const p    = random_pairs(rng, 5, 6, 2);
    auto const text = ss::solve_2scs(p);

    auto demand = std::map<std::string, std::size_t>{};
    for (auto const& e : p.pairs) demand[std::string{e.first, e.second}] += e.multiplicity;
    for (auto const& [pair, count] : demand)
      REQUIRE(oracle::count_occurrences(text, pair) >= count);
    REQUIRE(text.size() == oracle::brute_2scs_length(p));
  }
}

TEST_CASE("completion is minimal and walks every edge", "[euler][property]")
{
  auto rng = std::mt19937(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto const g    = trial % 2 == 0
                        ? ss::pair_graph(random_pairs(rng, 6, 10, 3))
                        : ss::build_debruijn(ss::validate_instance(
                            oracle::random_reads(rng, 9, 4, 2, 25)));
    auto const plan = ss::min_euler_completion(g);
    REQUIRE(plan.added_edges().size() == ss::added_edge_lower_bound(g));
    REQUIRE(oracle::is_valid_euler_plan(plan, g));
  }
}

TEST_CASE("completion is deterministic", "[euler]")
{
  auto rng = std::mt19937(1);
  for (int trial = 0; trial < 50; ++trial) {
    auto const g = ss::pair_graph(random_pairs(rng, 5, 8, 2));
    auto const a = ss::min_euler_completion(g);
    auto const b = ss::min_euler_completion(g);
    REQUIRE(a.sequence == b.sequence);
    REQUIRE(a.start == b.start);
  }
}

TEST_CASE("long paths do not recurse", "[euler]")
{
  auto g    = ss::di_multigraph(1);
  auto prev = g.add_node("n0");
  for (int i = 1; i <= 200000; ++i) {
    auto const next = g.add_node("n" + std::to_string(i));
    g.add_edge(prev, next, "e");
    prev = next;
  }
  auto const plan = ss::min_euler_completion(g);
  CHECK(plan.sequence.size() == 200000);
  CHECK(plan.added_edges().empty());
}
