// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

// Walks the seven-string DNA example through every stage of the pipeline and
// prints what each stage produces.

#include <superstring/superstring.hpp>

#include <iostream>

namespace ss = superstring;

int main()
{
  auto const inst = ss::validate_instance(
    {"ACGCA", "CGCAT", "GCATG", "CGCAG", "CAGTC", "CAGCA", "CATAA"});

  auto const db   = ss::build_debruijn(inst);
  auto const plan = ss::min_euler_completion(db);
  std::cout << "de Bruijn graph: " << db.node_count() << " nodes, " << db.edge_count()
            << " edges, " << plan.added_edges().size() << " added for an eulerian path\n";
  ss::write_edge_list(std::cout, plan.graph);

  auto const contigs = ss::extract_contigs(plan, db.k());
  std::cout << "\ncontigs:";
  for (auto const& c : contigs.contigs) std::cout << ' ' << c;
  std::cout << '\n';

  auto const h = ss::heldkarp_opt(inst);
  auto show    = [&](ss::superstring_solution const& s) {
    std::cout << s.algorithm.name() << "\t" << s.length() << "\t" << s.text << '\n';
  };
  std::cout << "\nalgorithm\tlength\tsuperstring\n";
  show(ss::naive_concat(inst));
  show(ss::solve_tau(inst));
  show(ss::solve_gamma(inst));
  show(ss::solve_hierarchical(inst, 3));
  show(ss::greedy_scs(inst));
  std::cout << "opt\t" << h.opt_length << "\t" << h.superstring << '\n';

  auto const usage = ss::overlap_usage(ss::solve_gamma(inst), inst, h);
  std::cout << "\nheavy junctions in gamma: " << usage.t << ", heavy edges in H: " << usage.vbar
            << '\n';
}
