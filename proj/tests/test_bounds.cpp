// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception

#include <catch2/catch_amalgamated.hpp>

#include <superstring/bounds.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace sb = superstring::bounds;
using Catch::Approx;

namespace {

// Expanded forms of the ratio terms, written independently of the library.
double hier_ref(double r, double x) { return (r * r - 3 * r + 6 - (r - 2) * x) / (2 * r - 2 * x); }
double golovnev_ref(double r, double x) { return ((r - 1) * (r - 1) + 1 - (r - 1) * x) / (r - x); }
double atsp_ref(double r, double x) { return (3 * r - 2 * x) / (3 * r - 3 * x); }

double envelope_ref(int r, double x)
{
  return std::min({hier_ref(r, x), golovnev_ref(r, x), atsp_ref(r, x)});
}

/// max of envelope_ref over a 1e-5 grid, then over a 1e-9 grid within one
/// coarse cell of the best coarse point.
double beta_by_grid(int r)
{
  double best_x = 0.0, best = envelope_ref(r, 0.0);
  auto const coarse = std::size_t((r - 1) * 100000);
  for (std::size_t i = 0; i <= coarse; ++i) {
    auto const x = (r - 1) * double(i) / double(coarse);
    if (auto const v = envelope_ref(r, x); v > best) best = v, best_x = x;
  }
  for (int i = -10000; i <= 10000; ++i) {
    auto const x = std::clamp(best_x + i * 1e-9, 0.0, r - 1.0);
    best = std::max(best, envelope_ref(r, x));
  }
  return best;
}

} // namespace

TEST_CASE("hier_term", "[bounds]")
{
  for (int i = 0; i < 100; ++i) {
    auto const x = 5.0 * i / 99.0;
    CHECK(sb::hier_term(6, x) == Approx(2.0).margin(1e-12));
  }
  CHECK(sb::hier_term(7, 0) == Approx(34.0 / 14.0).margin(1e-12));
  CHECK(sb::hier_term(3, 0) == Approx(1.0).margin(1e-12));
  CHECK_THROWS_AS(sb::hier_term(5, 5.0), superstring::error);
  CHECK_THROWS_AS(sb::hier_term(2, 0.0), superstring::error);
  CHECK_THROWS_AS(sb::hier_term(5, -0.5), superstring::error);
}

TEST_CASE("golovnev_term", "[bounds]")
{
  CHECK(sb::golovnev_term(7, 0) == Approx(37.0 / 7.0).margin(1e-12));
  CHECK(sb::golovnev_term(2, 0) == Approx(1.0).margin(1e-12));
  CHECK(sb::golovnev_term(5, 4) == Approx(1.0).margin(1e-12));
}

TEST_CASE("atsp_term", "[bounds]")
{
  for (int r = 2; r <= 12; ++r) CHECK(sb::atsp_term(r, 0) == Approx(1.0).margin(1e-12));
  CHECK(sb::atsp_term(5, 3) == Approx(1.5).margin(1e-12));
  CHECK(sb::atsp_term(5, 4) == Approx(7.0 / 3.0).margin(1e-12));
}

TEST_CASE("terms agree with expanded forms", "[bounds][property]")
{
  for (int r = 3; r <= 12; ++r) {
    for (int i = 0; i <= 200; ++i) {
      auto const x = (r - 1) * i / 200.0;
      REQUIRE(sb::hier_term(r, x) == Approx(hier_ref(r, x)).margin(1e-12));
      REQUIRE(sb::golovnev_term(r, x) == Approx(golovnev_ref(r, x)).margin(1e-12));
      REQUIRE(sb::atsp_term(r, x) == Approx(atsp_ref(r, x)).margin(1e-12));
      REQUIRE(sb::level_term(r, x, 2) == Approx(sb::hier_term(r, x)).margin(1e-12));
    }
  }
}

TEST_CASE("level_term", "[bounds]")
{
  CHECK(sb::level_term(7, 0, 3) == Approx(33.0 / 21.0).margin(1e-12));
  CHECK(sb::level_term(8, 7, 4) == Approx(4.0).margin(1e-12));
  CHECK_THROWS_AS(sb::level_term(5, 0, 1), superstring::error);
  CHECK_THROWS_AS(sb::level_term(5, 0, 5), superstring::error);
}

TEST_CASE("alpha and beta at analytic crossings", "[bounds][envelope]")
{
  CHECK(sb::beta(5).value == Approx(13.0 / 7.0).margin(1e-9));
  CHECK(sb::beta(5).value <= 2.0);
  CHECK(sb::beta(6).value == Approx(2.0).margin(1e-9));

  auto const b7 = sb::beta(7);
  CHECK(b7.value == Approx(37.0 / 17.0).margin(1e-9));
  CHECK(b7.argmax == Approx(60.0 / 11.0).margin(1e-6));
  CHECK(b7.value < sb::general_bound);

  CHECK(sb::beta(8).value == Approx(26.0 / 11.0).margin(1e-9));
  CHECK(sb::alpha(7).value == Approx(26.0 / 11.0).margin(1e-9));
  CHECK(sb::alpha(2).value == Approx(1.0).margin(1e-12));
  CHECK_THROWS_AS(sb::beta(2), superstring::error);
  CHECK_THROWS_AS(sb::alpha(1), superstring::error);

  auto const rep = sb::report(7);
  CHECK(rep.r == 7);
  CHECK(rep.beta == b7.value);
  CHECK(rep.general_bound == Approx(2.0 + 11.0 / 30.0));
}

TEST_CASE("beta never exceeds alpha", "[bounds][envelope][property]")
{
  for (int r = 3; r <= 12; ++r) {
    auto const a = sb::alpha(r).value;
    auto const b = sb::beta(r).value;
    CHECK(b <= a + 1e-12);
    CHECK(b >= 1.0);
    CHECK(a >= 1.0);
  }
}

TEST_CASE("refined optimum matches a dense grid", "[bounds][envelope][property]")
{
  for (int r : {4, 5, 7, 8, 9}) {
    INFO("r = " << r);
    auto const refined = sb::beta(r).value;
    CHECK(refined == Approx(beta_by_grid(r)).margin(1e-6));

    // never below the best sample of its own 1e-4 grid
    double grid_best = 0.0;
    for (int i = 0; i <= (r - 1) * 10000; ++i)
      grid_best = std::max(grid_best, envelope_ref(r, (r - 1) * i / ((r - 1) * 10000.0)));
    CHECK(refined >= grid_best - 1e-12);
  }
}

TEST_CASE("emit_curves", "[bounds][curves]")
{
  auto const curves = sb::emit_curves(6, 9, {2}, 0.01);
  REQUIRE(curves.size() == 4);
  for (auto const& c : curves) {
    CHECK(c.levels.empty());
    CHECK(c.samples.front().x == 0.0);
    CHECK(c.samples.back().x == Approx(c.r - 1.0));
    CHECK(c.samples.size() == std::size_t((c.r - 1) * 100 + 1));
    for (std::size_t i = 1; i < c.samples.size(); ++i)
      REQUIRE(c.samples[i].x > c.samples[i - 1].x);
    for (auto const& s : c.samples)
      REQUIRE(s.envelope == std::min({s.term_hier, s.term_golovnev, s.term_atsp}));
  }

  auto const ext = sb::emit_curves(7, 8, {2, 3, 4}, 0.01);
  REQUIRE(ext.size() == 2);
  CHECK(ext[0].levels == std::vector<int>{3, 4});
  CHECK(*ext[0].samples[0].level_terms[0] == Approx(33.0 / 21.0));

  auto const single = sb::emit_curves(5, 5, {2}, 10.0);
  REQUIRE(single.front().samples.size() == 1);
  CHECK(single.front().samples[0].x == 0.0);

  CHECK_THROWS_AS(sb::emit_curves(8, 7, {2}, 0.1), superstring::error);
  CHECK_THROWS_AS(sb::emit_curves(2, 7, {2}, 0.1), superstring::error);
  CHECK_THROWS_AS(sb::emit_curves(5, 7, {2}, 0.0), superstring::error);
}

TEST_CASE("curves CSV", "[bounds][curves]")
{
  auto os = std::ostringstream{};
  sb::write_curves_csv(os, sb::emit_curves(3, 4, {2, 3}, 1.0));
  CHECK(os.str()
        == "r,x,term_hier,term_golovnev,term_atsp,envelope,term_l3\n"
           "3,0,1,1.6666666666666667,1,1,\n"
           "3,1,1.25,1.5,1.1666666666666667,1.1666666666666667,\n"
           "3,2,2,1,1.6666666666666667,1,\n"
           "4,0,1.25,2.5,1,1,1\n"
           "4,1,1.3333333333333333,2.3333333333333335,1.1111111111111112,1.1111111111111112,1.2222222222222223\n"
           "4,2,1.5,2,1.3333333333333335,1.3333333333333335,1.6666666666666667\n"
           "4,3,2,1,2,1,3\n");
}
