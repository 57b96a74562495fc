#include <doctest.h>

#include <optional>

#include "gfan/errors.hpp"
#include "gfan/fan.hpp"
#include "gfan/quadratic.hpp"
#include "gfan/rank2.hpp"

using namespace gfan;

TEST_SUITE_BEGIN("quadratic");

TEST_CASE("sign handles all constellations exactly") {
  // pure rational / zero radicand
  CHECK(QuadraticNumber(Rat(-3), Rat(7), Int(0)).sign() == -1);
  CHECK(QuadraticNumber(Rat(0), Rat(0), Int(5)).sign() == 0);
  CHECK(QuadraticNumber(Rat(0), Rat(-2), Int(5)).sign() == -1);
  // same signs
  CHECK(QuadraticNumber(Rat(1), Rat(1), Int(2)).sign() == 1);
  CHECK(QuadraticNumber(Rat(-1), Rat(-1), Int(2)).sign() == -1);
  // mixed signs decided by squaring: 3 - 2 sqrt(2) > 0, 1 - sqrt(2) < 0
  CHECK(QuadraticNumber(Rat(3), Rat(-2), Int(2)).sign() == 1);
  CHECK(QuadraticNumber(Rat(1), Rat(-1), Int(2)).sign() == -1);
  CHECK(QuadraticNumber(Rat(-3), Rat(2), Int(2)).sign() == -1);
  // exact zero across a perfect-square radicand: -2 + sqrt(4)
  CHECK(QuadraticNumber(Rat(-2), Rat(1), Int(4)).sign() == 0);
}

TEST_CASE("comparison against rationals") {
  // golden-ratio-like value (1 + sqrt(5))/2 ~ 1.618
  QuadraticNumber phi(make_rat(1, 2), make_rat(1, 2), Int(5));
  CHECK(phi.compare(Rat(1)) > 0);
  CHECK(phi.compare(Rat(2)) < 0);
  CHECK(phi.compare(make_rat(1618, 1000)) > 0);
  CHECK(phi.compare(make_rat(1619, 1000)) < 0);
}

TEST_CASE("arithmetic keeps exactness") {
  QuadraticNumber a(Rat(1), Rat(1), Int(3));
  QuadraticNumber b(Rat(1), Rat(-1), Int(3));
  CHECK((a + b).compare(Rat(2)) == 0);
  CHECK((a - a).sign() == 0);
  CHECK((-a).sign() == -1);
  CHECK_THROWS_AS(a + QuadraticNumber(Rat(0), Rat(1), Int(5)), InvalidInput);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("rank2");

TEST_CASE("parameter normalization swaps both signs") {
  Rank2Params p = Rank2Params::from_pair(-1, -4);
  CHECK(p.b == 4);
  CHECK(p.c == 1);
  CHECK_THROWS_AS(Rank2Params::from_pair(2, -1), InvalidInput);

  // Swapping indices sends B_{-4,-1} to B_{1,4}.
  auto [q, swapped] = Rank2Params::from_matrix(
      ExchangeMatrix(IntMatrix::from_rows({{Int(0), Int(-1)}, {Int(4), Int(0)}})));
  CHECK(swapped);
  CHECK(q.b == 1);
  CHECK(q.c == 4);
}

TEST_CASE("finite rank-2 fans: cone counts 5, 6, 8") {
  CHECK(rank2_fan(Rank2Params::from_pair(1, 1)).max_cones().size() == 5);
  CHECK(rank2_fan(Rank2Params::from_pair(2, 1)).max_cones().size() == 6);
  CHECK(rank2_fan(Rank2Params::from_pair(1, 2)).max_cones().size() == 6);
  CHECK(rank2_fan(Rank2Params::from_pair(3, 1)).max_cones().size() == 8);
  CHECK(rank2_fan(Rank2Params::from_pair(1, 3)).max_cones().size() == 8);
}

TEST_CASE("finite rank-2 fans are complete and cover a big box") {
  for (auto [b, c] : {std::pair{1, 1}, {2, 1}, {3, 1}, {1, 3}}) {
    Fan f = rank2_fan(Rank2Params::from_pair(b, c));
    CHECK(f.completeness() == Fan::Completeness::Complete);
    CHECK(check_complete(f).complete);
    CHECK(lattice_cover(f, 10).covered);
  }
}

TEST_CASE("truncated fan spends its budget exactly") {
  Fan f = rank2_fan(Rank2Params::from_pair(4, 1), 20);
  CHECK(f.max_cones().size() == 20);
  CHECK(f.completeness() == Fan::Completeness::Incomplete);
}

TEST_CASE("limiting slopes: double root at bc = 4") {
  auto [s_minus, s_plus] = limiting_slopes(Rank2Params::from_pair(4, 1));
  CHECK(s_minus.compare(Rat(-2)) == 0);
  CHECK(s_plus.compare(Rat(-2)) == 0);
  CHECK(s_minus.compare(s_plus) == 0);
}

TEST_CASE("limiting slopes: (5,1) gives (-5 +- sqrt 5)/2") {
  auto [s_minus, s_plus] = limiting_slopes(Rank2Params::from_pair(5, 1));
  CHECK(s_minus.rational_part() == make_rat(-5, 2));
  CHECK(s_minus.radical_coeff() == make_rat(-1, 2));
  CHECK(s_minus.radicand() == 5);
  CHECK(s_plus.radical_coeff() == make_rat(1, 2));
  CHECK(s_minus.compare(s_plus) < 0);
  // pinned decimal brackets
  CHECK(s_plus.compare(make_rat(-1382, 1000)) > 0);
  CHECK(s_plus.compare(make_rat(-1381, 1000)) < 0);
  CHECK(s_minus.compare(make_rat(-3619, 1000)) > 0);
  CHECK(s_minus.compare(make_rat(-3618, 1000)) < 0);
}

TEST_CASE("limiting slopes: zero discriminant at (2,2)") {
  auto [s_minus, s_plus] = limiting_slopes(Rank2Params::from_pair(2, 2));
  CHECK(s_minus.compare(Rat(-1)) == 0);
  CHECK(s_plus.compare(Rat(-1)) == 0);
}

TEST_CASE("finite type has no limiting rays") {
  CHECK_THROWS_AS(limiting_slopes(Rank2Params::from_pair(3, 1)),
                  FiniteTypeNoLimit);
}

TEST_CASE("badlands lattice point is (-2, b)") {
  CHECK(badlands_lattice_point(Rank2Params::from_pair(4, 1)) == IntVec{-2, 4});
  CHECK(badlands_lattice_point(Rank2Params::from_pair(5, 1)) == IntVec{-2, 5});
  CHECK(badlands_lattice_point(Rank2Params::from_pair(2, 2)) == IntVec{-2, 2});
  CHECK_THROWS_AS(badlands_lattice_point(Rank2Params::from_pair(3, 1)),
                  InvalidInput);
}

TEST_CASE("the badlands point is missing from every tested truncation") {
  for (auto [b, c] : {std::pair{4, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    Rank2Params p = Rank2Params::from_pair(b, c);
    const IntVec z = badlands_lattice_point(p);
    for (std::size_t budget : {17u, 33u}) {
      Fan f = rank2_fan(p, budget);
      for (std::size_t cone = 0; cone < f.max_cones().size(); ++cone)
        CHECK_FALSE(cone_contains(f, cone, z));
    }
  }
}

TEST_CASE("no enumerated ray slope falls strictly between the limits") {
  for (auto [b, c] : {std::pair{4, 1}, {5, 1}, {2, 2}, {6, 1}, {3, 2}}) {
    Rank2Params p = Rank2Params::from_pair(b, c);
    auto [s_minus, s_plus] = limiting_slopes(p);
    Fan f = rank2_fan(p, 40);
    for (const IntVec& ray : f.rays()) {
      std::optional<Rat> slope = ray_slope(ray);
      if (!slope) continue;  // vertical
      const bool strictly_inside =
          s_minus.compare(*slope) < 0 && s_plus.compare(*slope) > 0;
      CHECK_FALSE(strictly_inside);
    }
  }
}

TEST_CASE("ray slopes converge monotonically to the limits for bc >= 5") {
  for (auto [b, c] : {std::pair{5, 1}, {6, 1}, {3, 2}, {1, 5}}) {
    Rank2Params p = Rank2Params::from_pair(b, c);
    auto [s_minus, s_plus] = limiting_slopes(p);
    Rank2RaySequences seq = rank2_ray_sequences(p, 32);
    for (const auto& side : {seq.first_side, seq.second_side}) {
      // Drop leading rays outside the open left half-plane.
      std::vector<Rat> slopes;
      for (const IntVec& ray : side) {
        if (ray[0] < 0) slopes.push_back(*ray_slope(ray));
      }
      REQUIRE(slopes.size() >= 30);
      slopes.resize(30);
      // One side increases toward s_-, the other decreases toward s_+.
      const bool increasing = slopes[0] < slopes[1];
      const QuadraticNumber& target = increasing ? s_minus : s_plus;
      for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
        if (increasing)
          CHECK(slopes[i] < slopes[i + 1]);
        else
          CHECK(slopes[i + 1] < slopes[i]);
        // The gap to the limiting slope shrinks at every step.
        QuadraticNumber gap_i =
            increasing ? target - QuadraticNumber(slopes[i], Rat(0), target.radicand())
                       : QuadraticNumber(slopes[i], Rat(0), target.radicand()) - target;
        QuadraticNumber gap_next =
            increasing
                ? target - QuadraticNumber(slopes[i + 1], Rat(0), target.radicand())
                : QuadraticNumber(slopes[i + 1], Rat(0), target.radicand()) - target;
        CHECK(gap_i.sign() > 0);
        CHECK(gap_next.sign() > 0);
        CHECK(gap_next < gap_i);
      }
      // Never on the wrong side of the limit.
      for (const Rat& s : slopes) {
        if (increasing)
          CHECK(target.compare(s) > 0);
        else
          CHECK(target.compare(s) < 0);
      }
    }
  }
}

TEST_SUITE_END();
