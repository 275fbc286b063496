#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "genpos/errors.hpp"
#include "genpos/pointset.hpp"
#include "support.hpp"

using namespace genpos;

namespace {

PointSet ints(unsigned r, const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Scalar>> pts;
  for (const auto& row : rows) {
    std::vector<Scalar> p;
    for (auto v : row) p.push_back(f.from_int(v));
    pts.push_back(p);
  }
  return PointSet(r, f, pts);
}

PointSet six_branch_tangents() {
  return ints(2, Field::prime(11), {{1, 1, 0}, {1, 3, 0}, {1, 9, 0}, {1, 5, 0}, {1, 4, 0}, {1, 0, -1}});
}

}  // namespace

TEST_SUITE("pointsets") {
  TEST_CASE("binomials and nu") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, 3) == 1);
    CHECK(binom(2, 5) == 0);
    for (unsigned e = 1; e <= 12; ++e) CHECK(nu(e, 1) == e - 1);
    CHECK(nu(6, 2) == 2);
    CHECK(nu(7, 2) == 3);
    CHECK(nu(7, 3) == 2);
    for (unsigned r = 1; r <= 5; ++r) CHECK(nu(1, r) == 0);
    CHECK_THROWS_AS(nu(0, 2), DomainError);
  }

  TEST_CASE("point set validation and normalization") {
    const Field q = Field::rationals();
    const PointSet x = ints(2, q, {{2, 4, 6}, {0, 3, 0}});
    CHECK(x[0][0].is_one());
    CHECK(x[0][1] == q.from_int(2));
    CHECK(x[1][1].is_one());
    CHECK_THROWS_AS(ints(2, q, {{1, 2, 3}, {2, 4, 6}}), DomainError);
    CHECK_THROWS_AS(ints(2, q, {{0, 0, 0}}), DomainError);
    CHECK_THROWS_AS(ints(2, q, {{1, 2}}), DomainError);
    CHECK_THROWS_AS(PointSet(2, q, {}), DomainError);
  }

  TEST_CASE("hilbert function of the six-branch tangent points") {
    const PointSet x = six_branch_tangents();
    // Oracle: independent rank mod 11 of the degree-2 evaluation matrix. Five
    // points on z = 0 span only the 3 binary quadrics; the sixth adds one.
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& p : std::vector<std::array<std::int64_t, 3>>{{1, 1, 0}, {1, 3, 0}, {1, 9, 0}, {1, 5, 0}, {1, 4, 0}, {1, 0, -1}}) {
      const auto [a, b, c] = p;
      m.push_back({a * a, a * b, b * b, a * c, b * c, c * c});
    }
    CHECK(testing::rank_mod_p(m, 11) == 4);
    CHECK(hilbert_function_points(x, 2) == 4);
    CHECK(hilbert_function_points(x, 0) == 1);
    CHECK(hilbert_function_points(x, 1) == 3);
    CHECK(hilbert_function_points(x, 4) == 6);
    CHECK(hilbert_function_points(ints(3, Field::rationals(), {{1, 2, 3, 4}}), 7) == 1);
  }

  TEST_CASE("six-branch tangent points are not generic") {
    const PointSet x = six_branch_tangents();
    const GenericityCertificate c = is_generic_position(x);
    CHECK_FALSE(c.generic);
    REQUIRE(c.failing_degree);
    CHECK(*c.failing_degree == 2);
    REQUIRE(c.witness);
    CHECK(*c.witness == Polynomial::parse("x1*x2", 3, x.field()));
    for (const auto& p : x.points()) CHECK(c.witness->evaluate(p).is_zero());
    CHECK_FALSE(is_generic_t_position(x, 6).generic);
    // Every 5-subset containing the five collinear points fails too.
    const GenericityCertificate five = is_generic_t_position(x, 5);
    CHECK_FALSE(five.generic);
    CHECK(five.failing_subset.size() == 5);
    for (const auto& i : five.failing_subset) CHECK(five.witness->evaluate(x[i]).is_zero());
  }

  TEST_CASE("points of P^1 are generic in every t") {
    const Field q = Field::rationals();
    std::vector<std::vector<std::int64_t>> rows{{0, 1}};
    for (std::int64_t a = 0; a < 8; ++a) rows.push_back({1, a});
    const PointSet x = ints(1, q, rows);
    for (std::size_t t = 1; t <= x.size(); ++t) CHECK(is_generic_t_position(x, t).generic);
  }

  TEST_CASE("C(n+r, r) points: generic iff on no degree-n hypersurface") {
    const Field q = Field::rationals();
    const PointSet conic = ints(2, q, {{1, 0, 0}, {1, 1, 1}, {1, 2, 4}, {1, 3, 9}, {1, 4, 16}, {1, 5, 25}});
    const GenericityCertificate c = is_generic_position(conic);
    CHECK_FALSE(c.generic);
    CHECK(*c.failing_degree == 2);
    CHECK(*c.witness == Polynomial::parse("x1^2 - x0*x2", 3, q).monic());
    const PointSet off = ints(2, q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {1, -1, 2}});
    CHECK(is_generic_position(off).generic);
  }

  TEST_CASE("random points over the big prime are generic") {
    std::mt19937_64 rng(17);
    const Field f = Field::prime(kBigPrime);
    for (int k = 0; k < 3; ++k) {
      const PointSet x = random_point_set(6, 2, f, rng);
      CHECK(is_generic_t_position(x, 5).generic);
      CHECK(is_generic_t_position(x, 6).generic);
      CHECK(is_generic_e1_e_position(x).generic);
    }
  }

  TEST_CASE("subset budget") {
    std::mt19937_64 rng(1);
    const PointSet x = random_point_set(12, 2, Field::prime(kBigPrime), rng);
    try {
      (void)is_generic_t_position(x, 6, 100);
      FAIL("expected a ResourceError");
    } catch (const ResourceError& e) {
      CHECK(e.budget() == "subset_budget");
    }
    CHECK_THROWS_AS(is_generic_t_position(x, 0), DomainError);
    CHECK_THROWS_AS(is_generic_t_position(x, 13), DomainError);
  }

  TEST_CASE("parallel subset checks agree with serial ones") {
    const PointSet x = six_branch_tangents();
    const auto serial = is_generic_t_position(x, 4, 20000, 1);
    const auto parallel = is_generic_t_position(x, 4, 20000, 4);
    CHECK(serial.generic == parallel.generic);
    CHECK(serial.failing_subset == parallel.failing_subset);
    CHECK(serial.witness == parallel.witness);
  }

  TEST_CASE("hilbert bounds and stabilization") {
    std::mt19937_64 rng(23);
    for (const Field& f : {Field::prime(kBigPrime), Field::prime(11)}) {
      for (int k = 0; k < 8; ++k) {
        const unsigned r = 1 + static_cast<unsigned>(rng() % 3);
        const std::size_t e = 1 + rng() % 9;
        const PointSet x = random_point_set(e, r, f, rng);
        const HilbertProfile h = hilbert_profile(x, nu(e, r) + 3 + static_cast<unsigned>(e));
        CHECK(h.values[0] == 1);
        for (std::size_t n = 0; n < h.values.size(); ++n) {
          CHECK(h.values[n] <= std::min<std::uint64_t>(e, binom(n + r, r)));
          if (n > 0 && h.values[n - 1] == e) CHECK(h.values[n] == e);
        }
        REQUIRE(h.stabilization_degree);
        if (is_generic_position(x).generic) CHECK(*h.stabilization_degree == nu(e, r));
      }
    }
  }

  TEST_CASE("verdict is invariant under rescaling and permutation") {
    std::mt19937_64 rng(29);
    const Field f = Field::prime(kBigPrime);
    std::vector<PointSet> sets{six_branch_tangents(), random_point_set(6, 2, f, rng)};
    for (const auto& x : sets) {
      const bool verdict = is_generic_position(x).generic;
      for (int k = 0; k < 10; ++k) {
        std::vector<std::vector<Scalar>> pts = x.points();
        std::shuffle(pts.begin(), pts.end(), rng);
        for (auto& p : pts) {
          Scalar c = random_scalar(x.field(), rng);
          if (c.is_zero()) c = x.field().one();
          for (auto& v : p) v *= c;
        }
        CHECK(is_generic_position(PointSet(x.r(), x.field(), pts)).generic == verdict);
      }
    }
  }
}
