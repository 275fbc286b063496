#include <doctest.h>

#include <random>

#include "genpos/errors.hpp"
#include "genpos/groebner.hpp"
#include "support.hpp"

using namespace genpos;
using testing::poly;

namespace {

Ideal ideal(std::size_t n, const Field& f, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(poly(g, n, f));
  return Ideal(n, f, ps);
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("buchberger on small inputs") {
    const Field q = Field::rationals();
    const auto gb = buchberger({poly("x^2 - y", 2, q), poly("x^3 - x", 2, q)}, MonomialOrder::lex());
    CHECK(is_reduced_basis(gb));
    CHECK(satisfies_buchberger_criterion(gb));
    // The ideal is (x^2 - y, x*y - x, y^2 - y).
    const Ideal expected = ideal(2, q, {"x^2 - y", "x*y - x", "y^2 - y"});
    CHECK(ideal_equal(Ideal(2, q, gb), expected));

    CHECK(buchberger({poly("x", 2, q), poly("x + 1", 2, q)}, MonomialOrder::degrevlex()) ==
          std::vector<Polynomial>{Polynomial::constant(2, q.one())});
    CHECK(buchberger({Polynomial(2, q)}, MonomialOrder::degrevlex()).empty());
  }

  TEST_CASE("normal forms") {
    const Field q = Field::rationals();
    CHECK(normal_form(poly("x^2", 2, q), {poly("x", 2, q)}).is_zero());
    CHECK(normal_form(poly("x + y", 2, q), {poly("x - y", 2, q)}) == poly("2*y", 2, q));

    std::mt19937_64 rng(12);
    const Ideal i = ideal(3, q, {"x^2 - y*z", "y^2 - x", "z^3 - x*y"});
    const auto& basis = i.basis();
    for (int k = 0; k < 100; ++k) {
      const Polynomial f = testing::random_polynomial(3, q, 5, 4, rng);
      const Polynomial r = normal_form(f, basis);
      CHECK(normal_form(r, basis) == r);
      CHECK(i.contains(f - r));
    }
  }

  TEST_CASE("membership and equality") {
    const Field q = Field::rationals();
    CHECK(ideal_member(poly("x^2*y", 2, q), ideal_power(ideal(2, q, {"x", "y"}), 2)));
    CHECK_FALSE(ideal_member(poly("x", 1, q), ideal(1, q, {"x^2"})));
    // The product (x,y)(x,z) is strictly inside (x, yz): x is not in it.
    const Ideal prod = ideal_product(ideal(3, q, {"x", "y"}), ideal(3, q, {"x", "z"}));
    CHECK_FALSE(ideal_equal(prod, ideal(3, q, {"x", "y*z"})));
    CHECK(ideal_subset(prod, ideal(3, q, {"x", "y*z"})));
    CHECK(ideal_equal(prod, ideal(3, q, {"x^2", "x*y", "x*z", "y*z"})));
  }

  TEST_CASE("intersections") {
    const Field q = Field::rationals();
    CHECK(ideal_equal(ideal_intersect(ideal(2, q, {"x"}), ideal(2, q, {"y"})), ideal(2, q, {"x*y"})));
    CHECK(ideal_equal(ideal_intersect(ideal(3, q, {"x", "y"}), ideal(3, q, {"x", "z"})), ideal(3, q, {"x", "y*z"})));
    const Ideal i = ideal(3, q, {"x^2 - y", "x*z"});
    CHECK(ideal_equal(ideal_intersect(i, i), i));
  }

  TEST_CASE("intersection properties on random ideals") {
    const Field f = Field::prime(kBigPrime);
    std::mt19937_64 rng(21);
    for (int k = 0; k < 6; ++k) {
      const Ideal a(3, f, {testing::random_polynomial(3, f, 2, 2, rng), testing::random_polynomial(3, f, 2, 2, rng)});
      const Ideal b(3, f, {testing::random_polynomial(3, f, 2, 2, rng)});
      const Ideal c = ideal_intersect(a, b);
      CHECK(ideal_subset(c, a));
      CHECK(ideal_subset(c, b));
      CHECK(ideal_subset(ideal_product(a, b), c));
    }
  }

  TEST_CASE("quotients and saturation") {
    const Field q = Field::rationals();
    CHECK(ideal_equal(ideal_quotient(ideal(1, q, {"x^2"}), poly("x", 1, q)), ideal(1, q, {"x"})));
    CHECK(ideal_equal(ideal_quotient(ideal(2, q, {"x*y"}), poly("x", 2, q)), ideal(2, q, {"y"})));
    const Ideal i = ideal(2, q, {"x^2*y", "x*y^2"});
    const Saturation s = saturation(i, poly("x", 2, q));
    CHECK(ideal_equal(s.ideal, ideal(2, q, {"y"})));
    CHECK(s.exponent <= 2);
    CHECK(ideal_subset(i, s.ideal));
    CHECK(ideal_equal(ideal_quotient(s.ideal, poly("x", 2, q)), s.ideal));
    CHECK_THROWS_AS(ideal_quotient(i, Polynomial(2, q)), DomainError);
  }

  TEST_CASE("powers") {
    const Field q = Field::rationals();
    CHECK(ideal_equal(ideal_power(ideal(2, q, {"x", "y"}), 2), ideal(2, q, {"x^2", "x*y", "y^2"})));
    const Ideal i = ideal(3, q, {"x - y", "z^2"});
    CHECK(ideal_equal(ideal_power(i, 1), i));
    CHECK(ideal_power(i, 0).is_unit());
    CHECK(ideal_equal(ideal_power(ideal(3, q, {"y", "z"}), 2), ideal(3, q, {"y^2", "y*z", "z^2"})));
  }

  TEST_CASE("elimination") {
    const Field q = Field::rationals();
    // Twisted cubic: eliminate t from (x - t, y - t^2, z - t^3).
    const Ideal graph(4, q, {Polynomial::parse("x - t", 4, q, {"t", "x", "y", "z"}),
                             Polynomial::parse("y - t^2", 4, q, {"t", "x", "y", "z"}),
                             Polynomial::parse("z - t^3", 4, q, {"t", "x", "y", "z"})});
    const Ideal cubic = eliminate_leading(graph, 1);
    CHECK(ideal_equal(cubic, ideal(3, q, {"y - x^2", "z - x*y"})));
  }

  TEST_CASE("truncated membership oracle") {
    const Field q = Field::rationals();
    CHECK(truncated_membership_oracle(poly("x^2", 1, q), {poly("x", 1, q)}, 3));
    const std::vector<Polynomial> gens{poly("x^2 - y", 3, q), poly("x^3 - z", 3, q)};
    // Explicit cofactors: (y - x^2)(y^2 + x^2 y + x^4) + (x^3 - z)(x^3 + z) = y^3 - z^2.
    const Polynomial target = poly("y^3 - z^2", 3, q);
    CHECK(poly("(y - x^2)*(y^2 + x^2*y + x^4) + (x^3 - z)*(x^3 + z)", 3, q) == target);
    CHECK(truncated_membership_oracle(target, gens, 9));
    CHECK_FALSE(truncated_membership_oracle(Polynomial::constant(2, q.one()), {poly("x", 2, q), poly("y", 2, q)}, 4));
    CHECK_THROWS_AS(truncated_membership_oracle(poly("x^5", 1, q), {poly("x", 1, q)}, 3), DomainError);
  }

  TEST_CASE("budgets raise resource errors") {
    const Field q = Field::rationals();
    GroebnerBudget tiny;
    tiny.max_pairs = 1;
    const Ideal i = ideal(3, q, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"});
    try {
      (void)i.basis(MonomialOrder::degrevlex(), tiny);
      FAIL("expected a ResourceError");
    } catch (const ResourceError& e) {
      CHECK(e.budget() == "max_pairs");
    }
  }

  TEST_CASE("ideal rejects mixed rings") {
    const Field q = Field::rationals();
    CHECK_THROWS(Ideal(2, q, {poly("x", 3, q)}));
    CHECK_THROWS(Ideal(2, q, {poly("x", 2, Field::prime(11))}));
  }
}
