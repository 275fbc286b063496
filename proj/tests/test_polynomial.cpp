#include <doctest.h>

#include <random>

#include "genpos/errors.hpp"
#include "genpos/polynomial.hpp"
#include "support.hpp"

using namespace genpos;
using testing::poly;

TEST_SUITE("multipoly") {
  TEST_CASE("arithmetic") {
    const Field q = Field::rationals();
    CHECK(poly("(x+y)*(x-y)", 2, q) == poly("x^2 - y^2", 2, q));
    const Polynomial f = poly("3*x^2*y - 1/2*z", 3, q);
    CHECK((f + (-f)).is_zero());
    CHECK((f - f).terms().empty());
    const Field f11 = Field::prime(11);
    CHECK(poly("(y^5 - x^5)*z", 3, f11) == poly("y^5*z - x^5*z", 3, f11));
    CHECK(poly("(x+1)^3", 1, q) == poly("x^3 + 3*x^2 + 3*x + 1", 1, q));
  }

  TEST_CASE("canonical text") {
    const Field q = Field::rationals();
    CHECK(Polynomial::parse("3*x0^2*x1 - 1/2*x2", 3, q).to_string() == "3*x0^2*x1 - 1/2*x2");
    CHECK(Polynomial::parse("x2 + x0", 3, q).to_string() == "x0 + x2");
    CHECK(Polynomial::parse("0", 2, q).to_string() == "0");
    CHECK(Polynomial::parse("-x0", 2, Field::prime(11)).to_string() == "10*x0");
    CHECK_THROWS_AS(Polynomial::parse("x3", 2, q), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x0 +", 2, q), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x0^", 2, q), ParseError);
  }

  TEST_CASE("text round-trip on random polynomials") {
    std::mt19937_64 rng(2);
    for (const Field& f : {Field::rationals(), Field::prime(kBigPrime)}) {
      for (int i = 0; i < 50; ++i) {
        const Polynomial p = testing::random_polynomial(3, f, 4, 5, rng);
        CHECK(Polynomial::parse(p.to_string(), 3, f) == p);
      }
    }
  }

  TEST_CASE("homogeneous components") {
    const Field q = Field::rationals();
    const Polynomial f = poly("x^2 + x*y + z", 3, q);
    CHECK(f.homogeneous_component(2) == poly("x^2 + x*y", 3, q));
    CHECK(f.homogeneous_component(0).is_zero());
    CHECK(poly("x*y*z", 3, q).homogeneous_component(3) == poly("x*y*z", 3, q));

    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
      const Polynomial p = testing::random_polynomial(3, q, 5, 6, rng);
      Polynomial sum(3, q);
      for (std::uint32_t d = 0; d <= 5; ++d) sum += p.homogeneous_component(d);
      CHECK(sum == p);
    }
  }

  TEST_CASE("initial forms") {
    const Field q = Field::rationals();
    auto [d1, f1] = poly("z^2 + x*z + x^3", 3, q).initial_form();
    CHECK(d1 == 2);
    CHECK(f1 == poly("z^2 + x*z", 3, q));
    auto [d2, f2] = poly("x^5", 3, q).initial_form();
    CHECK(d2 == 5);
    CHECK(f2 == poly("x^5", 3, q));
    auto [d3, f3] = Polynomial::parse("t^6 + t^7", 1, q, {"t"}).initial_form();
    CHECK(d3 == 6);
    CHECK(f3 == Polynomial::parse("t^6", 1, q, {"t"}));
    CHECK_THROWS_AS(Polynomial(2, q).initial_form(), DomainError);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
      const Polynomial p = testing::random_polynomial(3, q, 5, 6, rng);
      if (p.is_zero()) continue;
      auto [d, form] = p.initial_form();
      for (const auto& t : p.terms()) CHECK(d <= t.monomial.degree());
      CHECK(form.initial_form().second == form);
    }
  }

  TEST_CASE("evaluation") {
    const Field f = Field::prime(11);
    const Polynomial yz = poly("y*z", 3, f);
    CHECK(yz.evaluate({f.one(), f.from_int(3), f.zero()}).is_zero());
    CHECK(poly("x", 2, f).evaluate({f.zero(), f.zero()}).is_zero());
    const Field q = Field::rationals();
    CHECK(poly("x^2 + y^2", 2, q).evaluate({q.from_int(3), q.from_int(4)}) == q.from_int(25));
    CHECK_THROWS_AS(poly("x", 2, q).evaluate({q.one()}), DomainError);
  }

  TEST_CASE("monomial orders") {
    const Monomial a({2, 0, 1}), b({1, 2, 0}), c({0, 0, 3});
    const MonomialOrder drl = MonomialOrder::degrevlex(), lex = MonomialOrder::lex();
    CHECK(drl.compare(b, a) > 0);  // x*y^2 > x^2*z in degrevlex
    CHECK(lex.compare(a, b) > 0);
    CHECK(drl.compare(a, c) > 0);
    const MonomialOrder elim = MonomialOrder::elimination(1);
    CHECK(elim.compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})) > 0);

    std::mt19937_64 rng(4);
    auto rand_mono = [&] {
      std::vector<std::uint32_t> e(3);
      for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 4);
      return Monomial(e);
    };
    for (const MonomialOrder& o : {drl, lex, elim, MonomialOrder::elimination(2)}) {
      for (int i = 0; i < 300; ++i) {
        const Monomial m1 = rand_mono(), m2 = rand_mono(), m3 = rand_mono();
        CHECK(o.compare(m1, m2) == -o.compare(m2, m1));
        if (o.compare(m1, m2) < 0 && o.compare(m2, m3) < 0) CHECK(o.compare(m1, m3) < 0);
        if (o.compare(m1, m2) < 0) CHECK(o.compare(m3 * m1, m3 * m2) < 0);
      }
    }
  }

  TEST_CASE("univariate helpers") {
    const Field f = Field::prime(11);
    const Polynomial g = Polynomial::parse("t^6 - t", 1, f, {"t"});
    // g(t + 1) has zero constant term since g(1) = 0; its linear coefficient is g'(1) = 5.
    const Polynomial s = shift_univariate(g, f.one());
    CHECK(univariate_coefficient(s, 0).is_zero());
    CHECK(univariate_coefficient(s, 1) == f.from_int(5));
    CHECK(divide_exact(poly("x^2 - y^2", 2, f), poly("x - y", 2, f)) == poly("x + y", 2, f));
    CHECK_THROWS_AS(divide_exact(poly("x^2 + 1", 2, f), poly("x - y", 2, f)), DomainError);
  }
}
