#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "genpos/errors.hpp"
#include "genpos/field.hpp"
#include "genpos/linalg.hpp"

using namespace genpos;

TEST_SUITE("exactfield") {
  TEST_CASE("rational arithmetic is exact and reduced") {
    const Field q = Field::rationals();
    CHECK((q.parse("2/3") + q.parse("1/6")) == q.parse("5/6"));
    CHECK((q.parse("4/6")).to_string() == "2/3");
    CHECK(q.parse("-3/-6").to_string() == "1/2");
    CHECK(q.parse("0/5").to_string() == "0");
    CHECK((q.parse("1/3") * q.from_int(3)).is_one());
  }

  TEST_CASE("prime field arithmetic") {
    const Field f = Field::prime(11);
    CHECK((f.from_int(3) * f.from_int(4)) == f.one());
    CHECK(f.from_int(-1).to_string() == "10 mod 11");
    CHECK(f.parse("10 mod 11") == f.from_int(-1));
    CHECK(f.parse("1/2") == f.from_int(6));
    CHECK(f.from_int(2).pow(10).is_one());
  }

  TEST_CASE("errors") {
    const Field f = Field::prime(11);
    CHECK_THROWS_AS(f.one() / f.zero(), FieldError);
    CHECK_THROWS_AS(Field::rationals().one() / Field::rationals().zero(), FieldError);
    CHECK_THROWS_AS(f.one() + Field::prime(7).one(), FieldError);
    CHECK_THROWS_AS(f.one() + Field::rationals().one(), FieldError);
    CHECK_THROWS(Field::prime(12));
    CHECK_THROWS(Field::prime(1));
    CHECK_THROWS(f.parse("3 mod 7"));
    CHECK_THROWS(f.parse("abc"));
    CHECK(f.one() != Field::prime(7).one());
  }

  TEST_CASE("a / a = 1 for random nonzero a") {
    std::mt19937_64 rng(3);
    for (const Field& f : {Field::rationals(), Field::prime(kBigPrime), Field::prime(11)}) {
      for (int i = 0; i < 200; ++i) {
        const Scalar a = random_scalar(f, rng);
        if (a.is_zero()) continue;
        CHECK((a / a).is_one());
        CHECK((a * a.inverse()).is_one());
        CHECK((a + (-a)).is_zero());
      }
    }
  }

  TEST_CASE("ring axioms on 1000 random triples") {
    std::mt19937_64 rng(11);
    for (const Field& f : {Field::rationals(), Field::prime(kBigPrime)}) {
      for (int i = 0; i < 1000; ++i) {
        const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
        REQUIRE(((a + b) + c) == (a + (b + c)));
        REQUIRE((a * (b + c)) == (a * b + a * c));
      }
    }
  }

  TEST_CASE("parse and print round-trip") {
    std::mt19937_64 rng(5);
    const Field q = Field::rationals();
    for (int i = 0; i < 200; ++i) {
      const Scalar a = random_scalar(q, rng) / (random_scalar(q, rng) + q.from_int(100));
      CHECK(q.parse(a.to_string()) == a);
    }
    const Field f = Field::prime(kBigPrime);
    for (int i = 0; i < 200; ++i) {
      const Scalar a = random_scalar(f, rng);
      CHECK(f.parse(a.to_string()) == a);
      CHECK(f.parse(a.coefficient_text()) == a);
    }
  }

  TEST_CASE("roots of unity") {
    const Field f = Field::prime(11);
    // Oracle: brute force over the field.
    std::set<std::uint64_t> brute;
    for (std::int64_t x = 1; x < 11; ++x) {
      if (f.from_int(x).pow(5).is_one()) brute.insert(static_cast<std::uint64_t>(x));
    }
    const auto roots = roots_of_unity(f, 5);
    std::vector<std::uint64_t> values;
    for (const auto& r : roots) values.push_back(r.residue_value());
    CHECK(values == std::vector<std::uint64_t>{1, 3, 9, 5, 4});
    CHECK(std::set<std::uint64_t>(values.begin(), values.end()) == brute);

    const auto seven = roots_of_unity(Field::prime(7), 2);
    CHECK(seven.size() == 2);
    CHECK(seven[0] == Field::prime(7).from_int(1));
    CHECK(seven[1] == Field::prime(7).from_int(6));
    CHECK_THROWS_AS(roots_of_unity(Field::prime(7), 5), FieldError);
    CHECK_THROWS_AS(roots_of_unity(Field::rationals(), 3), FieldError);
    CHECK(roots_of_unity(Field::rationals(), 2).size() == 2);

    for (unsigned d : {1U, 2U, 3U, 6U, 7U}) {
      const Field big = Field::prime(kBigPrime);
      const auto rs = roots_of_unity(big, d);
      CHECK(rs.size() == d);
      for (const auto& r : rs) CHECK(r.pow(d).is_one());
      CHECK(std::set<std::string>([&] {
              std::set<std::string> s;
              for (const auto& r : rs) s.insert(r.to_string());
              return s;
            }()).size() == d);
    }
  }

  TEST_CASE("field spec validation") {
    CHECK_NOTHROW((FieldSpec{Field::prime(11), {5}}.validate()));
    CHECK_THROWS_AS((FieldSpec{Field::prime(13), {5}}.validate()), FieldError);
  }

  TEST_CASE("echelon basis and nullspace") {
    const Field q = Field::rationals();
    auto s = [&](int v) { return q.from_int(v); };
    const std::vector<std::vector<Scalar>> m{{s(1), s(2), s(3)}, {s(2), s(4), s(6)}, {s(0), s(1), s(1)}};
    CHECK(matrix_rank(m, q) == 2);
    const auto kernel = nullspace(m, 3, q);
    REQUIRE(kernel.size() == 1);
    for (const auto& row : m) {
      Scalar dot = q.zero();
      for (std::size_t j = 0; j < 3; ++j) dot += row[j] * kernel[0][j];
      CHECK(dot.is_zero());
    }
    EchelonBasis e(q);
    CHECK(e.insert(to_sparse(m[0])));
    CHECK_FALSE(e.insert(to_sparse(m[1])));
    CHECK(e.insert(to_sparse(m[2])));
    CHECK(e.contains(to_sparse({s(1), s(3), s(4)})));
    CHECK_FALSE(e.contains(to_sparse({s(0), s(0), s(1)})));
  }
}
