#include <doctest.h>

#include "genpos/errors.hpp"
#include "genpos/tangent_cone.hpp"
#include "support.hpp"

using namespace genpos;
using testing::poly;

namespace {

Polynomial t_poly(const char* s, const Field& f) { return Polynomial::parse(s, 1, f, {"t"}); }

}  // namespace

TEST_SUITE("tangentcone") {
  TEST_CASE("cusp") {
    const Field q = Field::rationals();
    const Ideal cusp(2, q, {poly("y^2 - x^3", 2, q)});
    const TruncatedGradedIdeal t = lowest_form_ideal(cusp, 4);
    REQUIRE(t.generators[2].size() == 1);
    CHECK(t.generators[2][0] == poly("y^2", 2, q));
    for (std::uint32_t d = 3; d <= 4; ++d) CHECK(t.generators[d].empty());
    const ConeProfile p = cone_profile(t);
    // Oracle: k[x,y]/(y^2) has monomials x^d and x^(d-1) y in each degree d >= 1.
    CHECK(p.hilbert == std::vector<std::size_t>{1, 2, 2, 2, 2});
    CHECK(p.stabilized);
    CHECK(p.multiplicity == 2);
    CHECK(p.emdim == 2);
  }

  TEST_CASE("lowest forms need the multiple span") {
    const Field q = Field::rationals();
    const Ideal i(2, q, {poly("x*y", 2, q), poly("y^2 - x^5", 2, q)});
    const TruncatedGradedIdeal t = lowest_form_ideal(i, 6);
    CHECK(t.generators[2].size() == 2);
    // x^6 = x*(x^5 - y^2) + y*(x*y) is an initial form not visible from the generators.
    REQUIRE(t.generators[6].size() == 1);
    CHECK(t.generators[6][0] == poly("x^6", 2, q));
    // Oracle: k[x,y]/(xy, y^2, x^6) has basis 1, x..x^5, y.
    const ConeProfile p = cone_profile(t);
    CHECK(p.hilbert == std::vector<std::size_t>{1, 2, 1, 1, 1, 1, 0});
  }

  TEST_CASE("smooth point and linear slices") {
    const Field q = Field::rationals();
    const TruncatedGradedIdeal t = lowest_form_ideal(Ideal(2, q, {poly("x", 2, q)}), 5);
    CHECK(t.slices[1].size() == 1);
    for (std::uint32_t d = 1; d <= 5; ++d) CHECK(t.slices[d].size() == d);
    const ConeProfile p = cone_profile(t);
    CHECK(p.multiplicity == 1);
    CHECK(tangent_cone(Ideal(2, q, {poly("x", 2, q)})).profile.multiplicity == 1);
    CHECK_THROWS_AS(lowest_form_ideal(Ideal(2, q, {poly("x^3 - y^2", 2, q)}), 2), DomainError);
  }

  TEST_CASE("non-stabilizing truncation is flagged") {
    const Field q = Field::rationals();
    const ConeProfile p = cone_profile(lowest_form_ideal(Ideal(2, q, {poly("x*y", 2, q)}), 2));
    CHECK_FALSE(p.stabilized);
  }

  TEST_CASE("six-branch curve over GF(11)") {
    const Field f = Field::prime(11);
    const std::vector<Polynomial> param{t_poly("t^6 - t", f), t_poly("t^7 - t^2", f), t_poly("t^11 - 2*t^6 + t", f)};
    const Ideal i = implicitize(param);
    CHECK(i.contains(poly("x^3 - y*z", 3, f)));
    CHECK(i.contains(poly("y^5 - x^5 - x^4*z", 3, f)));
    const TangentConeResult cone = tangent_cone(i, 6);
    CHECK(cone.profile.multiplicity == 6);
    CHECK(cone.profile.emdim == 3);

    std::vector<std::vector<Polynomial>> branches;
    std::vector<Scalar> preimages{f.zero()};
    for (const auto& a : roots_of_unity(f, 5)) preimages.push_back(a);
    for (const auto& a : preimages) {
      std::vector<Polynomial> b;
      for (const auto& p : param) b.push_back(shift_univariate(p, a));
      branches.push_back(b);
    }
    const BranchCurve curve(2, f, branches, param);
    const PointSet pts = branch_tangent_points(curve);
    CHECK(pts.size() == 6);
    CHECK(pts[0] == std::vector<Scalar>{f.one(), f.zero(), f.from_int(-1)});
    for (std::size_t k = 1; k < 6; ++k) {
      CHECK(pts[k] == std::vector<Scalar>{f.one(), preimages[k], f.zero()});
    }
    // Without the global parametrization the branch ideals are intersected.
    const BranchCurve local(2, f, branches);
    CHECK(curve_ideal(local).contains(poly("x^3 - y*z", 3, f)));
  }

  TEST_CASE("branch tangents") {
    const Field q = Field::rationals();
    const BranchCurve two(2, q, {{t_poly("t", q), t_poly("t", q), t_poly("0", q)},
                                  {t_poly("t", q), t_poly("-t", q), t_poly("0", q)}});
    const PointSet p = branch_tangent_points(two);
    CHECK(p[0] == std::vector<Scalar>{q.one(), q.one(), q.zero()});
    CHECK(p[1] == std::vector<Scalar>{q.one(), q.from_int(-1), q.zero()});

    const BranchCurve axes(2, q, {{t_poly("t", q), t_poly("0", q), t_poly("0", q)},
                                   {t_poly("0", q), t_poly("t", q), t_poly("0", q)},
                                   {t_poly("0", q), t_poly("0", q), t_poly("t", q)}});
    CHECK(branch_tangent_points(axes).size() == 3);

    const BranchCurve cusp(1, q, {{t_poly("t^2", q), t_poly("t^3", q)}});
    CHECK_THROWS_AS(branch_tangent_points(cusp), DomainError);
    const BranchCurve tangent(1, q, {{t_poly("t", q), t_poly("t^2", q)}, {t_poly("t", q), t_poly("t^3", q)}});
    CHECK_THROWS_AS(branch_tangent_points(tangent), DomainError);
    CHECK_THROWS_AS(BranchCurve(1, q, {{t_poly("t + 1", q), t_poly("t", q)}}), DomainError);
  }

  TEST_CASE("subalgebra membership") {
    const Field q = Field::rationals();
    CHECK(subalgebra_member(t_poly("t^2", q), {t_poly("t^2", q), t_poly("t^3", q)}, 10));
    CHECK_FALSE(subalgebra_member(t_poly("t", q), {t_poly("t^2", q), t_poly("t^3", q)}, 10));
    CHECK(subalgebra_member(t_poly("t^7", q), {t_poly("t^2", q), t_poly("t^3", q)}, 10));
    CHECK_THROWS_AS(subalgebra_member(t_poly("t^12", q), {t_poly("t^2", q)}, 10), DomainError);

    const Field f = Field::prime(11);
    const Polynomial g = t_poly("t^6 - t", f), tg = t_poly("t^7 - t^2", f), fg = t_poly("t^11 - 2*t^6 + t", f);
    const Polynomial p = fg * (fg + g);
    CHECK(p == t_poly("t^4", f) * g.pow(3));
    CHECK(subalgebra_member(p, {g, tg, fg}, 40, 2));
    CHECK_FALSE(subalgebra_member(p, {g, tg, fg}, 40, 3));
  }
}
