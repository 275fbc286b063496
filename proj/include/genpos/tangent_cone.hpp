#pragma once

// Tangent cones of curve germs at the origin: lowest-form ideals by
// degree-truncated row reduction, Hilbert functions of the associated graded
// ring, tangent directions of parametrized branches, and membership in
// subalgebras of k[t].

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "genpos/groebner.hpp"
#include "genpos/pointset.hpp"

namespace genpos {

/// One branch t -> (p_0(t), ..., p_r(t)) through the origin.
struct Branch {
  std::vector<Polynomial> components;  // univariate, zero constant term
  std::uint32_t order;                 // least positive t-degree among components
};

class BranchCurve {
 public:
  /// `branches` are local parametrizations at the origin. `parametrization`
  /// optionally gives one global parametrization of the whole curve, used for
  /// implicitization instead of intersecting per-branch ideals.
  BranchCurve(unsigned r, Field field, std::vector<std::vector<Polynomial>> branches,
              std::optional<std::vector<Polynomial>> parametrization = std::nullopt);

  unsigned r() const noexcept { return r_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Branch>& branches() const noexcept { return branches_; }
  const std::optional<std::vector<Polynomial>>& parametrization() const noexcept { return parametrization_; }

 private:
  unsigned r_;
  Field field_;
  std::vector<Branch> branches_;
  std::optional<std::vector<Polynomial>> parametrization_;
};

/// Degree slices d = 0..degree_bound of the ideal of lowest forms.
struct TruncatedGradedIdeal {
  std::size_t nvars;
  Field field;
  std::uint32_t degree_bound;
  std::vector<std::vector<Polynomial>> slices;  // slices[d]: basis of degree-d forms
  std::vector<std::vector<Polynomial>> generators;  // forms of slices[d] not in x_i * slices[d-1]
};

/// Lowest forms of { m*g : g in the degrevlex basis of I, deg(m*g) <= D },
/// closed under multiplication by variables. Exact in each degree once D is
/// large enough; lowest forms needing higher-degree representatives are missed.
TruncatedGradedIdeal lowest_form_ideal(const Ideal& ideal, std::uint32_t degree_bound,
                                       const GroebnerBudget& budget = {});

struct ConeProfile {
  std::vector<std::size_t> hilbert;  // H(0..D)
  std::size_t emdim = 0;             // H(1)
  bool stabilized = false;           // H constant on three consecutive degrees
  std::size_t multiplicity = 0;      // the stable value, when stabilized
  std::uint32_t stabilization_degree = 0;
};

/// H(d) = C(d + n - 1, n - 1) - dim slice_d.
ConeProfile cone_profile(const TruncatedGradedIdeal& cone);

struct TangentConeResult {
  TruncatedGradedIdeal cone;
  ConeProfile profile;
  unsigned attempts;
};

/// lowest_form_ideal + cone_profile with D = max(2*nu(e_guess, r) + 4, max
/// generator degree), doubled up to `retries` times until the profile
/// stabilizes. Throws DomainError if it never does.
TangentConeResult tangent_cone(const Ideal& ideal, std::size_t e_guess = 1,
                               std::optional<std::uint32_t> degree_bound = std::nullopt, unsigned retries = 2,
                               const GroebnerBudget& budget = {});

/// The order-1 coefficients of each branch as a point of P^r. Throws
/// DomainError for branches of order >= 2 or coinciding tangents.
PointSet branch_tangent_points(const BranchCurve& curve);

/// Kernel of k[x_0..x_r] -> k[t], x_i -> p_i(t).
Ideal implicitize(const std::vector<Polynomial>& parametrization, const GroebnerBudget& budget = {});

/// Ideal of the curve: implicitization of the global parametrization when
/// given, else the intersection of the branch ideals.
Ideal curve_ideal(const BranchCurve& curve, const GroebnerBudget& budget = {});

/// Whether p lies in the span of the products g^a (|a| >= min_product_degree)
/// of the generators with t-degree <= t_degree_bound. min_product_degree = 1
/// decides membership in the maximal ideal of k[gens], 3 in its cube.
/// Throws DomainError when deg p exceeds the bound.
bool subalgebra_member(const Polynomial& p, const std::vector<Polynomial>& gens, std::uint32_t t_degree_bound,
                       unsigned min_product_degree = 1);

}  // namespace genpos
