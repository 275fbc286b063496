#pragma once

// Conductor oracles and the closed-form predictions they are compared with:
// graded coordinate rings of points, numerical semigroups, affine monomial
// algebras and hyperplane arrangements.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "genpos/groebner.hpp"
#include "genpos/pointset.hpp"

namespace genpos {

enum class Verdict { Match, Mismatch, HypothesesFailed };
std::string to_string(Verdict v);

/// Claimed conductor vs oracle conductor. `hypotheses.checks` maps each
/// hypothesis to whether it held; the comparison is reported either way.
struct ConductorCertificate {
  nlohmann::json model;
  nlohmann::json claimed;
  nlohmann::json oracle;
  nlohmann::json hypotheses = nlohmann::json::object();
  bool agrees = false;

  bool hypotheses_hold() const;
  Verdict verdict() const;
  nlohmann::json to_json() const;
};

// ------------------------------------------------------------ graded points

struct GradedConductor {
  std::uint32_t degree_bound;
  std::vector<std::size_t> hilbert;  // H(0..Dmax)
  /// Least d with S_d' = k^e for all d <= d' <= Dmax.
  std::uint32_t sigma;
  /// dim of the conductor in degree d: #{i : e_i in S_d' for all d <= d' <= Dmax}.
  std::vector<std::size_t> conductor_dims;
  /// The conductor is n^sigma: it vanishes below degree sigma.
  bool is_power_of_irrelevant_ideal;
};

/// Conductor of S = k[X] in its normalization prod_i k[T], degreewise in
/// k^e. Throws DomainError if Dmax < nu(e, r) + 2 or no degree <= Dmax has
/// full rank.
GradedConductor graded_points_conductor_oracle(const PointSet& points, std::uint32_t degree_bound);

/// Default bound max(nu(e, r) + 2, e).
std::uint32_t default_points_degree_bound(const PointSet& points);

/// Claim: the conductor is n^nu with nu = nu(e, r), under generic (e-1, e)
/// position.
ConductorCertificate check_points_conductor(const PointSet& points, std::uint64_t subset_budget = 20000, unsigned jobs = 1);

/// Samples products of nu random linear forms, scales them by random
/// elements of k^e and checks the result lies in S in degrees nu..nu+2.
/// Returns the number of samples that failed (0 when the containment holds).
std::size_t sample_maximal_power_in_conductor(const PointSet& points, std::size_t samples, std::mt19937_64& rng);

// ------------------------------------------------------- numerical semigroups

struct NumericalSemigroup {
  std::vector<std::uint64_t> generators;
  std::vector<std::uint64_t> minimal_generators;
  std::vector<std::uint64_t> gaps;
  std::int64_t frobenius;  // -1 when there are no gaps
  std::uint64_t conductor;
  std::uint64_t multiplicity;
  std::size_t embedding_dimension;

  bool contains(std::uint64_t n) const;
};

/// Throws DomainError unless the generators are positive with gcd 1.
NumericalSemigroup semigroup_conductor(const std::vector<std::uint64_t>& gens);

/// Compares m^nu, nu = nu(e, emdim - 1), with the conductor t^c k[[t]].
/// Unibranch germs of multiplicity e > 1 never have e reduced tangent
/// points, so the hypotheses always fail.
ConductorCertificate semigroup_contrast_certificate(const std::vector<std::uint64_t>& gens);

// ------------------------------------------------------ affine monomial algebras

using Exponent = std::vector<std::uint32_t>;

/// The monoid generated by `generators` in N^k, with normalization N^k.
struct AffineMonomialAlgebra {
  std::vector<Exponent> generators;
  std::uint32_t box;
};

struct MonomialConductor {
  std::uint32_t box;
  std::uint32_t inner;  // results are exact for points with all coordinates <= inner
  std::vector<Exponent> points;   // conductor points in the inner box, lexicographic
  std::vector<Exponent> minimal;  // its minimal elements
};

/// Points v of the inner box (box / 2) with v + w in the monoid for every w
/// with v + w in the box. Recomputed with a 3/4 box; differing answers throw
/// ResourceError("box"). Throws DomainError when the normalization is not N^k.
MonomialConductor monomial_algebra_conductor(const AffineMonomialAlgebra& algebra);

/// Points of the inner box lying above some element of `generators`.
std::vector<Exponent> monomial_ideal_points(const std::vector<Exponent>& generators, std::size_t dim,
                                            std::uint32_t inner);

/// All m-fold sums of `generators`, deduplicated and sorted.
std::vector<Exponent> monomial_power(const std::vector<Exponent>& generators, unsigned m);

/// Compares the conductor with the ideal generated by `candidate` in N^k.
ConductorCertificate monomial_algebra_certificate(const AffineMonomialAlgebra& algebra,
                                                  const std::vector<Exponent>& candidate, const std::string& claim);

/// k[W^n, Y, WY] = k[X,Y,Z]/(XY^n - Z^n) with the claim (y, z)^(n-1).
ConductorCertificate xyn_zn_certificate(unsigned n, std::uint32_t box);

// ------------------------------------------------------ hyperplane arrangements

struct ArrangementStratum {
  std::vector<std::size_t> hyperplanes;  // indices of the forms vanishing on it
  Ideal prime;
  unsigned multiplicity;  // number of hyperplanes through it
};

/// Throws DomainError unless the forms are nonzero, linear, homogeneous,
/// pairwise non-proportional and at least two.
void validate_arrangement(const std::vector<Polynomial>& forms);

/// intersection over i of (L_i) + (prod_{j != i} L_j).
Ideal hyperplane_arrangement_conductor_oracle(const std::vector<Polynomial>& forms, const GroebnerBudget& budget = {});

/// Codimension-two linear strata V(L_p, L_q) with their incidence counts.
std::vector<ArrangementStratum> arrangement_strata(const std::vector<Polynomial>& forms);

/// q^(m) = q^m : s^infinity. Throws DomainError if s lies in q.
Ideal symbolic_power(const Ideal& q, const Polynomial& s, unsigned m, const GroebnerBudget& budget = {});

/// Compares the oracle with intersection over strata of q_k^(e_k - 1).
ConductorCertificate check_arrangement_conductor(const std::vector<Polynomial>& forms,
                                                 const GroebnerBudget& budget = {});

}  // namespace genpos
