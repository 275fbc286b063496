#pragma once

// Finite point sets in projective space: Hilbert functions of their
// coordinate rings through evaluation matrices, and generic (t-)position.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "genpos/field.hpp"
#include "genpos/polynomial.hpp"

namespace genpos {

/// Exact binomial coefficient; 0 unless 0 <= k <= n. Throws on overflow.
std::uint64_t binom(std::int64_t n, std::int64_t k);

/// Least n >= 0 with e <= C(n + r, r).
unsigned nu(std::uint64_t e, unsigned r);

/// e distinct points of P^r, each scaled so its first nonzero coordinate is 1.
class PointSet {
 public:
  /// Throws DomainError on empty input, zero vectors, wrong lengths or
  /// coincident projective points.
  PointSet(unsigned r, Field field, std::vector<std::vector<Scalar>> points);

  unsigned r() const noexcept { return r_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Field& field() const noexcept { return field_; }
  const std::vector<std::vector<Scalar>>& points() const noexcept { return points_; }
  const std::vector<Scalar>& operator[](std::size_t i) const { return points_[i]; }

  PointSet subset(const std::vector<std::size_t>& indices) const;

 private:
  unsigned r_;
  Field field_;
  std::vector<std::vector<Scalar>> points_;
};

/// e x C(n+r, r) matrix: row i holds the degree-n monomials evaluated at P_i
/// (monomials in descending degrevlex order).
std::vector<std::vector<Scalar>> evaluation_matrix(const PointSet& points, std::uint32_t degree);

/// H(n) = rank of the degree-n evaluation matrix.
std::size_t hilbert_function_points(const PointSet& points, std::uint32_t degree);

struct HilbertProfile {
  std::vector<std::size_t> values;  // H(0), ..., H(N)
  std::optional<std::uint32_t> stabilization_degree;  // first n with H(n) = e
};

/// H(0..max_degree).
HilbertProfile hilbert_profile(const PointSet& points, std::uint32_t max_degree);

struct GenericityCertificate {
  bool generic = true;
  std::size_t t = 0;  // subset size checked
  std::optional<std::uint32_t> failing_degree;
  std::optional<Polynomial> witness;  // degree-n form vanishing on the failing subset
  std::vector<std::size_t> failing_subset;  // indices into the original set
  std::vector<std::size_t> hilbert;  // H(0..nu) of the failing (or full) set
};

/// Generic iff H(n) = min(e, C(n+r, r)) for 0 <= n <= nu(e, r). On failure the
/// witness is a monic (degrevlex) null vector of the smallest failing degree.
GenericityCertificate is_generic_position(const PointSet& points);

/// Every t-subset is in generic position. Subsets are visited in
/// lexicographic order and the first failure is reported. Throws
/// ResourceError("subset_budget") if C(e, t) exceeds `subset_budget`.
GenericityCertificate is_generic_t_position(const PointSet& points, std::size_t t,
                                            std::uint64_t subset_budget = 20000, unsigned jobs = 1);

/// Generic (e-1) position and generic position together.
GenericityCertificate is_generic_e1_e_position(const PointSet& points, std::uint64_t subset_budget = 20000,
                                               unsigned jobs = 1);

/// e uniformly random distinct points of P^r (resampling coincidences).
PointSet random_point_set(std::size_t e, unsigned r, const Field& field, std::mt19937_64& rng);

}  // namespace genpos
