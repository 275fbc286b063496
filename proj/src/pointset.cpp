#include "genpos/pointset.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include "genpos/errors.hpp"
#include "genpos/linalg.hpp"

namespace genpos {

std::uint64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) throw DomainError("binomial coefficient overflows");
  }
  return static_cast<std::uint64_t>(result);
}

unsigned nu(std::uint64_t e, unsigned r) {
  if (e == 0 || r == 0) throw DomainError("nu needs e >= 1 and r >= 1");
  unsigned n = 0;
  while (binom(n + r, r) < e) ++n;
  return n;
}

// -------------------------------------------------------------- PointSet

PointSet::PointSet(unsigned r, Field field, std::vector<std::vector<Scalar>> points)
    : r_(r), field_(field), points_(std::move(points)) {
  if (points_.empty()) throw DomainError("a point set needs at least one point");
  for (auto& p : points_) {
    if (p.size() != r_ + 1) throw DomainError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                              std::to_string(r_ + 1));
    auto lead = std::find_if(p.begin(), p.end(), [](const Scalar& c) { return !c.is_zero(); });
    if (lead == p.end()) throw DomainError("the zero vector is not a projective point");
    for (const auto& c : p) {
      if (c.field() != field_) throw FieldError("coordinate outside " + field_.to_string());
    }
    const Scalar inv = lead->inverse();
    for (auto& c : p) c *= inv;
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw DomainError("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<std::vector<Scalar>> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) pts.push_back(points_.at(i));
  return PointSet(r_, field_, std::move(pts));
}

std::vector<std::vector<Scalar>> evaluation_matrix(const PointSet& points, std::uint32_t degree) {
  const auto monos = monomials_of_degree(points.r() + 1, degree);
  std::vector<std::vector<Scalar>> m;
  m.reserve(points.size());
  for (const auto& p : points.points()) {
    std::vector<Scalar> row;
    row.reserve(monos.size());
    for (const auto& mono : monos) {
      Scalar v = points.field().one();
      for (std::size_t i = 0; i < mono.nvars(); ++i) {
        if (mono[i] != 0) v *= p[i].pow(mono[i]);
      }
      row.push_back(std::move(v));
    }
    m.push_back(std::move(row));
  }
  return m;
}

std::size_t hilbert_function_points(const PointSet& points, std::uint32_t degree) {
  return matrix_rank(evaluation_matrix(points, degree), points.field());
}

HilbertProfile hilbert_profile(const PointSet& points, std::uint32_t max_degree) {
  HilbertProfile profile;
  for (std::uint32_t n = 0; n <= max_degree; ++n) {
    profile.values.push_back(hilbert_function_points(points, n));
    if (!profile.stabilization_degree && profile.values.back() == points.size()) profile.stabilization_degree = n;
  }
  return profile;
}

GenericityCertificate is_generic_position(const PointSet& points) {
  GenericityCertificate cert;
  cert.t = points.size();
  const std::uint64_t e = points.size();
  const unsigned top = nu(e, points.r());
  for (std::uint32_t n = 0; n <= top; ++n) {
    const auto matrix = evaluation_matrix(points, n);
    const std::size_t h = matrix_rank(matrix, points.field());
    cert.hilbert.push_back(h);
    if (cert.generic && h != std::min<std::uint64_t>(e, binom(n + points.r(), points.r()))) {
      cert.generic = false;
      cert.failing_degree = n;
      const auto monos = monomials_of_degree(points.r() + 1, n);
      const auto kernel = nullspace(matrix, monos.size(), points.field());
      // h < C(n+r, r) here, so the kernel is nonempty.
      std::vector<Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c) terms.push_back({monos[c], kernel.front()[c]});
      cert.witness = Polynomial::from_terms(points.r() + 1, points.field(), std::move(terms)).monic();
      cert.failing_subset.resize(points.size());
      for (std::size_t i = 0; i < points.size(); ++i) cert.failing_subset[i] = i;
    }
  }
  return cert;
}

namespace {

// Advances `combo` to the next t-subset of [0, e) in lexicographic order.
bool next_combination(std::vector<std::size_t>& combo, std::size_t e) {
  const std::size_t t = combo.size();
  for (std::size_t i = t; i-- > 0;) {
    if (combo[i] < e - t + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < t; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

GenericityCertificate is_generic_t_position(const PointSet& points, std::size_t t, std::uint64_t subset_budget,
                                            unsigned jobs) {
  const std::size_t e = points.size();
  if (t < 1 || t > e) throw DomainError("generic t-position needs 1 <= t <= e");
  const std::uint64_t count = binom(static_cast<std::int64_t>(e), static_cast<std::int64_t>(t));
  if (count > subset_budget) {
    throw ResourceError("subset_budget", "C(" + std::to_string(e) + ", " + std::to_string(t) + ") = " +
                                             std::to_string(count) + " subsets exceed the budget of " +
                                             std::to_string(subset_budget));
  }
  if (t == e) return is_generic_position(points);

  std::vector<std::vector<std::size_t>> subsets;
  subsets.reserve(count);
  std::vector<std::size_t> combo(t);
  for (std::size_t i = 0; i < t; ++i) combo[i] = i;
  do {
    subsets.push_back(combo);
  } while (next_combination(combo, e));

  auto check_range = [&](std::size_t begin, std::size_t end) -> std::optional<std::pair<std::size_t, GenericityCertificate>> {
    for (std::size_t s = begin; s < end; ++s) {
      GenericityCertificate c = is_generic_position(points.subset(subsets[s]));
      if (!c.generic) return std::make_pair(s, std::move(c));
    }
    return std::nullopt;
  };

  std::optional<std::pair<std::size_t, GenericityCertificate>> failure;
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    failure = check_range(0, subsets.size());
  } else {
    std::vector<std::future<std::optional<std::pair<std::size_t, GenericityCertificate>>>> parts;
    const std::size_t chunk = (subsets.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < subsets.size(); b += chunk) {
      parts.push_back(std::async(std::launch::async, check_range, b, std::min(subsets.size(), b + chunk)));
    }
    // Chunks are in lexicographic order, so the first failing chunk holds the first failure.
    for (auto& part : parts) {
      auto r = part.get();
      if (r && !failure) failure = std::move(r);
    }
  }

  if (!failure) {
    GenericityCertificate cert;
    cert.t = t;
    return cert;
  }
  GenericityCertificate cert = std::move(failure->second);
  cert.t = t;
  cert.failing_subset = subsets[failure->first];
  return cert;
}

GenericityCertificate is_generic_e1_e_position(const PointSet& points, std::uint64_t subset_budget, unsigned jobs) {
  if (points.size() >= 2) {
    GenericityCertificate sub = is_generic_t_position(points, points.size() - 1, subset_budget, jobs);
    if (!sub.generic) return sub;
  }
  return is_generic_position(points);
}

PointSet random_point_set(std::size_t e, unsigned r, const Field& field, std::mt19937_64& rng) {
  std::vector<std::vector<Scalar>> pts;
  while (pts.size() < e) {
    std::vector<Scalar> p;
    for (unsigned i = 0; i <= r; ++i) p.push_back(random_scalar(field, rng));
    auto lead = std::find_if(p.begin(), p.end(), [](const Scalar& c) { return !c.is_zero(); });
    if (lead == p.end()) continue;
    const Scalar inv = lead->inverse();
    for (auto& c : p) c *= inv;
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
    pts.push_back(std::move(p));
  }
  return PointSet(r, field, std::move(pts));
}

}  // namespace genpos
