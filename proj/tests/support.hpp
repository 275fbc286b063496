#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "genpos/polynomial.hpp"

namespace testing {

// Plain modular Gaussian elimination, kept separate from the library's linear algebra.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  auto norm = [p](std::int64_t v) { return ((v % p) + p) % p; };
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, b = norm(a), e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && norm(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t iv = inv(m[rank][c]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || norm(m[i][c]) == 0) continue;
      const std::int64_t f = norm(m[i][c]) * iv % p;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = norm(m[i][j] - f * norm(m[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

// Random polynomial with no constant term: up to `terms` terms of degree 1..maxdeg.
inline genpos::Polynomial random_polynomial(std::size_t nvars, const genpos::Field& f, std::uint32_t maxdeg,
                                            std::size_t terms, std::mt19937_64& rng) {
  std::vector<genpos::Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    std::vector<std::uint32_t> e(nvars, 0);
    const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng() % maxdeg);
    for (std::uint32_t i = 0; i < d; ++i) ++e[rng() % nvars];
    ts.push_back({genpos::Monomial(e), genpos::random_scalar(f, rng)});
  }
  return genpos::Polynomial::from_terms(nvars, f, std::move(ts));
}

inline genpos::Polynomial poly(const std::string& s, std::size_t nvars, const genpos::Field& f,
                               const std::vector<std::string>& names = {"x", "y", "z", "w"}) {
  return genpos::Polynomial::parse(s, nvars, f, names);
}

}  // namespace testing
