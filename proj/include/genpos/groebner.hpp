#pragma once

// Buchberger's algorithm and the ideal arithmetic built on it.

#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <vector>

#include "genpos/polynomial.hpp"

namespace genpos {

/// Caps that turn a runaway computation into a ResourceError.
struct GroebnerBudget {
  std::size_t max_basis_size = 5000;
  std::size_t max_pairs = 500000;
};

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
/// Pairs are processed by ascending degree of their lcm, ties by creation
/// index, using the coprime (first) and chain (second) criteria. The result
/// is monic, interreduced and sorted by descending leading monomial.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                   const GroebnerBudget& budget = {});

/// Fully reduced remainder of f modulo `basis` (taken in the basis' order).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// True when every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

/// Whether `basis` is reduced: monic and no term of an element divisible by
/// another element's leading monomial.
bool is_reduced_basis(const std::vector<Polynomial>& basis);

/// An ideal of the polynomial ring in `nvars` variables over `field`, given
/// by generators. Groebner bases are computed on demand and cached per order.
class Ideal {
 public:
  Ideal(std::size_t nvars, Field field, std::vector<Polynomial> gens = {});
  static Ideal unit(std::size_t nvars, const Field& field);

  std::size_t nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::uint32_t max_generator_degree() const;

  /// Cached reduced basis; copies of an Ideal share the cache.
  const std::vector<Polynomial>& basis(const MonomialOrder& order = MonomialOrder::degrevlex(),
                                       const GroebnerBudget& budget = {}) const;
  bool contains(const Polynomial& f, const GroebnerBudget& budget = {}) const;
  bool is_unit(const GroebnerBudget& budget = {}) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::list<std::pair<MonomialOrder, std::vector<Polynomial>>> bases;
  };

  std::size_t nvars_;
  Field field_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerBudget& budget = {});
bool ideal_subset(const Ideal& a, const Ideal& b, const GroebnerBudget& budget = {});
bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerBudget& budget = {});

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Generated by all m-fold products of generators; I^0 is the unit ideal.
Ideal ideal_power(const Ideal& ideal, unsigned m);

/// Elimination ideal I ∩ k[x_k, ..., x_{n-1}], returned in the remaining variables.
Ideal eliminate_leading(const Ideal& ideal, std::size_t k, const GroebnerBudget& budget = {});

/// I ∩ J: eliminate u from u*I + (1 - u)*J.
Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerBudget& budget = {});
/// I : f, computed as (I ∩ (f)) / f.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const GroebnerBudget& budget = {});

struct Saturation {
  Ideal ideal;
  /// Least k with I : f^k = I : f^(k+1).
  unsigned exponent;
};
/// I : f^∞ by iterated quotients until the ideal stops growing.
Saturation saturation(const Ideal& ideal, const Polynomial& f, const GroebnerBudget& budget = {},
                      unsigned max_steps = 64);

/// Decides whether f lies in span{ m*g : g in gens, deg(m*g) <= D } by exact
/// row reduction. Independent of the Buchberger engine; a "true" answer
/// always certifies membership.
bool truncated_membership_oracle(const Polynomial& f, const std::vector<Polynomial>& gens, std::uint32_t degree_bound);

}  // namespace genpos
