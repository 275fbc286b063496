#pragma once

// Sparse multivariate polynomials over a Field. Terms are kept sorted in
// descending order under the polynomial's MonomialOrder, so the leading
// term is always terms().front().

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genpos/field.hpp"
#include "genpos/monomial.hpp"

namespace genpos {

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

class Polynomial {
 public:
  /// The zero polynomial.
  Polynomial(std::size_t nvars, Field field, MonomialOrder order = MonomialOrder::degrevlex());

  static Polynomial constant(std::size_t nvars, const Scalar& c, MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial variable(std::size_t nvars, const Field& field, std::size_t index,
                             MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial term(const Monomial& m, const Scalar& c, MonomialOrder order = MonomialOrder::degrevlex());
  /// Combines like terms and drops zeros.
  static Polynomial from_terms(std::size_t nvars, const Field& field, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::degrevlex());

  /// Parses e.g. "3*x0^2*x1 - 1/2*x2" or "(t^5-1)*t". Accepts + - * ^,
  /// parentheses and rational literals. Variables are x0..x{n-1}, or the
  /// given names.
  static Polynomial parse(std::string_view text, std::size_t nvars, const Field& field,
                          const std::vector<std::string>& names = {},
                          MonomialOrder order = MonomialOrder::degrevlex());

  std::size_t nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coefficient() const { return leading_term().coefficient; }

  /// Largest total degree of a term; 0 for the zero polynomial.
  std::uint32_t total_degree() const;
  /// Smallest total degree of a term. Throws DomainError on zero.
  std::uint32_t min_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;

  Polynomial with_order(const MonomialOrder& order) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& f);
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned exponent) const;

  /// Sum of the terms of total degree exactly d.
  Polynomial homogeneous_component(std::uint32_t degree) const;
  /// (n, component of degree n) for the least n with a nonzero component.
  std::pair<std::uint32_t, Polynomial> initial_form() const;

  Scalar evaluate(const std::vector<Scalar>& point) const;

  /// Canonical text: terms in descending degrevlex order, independent of the
  /// stored order. "0" for the zero polynomial.
  std::string to_string(const std::vector<std::string>& names = {}) const;

  /// Equal as polynomials (ignores the stored order).
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& rhs) const;
  void normalize(std::vector<Term> terms);

  std::size_t nvars_;
  Field field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Adds k new variables in front: x_i becomes x_{i+k}.
Polynomial prepend_variables(const Polynomial& f, std::size_t k);
/// Removes the first k variables; they must not occur in f.
Polynomial drop_leading_variables(const Polynomial& f, std::size_t k);
/// Whether any of the first k variables occurs in f.
bool involves_leading_variables(const Polynomial& f, std::size_t k);

/// Exact quotient h / f. Throws DomainError if f does not divide h.
Polynomial divide_exact(const Polynomial& h, const Polynomial& f);

/// Univariate Taylor shift: p(t) -> p(a + t).
Polynomial shift_univariate(const Polynomial& p, const Scalar& a);
/// Coefficient of t^k in a univariate polynomial.
Scalar univariate_coefficient(const Polynomial& p, std::uint32_t k);

}  // namespace genpos
