#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace genpos {

/// Exponent vector with its cached total degree. Variables are positional.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime_with(const Monomial& other) const;
  /// Requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  /// "x0^2*x1", "1" for the unit monomial.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Monomial order. Variable 0 is the largest variable.
///  - DegRevLex: total degree, then reverse lexicographic tie-break.
///  - Lex: plain lexicographic.
///  - Elimination(k): degrevlex on variables [0, k), ties broken by degrevlex
///    on [k, n). Eliminates the first k variables.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder elimination(std::size_t split) { return MonomialOrder(Kind::Elimination, split); }

  Kind kind() const noexcept { return kind_; }
  std::size_t split() const noexcept { return split_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool degree_compatible() const noexcept { return kind_ == Kind::DegRevLex; }

  std::string to_string() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}
  Kind kind_ = Kind::DegRevLex;
  std::size_t split_ = 0;
};

/// Strict "greater" comparator: sorts containers in descending order.
struct MonomialGreater {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b) > 0; }
};

/// All monomials of total degree d in n variables, descending in degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree);

}  // namespace genpos
