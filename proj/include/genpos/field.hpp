#pragma once

// Exact scalars: arbitrary-precision rationals and prime-field residues
// behind a single value type.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace genpos {

class Scalar;

/// Identifies a ground field: the rationals, or GF(p) for a prime p < 2^32.
class Field {
 public:
  Field() = default;
  static Field rationals() noexcept { return Field{}; }
  /// Throws DomainError unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return modulus_ == 0; }
  bool is_prime() const noexcept { return modulus_ != 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Accepts "n", "n/d", "k mod p" (p must match this field).
  Scalar parse(std::string_view text) const;

  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  static Scalar rational(mpq_class q);
  static Scalar residue(std::int64_t value, std::uint64_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  /// Throws FieldError for residues.
  const mpq_class& as_rational() const;
  /// Throws FieldError for rationals.
  std::uint64_t residue_value() const;

  /// Canonical text: "n", "n/d" or "k mod p".
  std::string to_string() const;
  /// Text without the " mod p" suffix, as used inside polynomial text.
  std::string coefficient_text() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };
  void check_same_field(const Scalar& rhs) const;

  std::variant<mpq_class, Residue> value_;
};

/// Field plus the roots of unity a computation needs.
struct FieldSpec {
  Field field;
  std::vector<unsigned> root_orders;

  /// Throws FieldError if some required order d does not divide p - 1
  /// (or d > 2 over the rationals).
  void validate() const;
};

/// All d distinct d-th roots of unity: the powers w^0, ..., w^{d-1} of the
/// smallest primitive d-th root w.
std::vector<Scalar> roots_of_unity(const Field& field, unsigned d);

bool is_prime_u64(std::uint64_t n);

/// Uniform element of a prime field; small integers in [-bound, bound] over Q.
Scalar random_scalar(const Field& field, std::mt19937_64& rng, std::int64_t rational_bound = 9);

/// 2^31 - 1: the default field for randomized genericity experiments.
inline constexpr std::uint64_t kBigPrime = 2147483647ULL;

}  // namespace genpos
