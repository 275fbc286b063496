#include "genpos/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "genpos/errors.hpp"

namespace genpos {

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // p < 2^32, so the product fits.
  return (a * b) % p;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  }
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](std::uint64_t q) { return mod_pow(g, (p - 1) / q, p) != 1; })) {
      return g;
    }
  }
  throw FieldError("no primitive root found");
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 32U) || !is_prime_u64(p)) {
    throw DomainError("field modulus " + std::to_string(p) + " is not a prime below 2^32");
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar::rational(mpq_class(static_cast<long>(v)));
  return Scalar::residue(v, modulus_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar::rational(q);
  const std::uint64_t den = reduce_mpz(q.get_den(), modulus_);
  if (den == 0) {
    throw FieldError("denominator of " + q.get_str() + " vanishes mod " + std::to_string(modulus_));
  }
  const std::uint64_t num = reduce_mpz(q.get_num(), modulus_);
  const std::uint64_t inv = mod_pow(den, modulus_ - 2, modulus_);
  return Scalar::residue(static_cast<std::int64_t>(mod_mul(num, inv, modulus_)), modulus_);
}

Scalar Field::parse(std::string_view text) const {
  std::string_view s = trim(text);
  if (const auto pos = s.find("mod"); pos != std::string_view::npos) {
    const mpz_class p = parse_integer(s.substr(pos + 3), text);
    if (is_rational() || p != static_cast<unsigned long>(modulus_)) {
      throw FieldError("scalar '" + std::string(text) + "' does not belong to " + to_string());
    }
    s = trim(s.substr(0, pos));
  }
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(s.substr(0, slash), text);
    const mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return from_rational(q);
  }
  return from_rational(mpq_class(parse_integer(s, text)));
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(modulus_) + ")";
}

// --------------------------------------------------------------- Scalar

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.value_ = std::move(q);
  return s;
}

Scalar Scalar::residue(std::int64_t value, std::uint64_t modulus) {
  Scalar s;
  s.value_ = Residue{reduce_signed(value, modulus), modulus};
  return s;
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& rhs) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&rhs.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw FieldError("mixed-field operands: " + field().to_string() + " and " + rhs.field().to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = r->value == 0 ? 0 : r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(rhs.value_).value) % r->modulus;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t b = std::get<Residue>(rhs.value_).value;
    r->value = (r->value + r->modulus - b) % r->modulus;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mod_mul(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.value_)) {
    r->value = mod_pow(r->value, r->modulus - 2, r->modulus);
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
    q.canonicalize();
  }
  return out;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return residue(static_cast<std::int64_t>(mod_pow(r->value, exponent, r->modulus)), r->modulus);
  }
  Scalar result = Field::rationals().one();
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

const mpq_class& Scalar::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldError("scalar is not rational");
}

std::uint64_t Scalar::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldError("scalar is not a prime-field residue");
}

std::string Scalar::coefficient_text() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return std::to_string(r->value) + " mod " + std::to_string(r->modulus);
  }
  return std::get<mpq_class>(value_).get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra != nullptr && rb != nullptr) return ra->modulus == rb->modulus && ra->value == rb->value;
  if (ra == nullptr && rb == nullptr) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return false;
}

// ---------------------------------------------------------- FieldSpec etc

void FieldSpec::validate() const {
  for (unsigned d : root_orders) {
    if (d == 0) throw FieldError("root of unity order must be positive");
    if (field.is_rational() ? d > 2 : (field.modulus() - 1) % d != 0) {
      throw FieldError(field.to_string() + " lacks primitive roots of unity of order " + std::to_string(d));
    }
  }
}

std::vector<Scalar> roots_of_unity(const Field& field, unsigned d) {
  FieldSpec{field, {d}}.validate();
  if (field.is_rational()) {
    std::vector<Scalar> out{field.one()};
    if (d == 2) out.push_back(field.from_int(-1));
    return out;
  }
  const std::uint64_t p = field.modulus();
  const std::uint64_t base = mod_pow(primitive_root(p), (p - 1) / d, p);
  // Smallest primitive d-th root w = base^k with gcd(k, d) = 1.
  std::uint64_t w = base;
  for (unsigned k = 1; k <= d; ++k) {
    if (std::gcd(k, d) == 1) w = std::min(w, mod_pow(base, k, p));
  }
  if (d == 1) w = 1;
  std::vector<Scalar> out;
  out.reserve(d);
  std::uint64_t x = 1;
  for (unsigned k = 0; k < d; ++k) {
    out.push_back(Scalar::residue(static_cast<std::int64_t>(x), p));
    x = mod_mul(x, w, p);
  }
  return out;
}

Scalar random_scalar(const Field& field, std::mt19937_64& rng, std::int64_t rational_bound) {
  // Plain modular reduction of the raw engine output keeps sequences identical
  // across standard libraries.
  if (field.is_prime()) return Scalar::residue(static_cast<std::int64_t>(rng() % field.modulus()), field.modulus());
  const auto span = static_cast<std::uint64_t>(2 * rational_bound + 1);
  return field.from_int(static_cast<std::int64_t>(rng() % span) - rational_bound);
}

}  // namespace genpos
