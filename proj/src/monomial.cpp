#include "genpos/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "genpos/errors.hpp"

namespace genpos {

namespace {

std::uint32_t degree_in(const Monomial& m, std::size_t begin, std::size_t end) {
  std::uint32_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += m[i];
  return d;
}

// Degree first, then the last differing variable with the smaller exponent wins.
int degrevlex_block(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  const std::uint32_t da = degree_in(a, begin, end);
  const std::uint32_t db = degree_in(b, begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

void check_sizes(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DomainError("monomials over different variable counts");
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw DomainError("variable index out of range");
  std::vector<std::uint32_t> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  check_sizes(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
  check_sizes(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("monomial division is not exact");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  out.degree_ -= divisor.degree_;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_sizes(a, b);
  Monomial out = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
  out.degree_ += b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_sizes(a, b);
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  check_sizes(a, b);
  switch (kind_) {
    case Kind::DegRevLex:
      return degrevlex_block(a, b, 0, a.nvars());
    case Kind::Lex:
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::Elimination: {
      const std::size_t k = std::min(split_, a.nvars());
      if (const int c = degrevlex_block(a, b, 0, k); c != 0) return c;
      return degrevlex_block(a, b, k, a.nvars());
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elimination(" + std::to_string(split_) + ")";
  }
  return "?";
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> e(nvars, 0);
  // Enumerate compositions of `degree` into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t v = left + 1; v-- > 0;) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, degree);
  const MonomialGreater greater{MonomialOrder::degrevlex()};
  std::sort(out.begin(), out.end(), greater);
  return out;
}

}  // namespace genpos
