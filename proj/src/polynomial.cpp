#include "genpos/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "genpos/errors.hpp"

namespace genpos {

Polynomial::Polynomial(std::size_t nvars, Field field, MonomialOrder order)
    : nvars_(nvars), field_(field), order_(order) {}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c, MonomialOrder order) {
  Polynomial p(nvars, c.field(), order);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, const Field& field, std::size_t index, MonomialOrder order) {
  Polynomial p(nvars, field, order);
  p.terms_.push_back({Monomial::variable(nvars, index), field.one()});
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c, MonomialOrder order) {
  Polynomial p(m.nvars(), c.field(), order);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, const Field& field, std::vector<Term> terms,
                                  MonomialOrder order) {
  Polynomial p(nvars, field, order);
  p.normalize(std::move(terms));
  return p;
}

void Polynomial::normalize(std::vector<Term> terms) {
  std::map<Monomial, Scalar, MonomialGreater> acc(MonomialGreater{order_});
  for (auto& t : terms) {
    if (t.monomial.nvars() != nvars_) throw DomainError("term has wrong variable count");
    if (t.coefficient.field() != field_) throw FieldError("term coefficient from a different field");
    auto [it, inserted] = acc.try_emplace(t.monomial, t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  terms_.clear();
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms_.push_back({m, c});
  }
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw DomainError("polynomials over different variable counts");
  if (field_ != rhs.field_) throw FieldError("polynomials over different fields");
  if (!(order_ == rhs.order_)) throw DomainError("polynomials under different monomial orders");
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint32_t Polynomial::min_degree() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no initial form");
  std::uint32_t d = terms_.front().monomial.degree();
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Polynomial p(nvars_, field_, order);
  p.terms_ = terms_;
  const MonomialGreater greater{order};
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return greater(a.monomial, b.monomial); });
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coefficient.is_one()) return *this;
  const Scalar inv = terms_.front().coefficient.inverse();
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= inv;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    const int c = a == terms_.end()       ? -1
                  : b == rhs.terms_.end() ? 1
                                          : order_.compare(a->monomial, b->monomial);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Scalar s = a->coefficient + b->coefficient;
      if (!s.is_zero()) out.push_back({std::move(a->monomial), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::map<Monomial, Scalar, MonomialGreater> acc(MonomialGreater{a.order_});
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, s.coefficient * t.coefficient);
      if (!inserted) it->second += s.coefficient * t.coefficient;
    }
  }
  Polynomial p(a.nvars_, a.field_, a.order_);
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back({m, c});
  }
  return p;
}

Polynomial operator*(const Scalar& c, const Polynomial& f) {
  if (c.field() != f.field_) throw FieldError("scalar from a different field");
  Polynomial p(f.nvars_, f.field_, f.order_);
  if (c.is_zero()) return p;
  p.terms_ = f.terms_;
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial p(nvars_, field_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, field_.one(), order_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::homogeneous_component(std::uint32_t degree) const {
  Polynomial p(nvars_, field_, order_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == degree) p.terms_.push_back(t);
  }
  return p;
}

std::pair<std::uint32_t, Polynomial> Polynomial::initial_form() const {
  const std::uint32_t d = min_degree();
  return {d, homogeneous_component(d)};
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has wrong length");
  Scalar total = field_.zero();
  for (const auto& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] != 0) v *= point[i].pow(t.monomial[i]);
    }
    total += v;
  }
  return total;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<Term> sorted = terms_;
  const MonomialGreater greater{MonomialOrder::degrevlex()};
  std::sort(sorted.begin(), sorted.end(), [&](const Term& a, const Term& b) { return greater(a.monomial, b.monomial); });

  const bool rational = field_.is_rational();
  std::string out;
  for (const auto& t : sorted) {
    std::string coeff = t.coefficient.coefficient_text();
    bool negative = rational && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += t.monomial.to_string(names);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.field_ != b.field_ || a.terms_.size() != b.terms_.size()) return false;
  const Polynomial bb = b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == bb.terms_[i].monomial) || !(a.terms_[i].coefficient == bb.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, const Field& field, const std::vector<std::string>& names,
         MonomialOrder order)
      : text_(text), nvars_(nvars), field_(field), names_(names), order_(order) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + msg + " at offset " + std::to_string(pos_));
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(nvars_, field_, order_);
    bool first = true;
    while (true) {
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (!accept('+') && !first) {
        break;
      }
      Polynomial t = product();
      acc += negate ? -t : t;
      first = false;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial number() {
    mpq_class q(mpz_class(digits(), 10));
    // A '/' directly after a literal denotes a rational literal.
    if (accept('/')) {
      const mpz_class den(digits(), 10);
      if (den == 0) fail("zero denominator");
      q = mpq_class(q.get_num(), den);
      q.canonicalize();
    }
    return Polynomial::constant(nvars_, field_.from_rational(q), order_);
  }

  Polynomial variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    for (std::size_t i = 0; i < names_.size() && i < nvars_; ++i) {
      if (names_[i] == name) return Polynomial::variable(nvars_, field_, i, order_);
    }
    if (name.size() > 1 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      const std::size_t idx = std::stoul(name.substr(1));
      if (idx < nvars_) return Polynomial::variable(nvars_, field_, idx, order_);
    }
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  Field field_;
  const std::vector<std::string>& names_;
  MonomialOrder order_;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t nvars, const Field& field,
                             const std::vector<std::string>& names, MonomialOrder order) {
  return Parser(text, nvars, field, names, order).run();
}

// ------------------------------------------------------------ utilities

Polynomial prepend_variables(const Polynomial& f, std::size_t k) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(k, 0);
    e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(f.nvars() + k, f.field(), std::move(terms));
}

bool involves_leading_variables(const Polynomial& f, std::size_t k) {
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (t.monomial[i] != 0) return true;
    }
  }
  return false;
}

Polynomial drop_leading_variables(const Polynomial& f, std::size_t k) {
  if (k > f.nvars() || involves_leading_variables(f, k)) {
    throw DomainError("cannot drop variables that occur in the polynomial");
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    const auto& e = t.monomial.exponents();
    terms.push_back({Monomial(std::vector<std::uint32_t>(e.begin() + static_cast<std::ptrdiff_t>(k), e.end())),
                     t.coefficient});
  }
  return Polynomial::from_terms(f.nvars() - k, f.field(), std::move(terms));
}

Polynomial divide_exact(const Polynomial& h, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("division by the zero polynomial");
  const Polynomial divisor = f.with_order(h.order());
  Polynomial rest = h;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!divisor.leading_monomial().divides(lt.monomial)) {
      throw DomainError("divide_exact: divisor does not divide");
    }
    Term q{lt.monomial / divisor.leading_monomial(), lt.coefficient / divisor.leading_coefficient()};
    rest -= divisor.times_term(q.monomial, q.coefficient);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(h.nvars(), h.field(), std::move(quotient), h.order());
}

Polynomial shift_univariate(const Polynomial& p, const Scalar& a) {
  if (p.nvars() != 1) throw DomainError("shift_univariate needs a univariate polynomial");
  const Polynomial t = Polynomial::variable(1, p.field(), 0, p.order());
  const Polynomial base = Polynomial::constant(1, a, p.order()) + t;
  Polynomial out(1, p.field(), p.order());
  for (const auto& term : p.terms()) out += term.coefficient * base.pow(term.monomial[0]);
  return out;
}

Scalar univariate_coefficient(const Polynomial& p, std::uint32_t k) {
  if (p.nvars() != 1) throw DomainError("univariate_coefficient needs a univariate polynomial");
  for (const auto& t : p.terms()) {
    if (t.monomial[0] == k) return t.coefficient;
  }
  return p.field().zero();
}

}  // namespace genpos
