#include "genpos/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "genpos/errors.hpp"
#include "genpos/linalg.hpp"

namespace genpos {

namespace {

const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

void check_ring(const Ideal& ideal, const Polynomial& f) {
  if (f.nvars() != ideal.nvars()) throw DomainError("polynomial and ideal live in different rings");
  if (f.field() != ideal.field()) throw FieldError("polynomial and ideal over different fields");
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw DomainError("ideals live in different rings");
  if (a.field() != b.field()) throw FieldError("ideals over different fields");
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(l / f.leading_monomial(), f.leading_coefficient().inverse()) -
         g.times_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (basis.empty() || f.is_zero()) return f;
  const MonomialOrder order = basis.front().order();
  std::map<Monomial, Scalar, MonomialGreater> work(MonomialGreater{order});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coefficient);

  std::vector<Term> remainder;
  while (!work.empty()) {
    auto head = work.begin();
    Monomial m = head->first;
    Scalar c = head->second;
    work.erase(head);
    const Polynomial* g = find_reducer(m, basis);
    if (g == nullptr) {
      remainder.push_back({std::move(m), std::move(c)});
      continue;
    }
    const Monomial q = m / g->leading_monomial();
    const Scalar factor = c / g->leading_coefficient();
    for (auto t = g->terms().begin() + 1; t != g->terms().end(); ++t) {
      auto [slot, inserted] = work.try_emplace(t->monomial * q, f.field().zero());
      slot->second -= factor * t->coefficient;
      if (slot->second.is_zero()) work.erase(slot);
    }
  }
  return Polynomial::from_terms(f.nvars(), f.field(), std::move(remainder), order).with_order(f.order());
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                   const GroebnerBudget& budget) {
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };
  std::vector<Polynomial> basis;
  std::map<std::pair<std::uint32_t, std::size_t>, Pair> queue;  // (lcm degree, creation index)
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t created = 0;
  std::size_t processed = 0;

  auto add = [&](const Polynomial& h) {
    if (basis.size() >= budget.max_basis_size) {
      throw ResourceError("max_basis_size", "Groebner basis exceeded " + std::to_string(budget.max_basis_size) +
                                                " elements");
    }
    const std::size_t n = basis.size();
    basis.push_back(h.monic());
    for (std::size_t i = 0; i < n; ++i) {
      Monomial l = lcm(basis[i].leading_monomial(), basis[n].leading_monomial());
      const std::uint32_t deg = l.degree();
      queue.emplace(std::make_pair(deg, created++), Pair{i, n, std::move(l)});
      pending.emplace(i, n);
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count(std::minmax(a, b)) != 0;
  };

  for (const auto& f : gens) {
    const Polynomial h = normal_form(f.with_order(order), basis);
    if (!h.is_zero()) add(h);
  }

  while (!queue.empty()) {
    const Pair p = queue.begin()->second;
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});
    if (++processed > budget.max_pairs) {
      throw ResourceError("max_pairs", "Buchberger processed more than " + std::to_string(budget.max_pairs) + " pairs");
    }
    const Monomial& a = basis[p.i].leading_monomial();
    const Monomial& b = basis[p.j].leading_monomial();
    if (a.coprime_with(b)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      chain = basis[k].leading_monomial().divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
    }
    if (chain) continue;
    const Polynomial h = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (!h.is_zero()) add(h);
  }

  // Minimalize: keep the first element for each minimal leading monomial.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lm = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const Monomial& other = basis[j].leading_monomial();
      redundant = other.divides(lm) && (!(other == lm) || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = normal_form(minimal[i], others).monic();
  }
  const MonomialGreater greater{order};
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& x, const Polynomial& y) {
    return greater(x.leading_monomial(), y.leading_monomial());
  });
  return minimal;
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced_basis(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || !basis[i].leading_coefficient().is_one()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms()) {
        if (basis[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

// ----------------------------------------------------------------- Ideal

Ideal::Ideal(std::size_t nvars, Field field, std::vector<Polynomial> gens)
    : nvars_(nvars), field_(field), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.nvars() != nvars_) throw DomainError("generator has wrong variable count");
    if (g.field() != field_) throw FieldError("generator over a different field");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(std::size_t nvars, const Field& field) {
  return Ideal(nvars, field, {Polynomial::constant(nvars, field.one())});
}

std::uint32_t Ideal::max_generator_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& order, const GroebnerBudget& budget) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  for (const auto& [o, b] : cache_->bases) {
    if (o == order) return b;
  }
  cache_->bases.emplace_back(order, buchberger(gens_, order, budget));
  return cache_->bases.back().second;
}

bool Ideal::contains(const Polynomial& f, const GroebnerBudget& budget) const {
  check_ring(*this, f);
  return normal_form(f, basis(MonomialOrder::degrevlex(), budget)).is_zero();
}

bool Ideal::is_unit(const GroebnerBudget& budget) const {
  const auto& b = basis(MonomialOrder::degrevlex(), budget);
  return b.size() == 1 && b.front().is_constant();
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerBudget& budget) {
  return ideal.contains(f, budget);
}

bool ideal_subset(const Ideal& a, const Ideal& b, const GroebnerBudget& budget) {
  check_same_ring(a, b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& g) { return b.contains(g, budget); });
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerBudget& budget) {
  return ideal_subset(a, b, budget) && ideal_subset(b, a, budget);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.nvars(), a.field(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g.with_order(f.order()));
  }
  return Ideal(a.nvars(), a.field(), std::move(gens));
}

Ideal ideal_power(const Ideal& ideal, unsigned m) {
  if (m == 0) return Ideal::unit(ideal.nvars(), ideal.field());
  const auto& g = ideal.generators();
  std::vector<Polynomial> out;
  // Multisets of generator indices, nondecreasing.
  auto rec = [&](auto&& self, std::size_t start, unsigned left, const Polynomial& acc) -> void {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i < g.size(); ++i) self(self, i, left - 1, acc * g[i].with_order(acc.order()));
  };
  rec(rec, 0, m, Polynomial::constant(ideal.nvars(), ideal.field().one()));
  return Ideal(ideal.nvars(), ideal.field(), std::move(out));
}

Ideal eliminate_leading(const Ideal& ideal, std::size_t k, const GroebnerBudget& budget) {
  if (k > ideal.nvars()) throw DomainError("cannot eliminate more variables than the ring has");
  std::vector<Polynomial> kept;
  for (const auto& g : ideal.basis(MonomialOrder::elimination(k), budget)) {
    if (!involves_leading_variables(g, k)) kept.push_back(drop_leading_variables(g, k));
  }
  return Ideal(ideal.nvars() - k, ideal.field(), std::move(kept));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerBudget& budget) {
  check_same_ring(a, b);
  const std::size_t n = a.nvars() + 1;
  const Field& field = a.field();
  const Polynomial u = Polynomial::variable(n, field, 0);
  const Polynomial one_minus_u = Polynomial::constant(n, field.one()) - u;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(u * prepend_variables(f, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_u * prepend_variables(g, 1));
  return eliminate_leading(Ideal(n, field, std::move(gens)), 1, budget);
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const GroebnerBudget& budget) {
  check_ring(ideal, f);
  if (f.is_zero()) throw DomainError("ideal quotient by the zero polynomial");
  const Ideal meet = ideal_intersect(ideal, Ideal(ideal.nvars(), ideal.field(), {f}), budget);
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, f));
  return Ideal(ideal.nvars(), ideal.field(), std::move(gens));
}

Saturation saturation(const Ideal& ideal, const Polynomial& f, const GroebnerBudget& budget, unsigned max_steps) {
  Ideal current = ideal;
  for (unsigned k = 0; k <= max_steps; ++k) {
    Ideal next = ideal_quotient(current, f, budget);
    if (ideal_subset(next, current, budget)) return {std::move(current), k};
    current = std::move(next);
  }
  throw ResourceError("saturation_steps", "saturation did not stabilize within " + std::to_string(max_steps) + " steps");
}

bool truncated_membership_oracle(const Polynomial& f, const std::vector<Polynomial>& gens, std::uint32_t degree_bound) {
  if (f.total_degree() > degree_bound) throw DomainError("truncated oracle: deg f exceeds the degree bound");
  if (f.is_zero()) return true;
  std::map<Monomial, std::size_t, MonomialGreater> column(MonomialGreater{MonomialOrder::degrevlex()});
  auto to_row = [&](const Polynomial& p) {
    SparseRow row;
    for (const auto& t : p.terms()) {
      auto [it, inserted] = column.try_emplace(t.monomial, column.size());
      row.emplace_back(it->second, t.coefficient);
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return row;
  };

  EchelonBasis span(f.field());
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > degree_bound) continue;
    if (g.field() != f.field() || g.nvars() != f.nvars()) throw DomainError("generator from a different ring");
    for (std::uint32_t d = 0; d + g.total_degree() <= degree_bound; ++d) {
      for (const auto& m : monomials_of_degree(f.nvars(), d)) {
        span.insert(to_row(g.times_term(m, f.field().one())));
      }
    }
  }
  return span.contains(to_row(f));
}

}  // namespace genpos
