#include "genpos/tangent_cone.hpp"

#include <algorithm>
#include <map>

#include "genpos/errors.hpp"
#include "genpos/linalg.hpp"

namespace genpos {

BranchCurve::BranchCurve(unsigned r, Field field, std::vector<std::vector<Polynomial>> branches,
                         std::optional<std::vector<Polynomial>> parametrization)
    : r_(r), field_(field), parametrization_(std::move(parametrization)) {
  auto check_components = [&](const std::vector<Polynomial>& comps) {
    if (comps.size() != r_ + 1) throw DomainError("branch needs r + 1 components");
    for (const auto& c : comps) {
      if (c.nvars() != 1) throw DomainError("branch components must be univariate in t");
      if (c.field() != field_) throw FieldError("branch component over a different field");
      if (!c.is_zero() && c.min_degree() == 0) throw DomainError("branch component has a nonzero constant term");
    }
    if (std::all_of(comps.begin(), comps.end(), [](const Polynomial& c) { return c.is_zero(); })) {
      throw DomainError("branch has no nonzero component");
    }
  };
  if (branches.empty()) throw DomainError("a curve needs at least one branch");
  for (auto& comps : branches) {
    check_components(comps);
    std::uint32_t order = UINT32_MAX;
    for (const auto& c : comps) {
      if (!c.is_zero()) order = std::min(order, c.min_degree());
    }
    branches_.push_back({std::move(comps), order});
  }
  if (parametrization_) check_components(*parametrization_);
}

TruncatedGradedIdeal lowest_form_ideal(const Ideal& ideal, std::uint32_t degree_bound, const GroebnerBudget& budget) {
  if (degree_bound < ideal.max_generator_degree()) {
    throw DomainError("degree bound " + std::to_string(degree_bound) + " is below the generator degree " +
                      std::to_string(ideal.max_generator_degree()));
  }
  const std::size_t n = ideal.nvars();
  const Field& field = ideal.field();

  // Columns: all monomials of degree <= D, ascending degree.
  std::vector<Monomial> monos;
  std::map<Monomial, std::size_t, MonomialGreater> column(MonomialGreater{MonomialOrder::degrevlex()});
  std::vector<std::size_t> degree_start;
  for (std::uint32_t d = 0; d <= degree_bound; ++d) {
    degree_start.push_back(monos.size());
    auto block = monomials_of_degree(n, d);
    std::reverse(block.begin(), block.end());
    for (auto& m : block) {
      column.emplace(m, monos.size());
      monos.push_back(std::move(m));
    }
  }
  auto to_row = [&](const Polynomial& p) {
    SparseRow row;
    for (const auto& t : p.terms()) row.emplace_back(column.at(t.monomial), t.coefficient);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  };

  EchelonBasis span(field);
  for (const auto& g : ideal.basis(MonomialOrder::degrevlex(), budget)) {
    const std::uint32_t dg = g.total_degree();
    if (dg > degree_bound) continue;
    for (std::uint32_t d = 0; d + dg <= degree_bound; ++d) {
      for (const auto& m : monomials_of_degree(n, d)) span.insert(to_row(g.times_term(m, field.one())));
    }
  }

  // Lowest forms of the echelon rows, grouped by the degree of their pivot.
  std::vector<std::vector<Polynomial>> lowest(degree_bound + 1);
  for (const auto& [pivot, row] : span.rows()) {
    const std::uint32_t d = monos[pivot].degree();
    std::vector<Term> terms;
    for (const auto& [c, v] : row) {
      if (monos[c].degree() == d) terms.push_back({monos[c], v});
    }
    lowest[d].push_back(Polynomial::from_terms(n, field, std::move(terms)));
  }

  TruncatedGradedIdeal out{n, field, degree_bound, {}, {}};
  for (std::uint32_t d = 0; d <= degree_bound; ++d) {
    EchelonBasis slice(field);
    std::vector<Polynomial> forms;
    auto add = [&](const Polynomial& f) {
      if (slice.insert(to_row(f))) forms.push_back(f);
    };
    if (d > 0) {
      for (const auto& f : out.slices[d - 1]) {
        for (std::size_t i = 0; i < n; ++i) add(f.times_term(Monomial::variable(n, i), field.one()));
      }
    }
    const std::size_t closure = forms.size();
    for (const auto& f : lowest[d]) add(f);
    out.generators.emplace_back(forms.begin() + static_cast<std::ptrdiff_t>(closure), forms.end());
    out.slices.push_back(std::move(forms));
  }
  return out;
}

ConeProfile cone_profile(const TruncatedGradedIdeal& cone) {
  ConeProfile profile;
  const auto r = static_cast<std::int64_t>(cone.nvars) - 1;
  for (std::uint32_t d = 0; d <= cone.degree_bound; ++d) {
    const std::uint64_t ambient = r < 0 ? (d == 0 ? 1 : 0) : binom(d + r, r);
    profile.hilbert.push_back(ambient - cone.slices[d].size());
  }
  profile.emdim = profile.hilbert.size() > 1 ? profile.hilbert[1] : 0;
  for (std::uint32_t d = 0; d + 2 < profile.hilbert.size(); ++d) {
    if (profile.hilbert[d] == profile.hilbert[d + 1] && profile.hilbert[d] == profile.hilbert[d + 2]) {
      profile.stabilized = true;
      profile.multiplicity = profile.hilbert[d];
      profile.stabilization_degree = d;
      break;
    }
  }
  return profile;
}

TangentConeResult tangent_cone(const Ideal& ideal, std::size_t e_guess, std::optional<std::uint32_t> degree_bound,
                               unsigned retries, const GroebnerBudget& budget) {
  const unsigned r = ideal.nvars() > 1 ? static_cast<unsigned>(ideal.nvars() - 1) : 1;
  std::uint32_t d = degree_bound.value_or(2 * nu(std::max<std::size_t>(e_guess, 1), r) + 4);
  d = std::max(d, ideal.max_generator_degree());
  for (unsigned attempt = 0; attempt <= retries; ++attempt, d *= 2) {
    TruncatedGradedIdeal cone = lowest_form_ideal(ideal, d, budget);
    ConeProfile profile = cone_profile(cone);
    if (profile.stabilized) {
      if (profile.multiplicity == 0) throw DomainError("the ideal defines an isolated point, not a curve germ");
      return {std::move(cone), std::move(profile), attempt + 1};
    }
  }
  throw DomainError("Hilbert function of the tangent cone did not stabilize up to degree " + std::to_string(d / 2) +
                    "; raise the degree bound");
}

PointSet branch_tangent_points(const BranchCurve& curve) {
  std::vector<std::vector<Scalar>> pts;
  for (std::size_t b = 0; b < curve.branches().size(); ++b) {
    const Branch& branch = curve.branches()[b];
    if (branch.order != 1) {
      throw DomainError("branch " + std::to_string(b) + " has order " + std::to_string(branch.order) +
                        "; only order-1 (ordinary) branches have a reduced tangent line");
    }
    std::vector<Scalar> p;
    for (const auto& c : branch.components) p.push_back(univariate_coefficient(c, 1));
    pts.push_back(std::move(p));
  }
  try {
    return PointSet(curve.r(), curve.field(), std::move(pts));
  } catch (const DomainError& e) {
    throw DomainError(std::string("coincident tangents: ") + e.what());
  }
}

Ideal implicitize(const std::vector<Polynomial>& parametrization, const GroebnerBudget& budget) {
  if (parametrization.empty()) throw DomainError("empty parametrization");
  const Field field = parametrization.front().field();
  const std::size_t n = parametrization.size() + 1;  // t, x_0..x_r
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < parametrization.size(); ++i) {
    std::vector<Term> terms;
    for (const auto& t : parametrization[i].terms()) {
      Monomial m = Monomial::variable(n, 0, t.monomial[0]);
      terms.push_back({m, -t.coefficient});
    }
    terms.push_back({Monomial::variable(n, i + 1), field.one()});
    gens.push_back(Polynomial::from_terms(n, field, std::move(terms)));
  }
  return eliminate_leading(Ideal(n, field, std::move(gens)), 1, budget);
}

Ideal curve_ideal(const BranchCurve& curve, const GroebnerBudget& budget) {
  if (curve.parametrization()) return implicitize(*curve.parametrization(), budget);
  std::optional<Ideal> acc;
  for (const auto& b : curve.branches()) {
    Ideal next = implicitize(b.components, budget);
    acc = acc ? ideal_intersect(*acc, next, budget) : std::move(next);
  }
  return *acc;
}

bool subalgebra_member(const Polynomial& p, const std::vector<Polynomial>& gens, std::uint32_t t_degree_bound,
                       unsigned min_product_degree) {
  if (p.nvars() != 1) throw DomainError("subalgebra_member works in k[t]");
  if (p.total_degree() > t_degree_bound) {
    throw DomainError("truncation too small: deg p = " + std::to_string(p.total_degree()) + " exceeds bound " +
                      std::to_string(t_degree_bound));
  }
  for (const auto& g : gens) {
    if (g.nvars() != 1 || g.field() != p.field()) throw DomainError("generators must be univariate over p's field");
    if (g.is_zero() || g.min_degree() == 0) throw DomainError("generators must be nonzero with zero constant term");
  }
  auto to_row = [](const Polynomial& f) {
    SparseRow row;
    for (const auto& t : f.terms()) row.emplace_back(t.monomial[0], t.coefficient);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  };

  EchelonBasis span(p.field());
  // Enumerate exponent vectors a with sum a_i deg(g_i) <= bound.
  auto rec = [&](auto&& self, std::size_t i, const Polynomial& acc, std::uint32_t deg, unsigned count) -> void {
    if (i == gens.size()) {
      if (count >= min_product_degree) span.insert(to_row(acc));
      return;
    }
    Polynomial power = acc;
    std::uint32_t d = deg;
    for (unsigned k = 0;; ++k) {
      self(self, i + 1, power, d, count + k);
      d += gens[i].total_degree();
      if (d > t_degree_bound) break;
      power = power * gens[i].with_order(power.order());
    }
  };
  rec(rec, 0, Polynomial::constant(1, p.field().one()), 0, 0);
  return span.contains(to_row(p));
}

}  // namespace genpos
