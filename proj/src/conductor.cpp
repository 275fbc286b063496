#include "genpos/conductor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "genpos/errors.hpp"
#include "genpos/linalg.hpp"

namespace genpos {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::HypothesesFailed: return "hypotheses-failed";
  }
  return "mismatch";
}

bool ConductorCertificate::hypotheses_hold() const {
  if (!hypotheses.contains("checks")) return true;
  for (const auto& [name, ok] : hypotheses.at("checks").items()) {
    if (!ok.get<bool>()) return false;
  }
  return true;
}

Verdict ConductorCertificate::verdict() const {
  if (!hypotheses_hold()) return Verdict::HypothesesFailed;
  return agrees ? Verdict::Match : Verdict::Mismatch;
}

json ConductorCertificate::to_json() const {
  return json{{"model", model},
              {"claimed", claimed},
              {"oracle", oracle},
              {"hypotheses", hypotheses},
              {"comparison", agrees ? "match" : "mismatch"},
              {"verdict", to_string(verdict())}};
}

namespace {

json basis_text(const Ideal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.basis()) out.push_back(g.to_string());
  return out;
}

json point_text(const PointSet& points) {
  json out = json::array();
  for (const auto& p : points.points()) {
    json row = json::array();
    for (const auto& c : p) row.push_back(c.coefficient_text());
    out.push_back(row);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ graded points

std::uint32_t default_points_degree_bound(const PointSet& points) {
  return std::max<std::uint32_t>(nu(points.size(), points.r()) + 2, static_cast<std::uint32_t>(points.size()));
}

GradedConductor graded_points_conductor_oracle(const PointSet& points, std::uint32_t degree_bound) {
  const std::size_t e = points.size();
  const unsigned top = nu(e, points.r());
  if (degree_bound < top + 2) {
    throw DomainError("degree bound " + std::to_string(degree_bound) + " is below nu + 2 = " + std::to_string(top + 2));
  }
  GradedConductor out{degree_bound, {}, 0, {}, true};
  // in_s[d][i]: the i-th idempotent of k^e lies in S_d.
  std::vector<std::vector<bool>> in_s;
  for (std::uint32_t d = 0; d <= degree_bound; ++d) {
    const auto m = evaluation_matrix(points, d);
    EchelonBasis span(points.field());
    for (std::size_t c = 0; c < m.front().size(); ++c) {
      std::vector<Scalar> column;
      for (std::size_t i = 0; i < e; ++i) column.push_back(m[i][c]);
      span.insert(to_sparse(column));
      if (span.rank() == e) break;
    }
    out.hilbert.push_back(span.rank());
    std::vector<bool> row(e);
    for (std::size_t i = 0; i < e; ++i) row[i] = span.contains({{i, points.field().one()}});
    in_s.push_back(std::move(row));
  }
  if (out.hilbert.back() != e) {
    throw DomainError("no full-rank degree up to " + std::to_string(degree_bound));
  }
  std::uint32_t sigma = degree_bound;
  while (sigma > 0 && out.hilbert[sigma - 1] == e) --sigma;
  out.sigma = sigma;

  out.conductor_dims.assign(degree_bound + 1, 0);
  std::vector<bool> stays(e, true);
  for (std::uint32_t d = degree_bound + 1; d-- > 0;) {
    for (std::size_t i = 0; i < e; ++i) stays[i] = stays[i] && in_s[d][i];
    out.conductor_dims[d] = static_cast<std::size_t>(std::count(stays.begin(), stays.end(), true));
    if (d < sigma && out.conductor_dims[d] != 0) out.is_power_of_irrelevant_ideal = false;
  }
  return out;
}

ConductorCertificate check_points_conductor(const PointSet& points, std::uint64_t subset_budget, unsigned jobs) {
  const std::size_t e = points.size();
  const unsigned n = nu(e, points.r());
  const GenericityCertificate full = is_generic_position(points);
  bool sub_generic = true;
  if (e >= 2) sub_generic = is_generic_t_position(points, e - 1, subset_budget, jobs).generic;
  const GradedConductor oracle = graded_points_conductor_oracle(points, default_points_degree_bound(points));

  ConductorCertificate cert;
  cert.model = {{"kind", "points"}, {"field", points.field().to_string()}, {"r", points.r()},
                {"points", point_text(points)}};
  cert.claimed = {{"ideal", "n^nu"}, {"nu", n}};
  cert.oracle = {{"sigma", oracle.sigma},
                 {"hilbert", oracle.hilbert},
                 {"conductor_dims", oracle.conductor_dims},
                 {"is_power_of_irrelevant_ideal", oracle.is_power_of_irrelevant_ideal}};
  cert.hypotheses = {{"e", e},
                     {"r", points.r()},
                     {"nu", n},
                     {"checks", {{"generic_position", full.generic}, {"generic_e_minus_1_position", sub_generic}}}};
  cert.agrees = oracle.sigma == n && oracle.is_power_of_irrelevant_ideal;
  return cert;
}

std::size_t sample_maximal_power_in_conductor(const PointSet& points, std::size_t samples, std::mt19937_64& rng) {
  const std::size_t e = points.size();
  const unsigned n = nu(e, points.r());
  const Field& field = points.field();
  std::vector<EchelonBasis> spans;
  for (unsigned d = n; d <= n + 2; ++d) {
    EchelonBasis span(field);
    const auto m = evaluation_matrix(points, d);
    for (std::size_t c = 0; c < m.front().size() && span.rank() < e; ++c) {
      std::vector<Scalar> column;
      for (std::size_t i = 0; i < e; ++i) column.push_back(m[i][c]);
      span.insert(to_sparse(column));
    }
    spans.push_back(std::move(span));
  }
  std::size_t failures = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    // Product of n random linear forms, evaluated pointwise.
    std::vector<Scalar> v(e, field.one());
    for (unsigned k = 0; k < n; ++k) {
      std::vector<Scalar> form;
      for (unsigned j = 0; j <= points.r(); ++j) form.push_back(random_scalar(field, rng));
      for (std::size_t i = 0; i < e; ++i) {
        Scalar value = field.zero();
        for (unsigned j = 0; j <= points.r(); ++j) value += form[j] * points[i][j];
        v[i] *= value;
      }
    }
    const std::size_t shift = rng() % 3;
    for (std::size_t i = 0; i < e; ++i) v[i] *= random_scalar(field, rng);
    if (!spans[shift].contains(to_sparse(v))) ++failures;
  }
  return failures;
}

// ------------------------------------------------------- numerical semigroups

bool NumericalSemigroup::contains(std::uint64_t n) const {
  return n >= conductor || !std::binary_search(gaps.begin(), gaps.end(), n);
}

NumericalSemigroup semigroup_conductor(const std::vector<std::uint64_t>& gens) {
  if (gens.empty()) throw DomainError("a numerical semigroup needs generators");
  std::uint64_t g = 0;
  for (auto a : gens) {
    if (a == 0) throw DomainError("generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw DomainError("generators have gcd " + std::to_string(g) + ", expected 1");

  NumericalSemigroup s;
  s.generators = gens;
  std::sort(s.generators.begin(), s.generators.end());
  s.generators.erase(std::unique(s.generators.begin(), s.generators.end()), s.generators.end());
  s.multiplicity = s.generators.front();

  std::vector<bool> member{true};
  std::uint64_t run = 1;
  for (std::uint64_t n = 1; run < s.multiplicity; ++n) {
    bool in = false;
    for (auto a : s.generators) {
      if (a <= n && member[n - a]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      s.gaps.push_back(n);
    }
  }
  s.frobenius = s.gaps.empty() ? -1 : static_cast<std::int64_t>(s.gaps.back());
  s.conductor = static_cast<std::uint64_t>(s.frobenius + 1);

  for (auto a : s.generators) {
    bool decomposable = false;
    for (std::uint64_t b = 1; b < a && !decomposable; ++b) decomposable = s.contains(b) && s.contains(a - b);
    if (!decomposable) s.minimal_generators.push_back(a);
  }
  s.embedding_dimension = s.minimal_generators.size();
  return s;
}

ConductorCertificate semigroup_contrast_certificate(const std::vector<std::uint64_t>& gens) {
  const NumericalSemigroup s = semigroup_conductor(gens);
  if (s.multiplicity < 2) throw DomainError("the contrast needs multiplicity e >= 2");
  const unsigned r = static_cast<unsigned>(s.embedding_dimension - 1);
  const unsigned n = nu(s.multiplicity, r);
  // Past c + (n - 1) e both sets contain everything.
  const std::uint64_t window = s.conductor + n * s.multiplicity + 1;

  // power[k]: elements of m^k below the window.
  std::vector<bool> power(window, false);
  power[0] = true;
  for (unsigned k = 0; k < n; ++k) {
    std::vector<bool> next(window, false);
    for (std::uint64_t a = 0; a < window; ++a) {
      if (!power[a]) continue;
      for (std::uint64_t b = 1; a + b < window; ++b) {
        if (s.contains(b)) next[a + b] = true;
      }
    }
    power = std::move(next);
  }
  std::vector<std::uint64_t> missing, extra;  // relative to the conductor
  for (std::uint64_t a = 0; a < window; ++a) {
    const bool in_conductor = a >= s.conductor;
    if (in_conductor && !power[a]) missing.push_back(a);
    if (!in_conductor && power[a]) extra.push_back(a);
  }
  std::uint64_t power_start = 0;
  while (power_start < window && !power[power_start]) ++power_start;

  ConductorCertificate cert;
  cert.model = {{"kind", "semigroup"}, {"generators", s.generators}, {"minimal_generators", s.minimal_generators}};
  cert.claimed = {{"ideal", "m^nu"}, {"nu", n}, {"least_exponent", power_start},
                  {"missing_from_claim", missing}, {"extra_in_claim", extra}};
  cert.oracle = {{"conductor_exponent", s.conductor}, {"frobenius", s.frobenius}, {"gaps", s.gaps}};
  cert.hypotheses = {{"e", s.multiplicity},
                     {"r", r},
                     {"nu", n},
                     {"embedding_dimension", s.embedding_dimension},
                     {"tangent_points", 1},
                     {"checks", {{"e_reduced_tangent_points", false}}}};
  cert.agrees = missing.empty() && extra.empty();
  return cert;
}

// ------------------------------------------------------ affine monomial algebras

namespace {

// Dense grid [0, side)^k with mixed-radix indexing.
struct Grid {
  std::size_t dim;
  std::uint32_t side;
  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < dim; ++i) n *= side;
    return n;
  }
  std::size_t index(const Exponent& v) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim; ++i) idx = idx * side + v[i];
    return idx;
  }
  Exponent point(std::size_t idx) const {
    Exponent v(dim);
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(idx % side);
      idx /= side;
    }
    return v;
  }
};

std::vector<bool> monoid_members(const AffineMonomialAlgebra& a, const Grid& grid) {
  std::vector<bool> in(grid.size(), false);
  in[0] = true;
  for (std::size_t idx = 1; idx < grid.size(); ++idx) {
    const Exponent v = grid.point(idx);
    for (const auto& g : a.generators) {
      bool fits = true;
      Exponent w(grid.dim);
      for (std::size_t i = 0; i < grid.dim && fits; ++i) {
        fits = g[i] <= v[i];
        if (fits) w[i] = v[i] - g[i];
      }
      if (fits && in[grid.index(w)]) {
        in[idx] = true;
        break;
      }
    }
  }
  return in;
}

// Conductor points with coordinates <= inner, using [0, margin]^k as the ambient window.
std::vector<Exponent> conductor_points(const std::vector<bool>& in, const Grid& grid, std::uint32_t margin,
                                       std::uint32_t inner) {
  std::vector<bool> gap_above(grid.size(), false);
  std::vector<Exponent> out;
  for (std::size_t idx = grid.size(); idx-- > 0;) {
    const Exponent v = grid.point(idx);
    if (std::any_of(v.begin(), v.end(), [&](std::uint32_t c) { return c > margin; })) continue;
    bool gap = !in[idx];
    for (std::size_t i = 0; i < grid.dim && !gap; ++i) {
      if (v[i] < margin) {
        Exponent w = v;
        ++w[i];
        gap = gap_above[grid.index(w)];
      }
    }
    gap_above[idx] = gap;
    if (!gap && std::all_of(v.begin(), v.end(), [&](std::uint32_t c) { return c <= inner; })) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent> minimal_elements(const std::vector<Exponent>& pts) {
  std::vector<Exponent> out;
  for (const auto& v : pts) {
    const bool dominated = std::any_of(pts.begin(), pts.end(), [&](const Exponent& u) {
      if (u == v) return false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (u[i] > v[i]) return false;
      }
      return true;
    });
    if (!dominated) out.push_back(v);
  }
  return out;
}

}  // namespace

MonomialConductor monomial_algebra_conductor(const AffineMonomialAlgebra& a) {
  if (a.generators.empty()) throw DomainError("a monomial algebra needs generators");
  const std::size_t k = a.generators.front().size();
  if (k == 0) throw DomainError("exponent vectors must be nonempty");
  for (const auto& g : a.generators) {
    if (g.size() != k) throw DomainError("exponent vectors differ in length");
    if (std::all_of(g.begin(), g.end(), [](std::uint32_t c) { return c == 0; })) {
      throw DomainError("zero generator");
    }
  }
  if (a.box < 4) throw ResourceError("box", "box must be at least 4");
  const Grid grid{k, a.box + 1};
  if (static_cast<double>(grid.size()) > 5e7) throw ResourceError("box", "box grid too large");
  const std::vector<bool> in = monoid_members(a, grid);

  for (std::size_t i = 0; i < k; ++i) {
    const bool on_axis = std::any_of(a.generators.begin(), a.generators.end(), [&](const Exponent& g) {
      for (std::size_t j = 0; j < k; ++j) {
        if ((j == i) != (g[j] != 0)) return false;
      }
      return true;
    });
    if (!on_axis) throw DomainError("no generator on axis " + std::to_string(i) + "; the normalization is not N^k");
    bool in_group = false;
    for (std::size_t idx = 0; idx < grid.size() && !in_group; ++idx) {
      Exponent v = grid.point(idx);
      if (!in[idx] || v[i] == a.box) continue;
      ++v[i];
      in_group = in[grid.index(v)];
    }
    if (!in_group) {
      throw DomainError("unit vector " + std::to_string(i) +
                        " not found in the group of the monoid within the box; the normalization is not N^k");
    }
  }

  MonomialConductor out;
  out.box = a.box;
  out.inner = a.box / 2;
  out.points = conductor_points(in, grid, a.box, out.inner);
  const std::uint32_t smaller = a.box * 3 / 4;
  if (conductor_points(in, grid, smaller, out.inner) != out.points) {
    throw ResourceError("box", "conductor changes between box " + std::to_string(smaller) + " and " +
                                   std::to_string(a.box) + "; enlarge the box");
  }
  out.minimal = minimal_elements(out.points);
  return out;
}

std::vector<Exponent> monomial_ideal_points(const std::vector<Exponent>& generators, std::size_t dim,
                                            std::uint32_t inner) {
  const Grid grid{dim, inner + 1};
  std::vector<Exponent> out;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const Exponent v = grid.point(idx);
    const bool above = std::any_of(generators.begin(), generators.end(), [&](const Exponent& g) {
      for (std::size_t i = 0; i < dim; ++i) {
        if (g[i] > v[i]) return false;
      }
      return true;
    });
    if (above) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent> monomial_power(const std::vector<Exponent>& generators, unsigned m) {
  if (generators.empty()) throw DomainError("empty generator list");
  std::set<Exponent> acc{Exponent(generators.front().size(), 0)};
  for (unsigned k = 0; k < m; ++k) {
    std::set<Exponent> next;
    for (const auto& a : acc) {
      for (const auto& g : generators) {
        Exponent s = a;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += g[i];
        next.insert(std::move(s));
      }
    }
    acc = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

ConductorCertificate monomial_algebra_certificate(const AffineMonomialAlgebra& algebra,
                                                  const std::vector<Exponent>& candidate, const std::string& claim) {
  const MonomialConductor c = monomial_algebra_conductor(algebra);
  const std::size_t k = algebra.generators.front().size();
  const auto claimed = monomial_ideal_points(candidate, k, c.inner);
  std::vector<Exponent> missing, extra;
  std::set_difference(c.points.begin(), c.points.end(), claimed.begin(), claimed.end(), std::back_inserter(missing));
  std::set_difference(claimed.begin(), claimed.end(), c.points.begin(), c.points.end(), std::back_inserter(extra));

  ConductorCertificate cert;
  cert.model = {{"kind", "monomial-algebra"}, {"generators", algebra.generators}, {"box", algebra.box}};
  cert.claimed = {{"ideal", claim}, {"generators", candidate}, {"extra_in_claim", extra}};
  cert.oracle = {{"inner_box", c.inner},
                 {"minimal_generators", c.minimal},
                 {"point_count", c.points.size()},
                 {"missing_from_claim", missing}};
  cert.agrees = missing.empty() && extra.empty();
  return cert;
}

ConductorCertificate xyn_zn_certificate(unsigned n, std::uint32_t box) {
  if (n < 1) throw DomainError("n must be positive");
  const AffineMonomialAlgebra a{{{n, 0}, {0, 1}, {1, 1}}, box};
  ConductorCertificate cert =
      monomial_algebra_certificate(a, monomial_power({{0, 1}, {1, 1}}, n - 1), "(y,z)^" + std::to_string(n - 1));

  // The kernel of k[X,Y,Z] -> k[W,Y], X -> W^n, Y -> Y, Z -> WY, should be (XY^n - Z^n).
  const Field q = Field::rationals();
  const std::vector<std::string> names{"W", "X", "Y", "Z"};
  auto p = [&](const std::string& s) { return Polynomial::parse(s, 4, q, names); };
  const Ideal graph(4, q, {p("X - W^" + std::to_string(n)), p("Z - W*Y")});
  const Ideal kernel = eliminate_leading(graph, 1);
  const Ideal expected(3, q, {Polynomial::parse("X*Y^" + std::to_string(n) + " - Z^" + std::to_string(n), 3, q,
                                                {"X", "Y", "Z"})});
  cert.model["family"] = "XY^n-Z^n";
  cert.model["n"] = n;
  cert.hypotheses = {{"checks", {{"hypersurface", ideal_equal(kernel, expected)}}}};
  return cert;
}

// ------------------------------------------------------ hyperplane arrangements

namespace {

std::vector<Scalar> linear_coefficients(const Polynomial& f) {
  std::vector<Scalar> v(f.nvars(), f.field().zero());
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.monomial[i] == 1) v[i] = t.coefficient;
    }
  }
  return v;
}

std::size_t form_rank(const std::vector<Polynomial>& forms, std::initializer_list<std::size_t> idx) {
  std::vector<std::vector<Scalar>> rows;
  for (auto i : idx) rows.push_back(linear_coefficients(forms[i]));
  return matrix_rank(rows, forms.front().field());
}

}  // namespace

void validate_arrangement(const std::vector<Polynomial>& forms) {
  if (forms.size() < 2) throw DomainError("an arrangement needs at least two hyperplanes");
  for (const auto& f : forms) {
    if (f.nvars() != forms.front().nvars() || f.field() != forms.front().field()) {
      throw DomainError("forms live in different rings");
    }
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 1) {
      throw DomainError("not a nonzero linear form: " + f.to_string());
    }
  }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      if (form_rank(forms, {i, j}) < 2) {
        throw DomainError("forms " + std::to_string(i) + " and " + std::to_string(j) + " are proportional");
      }
    }
  }
}

Ideal hyperplane_arrangement_conductor_oracle(const std::vector<Polynomial>& forms, const GroebnerBudget& budget) {
  validate_arrangement(forms);
  const std::size_t n = forms.front().nvars();
  const Field& field = forms.front().field();
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Polynomial others = Polynomial::constant(n, field.one());
    for (std::size_t j = 0; j < forms.size(); ++j) {
      if (j != i) others = others * forms[j];
    }
    Ideal part(n, field, {forms[i], others});
    acc = acc ? ideal_intersect(*acc, part, budget) : std::move(part);
  }
  return *acc;
}

std::vector<ArrangementStratum> arrangement_strata(const std::vector<Polynomial>& forms) {
  validate_arrangement(forms);
  std::vector<ArrangementStratum> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t p = 0; p < forms.size(); ++p) {
    for (std::size_t q = p + 1; q < forms.size(); ++q) {
      std::vector<std::size_t> incident;
      for (std::size_t i = 0; i < forms.size(); ++i) {
        if (form_rank(forms, {p, q, i}) == 2) incident.push_back(i);
      }
      if (!seen.insert(incident).second) continue;
      Ideal prime(forms.front().nvars(), forms.front().field(), {forms[p], forms[q]});
      out.push_back({incident, std::move(prime), static_cast<unsigned>(incident.size())});
    }
  }
  return out;
}

Ideal symbolic_power(const Ideal& q, const Polynomial& s, unsigned m, const GroebnerBudget& budget) {
  if (q.contains(s, budget)) throw DomainError("auxiliary element " + s.to_string() + " lies in the prime");
  return saturation(ideal_power(q, m), s, budget).ideal;
}

ConductorCertificate check_arrangement_conductor(const std::vector<Polynomial>& forms, const GroebnerBudget& budget) {
  const Ideal oracle = hyperplane_arrangement_conductor_oracle(forms, budget);
  const auto strata = arrangement_strata(forms);
  const std::size_t n = forms.front().nvars();
  const Field& field = forms.front().field();

  Polynomial product = Polynomial::constant(n, field.one());
  for (const auto& f : forms) product = product * f;

  std::optional<Ideal> claimed;
  bool symbolic_is_ordinary = true;
  json strata_json = json::array();
  for (const auto& s : strata) {
    const unsigned exponent = s.multiplicity - 1;
    std::size_t aux = 0;
    while (s.prime.contains(Polynomial::variable(n, field, aux), budget)) ++aux;
    const Ideal sym = symbolic_power(s.prime, Polynomial::variable(n, field, aux), exponent, budget);
    const Ideal ordinary = ideal_power(s.prime, exponent);
    const bool same = ideal_equal(sym, ordinary, budget);
    symbolic_is_ordinary = symbolic_is_ordinary && same;
    strata_json.push_back({{"hyperplanes", s.hyperplanes},
                           {"prime", basis_text(s.prime)},
                           {"e", s.multiplicity},
                           {"nu", exponent},
                           {"symbolic_equals_ordinary", same}});
    claimed = claimed ? ideal_intersect(*claimed, sym, budget) : sym;
  }
  const Ideal claim = ideal_sum(*claimed, Ideal(n, field, {product}));

  json form_text = json::array();
  for (const auto& f : forms) form_text.push_back(f.to_string());
  ConductorCertificate cert;
  cert.model = {{"kind", "arrangement"}, {"field", field.to_string()}, {"forms", form_text}};
  cert.claimed = {{"ideal", "intersection of q_k^(e_k - 1)"}, {"strata", strata_json}, {"basis", basis_text(claim)}};
  cert.oracle = {{"basis", basis_text(oracle)}};
  cert.hypotheses = {{"checks", {{"symbolic_equals_ordinary", symbolic_is_ordinary}}}};
  cert.agrees = ideal_equal(claim, oracle, budget);
  return cert;
}

}  // namespace genpos
