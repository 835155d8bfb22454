#include "lsb/initial_ideal.hpp"

#include <algorithm>

#include "lsb/linalg.hpp"

namespace lsb {
namespace {

void require_homogeneous(const Polynomial& p) {
  if (!p.is_homogeneous()) throw UsageError("expected a homogeneous polynomial, got " + p.to_string());
}

/// Coefficient vector of a form of degree `degree` in the monomial basis.
std::vector<Rational> coefficients(const Polynomial& p, const std::vector<Monomial>& basis) {
  std::vector<Rational> v(basis.size(), 0);
  for (const Term& t : p.terms()) {
    const auto it = std::find(basis.begin(), basis.end(), t.mono);
    if (it == basis.end()) throw UsageError("term outside the expected degree");
    v[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
  }
  return v;
}

Polynomial from_coefficients(const Ring& ring, const std::vector<Monomial>& basis,
                             std::span<const Rational> coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0) terms.push_back(Term{coeffs[i], basis[i]});
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace

DegreeSpan::DegreeSpan(std::span<const Polynomial> generators, int degree) : degree_(degree) {
  for (const Polynomial& g : generators) {
    require_homogeneous(g);
    if (g.is_zero() || g.order() > degree) continue;
    for (const Monomial& m : monomials_of_degree(g.num_vars(), degree - g.order())) {
      insert(g.mul_term(1, m));
    }
  }
}

Polynomial DegreeSpan::reduce(Polynomial v) const {
  const Monomial one(v.num_vars());
  while (!v.is_zero()) {
    const auto it = pivots_.find(v.lead_monomial());
    if (it == pivots_.end()) break;
    v.sub_mul(v.lead_coeff(), one, it->second);
  }
  return v;
}

void DegreeSpan::insert(Polynomial v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return;
  Monomial key = v.lead_monomial();
  pivots_.emplace(std::move(key), v.monic());
}

bool DegreeSpan::contains(const Polynomial& h) const {
  if (h.is_zero()) return true;
  require_homogeneous(h);
  if (h.order() != degree_) return false;
  Polynomial r = h;
  // a nonzero element of the span always has a pivot as leading monomial
  return reduce(std::move(r)).is_zero();
}

bool homogeneous_membership(const Polynomial& h, std::span<const Polynomial> generators) {
  require_homogeneous(h);
  for (const Polynomial& g : generators) require_homogeneous(g);
  if (h.is_zero()) return true;
  return DegreeSpan(generators, h.order()).contains(h);
}

bool initial_ideal_equal(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs) {
  for (const Polynomial& g : lhs) {
    if (!homogeneous_membership(g, rhs)) return false;
  }
  for (const Polynomial& g : rhs) {
    if (!homogeneous_membership(g, lhs)) return false;
  }
  return true;
}

std::size_t degree_span_dimension(std::span<const Polynomial> generators, int degree) {
  return DegreeSpan(generators, degree).dimension();
}

std::optional<IdealType> ideal_type(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw UsageError("ideal_type needs nonzero generators");
  if (f.order() < 2 || g.order() < 2) {
    throw UsageError("ideal_type needs generators of order >= 2 (ideal inside M^2)");
  }
  const Polynomial& lo = f.order() <= g.order() ? f : g;
  const Polynomial& hi = f.order() <= g.order() ? g : f;
  const Polynomial lo_star = lo.initial_form();
  if (homogeneous_membership(hi.initial_form(), std::span(&lo_star, 1))) return std::nullopt;
  return IdealType{lo.order(), hi.order()};
}

QuadricPairAnalysis analyze_quadric_pair(const Polynomial& f2, const Polynomial& g2) {
  for (const Polynomial* q : {&f2, &g2}) {
    if (q->is_zero() || !q->is_homogeneous() || q->order() != 2) {
      throw UsageError("expected a nonzero quadratic form, got " + q->to_string());
    }
  }
  const Ring& ring = f2.ring();
  const std::size_t n = ring->num_vars();
  const std::vector<Monomial> quad = monomials_of_degree(n, 2);
  const std::vector<Monomial> cubic = monomials_of_degree(n, 3);
  const std::vector<Monomial> linear = monomials_of_degree(n, 1);
  if (rank({coefficients(f2, quad), coefficients(g2, quad)}) < 2) {
    throw UsageError("quadrics are linearly dependent");
  }

  // A*f2 - B*g2 = 0 with A, B linear: unknowns (a_1..a_n, b_1..b_n)
  RationalMatrix syz(cubic.size(), std::vector<Rational>(2 * n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    const std::vector<Rational> fa = coefficients(f2.mul_term(1, linear[v]), cubic);
    const std::vector<Rational> gb = coefficients(g2.mul_term(-1, linear[v]), cubic);
    for (std::size_t r = 0; r < cubic.size(); ++r) {
      syz[r][v] = fa[r];
      syz[r][n + v] = gb[r];
    }
  }
  const RationalMatrix kernel = nullspace(std::move(syz), 2 * n);
  if (kernel.empty()) return QuadricPairAnalysis{QuadricPairCase::RegularSequence, {}, {}, {}};

  const std::vector<Rational>& sol = kernel.front();
  Polynomial a_form = from_coefficients(ring, linear, std::span(sol).subspan(0, n));
  Polynomial b_form = from_coefficients(ring, linear, std::span(sol).subspan(n, n));
  // f2 = L*B, g2 = L*A; solve L*B = f2 for the linear form L
  RationalMatrix lin(quad.size(), std::vector<Rational>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    const std::vector<Rational> col = coefficients(b_form.mul_term(1, linear[v]), quad);
    for (std::size_t r = 0; r < quad.size(); ++r) lin[r][v] = col[r];
  }
  const auto l_coeffs = solve(std::move(lin), coefficients(f2, quad));
  if (!l_coeffs) throw Error("common linear factor extraction failed");
  Polynomial l_form = from_coefficients(ring, linear, *l_coeffs);
  if (l_form * b_form != f2 || l_form * a_form != g2) {
    throw Error("common linear factor extraction failed");
  }
  const bool independent =
      rank({coefficients(l_form, linear), coefficients(b_form, linear),
            coefficients(a_form, linear)}) == 3;
  return QuadricPairAnalysis{independent ? QuadricPairCase::SquareFree : QuadricPairCase::ContainsSquare,
                             std::move(l_form), std::move(b_form), std::move(a_form)};
}

bool squarefree_quadratic(const Polynomial& f2, const Polynomial& g2) {
  const QuadricPairAnalysis res = analyze_quadric_pair(f2, g2);
  if (res.kind == QuadricPairCase::RegularSequence) throw RegularSequenceCase();
  return res.kind == QuadricPairCase::SquareFree;
}

}  // namespace lsb
