#include "lsb/random_ideals.hpp"

#include <algorithm>

namespace lsb {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

long nonzero_coeff(std::mt19937_64& rng, int height) {
  const int c = uniform(rng, 1, height);
  return uniform(rng, 0, 1) ? c : -c;
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t num_vars,
                         const std::vector<std::size_t>& vars, int degree) {
  std::vector<int> exps(num_vars, 0);
  for (int i = 0; i < degree; ++i) {
    exps[vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vars.size()) - 1))]]++;
  }
  return Monomial(std::move(exps));
}

/// c + (random terms of degree 1..3) in `vars`.
Polynomial random_unit(std::mt19937_64& rng, const Ring& ring, const std::vector<std::size_t>& vars,
                       int height, bool monic_constant) {
  Polynomial u = Polynomial::constant(ring, monic_constant ? 1 : nonzero_coeff(rng, height));
  if (uniform(rng, 0, 2) == 0) return u;
  TailSpec spec{1, 3, height, 2};
  return u + random_tail(rng, ring, vars, spec);
}

Monomial monomial_content(const Polynomial& f) {
  Monomial c = f.terms().front().mono;
  for (const Term& t : f.terms()) c = gcd(c, t.mono);
  return c;
}

}  // namespace

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Polynomial random_tail(std::mt19937_64& rng, const Ring& ring, const std::vector<std::size_t>& vars,
                       const TailSpec& spec) {
  if (vars.empty() || spec.min_order > spec.max_degree || spec.height < 1 || spec.max_terms < 1) {
    throw UsageError("empty random tail specification");
  }
  for (;;) {
    std::vector<Term> terms;
    const int count = uniform(rng, 1, spec.max_terms);
    for (int i = 0; i < count; ++i) {
      const int degree = uniform(rng, spec.min_order, spec.max_degree);
      terms.push_back({Rational(nonzero_coeff(rng, spec.height)),
                       random_monomial(rng, ring->num_vars(), vars, degree)});
    }
    Polynomial p(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

std::vector<Polynomial> random_type2b_pair(std::mt19937_64& rng, const Ring& ring, int b,
                                           const TailSpec& spec) {
  if (b < 2) throw UsageError("type (2,b) needs b >= 2");
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  TailSpec f_spec = spec;
  TailSpec g_spec = spec;
  g_spec.min_order = std::max(spec.min_order, b + 1);
  g_spec.max_degree = std::max(g_spec.max_degree, g_spec.min_order);
  const std::vector<std::size_t> all{0, 1, 2};
  for (;;) {
    Polynomial f = x.pow(2) + random_tail(rng, ring, all, f_spec);
    Polynomial g = x * y.pow(static_cast<unsigned>(b - 1)) + random_tail(rng, ring, all, g_spec);
    // a shared monomial factor makes the quotient two-dimensional
    if (coprime(monomial_content(f), monomial_content(g))) return {std::move(f), std::move(g)};
  }
}

SquareFreeFamilyParams random_square_free_params(std::mt19937_64& rng, const Ring& ring,
                                                 int max_e, const TailSpec& spec) {
  for (;;) {
    SquareFreeFamilyParams prm{.e = 0,
                               .r = uniform(rng, 3, 5),
                               .s = 0,
                               .d = random_unit(rng, ring, {1, 2}, spec.height, true),
                               .alpha = Polynomial(ring),
                               .beta = Polynomial(ring),
                               .F = random_tail(rng, ring, {1, 2}, spec)};
    if (uniform(rng, 0, 1)) prm.alpha = random_unit(rng, ring, {1}, spec.height, false);
    if (uniform(rng, 0, 1)) prm.beta = random_unit(rng, ring, {2}, spec.height, false);
    const Polynomial w = square_free_family_w(prm);
    if (w.is_zero()) continue;
    prm.e = w.order() + 2;
    if (prm.e > max_e) continue;
    prm.s = prm.e - 1 + uniform(rng, 0, 3);
    return prm;
  }
}

}  // namespace lsb
