#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lsb/monomial_ideal.hpp"
#include "support.hpp"

using namespace lsb;
using lsb::testing::CheckedDivision;
using lsb::testing::checked_nf;
using lsb::testing::I;
using lsb::testing::P;

TEST_CASE("ecart") {
  CHECK(ecart(P("x^2")) == 0);
  CHECK(ecart(P("x - x^2")) == 1);
  CHECK(ecart(P("x^2 + y^4")) == 2);
  CHECK_THROWS_AS(ecart(Polynomial(lsb::testing::xyz())), UsageError);
}

TEST_CASE("s-polynomials cancel leading terms") {
  CHECK(s_polynomial(P("x^2 + y^4"), P("x*y")) == P("y^5"));
  CHECK(s_polynomial(P("x^2 - y^4"), P("x*y - z^3")) == P("x*z^3 - y^5"));
  const Polynomial f = P("3*x*y + z^4");
  CHECK(s_polynomial(f, f).is_zero());
  CHECK(s_polynomial(P("2*x^2 + y^3"), P("-x*z + y^5")) == P("2*x*y^5 + y^3*z"));
  CHECK_THROWS_AS(s_polynomial(P("x"), Polynomial(lsb::testing::xyz())), UsageError);
}

TEST_CASE("weak normal form: worked cases") {
  SUBCASE("self reduction") {
    const Polynomial g = P("x*y - z^3 + x^4");
    const auto [r, check] = checked_nf(g, {g});
    CHECK(check.ok());
    CHECK(r.remainder.is_zero());
    CHECK(r.unit == P("1"));
  }
  SUBCASE("x against x - x^2 needs a unit") {
    const auto [r, check] = checked_nf(P("x"), {P("x - x^2")});
    CHECK(check.ok());
    CHECK(r.remainder.is_zero());
    CHECK(r.unit * P("x") == r.quotients[0] * P("x - x^2"));
    CHECK(r.unit.constant_term() == 1);
    CHECK(r.steps < 10);
  }
  SUBCASE("unreduced remainder of the flat example") {
    const auto [r, check] = checked_nf(P("x*z^3 - y^5"), I("x^2 - y^4, x*y - z^3"));
    CHECK(check.ok());
    REQUIRE_FALSE(r.remainder.is_zero());
    CHECK(r.remainder.lead_monomial() == lsb::testing::mono("x*z^3"));
  }
  SUBCASE("membership of a combination") {
    const auto gens = I("x^2 + y^4, x*y");
    const Polynomial f = P("(1 + z)*(x^2 + y^4) - y^3*x*y + z^2*x*y");
    const auto [r, check] = checked_nf(f, gens);
    CHECK(check.ok());
    CHECK(r.remainder.is_zero());
  }
}

TEST_CASE("weak normal form contracts on random input") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> e(0, 3), c(-5, 5), n_terms(1, 4);
  const Ring& ring = lsb::testing::xyz();
  auto draw = [&](int min_order) {
    for (;;) {
      std::vector<Term> terms;
      const int count = n_terms(rng);
      for (int k = 0; k < count; ++k) {
        Monomial m{e(rng), e(rng), e(rng)};
        if (m.degree() < min_order || m.degree() > 6) continue;
        if (int v = c(rng)) terms.push_back({Rational(v), m});
      }
      Polynomial p(ring, std::move(terms));
      if (!p.is_zero()) return p;
    }
  };
  // a call either finishes fast or climbs a long chain of adjoined
  // dividends; the watchdog has to catch the latter
  int zero_remainders = 0, watchdog = 0;
  const int samples = 250;
  for (int i = 0; i < samples; ++i) {
    const std::vector<Polynomial> divisors{draw(1), draw(1)};
    const Polynomial f = draw(0);
    DivisionOptions opt;
    opt.max_steps = 500;
    CheckedDivision out{DivisionResult{Polynomial(ring), {}, Polynomial(ring)}, {}};
    try {
      out = checked_nf(f, divisors, opt);
    } catch (const ResourceError&) {
      ++watchdog;
      continue;
    }
    const auto& [r, check] = out;
    CHECK(check.identity);
    CHECK(check.unit_constant_one);
    CHECK(check.leading_term_reduced);
    CHECK(check.quotient_bound);
    CHECK(r.steps < 200);
    if (r.remainder.is_zero()) ++zero_remainders;
    const DivisionResult again = mora_weak_nf(f, divisors, opt);
    CHECK(again.remainder == r.remainder);
    CHECK(again.unit == r.unit);
    CHECK(again.quotients == r.quotients);
    CHECK(again.steps == r.steps);
  }
  CHECK(watchdog * 50 <= samples);
  CHECK(zero_remainders > 0);
}

TEST_CASE("untracked reduction agrees with the tracked remainder's leading term") {
  const auto gens = I("x^2 - y^4, x*y - z^3");
  for (const char* text : {"x*z^3 - y^5", "y^6 - z^6 + x^3", "x^2*z + y^7", "z^9"}) {
    const Polynomial f = P(text);
    const auto [r, check] = checked_nf(f, gens);
    CHECK(check.ok());
    const Polynomial plain = mora_reduce(f, gens, 100'000);
    CHECK(plain.is_zero() == r.remainder.is_zero());
    if (!plain.is_zero()) CHECK(plain.lead_monomial() == r.remainder.lead_monomial());
  }
}

TEST_CASE("tail reduction up to the truncation degree") {
  const auto gens = I("x^2, x*y");
  DivisionOptions opt;
  opt.truncation_degree = 3;
  const auto [r, check] = checked_nf(P("y + x^2 + y*z + x*y*z^2"), gens, opt);
  CHECK(check.ok());
  // x^2 sits at degree 2 <= 3 and goes; x*y*z^2 is above the bound and stays
  CHECK(r.remainder == P("y + y*z + x*y*z^2"));
  opt.reduce_tail = false;
  const auto [r2, check2] = checked_nf(P("y + x^2 + y*z"), gens, opt);
  CHECK(check2.ok());
  CHECK(r2.remainder == P("y + x^2 + y*z"));
}

TEST_CASE("step watchdog") {
  DivisionOptions opt;
  opt.max_steps = 1;
  CHECK_THROWS_AS(mora_weak_nf(P("x^3 + x^2*y"), I("x - x^2, y"), opt), ResourceError);
  CHECK_THROWS_AS(mora_reduce(P("x^3 + x^2*y"), I("x - x^2, y"), 1), ResourceError);
  CHECK_THROWS_AS(truncated_reduce(P("x^3 + x^2*y"), I("x - x^2, y"), 6, 1), ResourceError);
}

TEST_CASE("truncated reduction works modulo a power of the maximal ideal") {
  // only leading terms are reduced: the x^4 tail survives behind y^3
  CHECK(truncated_reduce(P("x^2 + y^3"), I("x - x^2"), 5, 1000) == P("y^3 + x^4"));
  CHECK(truncated_reduce(P("x^2"), I("x - x^2"), 5, 1000).is_zero());
  const Polynomial r = truncated_reduce(P("x*z^3 - y^5"), I("x^2 - y^4, x*y - z^3"), 6, 1000);
  CHECK(r == P("x*z^3 - y^5"));
  CHECK(truncated_reduce(P("z^7 + x^4"), I("x^2"), 6, 1000).is_zero());
}

TEST_CASE("saturation gap of monomial ideals") {
  using lsb::testing::M;
  CHECK(M("x^2, x*y, x*z^3, y^6").saturation_gap().size() == 3);  // x, x*z, x*z^2
  CHECK(M("x^2, x*y, y^5").saturation_gap().empty());  // x*z^k never lands in J
  CHECK(M("x, y").saturation_gap().empty());
  CHECK(M("x^2, y^2, z^2").saturation_gap().size() == 8);
  for (const Monomial& m : M("x^2, x*y, x*z^3, y^6").saturation_gap()) CHECK(m[0] == 1);
}
