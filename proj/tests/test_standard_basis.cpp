#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lsb/analysis.hpp"
#include "lsb/families.hpp"
#include "lsb/linalg.hpp"
#include "lsb/random_ideals.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lsb;
using lsb::testing::I;
using lsb::testing::M;
using lsb::testing::P;

namespace {

std::vector<Polynomial> monic_sorted(std::vector<Polynomial> v) {
  for (Polynomial& p : v) p = p.monic();
  std::ranges::sort(v, {}, [](const Polynomial& p) { return p.to_string(); });
  return v;
}

StandardBasis verified_basis(const std::vector<Polynomial>& gens) {
  StandardBasisOptions opt;
  opt.verify_divisions = true;
  StandardBasis sb = standard_basis(gens, opt);
  // pairs whose S-polynomial cancels outright are logged as zero without a division
  const auto divided = std::ranges::count_if(sb.pair_log, [](const PairRecord& r) {
    return r.outcome == PairOutcome::Zero || r.outcome == PairOutcome::NewElement;
  });
  CHECK(static_cast<long>(sb.verified_divisions) <= divided);
  CHECK(sb.verified_divisions > 0);
  return sb;
}

}  // namespace

TEST_CASE("increasing family: leading ideal across parameters") {
  for (int b = 2; b <= 4; ++b) {
    for (int e = 2 * b; e <= 2 * b + 4; ++e) {
      CAPTURE(b);
      CAPTURE(e);
      const Ring& r = lsb::testing::xyz();
      const std::vector<Polynomial> gens{
          P("x^2") + Polynomial::monomial(r, Monomial{0, e - 2 * b + 2, 0}),
          Polynomial::monomial(r, Monomial{1, b - 1, 0})};
      const StandardBasis sb = verified_basis(gens);
      CHECK(sb.leading_ideal ==
            MonomialIdeal(r, {Monomial{2, 0, 0}, Monomial{1, b - 1, 0}, Monomial{0, e - b + 1, 0}}));
      CHECK(is_standard_basis(sb.generators));
    }
  }
  const StandardBasis sb = standard_basis(I("x^2 + y^4, x*y"));
  CHECK(sb.leading_ideal == M("x^2, x*y, y^5"));
  // the only S-pair processed by hand is y*f - x*g = y^5
  REQUIRE(sb.pair_log.size() >= 1);
  CHECK(sb.pair_log.front().outcome == PairOutcome::NewElement);
  CHECK(sb.generators.back() == P("y^5"));
}

TEST_CASE("flat family: four-element basis") {
  const Ring& r = lsb::testing::xyz();
  for (int n = 3; n <= 8; ++n) {
    for (int e = n + 3; e <= 2 * n; ++e) {
      CAPTURE(n);
      CAPTURE(e);
      const Polynomial f = P("x^2") - Polynomial::monomial(r, Monomial{0, e - 2, 0});
      const Polynomial g = P("x*y") - Polynomial::monomial(r, Monomial{0, 0, n});
      const StandardBasis sb = verified_basis({f, g});
      CHECK(sb.generators.size() == 4);
      const Polynomial h = Polynomial::monomial(r, Monomial{1, 0, n}) - Polynomial::monomial(r, Monomial{0, e - 1, 0});
      const Polynomial k = Polynomial::monomial(r, Monomial{0, e, 0}) - Polynomial::monomial(r, Monomial{0, 0, 2 * n});
      CHECK(monic_sorted(sb.generators) == monic_sorted({f, g, h, k}));
      CHECK(sb.leading_ideal == MonomialIdeal(r, {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{1, 0, n},
                                                  Monomial{0, e, 0}}));
    }
  }
}

TEST_CASE("small cases") {
  const StandardBasis single = standard_basis(I("x^3"));
  CHECK(single.generators == I("x^3"));
  CHECK(single.leading_ideal == M("x^3"));
  CHECK(single.pair_log.empty());

  // x - x^2 is x times a unit
  CHECK(standard_basis(I("x - x^2, y")).leading_ideal == M("x, y"));
  CHECK(standard_basis(I("x^2 + y^3, x*y")).leading_ideal == M("x^2, x*y, y^4"));
  CHECK_THROWS_AS(standard_basis(I("x, 0")), UsageError);
  CHECK_THROWS_AS(standard_basis(std::vector<Polynomial>{}), UsageError);
}

TEST_CASE("watchdogs keep the partial log") {
  StandardBasisOptions opt;
  opt.max_pairs = 1;
  try {
    standard_basis(I("x^2 - y^4, x*y - z^3"), opt);
    FAIL("expected the pair watchdog to fire");
  } catch (const StandardBasisLimitError& e) {
    CHECK(e.partial_log().size() == 1);
  }
  opt = {};
  opt.max_steps = 1;
  CHECK_THROWS_AS(standard_basis(I("x^2 - y^4, x*y - z^3"), opt), ResourceError);
}

TEST_CASE("leading ideal is independent of generator order, scaling and criteria") {
  const auto gens = I("x^3 - z*y^14, x^2*y + x*z^7");
  const MonomialIdeal lt = standard_basis(gens).leading_ideal;
  CHECK(standard_basis(std::vector<Polynomial>{gens[1], gens[0]}).leading_ideal == lt);
  CHECK(standard_basis(std::vector<Polynomial>{gens[0].scaled(-7), gens[1].scaled(Rational(2, 3))})
            .leading_ideal == lt);
  StandardBasisOptions chain;
  chain.chain_criterion = true;
  const StandardBasis with_chain = standard_basis(gens, chain);
  CHECK(with_chain.leading_ideal == lt);
  CHECK(is_standard_basis(with_chain.generators));
}

TEST_CASE("degree counts of Lt(I) match an independent linear-algebra oracle") {
  const char* ideals[] = {
      "x^2 - y^4, x*y - z^3",     "x^2 + y^4, x*y",          "x^2 + x*z^2 - y^4, x*y + z^3",
      "x^4, x^2*y + z^4",         "x^2 - y^2*z, x*y - y^3",  "x*z - y^3, z^2 - x^5",
      "x^2 + x*z + y^3, x*y + y*z", "x^2 + y^4 + z^4, x*y",
  };
  for (const char* text : ideals) {
    CAPTURE(text);
    const auto gens = I(text);
    const MonomialIdeal lt = standard_basis(gens).leading_ideal;
    const int top = std::min(lt.max_degree() + 2, 9);
    CHECK(lsb::testing::local_hilbert_function(gens, top) == lsb::testing::standard_monomial_counts(lt, top));
  }
}

TEST_CASE("Lt(I) against the span of the initial forms") {
  for (const FamilyInstance& inst : corpus()) {
    CAPTURE(inst.name);
    const StandardBasis sb = standard_basis(inst.generators);
    const int top = sb.leading_ideal.max_degree() + 2;
    for (int d = 0; d <= top; ++d) {
      CHECK(static_cast<std::size_t>(sb.leading_ideal.count_in_degree(d)) ==
            degree_span_dimension(sb.initial_forms, d));
    }
    CHECK(leading_ideal_matches_initial_forms(sb.leading_ideal, sb.initial_forms, top));
  }
}

TEST_CASE("homogeneous membership") {
  const auto flat_star = I("x^2, x*y, x*z^3, y^6 - z^6");
  CHECK(homogeneous_membership(P("x^3"), I("x^2, x*y")));
  CHECK(homogeneous_membership(P("y^6 - z^6"), flat_star));
  CHECK_FALSE(homogeneous_membership(P("z^6"), flat_star));
  CHECK(homogeneous_membership(P("x*z^5 + y^6 - z^6"), flat_star));
  CHECK_THROWS_AS(homogeneous_membership(P("x + y^2"), flat_star), UsageError);

  // z^6 by hand: the degree-6 part of (x^2, x*y, x*z^3) is spanned by monomials
  // divisible by x, so y^6 - z^6 is the only generator reaching z^6 and it
  // brings y^6 along
  RationalMatrix rows;
  const auto basis = monomials_of_degree(3, 6);
  auto row_of = [&](const Polynomial& p) {
    std::vector<Rational> row(basis.size(), 0);
    for (const Term& t : p.terms()) {
      row[static_cast<std::size_t>(std::ranges::find(basis, t.mono) - basis.begin())] = t.coeff;
    }
    return row;
  };
  for (const Polynomial& g : flat_star) {
    for (const Monomial& m : monomials_of_degree(3, 6 - g.order())) {
      rows.push_back(row_of(g.mul_term(1, m)));
    }
  }
  const std::size_t base = rank(rows);
  rows.push_back(row_of(P("z^6")));
  CHECK(rank(rows) == base + 1);
}

TEST_CASE("ideals of initial forms of the non-isomorphic pair") {
  const StandardBasis i = standard_basis(I("x^2 - y^4, x*y + z^3"));
  const StandardBasis j = standard_basis(I("x^2 + x*z^2 - y^4, x*y + z^3"));
  CHECK(i.leading_ideal == M("x^2, x*y, x*z^3, y^6"));
  CHECK(j.leading_ideal == M("x^2, x*y, x*z^3, y^6"));
  CHECK(initial_ideal_equal(i.initial_forms, I("x^2, x*y, x*z^3, y^6 - z^6")));
  CHECK(initial_ideal_equal(j.initial_forms, I("x^2, x*y, x*z^3, y^6 + y*z^5 - z^6")));
  CHECK_FALSE(initial_ideal_equal(i.initial_forms, j.initial_forms));
  CHECK(initial_ideal_equal(i.initial_forms, i.initial_forms));
}

TEST_CASE("type of a pair") {
  CHECK(ideal_type(P("x^2 - y^4"), P("x*y + z^3")) == IdealType{2, 2});
  CHECK(ideal_type(P("x^3 - z*y^14"), P("x^2*y + x*z^7")) == IdealType{3, 3});
  CHECK(ideal_type(P("x*y^2 + z^5"), P("x^2")) == IdealType{2, 3});
  CHECK_FALSE(ideal_type(P("x^2"), P("x^3")).has_value());
  CHECK_THROWS_AS(ideal_type(P("x + y^2"), P("x*y")), UsageError);
}

TEST_CASE("quadric parts") {
  CHECK_FALSE(squarefree_quadratic(P("x^2"), P("x*y")));
  CHECK(squarefree_quadratic(P("x*y"), P("x*z")));
  CHECK(squarefree_quadratic(P("x^2 + x*z"), P("x*y + y*z")));
  CHECK_THROWS_AS(squarefree_quadratic(P("x^2"), P("y^2")), RegularSequenceCase);

  const QuadricPairAnalysis a = analyze_quadric_pair(P("x^2 + x*z"), P("x*y + y*z"));
  CHECK(a.kind == QuadricPairCase::SquareFree);
  REQUIRE(a.common_factor);
  CHECK(*a.common_factor * *a.cofactor_f == P("x^2 + x*z"));
  CHECK(*a.common_factor * *a.cofactor_g == P("x*y + y*z"));
  CHECK(analyze_quadric_pair(P("x^2 - y^2"), P("x*z")).kind == QuadricPairCase::RegularSequence);
  CHECK_THROWS_AS(analyze_quadric_pair(P("x^2"), P("3*x^2")), UsageError);
}

TEST_CASE("truncated route agrees with the full basis") {
  for (const FamilyInstance& inst : corpus()) {
    CAPTURE(inst.name);
    const MonomialIdeal full = standard_basis(inst.generators).leading_ideal;
    const CertifiedCone cone = certified_cone(inst.generators);
    CHECK(cone.truncated.leading_ideal == full);
    CHECK(cone.degree >= full.max_degree() + 2);
    CHECK(initial_ideal_equal(cone.truncated.initial_forms, standard_basis(inst.generators).initial_forms));
  }
  int compared = 0;
  for (int i = 0; i < 60; ++i) {
    std::mt19937_64 inst_rng = instance_rng(99, static_cast<std::uint64_t>(i));
    const auto gens = random_type2b_pair(inst_rng, default_family_ring(), 2 + i % 3);
    StandardBasisOptions opt;
    opt.max_steps = 400;
    try {
      const MonomialIdeal full = standard_basis(gens, opt).leading_ideal;
      CHECK(certified_cone(gens).truncated.leading_ideal == full);
      ++compared;
    } catch (const ResourceError&) {
      // only the certified route is practical here
    }
  }
  CHECK(compared >= 35);
}

TEST_CASE("certificate refuses truncations that are too low") {
  const auto gens = I("x^2 - y^4, x*y - z^3");
  CHECK_FALSE(certify_truncation(gens, 4).has_value());
  CHECK_FALSE(certify_truncation(gens, 7).has_value());  // x*z^3 y^6 seen but no window yet
  REQUIRE(certify_truncation(gens, 8).has_value());
  CHECK(certify_truncation(gens, 8)->truncated.leading_ideal == M("x^2, x*y, x*z^3, y^6"));
  CHECK_THROWS_AS(certify_truncation(I("x^2, y^2, z^2"), 5), UsageError);
  CHECK_THROWS_AS(certified_cone(I("x^2 - y^4, x*y - z^3"), 5), ResourceError);

  // beyond the truncation the generators do not matter
  const auto perturbed = I("x^2 - y^4 + z^11, x*y - z^3 + x^5*y^5");
  CHECK(certify_truncation(perturbed, 8)->truncated.leading_ideal == M("x^2, x*y, x*z^3, y^6"));
}

TEST_CASE("truncated standard basis alone") {
  const StandardBasis t = truncated_standard_basis(I("x^2 + y^4, x*y"), 6);
  CHECK(t.leading_ideal == M("x^2, x*y, y^5"));
  const auto beyond = std::ranges::count_if(t.pair_log, [](const PairRecord& r) {
    return r.outcome == PairOutcome::BeyondTruncation;
  });
  CHECK(beyond >= 0);
  CHECK(truncated_standard_basis(I("x^2 + y^4, x*y"), 3).leading_ideal == M("x^2, x*y"));
  CHECK_THROWS_AS(truncated_standard_basis(I("x^5"), 3), UsageError);
  CHECK_THROWS_AS(truncated_standard_basis(I("x"), -1), UsageError);
}

TEST_CASE("unique monomial x*z^n above (x^2, x*y) at a flat") {
  std::vector<std::vector<Polynomial>> ideals;
  for (int n = 3; n <= 6; ++n) {
    for (int e = n + 3; e <= 2 * n; ++e) ideals.push_back(build_flat(n, e).generators);
  }
  for (const char* text : {"x^2 - y^4, x*y + z^3", "x^2 + x*z^2 - y^4, x*y + z^3", "x^2 + x*z^2, x*y + z^3"}) {
    ideals.push_back(I(text));
  }
  for (std::uint64_t i = 0; i < 120; ++i) {
    std::mt19937_64 rng = instance_rng(5, i);
    ideals.push_back(random_type2b_pair(rng, default_family_ring(), 2));
  }
  int exercised = 0;
  for (const auto& gens : ideals) {
    const IdealAnalysis an = analyze_ideal(gens, {.method = ConeMethod::Truncated});
    const MonomialIdeal& lt = an.leading_ideal;
    const auto& v = an.hf.values;
    if (!lt.contains(Monomial{2, 0, 0}) || !lt.contains(Monomial{1, 1, 0})) continue;
    for (int n = 1; n + 2 < static_cast<int>(v.size()); ++n) {
      if (v[n] != n + 2 || v[n + 1] != n + 2 || v[n + 2] != n + 3) continue;
      ++exercised;
      CHECK(lt.contains(Monomial{1, 0, n}));
      const MonomialIdeal base = MonomialIdeal(lt.ring(), {Monomial{2, 0, 0}, Monomial{1, 1, 0}});
      for (int d = 0; d <= n; ++d) CHECK(lt.count_in_degree(d) == base.count_in_degree(d));
    }
  }
  CHECK(exercised >= 10);
}
