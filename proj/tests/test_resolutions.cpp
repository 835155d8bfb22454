#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsb/families.hpp"
#include "lsb/resolutions.hpp"
#include "lsb/standard_basis.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lsb;
using lsb::testing::M;

TEST_CASE("stability") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(is_stable(MonomialIdeal(lsb::testing::xyz(), {Monomial{d, 0, 0}})));
  }
  for (int n = 1; n <= 6; ++n) {
    for (int e = 2; e <= 8; ++e) {
      const Ring r = lsb::testing::xyz();
      CHECK(is_stable(MonomialIdeal(r, {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{1, 0, n}, Monomial{0, e, 0}})));
    }
  }
  CHECK_FALSE(is_stable(M("y^2")));
  CHECK_FALSE(is_stable(M("x*z")));
  CHECK(is_stable(M("x, y, z")));
  CHECK(is_stable(M("x^2, x*y, y^2")));
  CHECK_FALSE(is_stable(M("x^2, y^2")));
  CHECK_THROWS_AS(ek_betti(M("y^2")), UsageError);
}

TEST_CASE("Eliahou-Kervaire tables") {
  const BettiTable t = ek_betti(M("x^2, x*y, x*z^3, y^6"));
  CHECK(t.shifts(1) == std::vector<int>{2, 2, 4, 6});
  CHECK(t.shifts(2) == std::vector<int>{3, 5, 5, 7});
  CHECK(t.shifts(3) == std::vector<int>{6});
  CHECK(t.projective_dimension() == 3);
  CHECK(t.to_string() == "0 -> P(-6) -> P(-3) + P(-5)^2 + P(-7) -> P(-2)^2 + P(-4) + P(-6) -> P");
  CHECK(k_polynomial_consistent(t, M("x^2, x*y, x*z^3, y^6")));

  const BettiTable cm = ek_betti(M("x^2, x*y, y^5"));
  CHECK(cm.to_string() == "0 -> P(-3) + P(-6) -> P(-2)^2 + P(-5) -> P");
  CHECK(cm.projective_dimension() == 2);
  CHECK(k_polynomial_consistent(cm, M("x^2, x*y, y^5")));

  const BettiTable hyper = ek_betti(M("x^3"));
  CHECK(hyper.to_string() == "0 -> P(-3) -> P");
  CHECK(hyper.k_polynomial() == std::vector<long>{1, 0, 0, -1});

  // a wrong table must be noticed
  BettiTable broken = t;
  broken.entries[{2, 5}] = 1;
  CHECK_FALSE(k_polynomial_consistent(broken, M("x^2, x*y, x*z^3, y^6")));
}

TEST_CASE("Eliahou-Kervaire against Koszul homology") {
  std::vector<MonomialIdeal> ideals{M("x^2, x*y, x*z^3, y^6"), M("x^2, x*y, y^5"), M("x^3"),
                                    M("x, y, z"), M("x^2, x*y, y^2, x*z, y*z, z^2"), M("x^2, x*y, x*z, y^3")};
  for (const FamilyInstance& inst : corpus()) {
    const MonomialIdeal lt = standard_basis(inst.generators).leading_ideal;
    if (is_stable(lt)) ideals.push_back(lt);
  }
  CHECK(ideals.size() >= 12);
  for (const MonomialIdeal& j : ideals) {
    CAPTURE(j.to_string());
    REQUIRE(is_stable(j));
    BettiTable oracle;
    oracle.entries = lsb::testing::koszul_betti(j);
    BettiTable ek = ek_betti(j);
    std::erase_if(ek.entries, [](const auto& kv) { return kv.second == 0; });
    CHECK(ek == oracle);
    CHECK(k_polynomial_consistent(ek, j));
  }
}

namespace {

bool adjacent_overlap(const BettiTable& t) {
  for (int i = 1; i < t.projective_dimension(); ++i) {
    const auto lower = t.shifts(i);
    for (int s : t.shifts(i + 1)) {
      if (std::ranges::find(lower, s) != lower.end()) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("single-flat leading ideals: the long table admits no cancellation") {
  for (int n = 3; n <= 8; ++n) {
    for (int e = n + 3; e <= 2 * n; ++e) {
      CAPTURE(n);
      CAPTURE(e);
      const MonomialIdeal lt = standard_basis(build_flat(n, e).generators).leading_ideal;
      REQUIRE(is_stable(lt));
      const BettiTable t = ek_betti(lt);
      CHECK(t.shifts(1) == std::vector<int>{2, 2, n + 1, e});
      CHECK(t.shifts(2) == std::vector<int>{3, n + 2, n + 2, e + 1});
      CHECK(t.shifts(3) == std::vector<int>{n + 3});
      CHECK_FALSE(adjacent_overlap(t));
      CHECK(k_polynomial_consistent(t, lt));
    }
  }
  // at e = n + 2 the last two steps share the shift n + 3
  for (int n = 3; n <= 6; ++n) {
    const Ring r = lsb::testing::xyz();
    const BettiTable t = ek_betti(
        MonomialIdeal(r, {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{1, 0, n}, Monomial{0, n + 2, 0}}));
    CHECK(adjacent_overlap(t));
    CHECK(t.at(2, n + 3) == 1);
    CHECK(t.at(3, n + 3) == 1);
  }
}
