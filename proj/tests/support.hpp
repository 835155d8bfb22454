#pragma once

#include <string_view>
#include <vector>

#include "lsb/division.hpp"
#include "lsb/errors.hpp"
#include "lsb/parser.hpp"

namespace lsb::testing {

inline const Ring& xyz() {
  static const Ring ring = OrderingSpec::make();
  return ring;
}

inline Polynomial P(std::string_view text, const Ring& ring = xyz()) { return parse_polynomial(text, ring); }

inline std::vector<Polynomial> I(std::string_view text, const Ring& ring = xyz()) {
  return parse_ideal(text, ring);
}

inline MonomialIdeal M(std::string_view text, const Ring& ring = xyz()) {
  return parse_monomial_ideal(text, ring);
}

inline Monomial mono(std::string_view text, const Ring& ring = xyz()) {
  return parse_polynomial(text, ring).lead_monomial();
}

/// Every weak normal form in the tests goes through here, so the division
/// identity is asserted after each call.
struct CheckedDivision {
  DivisionResult result;
  DivisionCheck check;
};

inline CheckedDivision checked_nf(const Polynomial& f, const std::vector<Polynomial>& divisors,
                                  const DivisionOptions& options = {}) {
  DivisionResult r = mora_weak_nf(f, divisors, options);
  DivisionCheck c = verify_division(f, divisors, r);
  return {std::move(r), c};
}

}  // namespace lsb::testing
