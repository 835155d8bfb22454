#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lsb/monomial_ideal.hpp"

namespace lsb {

/// Graded Betti numbers of P/J in the quotient convention: entry (i, j) is
/// the rank of P(-j) in homological degree i, with (0, 0) = 1.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;

  int projective_dimension() const;
  long at(int i, int j) const;
  /// sum (-1)^i beta_{i,j} t^j, index = j.
  std::vector<long> k_polynomial() const;
  /// Shifts in homological degree i, e.g. {2, 2, 4, 6}, ascending.
  std::vector<int> shifts(int i) const;
  /// "0 -> P(-6) -> ... -> P"
  std::string to_string() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Exchange property for every minimal generator u: x_i * u / x_m(u) is in J
/// for every variable x_i ranked above x_m(u), the lowest-ranked variable
/// dividing u. Ranks come from the ordering's precedence.
bool is_stable(const MonomialIdeal& ideal);

/// Eliahou-Kervaire resolution of a stable ideal; throws UsageError for
/// unstable input.
BettiTable ek_betti(const MonomialIdeal& ideal);

/// K-polynomial of the Betti table against HS_{P/J} * (1-t)^n.
bool k_polynomial_consistent(const BettiTable& table, const MonomialIdeal& ideal);

}  // namespace lsb
