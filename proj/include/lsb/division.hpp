#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lsb/polynomial.hpp"

namespace lsb {

/// unit * f = sum(quotients[j] * divisors[j]) + remainder, with unit(0) = 1.
struct DivisionResult {
  Polynomial unit;
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  std::size_t steps = 0;
};

struct DivisionOptions {
  /// Tail terms of degree <= this bound are reduced after the leading-term
  /// loop. Unset means 2 + the largest degree among the inputs.
  std::optional<int> truncation_degree;
  bool reduce_tail = true;
  /// Track unit and quotients. Without tracking only the remainder is valid.
  bool track = true;
  std::size_t max_steps = 1'000'000;
};

/// max_degree(f) - order(f); throws UsageError on zero.
int ecart(const Polynomial& f);

/// (l/Lt f) f - (lc f / lc g) (l/Lt g) g with l the lcm of the leading
/// monomials; the leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Mora's weak normal form of f with respect to `divisors` under the local
/// ordering of f's ring. Reducers are chosen by minimal ecart, then by
/// position (divisors first, then intermediate dividends in the order they
/// were adjoined). Throws ResourceError when `max_steps` is exceeded.
DivisionResult mora_weak_nf(const Polynomial& f, std::span<const Polynomial> divisors,
                            const DivisionOptions& options = {});

/// Remainder-only variant used inside the standard basis loop.
Polynomial mora_reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                       std::size_t max_steps, std::size_t* steps_used = nullptr);

/// Lead-term reduction of f modulo m^(degree+1): terms above `degree` are
/// dropped after every step, so the first divisor whose leading monomial
/// divides can be used without the ecart rule. Throws ResourceError past
/// `max_steps`.
Polynomial truncated_reduce(const Polynomial& f, std::span<const Polynomial> divisors, int degree,
                            std::size_t max_steps, std::size_t* steps_used = nullptr);

struct DivisionCheck {
  bool identity = false;        // unit*f == sum q_j g_j + r exactly
  bool unit_constant_one = false;
  bool leading_term_reduced = false;  // Lt(r) not divisible by any Lt(g_j)
  bool quotient_bound = false;  // Lt(q_j g_j) <= Lt(f)
  bool ok() const { return identity && unit_constant_one && leading_term_reduced && quotient_bound; }
};

/// Independently re-checks every contract of a DivisionResult.
DivisionCheck verify_division(const Polynomial& f, std::span<const Polynomial> divisors,
                              const DivisionResult& result);

}  // namespace lsb
