#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lsb/monomial.hpp"
#include "lsb/ordering.hpp"

namespace lsb {

/// Monomial ideal stored by its minimal generators.
///
/// Generators form an antichain under divisibility and are kept sorted by
/// degree, then lexicographically descending exponents, so two equal ideals
/// have identical generator lists regardless of construction order.
class MonomialIdeal {
 public:
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);
  /// The zero ideal.
  explicit MonomialIdeal(Ring ring) : MonomialIdeal(std::move(ring), {}) {}

  const Ring& ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept { return ring_->num_vars(); }
  std::span<const Monomial> min_gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  bool contains(const Monomial& m) const;
  /// Largest degree of a minimal generator, 0 for the zero ideal.
  int max_degree() const noexcept;
  /// Number of monomials of degree `d` in the ideal.
  long count_in_degree(int d) const;

  /// Monomials of (J : m^infinity) outside J, i.e. those m not in J with
  /// m * v^k in J for every variable v and large k. Always a finite set.
  std::vector<Monomial> saturation_gap() const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

/// Canonical generator order used by MonomialIdeal.
bool canonical_monomial_less(const Monomial& a, const Monomial& b);

}  // namespace lsb
