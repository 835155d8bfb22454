#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsb/monomial.hpp"
#include "lsb/ordering.hpp"

namespace lsb {

/// Exact rational coefficient, always kept canonical (reduced, positive
/// denominator).
using Rational = mpq_class;

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.mono == b.mono;
  }
};

/// Order of the zero polynomial.
inline constexpr int kInfiniteOrder = INT_MAX;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are strictly descending under the local ordering of `ring()`, so the
/// first term is the leading term and degrees are non-decreasing along the
/// term list. Zero coefficients never appear.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial monomial(Ring ring, Monomial m, const Rational& c = 1);
  static Polynomial variable(Ring ring, std::size_t var);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept { return ring_->num_vars(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Leading term under the local ordering; throws UsageError on zero.
  const Term& lead() const;
  const Monomial& lead_monomial() const { return lead().mono; }
  const Rational& lead_coeff() const { return lead().coeff; }

  /// Lowest total degree present, kInfiniteOrder for zero.
  int order() const noexcept;
  /// Highest total degree present, -1 for zero.
  int max_degree() const noexcept;
  /// Lowest-degree homogeneous component (the initial form).
  Polynomial initial_form() const;
  Polynomial homogeneous_component(int degree) const;
  /// Drops every term of degree above `max_degree`.
  Polynomial truncated(int max_degree) const;
  bool is_homogeneous() const noexcept;
  Rational constant_term() const;
  /// True iff no term involves variable `var`.
  bool free_of(std::size_t var) const;
  /// Same polynomial re-sorted under another ordering of equal arity.
  Polynomial with_ring(Ring ring) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(const Rational& c) const;
  /// c * m * (*this); order-preserving, so no re-sort is needed.
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  /// *this -= c * m * g in a single merge pass.
  void sub_mul(const Rational& c, const Monomial& m, const Polynomial& g);
  Polynomial pow(unsigned exponent) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& g) const;
  void canonicalize();

  Ring ring_;
  std::vector<Term> terms_;
};

struct LeadingData {
  int order;  // kInfiniteOrder for zero
  Polynomial initial_form;
  std::optional<Term> leading_term;
};

LeadingData leading_data(const Polynomial& f);
/// Leading data of `f` under a different ordering of the same arity.
LeadingData leading_data(const Polynomial& f, const Ring& ord);

std::string to_string(const Rational& q);

}  // namespace lsb
