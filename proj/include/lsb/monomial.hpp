#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lsb {

/// Exponent vector of a power product x_1^{e_1} ... x_n^{e_n}.
///
/// The total degree is cached; all arithmetic requires equal arity and throws
/// UsageError otherwise.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<int> exps);
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

  /// x_var^power in `num_vars` variables.
  static Monomial variable(std::size_t num_vars, std::size_t var, int power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;

  /// Highest variable index with a positive exponent, or -1 for 1.
  int max_variable() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

  /// Renders e.g. "x^2*y"; "1" for the unit monomial.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Every monomial of total degree `degree` in `num_vars` variables, in
/// lexicographically descending exponent order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace lsb
