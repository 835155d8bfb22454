#pragma once

#include <vector>

#include "lsb/polynomial.hpp"

namespace lsb {

/// K-algebra endomorphism sending variable i to images[i].
///
/// Every image must lie in the maximal ideal (no constant term), so the map
/// extends to the power series ring.
class Substitution {
 public:
  explicit Substitution(std::vector<Polynomial> images);

  static Substitution identity(const Ring& ring);

  const std::vector<Polynomial>& images() const noexcept { return images_; }

  /// Coefficients of the linear parts, row i = image of variable i.
  std::vector<std::vector<Rational>> linear_part() const;
  /// True iff the linear part is invertible, i.e. the map is an automorphism.
  bool is_automorphism() const;

 private:
  std::vector<Polynomial> images_;
};

Polynomial substitute(const Polynomial& f, const Substitution& sigma);

/// Determinant of a square rational matrix by exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace lsb
