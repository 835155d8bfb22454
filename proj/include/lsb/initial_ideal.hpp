#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lsb/errors.hpp"
#include "lsb/polynomial.hpp"

namespace lsb {

/// Degree-d part of an ideal generated by homogeneous polynomials, stored as
/// a semi-echelon basis keyed by leading monomial.
class DegreeSpan {
 public:
  DegreeSpan(std::span<const Polynomial> generators, int degree);

  int degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return pivots_.size(); }
  /// `h` must be homogeneous of degree(); zero is always contained.
  bool contains(const Polynomial& h) const;

 private:
  Polynomial reduce(Polynomial v) const;
  void insert(Polynomial v);

  int degree_;
  std::unordered_map<Monomial, Polynomial, MonomialHash> pivots_;
};

/// h in (G) for homogeneous h and G, by exact linear algebra in degree deg(h).
bool homogeneous_membership(const Polynomial& h, std::span<const Polynomial> generators);

/// Mutual membership of generators; both sides homogeneous.
bool initial_ideal_equal(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs);

/// dim_K (G)_d for homogeneous G.
std::size_t degree_span_dimension(std::span<const Polynomial> generators, int degree);

struct IdealType {
  int a;
  int b;
  friend bool operator==(const IdealType&, const IdealType&) = default;
};

/// (order f, order g) when g* is not in (f*), after ordering the pair so that
/// order f <= order g; nullopt otherwise. Only the given pair is tested.
std::optional<IdealType> ideal_type(const Polynomial& f, const Polynomial& g);

/// Two independent quadrics without a common linear factor.
class RegularSequenceCase : public Error {
 public:
  RegularSequenceCase()
      : Error("regular-sequence case: the quadrics share no linear factor, so I* = (f*, g*) "
              "and the Hilbert function is {1,3,4,4,...}") {}
};

enum class QuadricPairCase { RegularSequence, SquareFree, ContainsSquare };

/// f2 = L*M, g2 = L*N when a common linear factor exists.
struct QuadricPairAnalysis {
  QuadricPairCase kind;
  std::optional<Polynomial> common_factor;  // L
  std::optional<Polynomial> cofactor_f;     // M
  std::optional<Polynomial> cofactor_g;     // N
};

/// Requires linearly independent homogeneous quadrics.
QuadricPairAnalysis analyze_quadric_pair(const Polynomial& f2, const Polynomial& g2);

/// True iff <f2, g2> contains no square of a linear form. Throws
/// RegularSequenceCase when f2 and g2 have no common linear factor.
bool squarefree_quadratic(const Polynomial& f2, const Polynomial& g2);

}  // namespace lsb
