#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsb/initial_ideal.hpp"
#include "lsb/monomial_ideal.hpp"

namespace lsb {

/// Values HF(0..D) of P/J for a monomial ideal J.
struct HilbertFunction {
  std::vector<long> values;
  int krull_dimension = 0;
  /// Eventual constant value (the multiplicity) when dim <= 1 and the tail
  /// window is constant.
  std::optional<long> stable_value;
  /// Least r with HF(r) = stable_value.
  std::optional<int> stabilization_index;
  /// Set when the quotient has dimension >= 2.
  bool unbounded_growth = false;

  int degree_bound() const { return static_cast<int>(values.size()) - 1; }
};

/// Counts standard monomials in each degree 0..degree_bound. Stabilization is
/// detected only when degree_bound >= maxdeg(J) + 2 and the values are constant
/// on [maxdeg(J), degree_bound].
HilbertFunction hilbert_function(const MonomialIdeal& ideal, int degree_bound);

/// Largest |S| over variable subsets S containing the support of no minimal
/// generator.
int krull_dimension(const MonomialIdeal& ideal);

/// numerator(theta) / (1 - theta)^denominator_exponent
struct HilbertSeries {
  std::vector<long> numerator;
  int denominator_exponent = 0;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
  std::string to_string() const;
};

/// Multiplies the series by (1-theta)^dim; throws UsageError unless the
/// product has vanished on the tail window of the data.
HilbertSeries hilbert_series(const HilbertFunction& hf, int dim);

/// c = C(c_n, n) + C(c_{n-1}, n-1) + ... + C(c_j, j), c_n > ... > c_j >= j >= 1.
struct MacaulayExpansion {
  long c;
  int n;
  std::vector<std::pair<long, int>> terms;  // (c_k, k), k descending
};

std::int64_t binomial(std::int64_t top, std::int64_t bottom);
MacaulayExpansion binomial_expansion(long c, int n);
/// c^<n> = sum C(c_k + 1, k + 1); 0^<n> = 0.
long macaulay_bound(long c, int n);
/// h_0 = 1 and h_{i+1} <= h_i^<i> for every i >= 1.
bool admissible_check(const std::vector<long>& h);

enum class ShapeKind { Increasing, SingleFlat, Other };

struct Shape {
  ShapeKind kind = ShapeKind::Other;
  int n = 0;  // flat position for SingleFlat
  long e = 0;
  friend bool operator==(const Shape&, const Shape&) = default;
  /// "H(e)", "H(n,e)" or "other".
  std::string to_string() const;
};

/// Values of the strictly increasing profile H(e) / single-flat profile
/// H(n,e) in degrees 0..degree_bound.
std::vector<long> shape_values_increasing(long e, int degree_bound);
std::vector<long> shape_values_single_flat(int n, long e, int degree_bound);

struct HFClassification {
  long multiplicity = 0;
  std::optional<int> first_flat;
  std::vector<int> flats;
  int flat_count = 0;
  Shape shape;
  /// nullopt = not applicable for this input / type hint.
  std::map<std::string, std::optional<bool>> checks;
};

/// Requires a stabilized Hilbert function. Check keys: prop22_profile,
/// thm35_e_le_2n, q27_e_le_p1n, macaulay_admissible, prop26_cm_flag.
HFClassification classify_hf(const HilbertFunction& hf, std::optional<IdealType> type_hint = {});

}  // namespace lsb
