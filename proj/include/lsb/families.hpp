#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsb/analysis.hpp"
#include "lsb/errors.hpp"
#include "lsb/hilbert.hpp"
#include "lsb/monomial_ideal.hpp"
#include "lsb/polynomial.hpp"

namespace lsb {

/// Where an expected value comes from.
///   Stated:       printed for this very example.
///   Instantiated: a displayed formula or theorem evaluated at the parameters.
///   Computed:     not given explicitly; locked in from engine runs.
enum class Provenance { Stated, Instantiated, Computed };
std::string_view to_string(Provenance p);

template <class T>
struct Expected {
  T value;
  Provenance provenance;
};

struct ExpectedRecord {
  std::optional<Expected<MonomialIdeal>> leading_ideal;
  std::optional<Expected<std::vector<Polynomial>>> initial_ideal_gens;
  /// Compared as a set of monic polynomials.
  std::optional<Expected<std::vector<Polynomial>>> standard_basis;
  /// Degree -> HF value; may be sparse.
  std::optional<Expected<std::map<int, long>>> hf_values;
  std::optional<Expected<std::vector<long>>> hs_numerator;
  std::optional<Expected<Shape>> shape;
  std::optional<Expected<IdealType>> type;
  std::optional<Expected<long>> multiplicity;
  std::optional<Expected<std::vector<int>>> flats;
  std::optional<Expected<int>> flat_count;
  /// The degree-2 part of I* contains no square of a linear form.
  std::optional<Expected<bool>> squarefree_quadrics;
};

struct FamilyInstance {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Polynomial> generators;
  ExpectedRecord expected;
  /// Known disagreements between published statements, and how they are resolved.
  std::vector<std::string> notes;
};

/// Raised by the builders; lists every violated condition by name.
class ParameterError : public UsageError {
 public:
  explicit ParameterError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// All builders work in a ring with three variables, read as x, y, z in
/// precedence-independent index order 0, 1, 2.
Ring default_family_ring();

/// (x^2 + y^(e-2b+2), x*y^(b-1)), b >= 2, e >= 2b. Strictly increasing HF.
FamilyInstance build_increasing(int b, int e, const Ring& ring = default_family_ring());

/// (x^2 - y^(e-2), x*y - z^n), n >= 3, n+3 <= e <= 2n. One flat at n.
FamilyInstance build_flat(int n, int e, const Ring& ring = default_family_ring());

/// f = x^2 + a*z^p*(x + H) - H^2 + L, g = x*y + alpha*z^n + y*H.
/// Power-series parameters are passed as polynomial truncations.
struct FlatFamilyParams {
  int n = 3;
  int e = 6;
  int a = 0;
  int p = 2;
  Polynomial alpha{default_family_ring()};  // unit in K[z]
  Polynomial H{default_family_ring()};      // in K[y,z]
  Polynomial L{default_family_ring()};      // in K[y,z]
};
FamilyInstance build_thm41(const FlatFamilyParams& params);

/// f = x^2 + x*z + F, g = x*y + d*y*z + alpha*y^r + beta*z^s.
struct SquareFreeFamilyParams {
  int e = 5;
  int r = 3;
  int s = 4;
  Polynomial d{default_family_ring()};      // unit in K[y,z] with d(0,0) = 1
  Polynomial alpha{default_family_ring()};  // 0 or unit in K[y]
  Polynomial beta{default_family_ring()};   // 0 or unit in K[z]
  Polynomial F{default_family_ring()};      // in K[y,z]
};
FamilyInstance build_thm42(const SquareFreeFamilyParams& params);

/// W = F + d(d-1)z^2 + alpha(2d-1)z*y^(r-1) + alpha^2*y^(2(r-1)); the
/// square-free family has multiplicity order(W) + 2.
Polynomial square_free_family_w(const SquareFreeFamilyParams& params);

/// (x*z - y^3, z^b - x^(2b+1)), b >= 2. Only the flat count b-1 is expected.
FamilyInstance shibuta(int b, const Ring& ring = default_family_ring());

/// Worked examples with their published data.
std::vector<FamilyInstance> corpus(const Ring& ring = default_family_ring());

struct FieldCheck {
  std::string field;
  Provenance provenance;
  bool passed;
  std::string expected;
  std::string actual;
};

/// Compares every expected field with the analysis of the instance's generators.
std::vector<FieldCheck> verify(const FamilyInstance& instance, const IdealAnalysis& analysis);
bool all_passed(const std::vector<FieldCheck>& checks);

}  // namespace lsb
