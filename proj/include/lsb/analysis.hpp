#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lsb/hilbert.hpp"
#include "lsb/initial_ideal.hpp"
#include "lsb/standard_basis.hpp"

namespace lsb {

/// How Lt(I) and I* are obtained.
///   Mora:      full standard basis; exact generators and pair log.
///   Truncated: standard bases of I + m^(D+1) for growing D, accepted once a
///              certificate holds (complete intersections only).
///   Automatic: Truncated for complete intersections, Mora otherwise.
enum class ConeMethod { Mora, Truncated, Automatic };
std::string_view to_string(ConeMethod m);
ConeMethod parse_cone_method(std::string_view text);

struct AnalysisOptions {
  StandardBasisOptions basis;
  ConeMethod method = ConeMethod::Mora;
  /// Hilbert function degree bound; raised to maxdeg(Lt) + 2 when smaller.
  int hf_degree_bound = 0;
  /// Truncated route: give up past this truncation degree.
  int max_truncation = 240;
  /// Input known only modulo m^(D+1): generators are cut at D, and the
  /// truncated route must certify at exactly D. The certificate then holds
  /// for every series with these D-jets.
  std::optional<int> jet_degree{};
};

/// Lt(I) and I* of a complete intersection of n-1 generators in n variables,
/// from a truncated standard basis at `degree`. Set only when certified:
/// J = Lt(I + m^(D+1)) restricted to degrees <= D has a one-dimensional
/// quotient, its Hilbert function is constant on [maxdeg J, D] with
/// D >= maxdeg J + 2, and J : m^infinity adds nothing above D. Since a
/// one-dimensional complete intersection is Cohen-Macaulay, HF <= e then
/// forces e = HF(D) and Lt(I) = J.
struct CertifiedCone {
  int degree;
  StandardBasis truncated;
};
std::optional<CertifiedCone> certify_truncation(std::span<const Polynomial> generators, int degree,
                                                const StandardBasisOptions& options = {});

/// Raises the truncation degree until certify_truncation succeeds; throws
/// ResourceError past `max_degree`, UsageError when the input is not n-1
/// generators.
CertifiedCone certified_cone(std::span<const Polynomial> generators, int max_degree = 240,
                             const StandardBasisOptions& options = {});

/// standard basis -> hilbert_function -> classify_hf for one ideal.
struct IdealAnalysis {
  std::vector<Polynomial> input;
  MonomialIdeal leading_ideal;
  std::vector<Polynomial> initial_forms;
  /// Present for the Mora route.
  std::optional<StandardBasis> basis{};
  /// Present for the truncated route.
  std::optional<int> truncation_degree{};
  HilbertFunction hf{};
  std::optional<HilbertSeries> hs{};
  /// Only for two-generator input of orders >= 2 with g* not in (f*).
  std::optional<IdealType> type{};
  std::optional<HFClassification> classification{};
  /// Quadric parts of the pair when the type is (2,2).
  std::optional<QuadricPairAnalysis> quadrics{};
};

IdealAnalysis analyze_ideal(std::span<const Polynomial> generators,
                            const AnalysisOptions& options = {});

/// Degreewise check that #monomials of Lt in degree d equals dim (I*)_d,
/// for d = 0..max_degree.
bool leading_ideal_matches_initial_forms(const MonomialIdeal& leading_ideal,
                                         std::span<const Polynomial> initial_forms, int max_degree);

}  // namespace lsb
