#include "lsb/analysis.hpp"

#include <algorithm>

namespace lsb {
namespace {

bool is_complete_intersection_shape(std::span<const Polynomial> generators) {
  return !generators.empty() && generators.size() + 1 == generators.front().num_vars();
}

std::vector<Polynomial> initial_forms_of(std::span<const Polynomial> gens) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const Polynomial& g : gens) out.push_back(g.initial_form());
  return out;
}

}  // namespace

std::string_view to_string(ConeMethod m) {
  switch (m) {
    case ConeMethod::Mora: return "mora";
    case ConeMethod::Truncated: return "truncated";
    case ConeMethod::Automatic: return "auto";
  }
  return "?";
}

ConeMethod parse_cone_method(std::string_view text) {
  if (text == "mora") return ConeMethod::Mora;
  if (text == "truncated") return ConeMethod::Truncated;
  if (text == "auto") return ConeMethod::Automatic;
  throw UsageError("unknown method '" + std::string(text) + "' (expected mora, truncated or auto)");
}

std::optional<CertifiedCone> certify_truncation(std::span<const Polynomial> generators, int degree,
                                                const StandardBasisOptions& options) {
  if (!is_complete_intersection_shape(generators)) {
    throw UsageError("the truncation certificate needs n-1 generators in n variables");
  }
  StandardBasis tsb = truncated_standard_basis(generators, degree, options);
  const MonomialIdeal& j = tsb.leading_ideal;
  const int top = j.max_degree();
  if (degree < top + 2) return std::nullopt;
  const HilbertFunction hf = hilbert_function(j, degree);
  if (hf.krull_dimension != 1 || !hf.stable_value) return std::nullopt;
  for (const Monomial& m : j.saturation_gap()) {
    if (m.degree() > degree) return std::nullopt;
  }
  return CertifiedCone{degree, std::move(tsb)};
}

CertifiedCone certified_cone(std::span<const Polynomial> generators, int max_degree,
                             const StandardBasisOptions& options) {
  int top = 0;
  for (const Polynomial& g : generators) top = std::max(top, g.max_degree());
  int degree = top + 2;
  for (;;) {
    if (degree > max_degree) {
      throw ResourceError("no certified truncation up to degree " + std::to_string(max_degree));
    }
    if (auto cone = certify_truncation(generators, degree, options)) return std::move(*cone);
    const int lead_top = truncated_standard_basis(generators, degree, options).leading_ideal.max_degree();
    degree = std::max(lead_top + 2, degree + std::max(2, degree / 2));
  }
}

IdealAnalysis analyze_ideal(std::span<const Polynomial> generators, const AnalysisOptions& options) {
  if (generators.empty()) throw UsageError("empty generator list");
  const bool truncated = options.method == ConeMethod::Truncated ||
                         (options.method == ConeMethod::Automatic &&
                          is_complete_intersection_shape(generators));
  std::vector<Polynomial> gens(generators.begin(), generators.end());
  if (options.jet_degree) {
    if (*options.jet_degree < 2) throw UsageError("jet degree must be at least 2");
    for (Polynomial& g : gens) g = g.truncated(*options.jet_degree);
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
    if (gens.empty()) throw UsageError("every generator vanishes below the jet degree");
  }
  std::optional<StandardBasis> basis;
  std::optional<CertifiedCone> cone;
  if (truncated && options.jet_degree) {
    cone = certify_truncation(gens, *options.jet_degree, options.basis);
    if (!cone) {
      throw UsageError("the " + std::to_string(*options.jet_degree) +
                       "-jets do not determine the tangent cone");
    }
  } else if (truncated) {
    cone = certified_cone(gens, options.max_truncation, options.basis);
  } else {
    basis = standard_basis(gens, options.basis);
  }
  const StandardBasis& src = cone ? cone->truncated : *basis;
  IdealAnalysis out{.input = gens,
                    .leading_ideal = src.leading_ideal,
                    .initial_forms = initial_forms_of(src.generators)};
  out.basis = std::move(basis);
  if (cone) out.truncation_degree = cone->degree;

  const int bound = std::max(options.hf_degree_bound, out.leading_ideal.max_degree() + 2);
  out.hf = hilbert_function(out.leading_ideal, bound);
  if (out.hf.stable_value) out.hs = hilbert_series(out.hf, out.hf.krull_dimension);

  if (gens.size() == 2 && gens[0].order() >= 2 && gens[1].order() >= 2) {
    out.type = ideal_type(gens[0], gens[1]);
  }
  if (out.hf.stable_value && out.hf.krull_dimension == 1) {
    out.classification = classify_hf(out.hf, out.type);
  }
  if (out.type && out.type->a == 2 && out.type->b == 2) {
    out.quadrics = analyze_quadric_pair(gens[0].initial_form(), gens[1].initial_form());
  }
  return out;
}

bool leading_ideal_matches_initial_forms(const MonomialIdeal& leading_ideal,
                                         std::span<const Polynomial> initial_forms, int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    if (static_cast<std::size_t>(leading_ideal.count_in_degree(d)) !=
        degree_span_dimension(initial_forms, d)) {
      return false;
    }
  }
  return true;
}

}  // namespace lsb
