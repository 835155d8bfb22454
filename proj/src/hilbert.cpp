#include "lsb/hilbert.hpp"

#include <algorithm>

#include "lsb/errors.hpp"

namespace lsb {

HilbertFunction hilbert_function(const MonomialIdeal& ideal, int degree_bound) {
  if (degree_bound < 0) throw UsageError("negative degree bound");
  HilbertFunction hf;
  hf.values.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (int d = 0; d <= degree_bound; ++d) {
    long outside = 0;
    for (const Monomial& m : monomials_of_degree(ideal.num_vars(), d)) {
      if (!ideal.contains(m)) ++outside;
    }
    hf.values.push_back(outside);
  }
  hf.krull_dimension = krull_dimension(ideal);
  if (hf.krull_dimension >= 2) {
    hf.unbounded_growth = true;
    return hf;
  }
  const int window_start = ideal.max_degree();
  if (degree_bound < window_start + 2) return hf;
  const long tail = hf.values.back();
  for (int d = window_start; d <= degree_bound; ++d) {
    if (hf.values[static_cast<std::size_t>(d)] != tail) return hf;
  }
  hf.stable_value = tail;
  for (int d = 0; d <= degree_bound; ++d) {
    if (hf.values[static_cast<std::size_t>(d)] == tail) {
      // constant from here on is required, not just a touch
      bool constant = std::all_of(hf.values.begin() + d, hf.values.end(),
                                  [tail](long v) { return v == tail; });
      if (constant) {
        hf.stabilization_index = d;
        break;
      }
    }
  }
  return hf;
}

int krull_dimension(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  if (n > 20) throw UsageError("krull_dimension enumerates variable subsets; too many variables");
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    const int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    bool survives = true;
    for (const Monomial& g : ideal.min_gens()) {
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (g[v] > 0 && !(mask & (1UL << v))) {
          inside = false;
          break;
        }
      }
      if (inside) {
        survives = false;
        break;
      }
    }
    if (survives) best = size;
  }
  return best;
}

std::string HilbertSeries::to_string() const {
  std::string num;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const long c = numerator[i];
    if (c == 0) continue;
    if (!num.empty()) num += c < 0 ? " - " : " + ";
    else if (c < 0) num += "-";
    const long mag = c < 0 ? -c : c;
    if (i == 0) {
      num += std::to_string(mag);
    } else {
      if (mag != 1) num += std::to_string(mag) + "*";
      num += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  if (num.empty()) num = "0";
  if (denominator_exponent == 0) return num;
  std::string den = denominator_exponent == 1 ? "(1-t)" : "(1-t)^" + std::to_string(denominator_exponent);
  return "(" + num + ")/" + den;
}

HilbertSeries hilbert_series(const HilbertFunction& hf, int dim) {
  if (dim < 0) throw UsageError("negative denominator exponent");
  std::vector<long> coeffs = hf.values;
  for (int k = 0; k < dim; ++k) {
    for (std::size_t i = coeffs.size(); i-- > 1;) coeffs[i] -= coeffs[i - 1];
  }
  // the product must vanish over a tail window of at least two degrees
  const std::size_t window = 2;
  if (coeffs.size() < window + 1) throw UsageError("Hilbert function too short for a series");
  for (std::size_t i = coeffs.size() - window; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) {
      throw UsageError("Hilbert function has not stabilized within the degree bound");
    }
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return HilbertSeries{std::move(coeffs), dim};
}

std::int64_t binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= bottom; ++i) out = out * (top - bottom + i) / i;
  return out;
}

MacaulayExpansion binomial_expansion(long c, int n) {
  if (c < 1 || n < 1) throw UsageError("binomial expansion needs c >= 1 and n >= 1");
  MacaulayExpansion out{c, n, {}};
  long rest = c;
  for (int k = n; k >= 1 && rest > 0; --k) {
    long top = k;
    while (binomial(top + 1, k) <= rest) ++top;
    out.terms.emplace_back(top, k);
    rest -= binomial(top, k);
  }
  if (rest != 0) throw Error("binomial expansion did not terminate");
  return out;
}

long macaulay_bound(long c, int n) {
  if (c == 0) return 0;
  long out = 0;
  for (const auto& [ck, k] : binomial_expansion(c, n).terms) out += binomial(ck + 1, k + 1);
  return out;
}

bool admissible_check(const std::vector<long>& h) {
  if (h.empty() || h.front() != 1) return false;
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i] < 0 || h[i + 1] < 0) return false;
    if (h[i + 1] > macaulay_bound(h[i], static_cast<int>(i))) return false;
  }
  return true;
}

std::string Shape::to_string() const {
  switch (kind) {
    case ShapeKind::Increasing: return "H(" + std::to_string(e) + ")";
    case ShapeKind::SingleFlat: return "H(" + std::to_string(n) + "," + std::to_string(e) + ")";
    case ShapeKind::Other: return "other";
  }
  return "other";
}

std::vector<long> shape_values_increasing(long e, int degree_bound) {
  std::vector<long> out;
  for (int t = 0; t <= degree_bound; ++t) {
    if (t == 0) out.push_back(1);
    else if (t <= e - 3) out.push_back(t + 2);
    else out.push_back(e);
  }
  return out;
}

std::vector<long> shape_values_single_flat(int n, long e, int degree_bound) {
  std::vector<long> out;
  for (int t = 0; t <= degree_bound; ++t) {
    if (t == 0) out.push_back(1);
    else if (t <= n) out.push_back(t + 2);
    else if (t <= e - 2) out.push_back(t + 1);
    else out.push_back(e);
  }
  return out;
}

HFClassification classify_hf(const HilbertFunction& hf, std::optional<IdealType> type_hint) {
  if (!hf.stable_value || !hf.stabilization_index) {
    throw UsageError("classification needs a stabilized Hilbert function");
  }
  HFClassification out;
  const long e = *hf.stable_value;
  const auto& v = hf.values;
  const int bound = hf.degree_bound();
  out.multiplicity = e;
  for (int t = 0; t + 1 <= bound; ++t) {
    if (v[t] == v[t + 1] && v[t] < e) out.flats.push_back(t);
  }
  out.flat_count = static_cast<int>(out.flats.size());
  if (!out.flats.empty()) out.first_flat = out.flats.front();

  // both displays need the tail to reach e before the bound
  if (e >= 4 && bound >= e - 2 && v == shape_values_increasing(e, bound)) {
    out.shape = Shape{ShapeKind::Increasing, 0, e};
  } else if (out.flat_count == 1 && *out.first_flat >= 1 && bound >= e - 1 &&
             v == shape_values_single_flat(*out.first_flat, e, bound)) {
    out.shape = Shape{ShapeKind::SingleFlat, *out.first_flat, e};
  }

  out.checks["macaulay_admissible"] = admissible_check(v);
  out.checks["prop22_profile"] = std::nullopt;
  out.checks["thm35_e_le_2n"] = std::nullopt;
  out.checks["q27_e_le_p1n"] = std::nullopt;
  out.checks["prop26_cm_flag"] = std::nullopt;
  if (type_hint && type_hint->a == 2) {
    const int b = type_hint->b;
    bool profile = bound >= b;
    for (int j = 0; profile && j < b; ++j) profile = v[j] == 2L * j + 1;
    if (profile) profile = v[b] == 2L * b;
    for (int j = b; profile && j < bound; ++j) {
      const long delta = v[j + 1] - v[j];
      profile = delta == 0 || delta == 1;
    }
    if (profile) profile = out.flat_count <= b - 1;
    out.checks["prop22_profile"] = profile;
    out.checks["prop26_cm_flag"] = out.flats.empty();
    if (out.first_flat) {
      const long n = *out.first_flat;
      out.checks["q27_e_le_p1n"] = e <= (out.flat_count + 1) * n;
      if (b == 2) out.checks["thm35_e_le_2n"] = e <= 2 * n;
    }
  }
  return out;
}

}  // namespace lsb
