#include "lsb/families.hpp"

#include <algorithm>
#include <sstream>

#include "lsb/parser.hpp"

namespace lsb {
namespace {

struct Vars {
  Polynomial x, y, z;
};

Vars vars_of(const Ring& ring) {
  if (ring->num_vars() != 3) throw UsageError("families are defined in three variables");
  return {Polynomial::variable(ring, 0), Polynomial::variable(ring, 1),
          Polynomial::variable(ring, 2)};
}

Polynomial one(const Ring& ring) { return Polynomial::constant(ring, 1); }

MonomialIdeal monomials(const Ring& ring, std::initializer_list<Monomial> gens) {
  return MonomialIdeal(ring, std::vector<Monomial>(gens));
}

std::map<int, long> as_map(const std::vector<long>& values) {
  std::map<int, long> out;
  for (std::size_t i = 0; i < values.size(); ++i) out[static_cast<int>(i)] = values[i];
  return out;
}

template <class T>
Expected<T> stated(T v) {
  return {std::move(v), Provenance::Stated};
}
template <class T>
Expected<T> instantiated(T v) {
  return {std::move(v), Provenance::Instantiated};
}
template <class T>
Expected<T> computed(T v) {
  return {std::move(v), Provenance::Computed};
}

bool only_in(const Polynomial& f, std::initializer_list<std::size_t> allowed) {
  for (std::size_t v = 0; v < f.num_vars(); ++v) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end() && !f.free_of(v)) return false;
  }
  return true;
}

bool is_unit(const Polynomial& f) { return f.constant_term() != 0; }

void require(std::vector<std::string>& violations, bool ok, const char* name) {
  if (!ok) violations.emplace_back(name);
}

std::string poly_list(std::span<const Polynomial> ps) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].to_string();
  }
  return out + ")";
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << "]";
  return os.str();
}

std::vector<int> range(int from, int to) {
  std::vector<int> out;
  for (int t = from; t <= to; ++t) out.push_back(t);
  return out;
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Stated: return "stated";
    case Provenance::Instantiated: return "instantiated";
    case Provenance::Computed: return "computed";
  }
  return "?";
}

namespace {
std::string join_violations(const std::vector<std::string>& v) {
  std::string out = "parameter conditions violated:";
  for (const auto& s : v) out += " [" + s + "]";
  return out;
}
}  // namespace

ParameterError::ParameterError(std::vector<std::string> violations)
    : UsageError(join_violations(violations)), violations_(std::move(violations)) {}

Ring default_family_ring() { return OrderingSpec::make(); }

FamilyInstance build_increasing(int b, int e, const Ring& ring) {
  std::vector<std::string> bad;
  require(bad, b >= 2, "b >= 2");
  require(bad, e >= 2 * b, "e >= 2b");
  if (!bad.empty()) throw ParameterError(bad);
  auto [x, y, z] = vars_of(ring);

  FamilyInstance inst;
  inst.name = "increasing-b" + std::to_string(b) + "-e" + std::to_string(e);
  inst.parameters = {{"b", std::to_string(b)}, {"e", std::to_string(e)}};
  inst.generators = {x.pow(2) + y.pow(e - 2 * b + 2), x * y.pow(b - 1)};
  auto& ex = inst.expected;
  ex.leading_ideal = instantiated(
      monomials(ring, {Monomial{2, 0, 0}, Monomial{1, b - 1, 0}, Monomial{0, e - b + 1, 0}}));
  std::vector<long> hf;
  for (int j = 0; j <= e - b + 3; ++j) {
    if (j < b) hf.push_back(2L * j + 1);
    else if (j <= e - b) hf.push_back(j + b);
    else hf.push_back(e);
  }
  ex.hf_values = instantiated(as_map(hf));
  ex.multiplicity = instantiated<long>(e);
  ex.flat_count = instantiated(0);
  ex.type = instantiated(IdealType{2, b});
  if (b == 2) ex.shape = instantiated(Shape{ShapeKind::Increasing, 0, e});
  return inst;
}

FamilyInstance build_flat(int n, int e, const Ring& ring) {
  std::vector<std::string> bad;
  require(bad, n >= 3, "n >= 3");
  require(bad, n + 3 <= e, "n+3 <= e");
  require(bad, e <= 2 * n, "e <= 2n");
  if (!bad.empty()) throw ParameterError(bad);
  auto [x, y, z] = vars_of(ring);

  FamilyInstance inst;
  inst.name = "flat-n" + std::to_string(n) + "-e" + std::to_string(e);
  inst.parameters = {{"n", std::to_string(n)}, {"e", std::to_string(e)}};
  const Polynomial f = x.pow(2) - y.pow(e - 2);
  const Polynomial g = x * y - z.pow(n);
  inst.generators = {f, g};
  auto& ex = inst.expected;
  ex.standard_basis =
      instantiated(std::vector<Polynomial>{f, g, x * z.pow(n) - y.pow(e - 1), y.pow(e) - z.pow(2 * n)});
  ex.leading_ideal = instantiated(monomials(
      ring, {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{1, 0, n}, Monomial{0, e, 0}}));
  ex.shape = instantiated(Shape{ShapeKind::SingleFlat, n, e});
  ex.multiplicity = instantiated<long>(e);
  ex.flats = instantiated(std::vector<int>{n});
  ex.type = instantiated(IdealType{2, 2});
  ex.squarefree_quadrics = instantiated(false);
  return inst;
}

FamilyInstance build_thm41(const FlatFamilyParams& prm) {
  const Ring& ring = prm.alpha.ring();
  auto [x, y, z] = vars_of(ring);
  const int n = prm.n, e = prm.e;
  std::vector<std::string> bad;
  require(bad, prm.a == 0 || prm.a == 1, "a in {0,1}");
  require(bad, prm.p >= 2, "p >= 2");
  require(bad, only_in(prm.alpha, {2}) && is_unit(prm.alpha), "alpha unit in K[z]");
  require(bad, only_in(prm.H, {1, 2}), "H in K[y,z]");
  require(bad, only_in(prm.L, {1, 2}), "L in K[y,z]");
  require(bad, prm.L.order() >= n + 1, "order(L) >= n+1");
  require(bad, prm.H.order() >= 2, "order(H) >= 2");
  require(bad, n + 3 <= e && e <= 2 * n, "n+3 <= e <= 2n");
  if (prm.p >= 0 && n >= 0) {
    const Polynomial combo = Polynomial::constant(ring, 2) * prm.alpha * z.pow(n) * prm.H -
                             Polynomial::constant(ring, prm.a) * prm.alpha * z.pow(n + prm.p) +
                             y * prm.L;
    const int ord = combo.order();
    require(bad, ord >= e - 1, "order(2*alpha*z^n*H - a*alpha*z^(n+p) + y*L) >= e-1");
    require(bad, e >= 2 * n || ord == e - 1, "equality in the order condition when e < 2n");
  }
  if (!bad.empty()) throw ParameterError(bad);

  FamilyInstance inst;
  inst.name = "flat-family-n" + std::to_string(n) + "-e" + std::to_string(e);
  inst.parameters = {{"n", std::to_string(n)},         {"e", std::to_string(e)},
                     {"a", std::to_string(prm.a)},     {"p", std::to_string(prm.p)},
                     {"alpha", prm.alpha.to_string()}, {"H", prm.H.to_string()},
                     {"L", prm.L.to_string()}};
  const Polynomial a = Polynomial::constant(ring, prm.a);
  inst.generators = {x.pow(2) + a * z.pow(prm.p) * (x + prm.H) - prm.H.pow(2) + prm.L,
                     x * y + prm.alpha * z.pow(n) + y * prm.H};
  inst.expected.shape = instantiated(Shape{ShapeKind::SingleFlat, n, e});
  inst.expected.multiplicity = instantiated<long>(e);
  inst.expected.type = instantiated(IdealType{2, 2});
  return inst;
}

Polynomial square_free_family_w(const SquareFreeFamilyParams& prm) {
  const Ring& ring = prm.d.ring();
  auto [x, y, z] = vars_of(ring);
  const Polynomial c1 = one(ring);
  const Polynomial c2 = Polynomial::constant(ring, 2);
  return prm.F + prm.d * (prm.d - c1) * z.pow(2) +
         prm.alpha * (c2 * prm.d - c1) * z * y.pow(prm.r - 1) +
         prm.alpha.pow(2) * y.pow(2 * (prm.r - 1));
}

FamilyInstance build_thm42(const SquareFreeFamilyParams& prm) {
  const Ring& ring = prm.d.ring();
  auto [x, y, z] = vars_of(ring);
  const int e = prm.e;
  std::vector<std::string> bad;
  require(bad, prm.r >= 3, "r >= 3");
  require(bad, only_in(prm.F, {1, 2}) && prm.F.order() >= 3, "F in K[y,z] with order(F) >= 3");
  require(bad, only_in(prm.d, {1, 2}) && prm.d.constant_term() == 1,
          "d unit in K[y,z] with d(0,0) = 1");
  require(bad, prm.alpha.is_zero() || (only_in(prm.alpha, {1}) && is_unit(prm.alpha)),
          "alpha = 0 or unit in K[y]");
  require(bad, prm.beta.is_zero() || (only_in(prm.beta, {2}) && is_unit(prm.beta)),
          "beta = 0 or unit in K[z]");
  require(bad, e - 1 >= 3, "e-1 >= 3");
  require(bad, prm.beta.is_zero() || prm.s >= e - 1, "s >= e-1");
  if (prm.r >= 1) {
    require(bad, square_free_family_w(prm).order() == e - 2,
            "order(F + d(d-1)z^2 + alpha(2d-1)z*y^(r-1) + alpha^2*y^(2(r-1))) = e-2");
  }
  if (!bad.empty()) throw ParameterError(bad);

  FamilyInstance inst;
  inst.name = "square-free-family-e" + std::to_string(e);
  inst.parameters = {{"e", std::to_string(e)},         {"r", std::to_string(prm.r)},
                     {"s", std::to_string(prm.s)},     {"d", prm.d.to_string()},
                     {"alpha", prm.alpha.to_string()}, {"beta", prm.beta.to_string()},
                     {"F", prm.F.to_string()}};
  inst.generators = {x.pow(2) + x * z + prm.F,
                     x * y + prm.d * y * z + prm.alpha * y.pow(prm.r) + prm.beta * z.pow(prm.s)};
  inst.expected.shape = instantiated(Shape{ShapeKind::Increasing, 0, e});
  inst.expected.multiplicity = instantiated<long>(e);
  inst.expected.type = instantiated(IdealType{2, 2});
  inst.expected.squarefree_quadrics = instantiated(true);
  return inst;
}

FamilyInstance shibuta(int b, const Ring& ring) {
  if (b < 2) throw ParameterError({"b >= 2"});
  auto [x, y, z] = vars_of(ring);
  FamilyInstance inst;
  inst.name = "shibuta-b" + std::to_string(b);
  inst.parameters = {{"b", std::to_string(b)}};
  inst.generators = {x * z - y.pow(3), z.pow(b) - x.pow(2 * b + 1)};
  inst.expected.flat_count = stated(b - 1);
  inst.expected.multiplicity = computed<long>(3L * b);
  inst.expected.hf_values = instantiated(std::map<int, long>{{0, 1}, {1, 3}});
  inst.expected.type = stated(IdealType{2, b});
  inst.notes.push_back(
      "the stated closed formula gives HF(t) = 2t+2 for 1 <= t <= b-1, which contradicts "
      "HF(j) = 2j+1 for j < b; only the stated flat count is used");
  return inst;
}

std::vector<FamilyInstance> corpus(const Ring& ring) {
  std::vector<FamilyInstance> out;
  auto add = [&](std::string name, std::string_view ideal) -> FamilyInstance& {
    FamilyInstance inst;
    inst.name = std::move(name);
    inst.parameters = {{"ideal", std::string(ideal)}};
    inst.generators = parse_ideal(ideal, ring);
    out.push_back(std::move(inst));
    return out.back();
  };
  auto polys = [&](std::string_view text) { return parse_ideal(text, ring); };
  auto mono = [&](std::string_view text) { return parse_monomial_ideal(text, ring); };

  {
    auto& c = add("cubic-pair", "x^3, z^5 + x*z^3 + x^2*y");
    c.expected.type = stated(IdealType{3, 3});
    c.expected.initial_ideal_gens =
        stated(polys("x^3, x^2*y, x^2*z^3, -x*y*z^5 + x*z^6, -x*z^7, z^10"));
    c.expected.hf_values = stated(as_map({1, 3, 6, 8, 10, 11, 13, 14, 14, 15, 15}));
    c.expected.flats = stated(std::vector<int>{7});
  }
  {
    auto& c = add("quartic-pair", "x^4, z^4 + x^2*y");
    c.expected.type = stated(IdealType{3, 4});
    c.expected.initial_ideal_gens = stated(polys("x^2*y, x^4, x^2*z^4, z^8"));
    c.expected.hf_values = stated(as_map({1, 3, 6, 9, 11, 13, 14, 15, 16, 16, 16}));
    c.expected.flat_count = stated(0);
  }
  {
    auto& c = add("increasing-not-cm", "x^4, x^2*y + z^4");
    c.expected.initial_ideal_gens = stated(polys("x^2*y, x^4, x^2*z^4, z^8"));
    c.expected.hs_numerator = stated(std::vector<long>{1, 2, 3, 3, 2, 2, 1, 1, 1});
    c.expected.flat_count = stated(0);
  }
  for (int b = 2; b <= 5; ++b) out.push_back(shibuta(b, ring));
  {
    auto& c = add("consecutive-flats", "x^2, x*y^2 + z^5 + x*y^3*z^2");
    c.expected.type = stated(IdealType{2, 3});
    c.expected.hf_values = stated(std::map<int, long>{{5, 8}, {6, 8}, {7, 8}});
    c.expected.multiplicity = stated<long>(10);
    c.expected.flats = computed(std::vector<int>{5, 6});
    c.expected.hs_numerator = stated(std::vector<long>{1, 2, 2, 1, 1, 1, 0, 0, 1, 1});
  }
  {
    auto& c = add("long-platform", "x^3 - z*y^14, x^2*y + x*z^7");
    c.expected.type = stated(IdealType{3, 3});
    c.expected.initial_ideal_gens = stated(polys("x^3, x^2*y, x^2*z^7, x*z^14, x*y^15*z, y^31*z"));
    c.expected.hs_numerator = stated(std::vector<long>{1, 2, 3, 2, 2, 2, 2, 2, 2, 1,
                                                       2, 2, 2, 2, 2, 1, 1, 0, 0, 0,
                                                       0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                                                       1, 1});
    c.expected.flat_count = stated(13);
    c.expected.flats = computed(range(16, 28));
    c.expected.multiplicity = computed<long>(33);
    std::map<int, long> platform;
    for (int t = 16; t <= 29; ++t) platform[t] = 31;
    c.expected.hf_values = computed(platform);
    c.notes.push_back(
        "the stated series numerator sums to 33 and puts HF = 31 on degrees 16..29, against the "
        "stated HF(15..29) = 31 and e = 32. The numerator, the initial ideal and the engine "
        "agree, so e = 33 is used");
  }
  {
    auto& c = add("three-platforms", "x^4, x*y^3 - z^6");
    c.expected.type = stated(IdealType{4, 4});
    c.expected.initial_ideal_gens =
        stated(polys("x*y^3, x^4, x^3*z^6, x^2*z^12, x*z^18, z^24"));
    c.expected.hs_numerator = stated(
        std::vector<long>{1, 2, 3, 4, 3, 2, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1});
    std::map<int, long> hf;
    for (int t = 8; t <= 11; ++t) hf[t] = 18;
    for (int t = 13; t <= 16; ++t) hf[t] = 20;
    for (int t = 18; t <= 21; ++t) hf[t] = 22;
    c.expected.hf_values = stated(hf);
    c.expected.multiplicity = stated<long>(24);
    std::vector<int> flats = range(8, 10);
    for (int t : range(13, 15)) flats.push_back(t);
    for (int t : range(18, 20)) flats.push_back(t);
    c.expected.flats = stated(flats);
  }
  {
    auto add_flat_pair = [&](std::string name, std::string_view ideal, std::string_view star) {
      auto& c = add(std::move(name), ideal);
      c.expected.type = stated(IdealType{2, 2});
      c.expected.leading_ideal = stated(mono("x^2, x*y, x*z^3, y^6"));
      c.expected.initial_ideal_gens = stated(polys(star));
      c.expected.hf_values = stated(as_map({1, 3, 4, 5, 5, 6, 6}));
      c.expected.shape = instantiated(Shape{ShapeKind::SingleFlat, 3, 6});
      c.expected.multiplicity = stated<long>(6);
    };
    add_flat_pair("non-isomorphic-I", "x^2 - y^4, x*y + z^3", "x^2, x*y, x*z^3, y^6 - z^6");
    add_flat_pair("non-isomorphic-J", "x^2 + x*z^2 - y^4, x*y + z^3",
                  "x^2, x*y, x*z^3, y^6 + y*z^5 - z^6");
  }
  {
    auto add_inc_pair = [&](std::string name, std::string_view ideal, std::string_view star) {
      auto& c = add(std::move(name), ideal);
      c.expected.type = instantiated(IdealType{2, 2});
      c.expected.initial_ideal_gens = stated(polys(star));
      c.expected.hf_values = stated(as_map({1, 3, 4, 5, 6, 6, 6}));
      c.expected.shape = instantiated(Shape{ShapeKind::Increasing, 0, 6});
    };
    add_inc_pair("increasing-I", "x^2 + y^4, x*y", "x^2, x*y, y^5");
    add_inc_pair("increasing-J", "x^2 + y^4 + z^4, x*y", "x^2, x*y, y^5 + y*z^4");
  }
  {
    auto& c = add("square-pair", "x^2 - y^2*z, x*y - y^3");
    c.expected.type = instantiated(IdealType{2, 2});
    c.expected.hf_values = stated(as_map({1, 3, 4, 5, 5, 5}));
    c.expected.shape = instantiated(Shape{ShapeKind::Increasing, 0, 5});
    c.expected.squarefree_quadrics = stated(false);
  }
  out.push_back(build_increasing(2, 6, ring));
  out.push_back(build_flat(3, 6, ring));
  return out;
}

namespace {

bool same_basis(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  if (a.size() != b.size()) return false;
  for (auto& p : a) p = p.monic();
  for (auto& p : b) p = p.monic();
  return std::all_of(a.begin(), a.end(), [&](const Polynomial& p) {
    return std::find(b.begin(), b.end(), p) != b.end();
  });
}

std::string hf_string(const std::map<int, long>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [t, v] : m) {
    os << (first ? "" : ", ") << t << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string type_string(const std::optional<IdealType>& t) {
  return t ? "(" + std::to_string(t->a) + "," + std::to_string(t->b) + ")" : "none";
}

}  // namespace

std::vector<FieldCheck> verify(const FamilyInstance& inst, const IdealAnalysis& an) {
  std::vector<FieldCheck> out;
  const ExpectedRecord& ex = inst.expected;
  auto push = [&](const char* field, Provenance p, bool ok, std::string want, std::string got) {
    out.push_back({field, p, ok, std::move(want), std::move(got)});
  };
  const auto& cls = an.classification;

  if (ex.leading_ideal) {
    push("leading_ideal", ex.leading_ideal->provenance, an.leading_ideal == ex.leading_ideal->value,
         ex.leading_ideal->value.to_string(), an.leading_ideal.to_string());
  }
  if (ex.initial_ideal_gens) {
    const auto& want = ex.initial_ideal_gens->value;
    push("initial_ideal", ex.initial_ideal_gens->provenance,
         initial_ideal_equal(want, an.initial_forms), poly_list(want),
         poly_list(an.initial_forms));
  }
  if (ex.standard_basis) {
    // a truncated basis only agrees up to the truncation degree
    const bool have = an.basis.has_value();
    push("standard_basis", ex.standard_basis->provenance,
         have && same_basis(ex.standard_basis->value, an.basis->generators),
         poly_list(ex.standard_basis->value),
         have ? poly_list(an.basis->generators) : "not computed (truncated route)");
  }
  if (ex.hf_values) {
    std::map<int, long> got;
    bool ok = true;
    for (const auto& [t, v] : ex.hf_values->value) {
      if (t < 0 || t > an.hf.degree_bound()) {
        // beyond the bound only the stable value can be compared
        if (!an.hf.stable_value) {
          ok = false;
          continue;
        }
        got[t] = *an.hf.stable_value;
      } else {
        got[t] = an.hf.values[static_cast<std::size_t>(t)];
      }
      ok = ok && got[t] == v;
    }
    push("hf_values", ex.hf_values->provenance, ok, hf_string(ex.hf_values->value), hf_string(got));
  }
  if (ex.hs_numerator) {
    const std::vector<long> got = an.hs ? an.hs->numerator : std::vector<long>{};
    push("hs_numerator", ex.hs_numerator->provenance,
         an.hs && an.hs->denominator_exponent == 1 && got == ex.hs_numerator->value,
         join(ex.hs_numerator->value), an.hs ? an.hs->to_string() : "not stabilized");
  }
  if (ex.shape) {
    const std::string got = cls ? cls->shape.to_string() : "unclassified";
    push("shape", ex.shape->provenance, cls && cls->shape == ex.shape->value,
         ex.shape->value.to_string(), got);
  }
  if (ex.type) {
    push("type", ex.type->provenance, an.type == ex.type->value, type_string(ex.type->value),
         type_string(an.type));
  }
  if (ex.multiplicity) {
    push("multiplicity", ex.multiplicity->provenance,
         an.hf.stable_value == ex.multiplicity->value, std::to_string(ex.multiplicity->value),
         an.hf.stable_value ? std::to_string(*an.hf.stable_value) : "none");
  }
  if (ex.flats) {
    push("flats", ex.flats->provenance, cls && cls->flats == ex.flats->value,
         join(ex.flats->value), cls ? join(cls->flats) : "unclassified");
  }
  if (ex.flat_count) {
    push("flat_count", ex.flat_count->provenance, cls && cls->flat_count == ex.flat_count->value,
         std::to_string(ex.flat_count->value),
         cls ? std::to_string(cls->flat_count) : "unclassified");
  }
  if (ex.squarefree_quadrics) {
    std::optional<bool> got;
    if (an.quadrics) got = an.quadrics->kind == QuadricPairCase::SquareFree;
    push("squarefree_quadrics", ex.squarefree_quadrics->provenance,
         got == ex.squarefree_quadrics->value, ex.squarefree_quadrics->value ? "true" : "false",
         got ? (*got ? "true" : "false") : "not type (2,2)");
  }
  return out;
}

bool all_passed(const std::vector<FieldCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const FieldCheck& c) { return c.passed; });
}

}  // namespace lsb
