#include "lsb/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsb/families.hpp"
#include "lsb/parser.hpp"
#include "lsb/random_ideals.hpp"
#include "lsb/resolutions.hpp"

namespace lsb {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "lsb 0.1.0";

std::string join_strings(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, std::string_view sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::vector<std::string> poly_strings(std::span<const Polynomial> polys) {
  std::vector<std::string> out;
  for (const Polynomial& p : polys) out.push_back(p.to_string());
  return out;
}

/// Runs fn(0..count-1) on up to `workers` threads; fn must not throw.
void run_indexed(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  const std::size_t pool_size = std::min<std::size_t>(workers, count);
  if (pool_size <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < pool_size; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  }
}

unsigned effective_workers(const RunConfig& cfg) {
  if (cfg.workers) return cfg.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---- config --------------------------------------------------------------

Json config_json(const RunConfig& cfg) {
  Json j;
  j["vars"] = cfg.vars;
  j["tie_break"] = std::string(to_string(cfg.tie_break));
  j["precedence"] = cfg.precedence.empty() ? cfg.vars : cfg.precedence;
  j["method"] = cfg.method ? Json(std::string(to_string(*cfg.method))) : Json(nullptr);
  j["truncation"] = cfg.truncation ? Json(*cfg.truncation) : Json(nullptr);
  j["max_truncation"] = cfg.max_truncation;
  j["hf_degree_bound"] = cfg.hf_degree_bound;
  j["max_pairs"] = cfg.max_pairs;
  j["max_steps"] = cfg.max_steps;
  j["chain_criterion"] = cfg.chain_criterion;
  j["verify_divisions"] = cfg.verify_divisions;
  j["seed"] = cfg.seed;
  return j;
}

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "structured" || text == "json") return OutputFormat::Structured;
  throw UsageError("unknown output format '" + std::string(text) + "' (expected table or structured)");
}

// ---- report pieces -------------------------------------------------------

Json hf_json(const HilbertFunction& hf) {
  Json j;
  j["values"] = hf.values;
  j["krull_dimension"] = hf.krull_dimension;
  j["multiplicity"] = hf.stable_value ? Json(*hf.stable_value) : Json(nullptr);
  j["reduction_number"] = hf.stabilization_index ? Json(*hf.stabilization_index) : Json(nullptr);
  return j;
}

Json hs_json(const std::optional<HilbertSeries>& hs) {
  if (!hs) return nullptr;
  Json j;
  j["numerator"] = hs->numerator;
  j["denominator_exponent"] = hs->denominator_exponent;
  j["text"] = hs->to_string();
  return j;
}

std::string type_text(const std::optional<IdealType>& t) {
  if (!t) return "none";
  return "(" + std::to_string(t->a) + "," + std::to_string(t->b) + ")";
}

std::string_view quadric_case_text(QuadricPairCase c) {
  switch (c) {
    case QuadricPairCase::RegularSequence: return "regular-sequence";
    case QuadricPairCase::SquareFree: return "square-free";
    case QuadricPairCase::ContainsSquare: return "contains-square";
  }
  return "?";
}

Json classification_json(const IdealAnalysis& an) {
  if (!an.classification) return nullptr;
  const HFClassification& c = *an.classification;
  Json j;
  j["type"] = an.type ? Json::array({an.type->a, an.type->b}) : Json(nullptr);
  j["multiplicity"] = c.multiplicity;
  j["shape"] = c.shape.to_string();
  j["flats"] = c.flats;
  j["flat_count"] = c.flat_count;
  j["first_flat"] = c.first_flat ? Json(*c.first_flat) : Json(nullptr);
  j["quadrics"] = an.quadrics ? Json(std::string(quadric_case_text(an.quadrics->kind))) : Json(nullptr);
  return j;
}

Json checks_json(const std::map<std::string, std::optional<bool>>& checks) {
  Json j = Json::object();
  for (const auto& [k, v] : checks) j[k] = v ? Json(*v) : Json(nullptr);
  return j;
}

std::map<std::string, std::optional<bool>> analysis_checks(const IdealAnalysis& an) {
  std::map<std::string, std::optional<bool>> checks;
  if (an.classification) checks = an.classification->checks;
  checks["lt_matches_initial_forms"] = leading_ideal_matches_initial_forms(
      an.leading_ideal, an.initial_forms, an.leading_ideal.max_degree() + 2);
  return checks;
}

// prop26_cm_flag is a reported property and q27_e_le_p1n an open question;
// neither is a verification.
bool is_verification(const std::string& key) {
  return key != "prop26_cm_flag" && key != "q27_e_le_p1n";
}

bool any_failed(const std::map<std::string, std::optional<bool>>& checks) {
  return std::ranges::any_of(checks, [](const auto& kv) {
    return is_verification(kv.first) && kv.second == false;
  });
}

/// The fixed top-level layout shared by every command.
Json document(std::string_view command, Json inputs, const RunConfig& cfg) {
  Json j;
  j["version"] = kVersion;
  j["command"] = std::string(command);
  j["inputs"] = std::move(inputs);
  j["config"] = config_json(cfg);
  for (const char* key : {"leading_ideal", "initial_forms", "hf", "hs", "classification", "betti", "checks"}) {
    j[key] = nullptr;
  }
  return j;
}

void fill_analysis(Json& doc, const IdealAnalysis& an) {
  doc["leading_ideal"] = an.leading_ideal.to_string();
  doc["initial_forms"] = poly_strings(an.initial_forms);
  doc["hf"] = hf_json(an.hf);
  doc["hs"] = hs_json(an.hs);
  doc["classification"] = classification_json(an);
  doc["checks"] = checks_json(analysis_checks(an));
  if (an.truncation_degree) doc["certified_truncation"] = *an.truncation_degree;
}

Json pair_log_json(const StandardBasis& sb, const Ring& ring) {
  Json log = Json::array();
  for (const PairRecord& r : sb.pair_log) {
    Json e;
    e["pair"] = Json::array({r.first, r.second});
    e["lcm"] = r.lcm.to_string(ring->var_names());
    e["outcome"] = std::string(to_string(r.outcome));
    e["steps"] = r.steps;
    if (r.outcome == PairOutcome::NewElement) e["added"] = r.added;
    log.push_back(std::move(e));
  }
  return log;
}

Json betti_json(const BettiTable& t) {
  Json rows = Json::array();
  for (int i = 0; i <= t.projective_dimension(); ++i) rows.push_back(t.shifts(i));
  Json j;
  j["shifts"] = std::move(rows);
  j["projective_dimension"] = t.projective_dimension();
  j["resolution"] = t.to_string();
  j["k_polynomial"] = t.k_polynomial();
  return j;
}

// ---- table rendering -----------------------------------------------------

void row(std::ostream& out, std::string_view label, std::string_view value) {
  out << label;
  for (std::size_t i = label.size(); i < 26; ++i) out << ' ';
  if (label.size() >= 26) out << ' ';
  out << value << '\n';
}

void print_analysis(std::ostream& out, const IdealAnalysis& an) {
  row(out, "leading ideal", an.leading_ideal.to_string());
  row(out, "initial forms", join_strings(poly_strings(an.initial_forms), ", "));
  if (an.truncation_degree) row(out, "certified at", "degree " + std::to_string(*an.truncation_degree));
  row(out, "HF", join_numbers(an.hf.values));
  row(out, "dimension", std::to_string(an.hf.krull_dimension));
  if (an.hf.stable_value) row(out, "multiplicity", std::to_string(*an.hf.stable_value));
  if (an.hf.stabilization_index) row(out, "reduction number", std::to_string(*an.hf.stabilization_index));
  if (an.hs) row(out, "HS", an.hs->to_string());
  if (an.type) row(out, "type", type_text(an.type));
  if (an.classification) {
    const HFClassification& c = *an.classification;
    row(out, "shape", c.shape.to_string());
    row(out, "flats", c.flats.empty() ? "none" : join_numbers(c.flats));
  }
  if (an.quadrics) row(out, "quadric parts", quadric_case_text(an.quadrics->kind));
  for (const auto& [k, v] : analysis_checks(an)) {
    if (!v) {
      row(out, k, "n/a");
    } else if (is_verification(k)) {
      row(out, k, *v ? "pass" : "FAIL");
    } else {
      row(out, k, *v ? "yes" : "no");
    }
  }
}

void print_field_checks(std::ostream& out, const std::vector<FieldCheck>& checks) {
  for (const FieldCheck& c : checks) {
    out << "  " << (c.passed ? "ok   " : "FAIL ") << c.field << " [" << to_string(c.provenance) << "]";
    if (!c.passed) out << "\n       expected " << c.expected << "\n       actual   " << c.actual;
    out << '\n';
  }
}

Json field_checks_json(const std::vector<FieldCheck>& checks) {
  Json arr = Json::array();
  for (const FieldCheck& c : checks) {
    Json e;
    e["field"] = c.field;
    e["provenance"] = std::string(to_string(c.provenance));
    e["passed"] = c.passed;
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    arr.push_back(std::move(e));
  }
  return arr;
}

// ---- commands ------------------------------------------------------------

struct Emitter {
  std::ostream& out;
  const RunConfig& cfg;
  bool structured() const { return cfg.format == OutputFormat::Structured; }
  void emit(const Json& doc) const { out << doc.dump(2) << '\n'; }
};

std::vector<Polynomial> read_ideal(const std::vector<std::string>& parts, const Ring& ring) {
  return parse_ideal(join_strings(parts, ", "), ring);
}

int cmd_analysis(std::string_view command, const std::vector<std::string>& ideal_text, const Emitter& em) {
  const Ring ring = em.cfg.ring();
  const std::vector<Polynomial> gens = read_ideal(ideal_text, ring);
  const IdealAnalysis an = analyze_ideal(gens, em.cfg.analysis_options(ConeMethod::Mora));
  const bool failed = any_failed(analysis_checks(an));
  if (em.structured()) {
    Json doc = document(command, poly_strings(an.input), em.cfg);
    fill_analysis(doc, an);
    if (command == "sb") {
      if (an.basis) {
        doc["standard_basis"] = poly_strings(an.basis->generators);
        doc["pair_log"] = pair_log_json(*an.basis, ring);
        doc["reduction_steps"] = an.basis->total_steps;
      } else {
        doc["standard_basis"] = nullptr;
      }
    }
    em.emit(doc);
    return failed ? kExitMismatch : kExitOk;
  }
  std::ostream& out = em.out;
  row(out, "ideal", join_strings(poly_strings(an.input), ", "));
  if (command == "sb") {
    if (an.basis) {
      out << "standard basis (" << an.basis->generators.size() << " elements)\n";
      for (const Polynomial& g : an.basis->generators) out << "  " << g.to_string() << '\n';
      out << "pairs\n";
      for (const PairRecord& r : an.basis->pair_log) {
        out << "  (" << r.first << "," << r.second << ") lcm " << r.lcm.to_string(ring->var_names()) << "  "
            << to_string(r.outcome);
        if (r.outcome == PairOutcome::NewElement) out << " -> " << r.added;
        out << "  steps " << r.steps << '\n';
      }
    }
    row(out, "leading ideal", an.leading_ideal.to_string());
    row(out, "initial forms", join_strings(poly_strings(an.initial_forms), ", "));
    if (an.truncation_degree) row(out, "certified at", "degree " + std::to_string(*an.truncation_degree));
  } else if (command == "hf") {
    row(out, "HF", join_numbers(an.hf.values));
    row(out, "dimension", std::to_string(an.hf.krull_dimension));
    row(out, "multiplicity", an.hf.stable_value ? std::to_string(*an.hf.stable_value) : "not reached");
    if (an.classification) {
      row(out, "flats", an.classification->flats.empty() ? "none" : join_numbers(an.classification->flats));
    }
    if (an.hf.stabilization_index) row(out, "reduction number", std::to_string(*an.hf.stabilization_index));
  } else if (command == "hs") {
    row(out, "HS", an.hs ? an.hs->to_string() : "not determined within the degree bound");
  } else {
    print_analysis(out, an);
  }
  return failed ? kExitMismatch : kExitOk;
}

int cmd_betti(const std::vector<std::string>& ideal_text, const Emitter& em) {
  const Ring ring = em.cfg.ring();
  const MonomialIdeal ideal = parse_monomial_ideal(join_strings(ideal_text, ", "), ring);
  const bool stable = is_stable(ideal);
  std::optional<BettiTable> table;
  std::optional<bool> consistent;
  if (stable) {
    table = ek_betti(ideal);
    consistent = k_polynomial_consistent(*table, ideal);
  }
  if (em.structured()) {
    Json doc = document("betti", ideal.to_string(), em.cfg);
    doc["leading_ideal"] = ideal.to_string();
    if (table) doc["betti"] = betti_json(*table);
    Json checks;
    checks["stable"] = stable;
    checks["k_polynomial_consistent"] = consistent ? Json(*consistent) : Json(nullptr);
    doc["checks"] = std::move(checks);
    em.emit(doc);
  } else {
    row(em.out, "ideal", ideal.to_string());
    row(em.out, "stable", stable ? "yes" : "no");
    if (table) {
      for (int i = 0; i <= table->projective_dimension(); ++i) {
        std::vector<std::string> shifts;
        for (int j : table->shifts(i)) shifts.push_back("-" + std::to_string(j));
        row(em.out, "F" + std::to_string(i), join_strings(shifts, " "));
      }
      row(em.out, "resolution", table->to_string());
      row(em.out, "K-polynomial", *consistent ? "consistent" : "INCONSISTENT");
    }
  }
  if (!stable) {
    throw UsageError("not a stable ideal; the Eliahou-Kervaire resolution does not apply");
  }
  return *consistent ? kExitOk : kExitMismatch;
}

// key=value parameter lists for `family`.
class ParamList {
 public:
  ParamList(const std::vector<std::string>& items, Ring ring) : ring_(std::move(ring)) {
    for (const std::string& item : items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw UsageError("family parameter '" + item + "' is not of the form key=value");
      }
      values_[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }

  int integer(const std::string& key, int fallback) {
    const auto it = take(key);
    if (!it) return fallback;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(it->data(), it->data() + it->size(), v);
    if (ec != std::errc{} || ptr != it->data() + it->size()) {
      throw UsageError("parameter " + key + " expects an integer, got '" + *it + "'");
    }
    return v;
  }

  int required_integer(const std::string& key) {
    if (!values_.contains(key)) throw UsageError("missing parameter " + key);
    return integer(key, 0);
  }

  Polynomial polynomial(const std::string& key, const Polynomial& fallback) {
    const auto it = take(key);
    return it ? parse_polynomial(*it, ring_) : fallback;
  }

  void finish() const {
    if (!values_.empty()) throw UsageError("unknown parameter " + values_.begin()->first);
  }

 private:
  std::optional<std::string> take(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string v = it->second;
    values_.erase(it);
    return v;
  }

  Ring ring_;
  std::map<std::string, std::string> values_;
};

FamilyInstance build_named_family(const std::string& name, const std::vector<std::string>& items,
                                  const Ring& ring) {
  ParamList params(items, ring);
  const Polynomial zero(ring);
  FamilyInstance inst = [&] {
    if (name == "increasing") {
      const int b = params.required_integer("b");
      const int e = params.required_integer("e");
      return build_increasing(b, e, ring);
    }
    if (name == "flat") {
      const int n = params.required_integer("n");
      const int e = params.required_integer("e");
      return build_flat(n, e, ring);
    }
    if (name == "shibuta") return shibuta(params.required_integer("b"), ring);
    if (name == "flat-family") {
      FlatFamilyParams p{.n = params.integer("n", 3),
                         .e = params.integer("e", 6),
                         .a = params.integer("a", 0),
                         .p = params.integer("p", 2),
                         .alpha = params.polynomial("alpha", zero),
                         .H = params.polynomial("H", zero),
                         .L = params.polynomial("L", zero)};
      return build_thm41(p);
    }
    if (name == "square-free") {
      SquareFreeFamilyParams p{.e = params.integer("e", 5),
                               .r = params.integer("r", 3),
                               .s = params.integer("s", 4),
                               .d = params.polynomial("d", Polynomial::constant(ring, 1)),
                               .alpha = params.polynomial("alpha", zero),
                               .beta = params.polynomial("beta", zero),
                               .F = params.polynomial("F", zero)};
      return build_thm42(p);
    }
    throw UsageError("unknown family '" + name +
                     "' (expected increasing, flat, flat-family, square-free or shibuta)");
  }();
  params.finish();
  return inst;
}

Json instance_inputs(const FamilyInstance& inst) {
  Json j;
  j["family"] = inst.name;
  Json params = Json::object();
  for (const auto& [k, v] : inst.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["generators"] = poly_strings(inst.generators);
  return j;
}

int cmd_family(const std::string& name, const std::vector<std::string>& items, bool do_verify,
               const Emitter& em) {
  const Ring ring = em.cfg.ring();
  if (ring->num_vars() != 3) throw UsageError("families live in three variables");
  const FamilyInstance inst = build_named_family(name, items, ring);
  const IdealAnalysis an = analyze_ideal(inst.generators, em.cfg.analysis_options(ConeMethod::Mora));
  std::vector<FieldCheck> checks;
  if (do_verify) checks = verify(inst, an);
  const bool ok = all_passed(checks);
  if (em.structured()) {
    Json doc = document("family", instance_inputs(inst), em.cfg);
    fill_analysis(doc, an);
    if (do_verify) doc["expected"] = field_checks_json(checks);
    if (!inst.notes.empty()) doc["notes"] = inst.notes;
    em.emit(doc);
  } else {
    row(em.out, "family", inst.name);
    row(em.out, "generators", join_strings(poly_strings(inst.generators), ", "));
    print_analysis(em.out, an);
    if (do_verify) {
      em.out << "expected data\n";
      print_field_checks(em.out, checks);
    }
    for (const std::string& note : inst.notes) em.out << "note: " << note << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

struct CorpusOutcome {
  std::vector<FieldCheck> checks;
  std::string error;
  int error_code = kExitOk;
};

int cmd_corpus(bool parallel, const Emitter& em) {
  const Ring ring = em.cfg.ring();
  if (ring->num_vars() != 3) throw UsageError("the corpus lives in three variables");
  const std::vector<FamilyInstance> entries = corpus(ring);
  const AnalysisOptions options = em.cfg.analysis_options(ConeMethod::Mora);
  std::vector<CorpusOutcome> results(entries.size());
  run_indexed(entries.size(), parallel ? effective_workers(em.cfg) : 1, [&](std::size_t i) {
    try {
      results[i].checks = verify(entries[i], analyze_ideal(entries[i].generators, options));
    } catch (const ResourceError& e) {
      results[i] = {{}, e.what(), kExitResource};
    } catch (const Error& e) {
      results[i] = {{}, e.what(), kExitMismatch};
    }
  });

  int code = kExitOk;
  std::size_t matched = 0;
  for (const CorpusOutcome& r : results) {
    if (r.error_code) {
      code = std::max(code, r.error_code);
    } else if (all_passed(r.checks)) {
      ++matched;
    } else {
      code = std::max<int>(code, kExitMismatch);
    }
  }
  if (em.structured()) {
    Json names = Json::array();
    for (const FamilyInstance& inst : entries) names.push_back(inst.name);
    Json doc = document("corpus", std::move(names), em.cfg);
    Json checks;
    Json list = Json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const bool ok = !results[i].error_code && all_passed(results[i].checks);
      checks[entries[i].name] = ok;
      Json e = instance_inputs(entries[i]);
      e["matched"] = ok;
      e["fields"] = field_checks_json(results[i].checks);
      if (!results[i].error.empty()) e["error"] = results[i].error;
      if (!entries[i].notes.empty()) e["notes"] = entries[i].notes;
      list.push_back(std::move(e));
    }
    doc["checks"] = std::move(checks);
    doc["entries"] = std::move(list);
    doc["matched"] = matched;
    em.emit(doc);
  } else {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const CorpusOutcome& r = results[i];
      const bool ok = !r.error_code && all_passed(r.checks);
      const long passed = std::ranges::count_if(r.checks, [](const FieldCheck& c) { return c.passed; });
      em.out << (ok ? "ok       " : "MISMATCH ") << entries[i].name << "  (" << passed << "/"
             << r.checks.size() << " fields)\n";
      if (!r.error.empty()) em.out << "  error: " << r.error << '\n';
      if (!ok) print_field_checks(em.out, r.checks);
    }
    em.out << matched << "/" << entries.size() << " entries matched\n";
  }
  return code;
}

struct SearchHit {
  bool skipped = false;
  bool classified = false;
  std::vector<Polynomial> generators;
  std::optional<HFClassification> cls;
  std::vector<long> hf;
};

int cmd_search(const std::string& type_text_arg, std::size_t samples, const Emitter& em) {
  const std::vector<std::string> parts = split_list(type_text_arg);
  int b = 0;
  if (parts.size() != 2 || parts[0] != "2" ||
      std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), b).ec != std::errc{} || b < 2) {
    throw UsageError("--type expects 2,b with b >= 2, got '" + type_text_arg + "'");
  }
  const Ring ring = em.cfg.ring();
  if (ring->num_vars() != 3) throw UsageError("search draws ideals in three variables");
  const TailSpec spec;
  const AnalysisOptions options = em.cfg.analysis_options(ConeMethod::Automatic);
  std::vector<SearchHit> hits(samples);
  run_indexed(samples, effective_workers(em.cfg), [&](std::size_t i) {
    SearchHit& h = hits[i];
    std::mt19937_64 rng = instance_rng(em.cfg.seed, i);
    h.generators = random_type2b_pair(rng, ring, b, spec);
    try {
      const IdealAnalysis an = analyze_ideal(h.generators, options);
      h.hf = an.hf.values;
      h.classified = an.classification && an.type && an.type->a == 2 && an.type->b == b;
      if (h.classified) h.cls = an.classification;
    } catch (const ResourceError&) {
      h.skipped = true;
    }
  });

  std::size_t classified = 0, with_flats = 0, skipped = 0;
  std::vector<std::size_t> counterexamples;
  for (std::size_t i = 0; i < samples; ++i) {
    const SearchHit& h = hits[i];
    skipped += h.skipped;
    if (!h.classified) continue;
    ++classified;
    if (!h.cls->first_flat) continue;
    ++with_flats;
    if (h.cls->multiplicity > static_cast<long>(h.cls->flat_count + 1) * *h.cls->first_flat) {
      counterexamples.push_back(i);
    }
  }

  Json distribution;
  distribution["generators"] = "x^2 + t1, x*y^" + std::to_string(b - 1) + " + t2";
  distribution["tail_min_order"] = std::max(spec.min_order, b + 1);
  distribution["tail_max_degree"] = spec.max_degree;
  distribution["coefficient_height"] = spec.height;
  distribution["max_terms"] = spec.max_terms;
  distribution["seed"] = em.cfg.seed;
  distribution["samples"] = samples;

  if (em.structured()) {
    Json inputs;
    inputs["type"] = Json::array({2, b});
    inputs["samples"] = samples;
    inputs["seed"] = em.cfg.seed;
    Json doc = document("search", std::move(inputs), em.cfg);
    Json checks;
    checks["q27_e_le_p1n"] = counterexamples.empty();
    doc["checks"] = std::move(checks);
    doc["distribution"] = std::move(distribution);
    doc["classified"] = classified;
    doc["with_flats"] = with_flats;
    doc["skipped"] = skipped;
    Json found = Json::array();
    for (std::size_t i : counterexamples) {
      Json e;
      e["index"] = i;
      e["generators"] = poly_strings(hits[i].generators);
      e["hf"] = hits[i].hf;
      e["multiplicity"] = hits[i].cls->multiplicity;
      e["flats"] = hits[i].cls->flats;
      found.push_back(std::move(e));
    }
    doc["counterexamples"] = std::move(found);
    em.emit(doc);
  } else {
    em.out << "# sampling: " << distribution.dump() << '\n';
    row(em.out, "samples", std::to_string(samples));
    row(em.out, "classified", std::to_string(classified));
    row(em.out, "with flats", std::to_string(with_flats));
    row(em.out, "skipped", std::to_string(skipped));
    row(em.out, "counterexamples", std::to_string(counterexamples.size()));
    for (std::size_t i : counterexamples) {
      const SearchHit& h = hits[i];
      em.out << "COUNTEREXAMPLE #" << i << ": " << join_strings(poly_strings(h.generators), ", ")
             << "\n  HF " << join_numbers(h.hf) << "\n  e " << h.cls->multiplicity << ", flats "
             << join_numbers(h.cls->flats) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

// ---- RunConfig -----------------------------------------------------------

void RunConfig::validate() const {
  if (vars.empty()) throw UsageError("at least one variable is required");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw UsageError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw UsageError("variable " + vars[i] + " listed twice");
    }
  }
  if (!precedence.empty()) {
    std::vector<std::string> a = vars, b = precedence;
    std::ranges::sort(a);
    std::ranges::sort(b);
    if (a != b) throw UsageError("precedence must list every variable exactly once");
  }
  if (truncation && *truncation < 2) throw UsageError("truncation degree must be at least 2");
  if (max_truncation < 2) throw UsageError("max_truncation must be at least 2");
  if (hf_degree_bound < 0) throw UsageError("negative HF degree bound");
}

Ring RunConfig::ring() const {
  validate();
  std::vector<std::size_t> order;
  for (const std::string& name : precedence) {
    order.push_back(static_cast<std::size_t>(std::ranges::find(vars, name) - vars.begin()));
  }
  return OrderingSpec::make(vars, tie_break, order);
}

AnalysisOptions RunConfig::analysis_options(ConeMethod fallback) const {
  AnalysisOptions o;
  o.basis.max_pairs = max_pairs;
  o.basis.max_steps = max_steps;
  o.basis.chain_criterion = chain_criterion;
  o.basis.verify_divisions = verify_divisions;
  o.method = method.value_or(fallback);
  o.hf_degree_bound = hf_degree_bound;
  o.max_truncation = max_truncation;
  o.jet_degree = truncation;
  return o;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config file " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file " + path.string() + " must hold a JSON object");
  RunConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "vars") {
        cfg.vars = value.get<std::vector<std::string>>();
      } else if (key == "tie_break") {
        cfg.tie_break = parse_tie_break(value.get<std::string>());
      } else if (key == "precedence") {
        cfg.precedence = value.get<std::vector<std::string>>();
      } else if (key == "method") {
        if (!value.is_null()) cfg.method = parse_cone_method(value.get<std::string>());
      } else if (key == "truncation") {
        if (!value.is_null()) cfg.truncation = value.get<int>();
      } else if (key == "max_truncation") {
        cfg.max_truncation = value.get<int>();
      } else if (key == "hf_degree_bound") {
        cfg.hf_degree_bound = value.get<int>();
      } else if (key == "max_pairs") {
        cfg.max_pairs = value.get<std::size_t>();
      } else if (key == "max_steps") {
        cfg.max_steps = value.get<std::size_t>();
      } else if (key == "chain_criterion") {
        cfg.chain_criterion = value.get<bool>();
      } else if (key == "verify_divisions") {
        cfg.verify_divisions = value.get<bool>();
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "format") {
        cfg.format = parse_format(value.get<std::string>());
      } else if (key == "workers") {
        cfg.workers = value.get<unsigned>();
      } else {
        throw UsageError("config file " + path.string() + ": unknown key '" + key + "'");
      }
    }
  } catch (const Json::type_error& e) {
    throw UsageError("config file " + path.string() + ": " + e.what());
  }
  cfg.validate();
  return cfg;
}

// ---- entry point ---------------------------------------------------------

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Standard bases in local rings, tangent cones and their Hilbert functions", "lsb"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, vars, precedence, tie_break, method, format;
  int truncation = 0, max_truncation = 0, degree_bound = 0;
  std::size_t max_pairs = 0, max_steps = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool chain = false, verify_div = false;
  auto* o_config = app.add_option("--config", config_path, "JSON config file (default: $LSB_CONFIG)");
  auto* o_vars = app.add_option("--vars", vars, "comma-separated variable names");
  auto* o_prec = app.add_option("--precedence", precedence, "variables from largest to smallest");
  auto* o_tie = app.add_option("--tie-break", tie_break, "lex, deglex or degrevlex");
  auto* o_method = app.add_option("--method", method, "mora, truncated or auto");
  auto* o_trunc = app.add_option("--truncation", truncation, "declared jet degree of the input");
  auto* o_maxtrunc = app.add_option("--max-truncation", max_truncation, "cap for the truncated route");
  auto* o_bound = app.add_option("--degree-bound", degree_bound, "compute HF up to this degree");
  auto* o_pairs = app.add_option("--max-pairs", max_pairs, "S-pair watchdog");
  auto* o_steps = app.add_option("--max-steps", max_steps, "reduction step watchdog");
  auto* o_seed = app.add_option("--seed", seed, "random seed");
  auto* o_format = app.add_option("--format", format, "table or structured");
  auto* o_workers = app.add_option("--workers", workers, "worker threads (0: all cores)");
  auto* o_chain = app.add_flag("--chain-criterion", chain, "drop pairs by the chain criterion");
  auto* o_verify_div = app.add_flag("--verify-divisions", verify_div, "certify every normal form");

  std::vector<std::string> ideal_text, family_params;
  std::string family_name, search_type;
  bool family_verify = false, parallel = false;
  std::size_t samples = 100;

  std::vector<CLI::App*> ideal_commands;
  for (const auto& [name, help] : std::vector<std::pair<const char*, const char*>>{
           {"sb", "standard basis, leading ideal, initial forms and pair log"},
           {"hf", "Hilbert function, multiplicity, flats, reduction number"},
           {"hs", "Hilbert series"},
           {"classify", "type, Hilbert function shape and theorem checks"},
           {"betti", "Eliahou-Kervaire Betti table of a stable monomial ideal"}}) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("ideal", ideal_text, "comma-separated generators")->required();
    ideal_commands.push_back(sub);
  }
  auto* family = app.add_subcommand("family", "build a family member, optionally check its expected data");
  family->add_option("name", family_name, "increasing, flat, flat-family, square-free or shibuta")->required();
  family->add_option("params", family_params, "key=value parameters");
  family->add_flag("--verify", family_verify, "compare with the expected data");
  auto* corpus_cmd = app.add_subcommand("corpus", "run every worked example against its expected data");
  corpus_cmd->add_flag("--parallel", parallel, "spread the entries over worker threads");
  auto* search = app.add_subcommand("search", "random type (2,b) ideals against e <= (p+1)n");
  search->add_option("--type", search_type, "2,b")->required();
  search->add_option("--samples", samples, "number of ideals");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lsb: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (o_config->count()) {
      cfg = load_run_config(config_path);
    } else if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
      cfg = load_run_config(env);
    }
    if (o_vars->count()) {
      cfg.vars = split_list(vars);
      if (!o_prec->count()) cfg.precedence.clear();
    }
    if (o_prec->count()) cfg.precedence = split_list(precedence);
    if (o_tie->count()) cfg.tie_break = parse_tie_break(tie_break);
    if (o_method->count()) cfg.method = parse_cone_method(method);
    if (o_trunc->count()) cfg.truncation = truncation;
    if (o_maxtrunc->count()) cfg.max_truncation = max_truncation;
    if (o_bound->count()) cfg.hf_degree_bound = degree_bound;
    if (o_pairs->count()) cfg.max_pairs = max_pairs;
    if (o_steps->count()) cfg.max_steps = max_steps;
    if (o_seed->count()) cfg.seed = seed;
    if (o_format->count()) cfg.format = parse_format(format);
    if (o_workers->count()) cfg.workers = workers;
    if (o_chain->count()) cfg.chain_criterion = chain;
    if (o_verify_div->count()) cfg.verify_divisions = verify_div;
    cfg.validate();

    const Emitter em{out, cfg};
    for (CLI::App* sub : ideal_commands) {
      if (!sub->parsed()) continue;
      if (sub->get_name() == "betti") return cmd_betti(ideal_text, em);
      return cmd_analysis(sub->get_name(), ideal_text, em);
    }
    if (family->parsed()) return cmd_family(family_name, family_params, family_verify, em);
    if (corpus_cmd->parsed()) return cmd_corpus(parallel, em);
    if (search->parsed()) return cmd_search(search_type, samples, em);
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "lsb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "lsb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "lsb: " << e.what() << '\n';
    return kExitResource;
  } catch (const RegularSequenceCase& e) {
    err << "lsb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "lsb: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace lsb
