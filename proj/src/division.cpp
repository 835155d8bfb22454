#include "lsb/division.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "lsb/errors.hpp"

namespace lsb {
namespace {

constexpr std::size_t kNotOriginal = std::numeric_limits<std::size_t>::max();

struct Reducer {
  Polynomial poly;
  int ecart;
  std::size_t original;  // index into the divisors, or kNotOriginal
  // poly = a * f + sum b[j] * divisors[j]; only filled for adjoined dividends
  std::optional<Polynomial> a;
  std::vector<Polynomial> b;
};

void check_inputs(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (divisors.empty()) throw UsageError("division needs at least one divisor");
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw UsageError("division by the zero polynomial");
    if (!g.ring()->same_as(*f.ring())) throw UsageError("dividend and divisors use different rings");
  }
}

class MoraDivider {
 public:
  MoraDivider(const Polynomial& f, std::span<const Polynomial> divisors, bool track,
              std::size_t max_steps)
      : divisors_(divisors), track_(track), max_steps_(max_steps), h_(f),
        a_(Polynomial::constant(f.ring(), 1)) {
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      reducers_.push_back(Reducer{divisors[j], ecart(divisors[j]), j, std::nullopt, {}});
    }
    if (track_) b_.assign(divisors.size(), Polynomial(f.ring()));
  }

  void leading_loop() {
    while (!h_.is_zero()) {
      const Reducer* best = nullptr;
      const Monomial& lm = h_.lead_monomial();
      for (const Reducer& r : reducers_) {
        if (!r.poly.lead_monomial().divides(lm)) continue;
        if (best == nullptr || r.ecart < best->ecart) best = &r;
      }
      if (best == nullptr) return;
      const std::size_t best_index = static_cast<std::size_t>(best - reducers_.data());
      if (best->ecart > ecart(h_)) {
        Reducer snapshot{h_, ecart(h_), kNotOriginal, std::nullopt, {}};
        if (track_) {
          snapshot.a = a_;
          snapshot.b = b_;
        }
        reducers_.push_back(std::move(snapshot));
      }
      reduce_by(reducers_[best_index]);
    }
  }

  void tail_loop(int truncation_degree) {
    std::size_t pos = 0;
    while (pos < h_.size()) {
      const Term& t = h_.terms()[pos];
      if (t.mono.degree() > truncation_degree) break;
      std::size_t hit = divisors_.size();
      for (std::size_t j = 0; j < divisors_.size(); ++j) {
        if (divisors_[j].lead_monomial().divides(t.mono)) {
          hit = j;
          break;
        }
      }
      if (hit == divisors_.size()) {
        ++pos;
        continue;
      }
      const Polynomial& g = divisors_[hit];
      Rational c = t.coeff / g.lead_coeff();
      Monomial m = t.mono / g.lead_monomial();
      count_step();
      if (track_) b_[hit].sub_mul(c, m, Polynomial::constant(h_.ring(), 1));
      h_.sub_mul(c, m, g);
    }
  }

  DivisionResult result() && {
    DivisionResult out{std::move(a_), {}, std::move(h_), steps_};
    if (track_) {
      out.quotients.reserve(b_.size());
      for (Polynomial& q : b_) out.quotients.push_back(-q);
    }
    return out;
  }

  Polynomial remainder() && { return std::move(h_); }
  std::size_t steps() const { return steps_; }

 private:
  void count_step() {
    if (++steps_ > max_steps_) {
      throw ResourceError("Mora normal form exceeded " + std::to_string(max_steps_) +
                          " reduction steps");
    }
  }

  void reduce_by(const Reducer& r) {
    count_step();
    Rational c = h_.lead_coeff() / r.poly.lead_coeff();
    Monomial m = h_.lead_monomial() / r.poly.lead_monomial();
    if (track_) {
      if (r.original != kNotOriginal) {
        b_[r.original].sub_mul(c, m, Polynomial::constant(h_.ring(), 1));
      } else {
        a_.sub_mul(c, m, *r.a);
        for (std::size_t j = 0; j < b_.size(); ++j) b_[j].sub_mul(c, m, r.b[j]);
      }
    }
    h_.sub_mul(c, m, r.poly);
  }

  std::span<const Polynomial> divisors_;
  bool track_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
  Polynomial h_;
  Polynomial a_;
  std::vector<Polynomial> b_;
  std::vector<Reducer> reducers_;
};

}  // namespace

int ecart(const Polynomial& f) {
  if (f.is_zero()) throw UsageError("ecart of the zero polynomial");
  return f.max_degree() - f.order();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw UsageError("S-polynomial of a zero polynomial");
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial s = f.mul_term(1, l / f.lead_monomial());
  s.sub_mul(f.lead_coeff() / g.lead_coeff(), l / g.lead_monomial(), g);
  return s;
}

DivisionResult mora_weak_nf(const Polynomial& f, std::span<const Polynomial> divisors,
                            const DivisionOptions& options) {
  check_inputs(f, divisors);
  MoraDivider divider(f, divisors, options.track, options.max_steps);
  divider.leading_loop();
  if (options.reduce_tail) {
    int bound = f.max_degree();
    for (const Polynomial& g : divisors) bound = std::max(bound, g.max_degree());
    divider.tail_loop(options.truncation_degree.value_or(bound + 2));
  }
  DivisionResult out = std::move(divider).result();
  if (!options.track) {
    out.unit = Polynomial(f.ring());
    out.quotients.clear();
  }
  return out;
}

Polynomial mora_reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                       std::size_t max_steps, std::size_t* steps_used) {
  check_inputs(f, divisors);
  MoraDivider divider(f, divisors, false, max_steps);
  divider.leading_loop();
  if (steps_used != nullptr) *steps_used = divider.steps();
  return std::move(divider).remainder();
}

DivisionCheck verify_division(const Polynomial& f, std::span<const Polynomial> divisors,
                              const DivisionResult& result) {
  DivisionCheck check;
  if (result.quotients.size() != divisors.size()) return check;
  Polynomial rhs = result.remainder;
  for (std::size_t j = 0; j < divisors.size(); ++j) rhs += result.quotients[j] * divisors[j];
  check.identity = (result.unit * f == rhs);
  check.unit_constant_one = (result.unit.constant_term() == 1);
  check.leading_term_reduced = true;
  if (!result.remainder.is_zero()) {
    for (const Polynomial& g : divisors) {
      if (g.lead_monomial().divides(result.remainder.lead_monomial())) {
        check.leading_term_reduced = false;
      }
    }
  }
  check.quotient_bound = true;
  const OrderingSpec& ord = *f.ring();
  for (std::size_t j = 0; j < divisors.size(); ++j) {
    if (result.quotients[j].is_zero()) continue;
    if (f.is_zero()) {
      check.quotient_bound = false;
      continue;
    }
    const Polynomial prod = result.quotients[j] * divisors[j];
    if (!prod.is_zero() && ord.local_greater(prod.lead_monomial(), f.lead_monomial())) {
      check.quotient_bound = false;
    }
  }
  return check;
}

Polynomial truncated_reduce(const Polynomial& f, std::span<const Polynomial> divisors, int degree,
                            std::size_t max_steps, std::size_t* steps_used) {
  check_inputs(f, divisors);
  Polynomial h = f.truncated(degree);
  std::size_t steps = 0;
  while (!h.is_zero()) {
    const Monomial& lm = h.lead_monomial();
    auto hit = std::find_if(divisors.begin(), divisors.end(), [&](const Polynomial& g) {
      return g.lead_monomial().divides(lm);
    });
    if (hit == divisors.end()) break;
    if (++steps > max_steps) {
      throw ResourceError("truncated reduction exceeded " + std::to_string(max_steps) + " steps");
    }
    h.sub_mul(h.lead_coeff() / hit->lead_coeff(), lm / hit->lead_monomial(), *hit);
    h = h.truncated(degree);
  }
  if (steps_used) *steps_used = steps;
  return h;
}

}  // namespace lsb
