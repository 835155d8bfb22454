#include "lsb/polynomial.hpp"

#include <algorithm>

#include "lsb/errors.hpp"

namespace lsb {

std::string to_string(const Rational& q) { return q.get_str(); }

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw UsageError("polynomial without an ordering");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw UsageError("polynomial without an ordering");
  for (const Term& t : terms_) {
    if (t.mono.num_vars() != ring_->num_vars()) {
      throw UsageError("term arity does not match the ordering");
    }
  }
  canonicalize();
}

void Polynomial::canonicalize() {
  const OrderingSpec& ord = *ring_;
  std::sort(terms_.begin(), terms_.end(), [&ord](const Term& a, const Term& b) {
    return ord.local_greater(a.mono, b.mono);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  const std::size_t n = ring->num_vars();
  return Polynomial(std::move(ring), {Term{c, Monomial(n)}});
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, const Rational& c) {
  return Polynomial(std::move(ring), {Term{c, std::move(m)}});
}

Polynomial Polynomial::variable(Ring ring, std::size_t var) {
  const std::size_t n = ring->num_vars();
  return monomial(std::move(ring), Monomial::variable(n, var));
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw UsageError("the zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::order() const noexcept {
  return terms_.empty() ? kInfiniteOrder : terms_.front().mono.degree();
}

int Polynomial::max_degree() const noexcept {
  return terms_.empty() ? -1 : terms_.back().mono.degree();
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial out(ring_);
  for (const Term& t : terms_) {
    if (t.mono.degree() == degree) out.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::initial_form() const {
  if (terms_.empty()) return Polynomial(ring_);
  return homogeneous_component(order());
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial out(ring_);
  for (const Term& t : terms_) {
    if (t.mono.degree() > max_degree) break;
    out.terms_.push_back(t);
  }
  return out;
}

bool Polynomial::is_homogeneous() const noexcept { return order() == max_degree() || is_zero(); }

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

bool Polynomial::free_of(std::size_t var) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.mono[var] == 0; });
}

Polynomial Polynomial::with_ring(Ring ring) const {
  if (ring->num_vars() != num_vars()) throw UsageError("arity mismatch when changing ordering");
  return Polynomial(std::move(ring), terms_);
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (ring_ == g.ring_) return;
  if (!ring_->same_as(*g.ring_)) {
    throw UsageError("polynomials belong to different rings or orderings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_compatible(g);
  const OrderingSpec& ord = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    switch (ord.compare_local(terms_[i].mono, g.terms_[j].mono)) {
      case Cmp::Greater: out.push_back(std::move(terms_[i++])); break;
      case Cmp::Less: out.push_back(g.terms_[j++]); break;
      case Cmp::Equal: {
        Rational c = terms_[i].coeff + g.terms_[j].coeff;
        if (c != 0) out.push_back(Term{std::move(c), std::move(terms_[i].mono)});
        ++i;
        ++j;
        break;
      }
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  sub_mul(1, Monomial(num_vars()), g);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  Polynomial out = *this;
  out += g;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  Polynomial out = *this;
  out -= g;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_compatible(g);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : g.terms_) prod.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
  }
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back(Term{t.coeff * c, t.mono * m});
  return out;
}

void Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) {
  check_compatible(g);
  if (c == 0 || g.is_zero()) return;
  const OrderingSpec& ord = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial shifted;
  bool have_shifted = false;
  while (j < g.terms_.size()) {
    if (!have_shifted) {
      shifted = g.terms_[j].mono * m;
      have_shifted = true;
    }
    if (i == terms_.size()) {
      out.push_back(Term{-c * g.terms_[j].coeff, std::move(shifted)});
      have_shifted = false;
      ++j;
      continue;
    }
    switch (ord.compare_local(terms_[i].mono, shifted)) {
      case Cmp::Greater: out.push_back(std::move(terms_[i++])); break;
      case Cmp::Less:
        out.push_back(Term{-c * g.terms_[j].coeff, std::move(shifted)});
        have_shifted = false;
        ++j;
        break;
      case Cmp::Equal: {
        Rational v = terms_[i].coeff - c * g.terms_[j].coeff;
        if (v != 0) out.push_back(Term{std::move(v), std::move(terms_[i].mono)});
        have_shifted = false;
        ++i;
        ++j;
        break;
      }
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  terms_ = std::move(out);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / lead_coeff();
  return scaled(inv);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->var_names();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    const bool negative = sgn(t.coeff) < 0;
    Rational mag = abs(t.coeff);
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += t.mono.to_string(names);
    }
  }
  return out;
}

LeadingData leading_data(const Polynomial& f) {
  if (f.is_zero()) return LeadingData{kInfiniteOrder, Polynomial(f.ring()), std::nullopt};
  return LeadingData{f.order(), f.initial_form(), f.lead()};
}

LeadingData leading_data(const Polynomial& f, const Ring& ord) {
  return leading_data(f.with_ring(ord));
}

}  // namespace lsb
