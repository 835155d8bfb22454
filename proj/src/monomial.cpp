#include "lsb/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "lsb/errors.hpp"

namespace lsb {
namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw UsageError("monomial arity mismatch: " + std::to_string(a.num_vars()) +
                     " vs " + std::to_string(b.num_vars()));
  }
}

void fill_degree(std::vector<Monomial>& out, std::vector<int>& exps,
                 std::size_t var, int remaining) {
  if (var + 1 == exps.size()) {
    exps[var] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    fill_degree(out, exps, var + 1, remaining - e);
  }
}

}  // namespace

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw UsageError("negative exponent in monomial");
  }
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t var, int power) {
  if (var >= num_vars) throw UsageError("variable index out of range");
  std::vector<int> exps(num_vars, 0);
  exps[var] = power;
  return Monomial(std::move(exps));
}

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_arity(*this, other);
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  out.degree_ += other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw UsageError("monomial division is not exact");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  out.degree_ -= divisor.degree_;
  return out;
}

int Monomial::max_variable() const noexcept {
  for (std::size_t i = exps_.size(); i-- > 0;) {
    if (exps_[i] > 0) return static_cast<int>(i);
  }
  return -1;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<int> exps(a.num_vars());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(a[i], b[i]);
  return Monomial(std::move(exps));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<int> exps(a.num_vars());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(a[i], b[i]);
  return Monomial(std::move(exps));
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree) {
  std::vector<Monomial> out;
  if (num_vars == 0 || degree < 0) {
    if (num_vars == 0 && degree == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> exps(num_vars, 0);
  fill_degree(out, exps, 0, degree);
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace lsb
