#include "lsb/monomial_ideal.hpp"

#include <algorithm>

#include "lsb/errors.hpp"

namespace lsb {

bool canonical_monomial_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
  for (const Monomial& m : generators) {
    if (m.num_vars() != ring_->num_vars()) throw UsageError("monomial ideal arity mismatch");
  }
  std::sort(generators.begin(), generators.end(), canonical_monomial_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // a divisor always sorts before its proper multiples
  for (Monomial& m : generators) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                       [&m](const Monomial& g) { return g.divides(m); });
    if (!redundant) gens_.push_back(std::move(m));
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&m](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::max_degree() const noexcept {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

long MonomialIdeal::count_in_degree(int d) const {
  long count = 0;
  for (const Monomial& m : monomials_of_degree(num_vars(), d)) {
    if (contains(m)) ++count;
  }
  return count;
}

std::vector<Monomial> MonomialIdeal::saturation_gap() const {
  const std::size_t n = num_vars();
  // an exponent at or above the largest one among the generators can be
  // lowered without changing membership, so gap elements live in this box
  std::vector<int> bound(n, 0);
  for (const Monomial& g : gens_) {
    for (std::size_t v = 0; v < n; ++v) bound[v] = std::max(bound[v], g[v]);
  }
  std::vector<Monomial> gap;
  if (n == 0 || std::count(bound.begin(), bound.end(), 0) > 0) return gap;
  std::vector<int> e(n, 0);
  for (;;) {
    const Monomial m(e);
    if (!contains(m)) {
      bool killed = true;
      for (std::size_t v = 0; v < n && killed; ++v) {
        killed = contains(m * Monomial::variable(n, v, bound[v]));
      }
      if (killed) gap.push_back(m);
    }
    std::size_t v = 0;
    while (v < n && ++e[v] == bound[v]) e[v++] = 0;
    if (v == n) break;
  }
  std::sort(gap.begin(), gap.end(), canonical_monomial_less);
  return gap;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string(ring_->var_names());
  }
  if (gens_.empty()) out += "0";
  return out + ")";
}

}  // namespace lsb
