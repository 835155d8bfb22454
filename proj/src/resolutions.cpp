#include "lsb/resolutions.hpp"

#include <algorithm>

#include "lsb/errors.hpp"
#include "lsb/hilbert.hpp"

namespace lsb {
namespace {

/// Rank (1-based) of the lowest-ranked variable dividing u, 0 for u = 1.
int max_rank(const Monomial& u, const OrderingSpec& ord) {
  int best = 0;
  for (std::size_t v = 0; v < u.num_vars(); ++v) {
    if (u[v] > 0) best = std::max(best, static_cast<int>(ord.rank_of(v)) + 1);
  }
  return best;
}

}  // namespace

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, rank] : entries) {
    if (rank > 0) pd = std::max(pd, key.first);
  }
  return pd;
}

long BettiTable::at(int i, int j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::vector<long> BettiTable::k_polynomial() const {
  std::vector<long> out;
  for (const auto& [key, rank] : entries) {
    const auto [i, j] = key;
    if (static_cast<int>(out.size()) <= j) out.resize(static_cast<std::size_t>(j) + 1, 0);
    out[static_cast<std::size_t>(j)] += (i % 2 == 0 ? rank : -rank);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<int> BettiTable::shifts(int i) const {
  std::vector<int> out;
  for (const auto& [key, rank] : entries) {
    if (key.first != i) continue;
    for (long r = 0; r < rank; ++r) out.push_back(key.second);
  }
  return out;
}

std::string BettiTable::to_string() const {
  std::string out = "0";
  for (int i = projective_dimension(); i >= 0; --i) {
    std::string module;
    for (const auto& [key, rank] : entries) {
      if (key.first != i || rank == 0) continue;
      if (!module.empty()) module += " + ";
      module += key.second == 0 ? "P" : "P(-" + std::to_string(key.second) + ")";
      if (rank > 1) module += "^" + std::to_string(rank);
    }
    out += " -> " + module;
  }
  return out;
}

bool is_stable(const MonomialIdeal& ideal) {
  const OrderingSpec& ord = *ideal.ring();
  for (const Monomial& u : ideal.min_gens()) {
    const int m = max_rank(u, ord);
    if (m <= 1) continue;
    const std::size_t xm = ord.precedence()[static_cast<std::size_t>(m - 1)];
    const Monomial base = u / Monomial::variable(u.num_vars(), xm);
    for (int r = 0; r < m - 1; ++r) {
      const std::size_t xi = ord.precedence()[static_cast<std::size_t>(r)];
      if (!ideal.contains(base * Monomial::variable(u.num_vars(), xi))) return false;
    }
  }
  return true;
}

BettiTable ek_betti(const MonomialIdeal& ideal) {
  if (!is_stable(ideal)) {
    throw UsageError("Eliahou-Kervaire needs a stable monomial ideal; check is_stable first");
  }
  BettiTable table;
  table.entries[{0, 0}] = 1;
  const OrderingSpec& ord = *ideal.ring();
  for (const Monomial& u : ideal.min_gens()) {
    const int m = max_rank(u, ord);
    const int d = u.degree();
    for (int i = 0; i <= m - 1; ++i) {
      // ideal-level (i, d+i) is quotient-level (i+1, d+i)
      table.entries[{i + 1, d + i}] += binomial(m - 1, i);
    }
  }
  return table;
}

bool k_polynomial_consistent(const BettiTable& table, const MonomialIdeal& ideal) {
  const std::vector<long> kp = table.k_polynomial();
  // the K-polynomial of P/J has degree at most deg lcm(J) <= sum of generator degrees
  int bound = 2;
  for (const Monomial& g : ideal.min_gens()) bound += g.degree();
  bound = std::max(bound, static_cast<int>(kp.size()) + 2);
  const HilbertFunction hf = hilbert_function(ideal, bound);
  const HilbertSeries hs = hilbert_series(hf, static_cast<int>(ideal.num_vars()));
  return hs.numerator == kp;
}

}  // namespace lsb
