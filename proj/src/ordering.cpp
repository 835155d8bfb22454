#include "lsb/ordering.hpp"

#include <algorithm>
#include <numeric>

#include "lsb/errors.hpp"

namespace lsb {

std::string_view to_string(TieBreak tb) {
  switch (tb) {
    case TieBreak::Lex: return "lex";
    case TieBreak::DegLex: return "deglex";
    case TieBreak::DegRevLex: return "degrevlex";
  }
  return "?";
}

TieBreak parse_tie_break(std::string_view text) {
  if (text == "lex") return TieBreak::Lex;
  if (text == "deglex") return TieBreak::DegLex;
  if (text == "degrevlex") return TieBreak::DegRevLex;
  throw UsageError("unknown tie-break ordering '" + std::string(text) +
                   "' (expected lex, deglex or degrevlex)");
}

OrderingSpec::OrderingSpec(std::vector<std::string> var_names, TieBreak tie_break,
                           std::vector<std::size_t> precedence)
    : names_(std::move(var_names)), tie_break_(tie_break), precedence_(std::move(precedence)) {
  if (names_.empty()) throw UsageError("an ordering needs at least one variable");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw UsageError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw UsageError("duplicate variable name '" + names_[i] + "'");
    }
  }
  if (precedence_.empty()) {
    precedence_.resize(names_.size());
    std::iota(precedence_.begin(), precedence_.end(), std::size_t{0});
  }
  if (precedence_.size() != names_.size()) {
    throw UsageError("precedence must list every variable exactly once");
  }
  rank_.assign(names_.size(), names_.size());
  for (std::size_t r = 0; r < precedence_.size(); ++r) {
    const std::size_t v = precedence_[r];
    if (v >= names_.size() || rank_[v] != names_.size()) {
      throw UsageError("precedence is not a permutation of the variables");
    }
    rank_[v] = r;
  }
}

Ring OrderingSpec::make(std::vector<std::string> var_names, TieBreak tie_break,
                        std::vector<std::size_t> precedence) {
  return std::make_shared<const OrderingSpec>(std::move(var_names), tie_break,
                                              std::move(precedence));
}

std::size_t OrderingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return names_.size();
}

Cmp OrderingSpec::compare_same_degree(const Monomial& a, const Monomial& b) const {
  if (tie_break_ == TieBreak::DegRevLex) {
    // the smaller exponent in the last differing (smallest) variable wins
    for (std::size_t r = precedence_.size(); r-- > 0;) {
      const std::size_t v = precedence_[r];
      if (a[v] != b[v]) return a[v] < b[v] ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
  }
  for (std::size_t v : precedence_) {
    if (a[v] != b[v]) return a[v] > b[v] ? Cmp::Greater : Cmp::Less;
  }
  return Cmp::Equal;
}

Cmp OrderingSpec::compare_global(const Monomial& a, const Monomial& b) const {
  if (a.num_vars() != num_vars() || b.num_vars() != num_vars()) {
    throw UsageError("monomial arity does not match the ordering");
  }
  if (tie_break_ == TieBreak::Lex) {
    for (std::size_t v : precedence_) {
      if (a[v] != b[v]) return a[v] > b[v] ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? Cmp::Greater : Cmp::Less;
  return compare_same_degree(a, b);
}

Cmp OrderingSpec::compare_local(const Monomial& a, const Monomial& b) const {
  if (a.num_vars() != num_vars() || b.num_vars() != num_vars()) {
    throw UsageError("monomial arity does not match the ordering");
  }
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? Cmp::Greater : Cmp::Less;
  // lex and deglex agree on monomials of equal degree
  return compare_same_degree(a, b);
}

bool OrderingSpec::same_as(const OrderingSpec& other) const {
  return names_ == other.names_ && tie_break_ == other.tie_break_ &&
         precedence_ == other.precedence_;
}

Cmp compare_local(const Monomial& a, const Monomial& b, const OrderingSpec& ord) {
  return ord.compare_local(a, b);
}

}  // namespace lsb
