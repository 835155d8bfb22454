#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lsb/monomial.hpp"

namespace lsb {

enum class Cmp { Less, Equal, Greater };

/// Global term ordering used to break ties between monomials of equal degree.
enum class TieBreak { Lex, DegLex, DegRevLex };

std::string_view to_string(TieBreak tb);
TieBreak parse_tie_break(std::string_view text);

class OrderingSpec;
/// Every polynomial carries a shared handle to the ordering it is sorted by.
using Ring = std::shared_ptr<const OrderingSpec>;

/// Local degree ordering: lower total degree is larger, equal degrees are
/// compared by the global ordering `tie_break` with variables ranked by
/// `precedence` (precedence[0] is the largest variable).
class OrderingSpec {
 public:
  OrderingSpec(std::vector<std::string> var_names, TieBreak tie_break,
               std::vector<std::size_t> precedence);

  /// Default: x > y > z, degrevlex tie-break.
  static Ring make(std::vector<std::string> var_names = {"x", "y", "z"},
                   TieBreak tie_break = TieBreak::DegRevLex,
                   std::vector<std::size_t> precedence = {});

  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& var_names() const noexcept { return names_; }
  TieBreak tie_break() const noexcept { return tie_break_; }
  const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }
  /// Position of variable `var` in the precedence list (0 = largest).
  std::size_t rank_of(std::size_t var) const { return rank_[var]; }
  /// Index of the variable called `name`, or num_vars() if unknown.
  std::size_t index_of(std::string_view name) const;

  /// The local ordering tau-bar.
  Cmp compare_local(const Monomial& a, const Monomial& b) const;
  /// The global tie-break ordering tau.
  Cmp compare_global(const Monomial& a, const Monomial& b) const;

  bool local_greater(const Monomial& a, const Monomial& b) const {
    return compare_local(a, b) == Cmp::Greater;
  }

  bool same_as(const OrderingSpec& other) const;

 private:
  Cmp compare_same_degree(const Monomial& a, const Monomial& b) const;

  std::vector<std::string> names_;
  TieBreak tie_break_;
  std::vector<std::size_t> precedence_;
  std::vector<std::size_t> rank_;
};

/// Free-function form of OrderingSpec::compare_local.
Cmp compare_local(const Monomial& a, const Monomial& b, const OrderingSpec& ord);

}  // namespace lsb
