#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lsb/errors.hpp"
#include "lsb/monomial_ideal.hpp"
#include "lsb/polynomial.hpp"

namespace lsb {

enum class PairOutcome { Zero, NewElement, ProductCriterion, ChainCriterion, BeyondTruncation };

std::string_view to_string(PairOutcome outcome);

/// One processed (or skipped) S-pair, in processing order.
struct PairRecord {
  std::size_t first;
  std::size_t second;
  Monomial lcm;
  PairOutcome outcome;
  std::size_t added = 0;  // index of the new generator for NewElement
  std::size_t steps = 0;  // reduction steps spent on this pair
};

struct StandardBasisOptions {
  bool chain_criterion = false;
  std::size_t max_pairs = 100'000;
  std::size_t max_steps = 1'000'000;
  /// Run every normal form with a tracked certificate and check it.
  bool verify_divisions = false;
};

struct StandardBasis {
  std::vector<Polynomial> generators;
  MonomialIdeal leading_ideal;
  std::vector<Polynomial> initial_forms;
  std::vector<PairRecord> pair_log;
  std::size_t total_steps = 0;
  std::size_t verified_divisions = 0;
};

/// Thrown when a watchdog bound trips; carries the pairs processed so far.
class StandardBasisLimitError : public ResourceError {
 public:
  StandardBasisLimitError(const std::string& what, std::vector<PairRecord> log)
      : ResourceError(what), log_(std::move(log)) {}
  const std::vector<PairRecord>& partial_log() const noexcept { return log_; }

 private:
  std::vector<PairRecord> log_;
};

/// Buchberger's algorithm with Mora's normal form, for the local ordering of
/// the inputs' ring. Pairs are taken by the normal strategy: the lcm of the
/// leading monomials that is largest under the local ordering first, ties by
/// creation order. Pairs with coprime leading monomials are skipped.
StandardBasis standard_basis(std::span<const Polynomial> generators,
                             const StandardBasisOptions& options = {});

/// Standard basis of (generators) + m^(degree+1), with every polynomial kept
/// modulo m^(degree+1). The leading ideal and initial forms agree with those
/// of the untruncated ideal in all degrees <= degree; the generators
/// themselves are truncations, not elements of the ideal.
StandardBasis truncated_standard_basis(std::span<const Polynomial> generators, int degree,
                                       const StandardBasisOptions& options = {});

/// Buchberger criterion re-checked from scratch: every S-pair of `gens` has
/// weak normal form zero.
bool is_standard_basis(std::span<const Polynomial> gens, std::size_t max_steps = 1'000'000);

/// Minimal generators of the leading monomials of `gens`.
MonomialIdeal leading_ideal_of(std::span<const Polynomial> gens);

}  // namespace lsb
