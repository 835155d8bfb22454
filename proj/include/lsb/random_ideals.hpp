#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lsb/families.hpp"
#include "lsb/polynomial.hpp"

namespace lsb {

/// Shape of a random tail: 1..max_terms terms with degrees in
/// [min_order, max_degree] and nonzero integer coefficients in [-height, height].
struct TailSpec {
  int min_order = 3;
  int max_degree = 8;
  int height = 5;
  int max_terms = 4;
};

/// Independent stream for instance `index` of a run seeded with `seed`.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

/// Random polynomial in the variables `vars` of `ring`; never zero.
Polynomial random_tail(std::mt19937_64& rng, const Ring& ring, const std::vector<std::size_t>& vars,
                       const TailSpec& spec);

/// (x^2 + t1, x*y^(b-1) + t2) with tails of order >= max(spec.min_order, b+1).
/// Pairs whose generators share a monomial factor are drawn again.
std::vector<Polynomial> random_type2b_pair(std::mt19937_64& rng, const Ring& ring, int b,
                                           const TailSpec& spec = {});

/// Admissible parameters for the square-free family: d, alpha, beta, F and r
/// are drawn first, then e = order(W) + 2 and s >= e-1. Draws again until
/// e <= max_e.
SquareFreeFamilyParams random_square_free_params(std::mt19937_64& rng, const Ring& ring,
                                                 int max_e = 10, const TailSpec& spec = {});

}  // namespace lsb
