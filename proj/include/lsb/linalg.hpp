#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lsb/polynomial.hpp"

namespace lsb {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {v : m v = 0}; `cols` is needed when m has no rows.
RationalMatrix nullspace(RationalMatrix m, std::size_t cols);

/// Some solution of m v = rhs, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(RationalMatrix m, const std::vector<Rational>& rhs);

}  // namespace lsb
