#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ontomatch/matrix.hpp"

namespace ontomatch {

/// Weights closer than this (relative to max(1, largest |weight|)) count as equal.
inline constexpr double kTieTolerance = 1e-12;

struct Assignment {
    /// (row, column) pairs sorted by row; no row or column repeats.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    /// Sum of the matched weights, accumulated in pair order.
    double total_weight = 0.0;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Maximum-weight matching of cardinality min(m, n) via Kuhn-Munkres.
///
/// Rectangular inputs are padded to square with zero-weight dummies which
/// never appear in the result. Among optimal matchings the one whose sorted
/// pair list is lexicographically smallest is returned.
///
/// Throws Error(EmptyMatrix) or Error(NonFiniteValue).
Assignment kuhn_munkres(const Matrix<double>& values);

} // namespace ontomatch
