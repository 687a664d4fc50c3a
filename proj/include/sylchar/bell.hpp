#pragma once

#include <vector>

#include "sylchar/numbers.hpp"

namespace sylchar::combinat {

inline constexpr int kMaxBellDegree = 12;

/// Value of the m-th complete Bell polynomial B_m(x_1,...,x_m), computed as
/// the sum over set partitions of [m] of the product of x_{|block|}.
/// This is the production path; the determinantal form below must agree.
Rational complete_bell(int m, const std::vector<Rational>& xs);

/// Same value via the determinant of the m x m matrix with x_{j+1}/j! on and
/// above the diagonal and -(i-1) on the subdiagonal.
Rational complete_bell_determinant(int m, const std::vector<Rational>& xs);

/// Sum over all set partitions sigma of [n] of (-1)^{|sigma|} (|sigma|-1)!.
/// Vanishes for every n >= 2; equals -1 at n = 1. Stirling-triangle path.
BigInt signed_partition_sum(int n);

/// The same sum by direct enumeration of partitions (test oracle).
BigInt signed_partition_sum_enumerated(int n);

/// Stirling numbers of the second kind S(n, j), 0 <= j <= n.
std::vector<BigInt> stirling_second_row(int n);

}  // namespace sylchar::combinat
