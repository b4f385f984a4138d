#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hfp {

/// Cycle-type multiplicities (a_1, ..., a_n) with sum_i i * a_i = n.
struct Partition {
  std::vector<int> multiplicity;

  [[nodiscard]] int size() const { return static_cast<int>(multiplicity.size()); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Largest n accepted by the enumeration-based routines.
inline constexpr int kMaxEnumeratedDegree = 12;

/// Z_0, ..., Z_n of the symmetric-group cycle index at x = (x_1, ..., x_n),
/// from n Z_n = sum_{j=1}^{n} x_j Z_{n-j}, Z_0 = 1. O(n^2).
[[nodiscard]] std::vector<double> cycle_index_prefix(std::span<const double> x);

/// Same recursion writing into a caller-owned buffer of size x.size() + 1.
/// Used by the coefficient kernels to avoid per-node allocation.
void cycle_index_prefix_into(std::span<const double> x, std::span<double> out);

/// Z_n via the sum over cycle types. Exponential cost; oracle use only.
/// Throws ParameterError for n > kMaxEnumeratedDegree.
[[nodiscard]] double cycle_index_explicit(std::span<const double> x);

/// Every partition of n, ordered by ascending (a_n, a_{n-1}, ..., a_1),
/// i.e. partitions with small largest part first.
/// Throws ParameterError for n < 0 or n > kMaxEnumeratedDegree.
[[nodiscard]] std::vector<Partition> partitions_of(int n);

}  // namespace hfp
