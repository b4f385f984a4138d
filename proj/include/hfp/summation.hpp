#pragma once

#include <cmath>

namespace hfp {

/// Neumaier's variant of Kahan summation. Keeps a running compensation so
/// that sums of alternating terms lose O(eps) rather than O(n eps).
template <typename T>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(T init) : sum_(init) {}

  constexpr void add(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  constexpr CompensatedSum& operator+=(T x) {
    add(x);
    return *this;
  }

  [[nodiscard]] constexpr T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

}  // namespace hfp
