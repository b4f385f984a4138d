#include "hfp/combinatorics.hpp"

#include <cmath>
#include <string>

#include "hfp/error.hpp"
#include "hfp/summation.hpp"

namespace hfp {

void cycle_index_prefix_into(std::span<const double> x, std::span<double> out) {
  const std::size_t n = x.size();
  if (out.size() != n + 1) {
    throw ParameterError("cycle_index_prefix_into: output buffer must hold n+1 values");
  }
  out[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    CompensatedSum<double> acc;
    for (std::size_t j = 1; j <= k; ++j) {
      acc += x[j - 1] * out[k - j];
    }
    out[k] = acc.value() / static_cast<double>(k);
  }
}

std::vector<double> cycle_index_prefix(std::span<const double> x) {
  std::vector<double> z(x.size() + 1);
  cycle_index_prefix_into(x, z);
  return z;
}

namespace {

void check_enumerable(int n, const char* who) {
  if (n < 0 || n > kMaxEnumeratedDegree) {
    throw ParameterError(std::string(who) + ": n must lie in [0, " +
                         std::to_string(kMaxEnumeratedDegree) + "], got " + std::to_string(n));
  }
}

// Fills a_part, a_{part-1}, ..., a_2 in ascending order; a_1 takes the rest.
void enumerate(int part, int remaining, std::vector<int>& a, std::vector<Partition>& out) {
  if (part == 1) {
    a[0] = remaining;
    out.push_back(Partition{a});
    return;
  }
  for (int count = 0; count * part <= remaining; ++count) {
    a[part - 1] = count;
    enumerate(part - 1, remaining - count * part, a, out);
  }
  a[part - 1] = 0;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  check_enumerable(n, "partitions_of");
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  enumerate(n, n, a, out);
  return out;
}

double cycle_index_explicit(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  check_enumerable(n, "cycle_index_explicit");
  double total = 0.0;
  for (const Partition& part : partitions_of(n)) {
    double term = 1.0;
    for (int i = 1; i <= n; ++i) {
      const int a = part.multiplicity[static_cast<std::size_t>(i - 1)];
      // x_i^{a} / (i^{a} a!)
      for (int t = 1; t <= a; ++t) {
        term *= x[static_cast<std::size_t>(i - 1)] / (static_cast<double>(i) * t);
      }
    }
    total += term;
  }
  return total;
}

}  // namespace hfp
