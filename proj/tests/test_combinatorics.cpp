#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hfp/combinatorics.hpp"
#include "hfp/error.hpp"

using hfp::cycle_index_explicit;
using hfp::cycle_index_prefix;
using hfp::partitions_of;

TEST_CASE("prefix of the empty argument list is Z_0 = 1") {
  const auto z = cycle_index_prefix(std::vector<double>{});
  REQUIRE(z.size() == 1);
  CHECK(z[0] == 1.0);
}

TEST_CASE("prefix at x = (1, 2, 3, 4)") {
  const auto z = cycle_index_prefix(std::vector<double>{1, 2, 3, 4});
  REQUIRE(z.size() == 5);
  CHECK(z[0] == doctest::Approx(1.0));
  CHECK(z[1] == doctest::Approx(1.0));
  CHECK(z[2] == doctest::Approx(1.5));
  CHECK(z[3] == doctest::Approx(13.0 / 6.0));
  CHECK(z[4] == doctest::Approx(73.0 / 24.0));
}

TEST_CASE("explicit partition formula") {
  CHECK(cycle_index_explicit(std::vector<double>{3, 5}) == doctest::Approx(7.0));
  CHECK(cycle_index_explicit(std::vector<double>{1, 2, 3, 4}) == doctest::Approx(73.0 / 24.0));
  CHECK(cycle_index_explicit(std::vector<double>(6, 0.0)) == 0.0);
  CHECK(cycle_index_explicit(std::vector<double>{}) == 1.0);
  CHECK_THROWS_AS((void)cycle_index_explicit(std::vector<double>(13, 1.0)), hfp::ParameterError);
}

TEST_CASE("all-ones arguments give 1 in both forms") {
  for (int n = 0; n <= 20; ++n) {
    const std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    for (double z : cycle_index_prefix(ones)) CHECK(std::abs(z - 1.0) <= 1e-14);
    if (n <= hfp::kMaxEnumeratedDegree) CHECK(std::abs(cycle_index_explicit(ones) - 1.0) <= 1e-15);
  }
}

TEST_CASE("recursion agrees with the partition sum on random arguments") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (double& v : x) v = unif(rng);
      const double e = cycle_index_explicit(x);
      CHECK(std::abs(cycle_index_prefix(x).back() - e) <= 1e-12 * (1.0 + std::abs(e)));
    }
  }
}

TEST_CASE("homogeneity under x_i -> t^i x_i") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> scaled(static_cast<std::size_t>(n));
    double t = 1.0;
    for (int i = 0; i < n; ++i) {
      t *= 2.0;
      x[static_cast<std::size_t>(i)] = unif(rng);
      scaled[static_cast<std::size_t>(i)] = t * x[static_cast<std::size_t>(i)];
    }
    const double z = cycle_index_prefix(x).back();
    const double zs = cycle_index_prefix(scaled).back();
    CHECK(std::abs(zs - std::ldexp(z, n)) <= 1e-12 * (1.0 + std::abs(zs)));
  }
}

TEST_CASE("partitions of small n") {
  const auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].multiplicity.empty());

  const auto p4 = partitions_of(4);
  const std::vector<std::vector<int>> expected{{4, 0, 0, 0}, {2, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}};
  REQUIRE(p4.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(p4[i].multiplicity == expected[i]);

  CHECK(partitions_of(7).size() == 15);
  CHECK(partitions_of(12).size() == 77);
  CHECK_THROWS_AS((void)partitions_of(13), hfp::ParameterError);
  CHECK_THROWS_AS((void)partitions_of(-1), hfp::ParameterError);
}

TEST_CASE("every enumerated partition sums to n and appears once") {
  for (int n = 1; n <= 12; ++n) {
    const auto parts = partitions_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      int total = 0;
      for (int k = 0; k < n; ++k) total += (k + 1) * parts[i].multiplicity[static_cast<std::size_t>(k)];
      CHECK(total == n);
      for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK_FALSE(parts[i] == parts[j]);
    }
  }
}
