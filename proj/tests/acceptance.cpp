#include <cstdio>
#include <exception>

#include "oracle/oracles.hpp"

int main() {
  int failed = 0;
  for (const auto& c : hfp::oracle::run_all_checks()) {
    std::printf("[%s] criterion %2d %s: %s\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
    if (!c.passed) ++failed;
  }
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
