#include <cstdio>

#include "bpir/harness/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : bpir::harness::run_acceptance()) {
    std::printf("%s\n", bpir::harness::format_result(r).c_str());
    failed += !r.passed;
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
