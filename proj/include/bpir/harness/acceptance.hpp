#pragma once

#include <string>
#include <vector>

#include "bpir/pir/kernels.hpp"

namespace bpir::harness {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// The ten release criteria, in order. Each one catches its own exceptions and
// reports them as a failure.
std::vector<CriterionResult> run_acceptance(pir::ExecPolicy policy = pir::ExecPolicy::parallel);

// "PASS [3] title (0.01 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace bpir::harness
