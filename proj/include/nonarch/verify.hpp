#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nonarch {

struct SuiteResult {
  std::string suite;
  long instances = 0;
  long passed = 0;
  /// Messages of the first failing instances.
  std::vector<std::string> failures;

  bool ok() const { return passed == instances; }
};

/// polygon, division, preparation, hasse, nevanlinna, schnirelman.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws UnknownSuite.
std::vector<SuiteResult> verify(const std::string& suite, std::uint64_t seed);

}  // namespace nonarch
