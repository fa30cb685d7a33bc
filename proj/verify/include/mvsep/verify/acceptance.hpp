#ifndef MVSEP_VERIFY_ACCEPTANCE_HPP_
#define MVSEP_VERIFY_ACCEPTANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mvsep::verify {

struct VerifyOptions {
  std::uint64_t seed = 0x5eed'0f'5e9a'ab1eULL;
  /// Caps the carrier-size sweeps (criteria 1, 6, 7, 9) below their defaults.
  std::optional<std::uint64_t> maxSize;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t cases = 0;
  double seconds = 0.0;
  std::string detail;  // first failure, or a short summary
};

std::vector<int> criterionIds();
CriterionResult runCriterion(int id, const VerifyOptions& options);
std::vector<CriterionResult> runAll(const VerifyOptions& options);

}  // namespace mvsep::verify

#endif  // MVSEP_VERIFY_ACCEPTANCE_HPP_
