#ifndef SP4_SELFTEST_HPP
#define SP4_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sp4 {

struct CriterionResult {
  int number;
  std::string name;
  bool passed;
  std::string detail;
};

/// Acceptance criteria 1..8 at their pinned tolerances. Deterministic for a
/// fixed seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// Runs one criterion (1..8); number out of range throws.
CriterionResult run_criterion(int number, std::uint64_t seed);

/// Writes the machine-readable artifact set (reports + plot-ready tables)
/// into dir; byte-identical for identical (seed, thread-count-independent)
/// configuration.
void write_selftest_artifacts(const std::string& dir, std::uint64_t seed,
                              const std::vector<CriterionResult>& results);

std::string criterion_line(const CriterionResult& r);

}  // namespace sp4

#endif
