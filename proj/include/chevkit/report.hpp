#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chevkit {

struct Failure {
  std::string context;
  std::string expected;
  std::string actual;
};

/// Outcome of one verification suite. Failure witnesses are stored up to a
/// cap; failure_count always reflects the true total.
struct VerificationReport {
  static constexpr std::size_t kMaxStoredFailures = 32;

  std::string suite;
  long long checks = 0;
  long long failure_count = 0;
  std::vector<Failure> failures;
  double seconds = 0.0;

  bool ok() const { return failure_count == 0; }

  void add_failure(std::string context, std::string expected, std::string actual) {
    ++failure_count;
    if (failures.size() < kMaxStoredFailures)
      failures.push_back({std::move(context), std::move(expected), std::move(actual)});
  }

  /// Associative merge used when suites are partitioned across workers.
  void merge(const VerificationReport& other) {
    checks += other.checks;
    failure_count += other.failure_count;
    for (const auto& f : other.failures)
      if (failures.size() < kMaxStoredFailures) failures.push_back(f);
  }

  std::string summary() const;
};

}  // namespace chevkit
