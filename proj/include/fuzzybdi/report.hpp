#pragma once

#include <string>
#include <vector>

#include "fuzzybdi/bench.hpp"
#include "fuzzybdi/stats.hpp"

namespace fbdi {

struct GroupKey {
  std::string scenario;
  std::string mode;
  int k = 1;
  std::string style;

  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

struct GroupSummary {
  GroupKey key;
  StatsSummary stats;
};

/// Per (scenario, mode, k, style) statistics of elapsed_ns, sorted by key
/// with modes in abstraction order.
std::vector<GroupSummary> descriptive(const std::vector<BenchmarkSample>& samples);

struct OrderingVerdict {
  std::string property;
  std::string scope;
  bool holds = false;
  std::string detail;
};

struct Report {
  std::string markdown;
  std::string summary_csv;
  std::vector<OrderingVerdict> verdicts;

  bool ordering_ok() const;
};

/// Throws EmptyGroup when there are no samples.
Report build_report(const std::vector<BenchmarkSample>& samples, double alpha = 0.05);

}  // namespace fbdi
