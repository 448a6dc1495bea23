#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzybdi/config.hpp"
#include "fuzzybdi/scenario.hpp"

namespace fbdi {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClockUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchmarkConfig {
  std::string scenario = "production-line";
  Engine mode = Engine::Boolean;
  int k = 1;
  ChainStyle style = ChainStyle::Normal;
  int cycles = 100;
  int reps = 3;
  int warmup = 50;
  std::uint64_t seed = 1;

  /// Throws ScenarioError.
  void validate() const;
};

/// One timed sense-to-act window of the measured controller.
struct BenchmarkSample {
  std::string scenario;
  std::string mode;
  int k = 1;
  std::string style;
  int rep = 0;
  int cycle = 0;
  Nanos elapsed_ns = 0;
};

struct BenchmarkRun {
  BenchmarkConfig config;
  std::vector<BenchmarkSample> samples;
  /// Actions of each sampled cycle, in sample order.
  std::vector<std::vector<Term>> trace;
  /// Table-row selections of each sampled cycle.
  std::vector<std::size_t> selections;
  /// Episodes completed and restarted while sampling.
  int episodes = 0;

  Nanos wcet() const;
};

/// Runs `reps` independent episodes of `cycles` samples each after `warmup`
/// discarded samples. A sample is a measured-controller cycle that perceived
/// and acted; finished episodes restart with a fresh seed.
BenchmarkRun run_benchmark(const ScenarioConfig& scenario, const BenchmarkConfig& config);

extern const char* const kSampleCsvHeader;
void write_samples_csv(std::ostream& out, const std::vector<BenchmarkSample>& samples, bool header = true);
/// Throws std::runtime_error on malformed rows.
std::vector<BenchmarkSample> read_samples_csv(std::istream& in);

}  // namespace fbdi
