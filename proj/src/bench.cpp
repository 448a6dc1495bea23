#include "fuzzybdi/bench.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

namespace fbdi {

const char* const kSampleCsvHeader = "scenario,mode,k,style,rep,cycle,elapsed_ns";

void BenchmarkConfig::validate() const {
  const auto& ids = scenario_ids();
  if (std::find(ids.begin(), ids.end(), scenario) == ids.end()) throw ScenarioError("unknown scenario " + scenario);
  if (k < 1) throw ScenarioError("rule multiplier must be at least 1");
  if (cycles < 1) throw ScenarioError("cycles must be at least 1");
  if (reps < 3) throw ScenarioError("repetitions must be at least 3");
  if (warmup < 0) throw ScenarioError("warmup must not be negative");
}

Nanos BenchmarkRun::wcet() const {
  Nanos w = 0;
  for (const auto& s : samples) w = std::max(w, s.elapsed_ns);
  return w;
}

BenchmarkRun run_benchmark(const ScenarioConfig& scenario, const BenchmarkConfig& config) {
  if (!std::chrono::steady_clock::is_steady) throw ClockUnavailable("no monotonic clock");
  config.validate();
  BenchmarkRun out;
  out.config = config;
  const long max_rounds = 1000L + 200L * (config.warmup + config.cycles);
  for (int rep = 0; rep < config.reps; ++rep) {
    std::uint64_t episode_seed = config.seed * 1000003ULL + static_cast<std::uint64_t>(rep) * 7919ULL;
    ScenarioRun run(scenario, {config.scenario, config.mode, config.k, config.style, episode_seed});
    int warm = 0, taken = 0;
    long rounds = 0;
    while (taken < config.cycles) {
      if (++rounds > max_rounds) {
        throw ScenarioError("measured controller of " + config.scenario + " stopped acting");
      }
      CycleReport r = run.step();
      if (r.perceived && r.acted()) {
        if (warm < config.warmup) {
          ++warm;
        } else {
          out.samples.push_back({config.scenario, to_string(config.mode), config.k, to_string(config.style), rep,
                                 taken, r.elapsed()});
          out.selections.push_back(run.rule_selections(r));
          out.trace.push_back(std::move(r.actions));
          ++taken;
        }
      }
      if (run.finished()) {
        run.reset(++episode_seed);
        ++out.episodes;
      }
    }
  }
  return out;
}

void write_samples_csv(std::ostream& out, const std::vector<BenchmarkSample>& samples, bool header) {
  if (header) out << kSampleCsvHeader << '\n';
  for (const auto& s : samples) {
    out << s.scenario << ',' << s.mode << ',' << s.k << ',' << s.style << ',' << s.rep << ',' << s.cycle << ','
        << s.elapsed_ns << '\n';
  }
}

std::vector<BenchmarkSample> read_samples_csv(std::istream& in) {
  std::vector<BenchmarkSample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kSampleCsvHeader) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string col; std::getline(ss, col, ',');) cols.push_back(col);
    if (cols.size() != 7) throw std::runtime_error("line " + std::to_string(line_no) + ": expected 7 columns");
    try {
      samples.push_back({cols[0], cols[1], std::stoi(cols[2]), cols[3], std::stoi(cols[4]), std::stoi(cols[5]),
                         std::stoll(cols[6])});
    } catch (const std::logic_error&) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": bad number");
    }
  }
  return samples;
}

}  // namespace fbdi
