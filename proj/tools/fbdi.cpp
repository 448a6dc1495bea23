#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fuzzybdi/bench.hpp"
#include "fuzzybdi/config.hpp"
#include "fuzzybdi/parser.hpp"
#include "fuzzybdi/report.hpp"

namespace fs = std::filesystem;
using namespace fbdi;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string cell_name(const BenchmarkConfig& c) {
  return c.scenario + "_" + to_string(c.mode) + "_k" + std::to_string(c.k) + "_" + to_string(c.style);
}

void save_program(const fs::path& dir, const BenchmarkConfig& c) {
  auto mode = mode_of(c.mode);
  if (!mode) return;
  write_text(dir / "programs" / (cell_name(c) + ".asl"),
             pretty_print(scenario_program(c.scenario, *mode, c.k, c.style).program));
}

int emit_report(const std::vector<BenchmarkSample>& samples, const fs::path& out, bool assert_ordering) {
  Report r = build_report(samples);
  write_text(out, r.markdown);
  fs::path csv = out;
  csv.replace_extension(".csv");
  write_text(csv, r.summary_csv);
  std::cout << "report: " << out.string() << " and " << csv.string() << "\n";
  for (const auto& v : r.verdicts) {
    if (!v.holds) std::cout << "ordering violated: " << v.property << " (" << v.scope << "): " << v.detail << "\n";
  }
  return assert_ordering && !r.ordering_ok() ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy BDI benchmark toolkit"};
  app.require_subcommand(1);

  BenchmarkConfig run_cfg;
  std::string run_mode = "boolean", run_style = "normal", run_out = "results", config_path;
  auto* run = app.add_subcommand("run", "Benchmark one scenario/mode/k/style cell");
  run->add_option("--scenario", run_cfg.scenario, "network-scaler, cleaning-robots or production-line")
      ->check(CLI::IsMember(scenario_ids()));
  run->add_option("--mode", run_mode, "direct, boolean, fuzzy-loose or fuzzy-tight");
  run->add_option("--k", run_cfg.k, "rule multiplier")->check(CLI::PositiveNumber);
  run->add_option("--style", run_style, "normal, nested, flat-first or nested-first");
  run->add_option("--cycles", run_cfg.cycles, "measured cycles per repetition");
  run->add_option("--reps", run_cfg.reps, "repetitions (at least 3)");
  run->add_option("--warmup", run_cfg.warmup, "discarded cycles per repetition");
  run->add_option("--seed", run_cfg.seed, "base seed");
  run->add_option("--out", run_out, "output directory");
  run->add_option("--config", config_path, "scenario config (JSON)");

  std::string report_in, report_out = "report.md";
  bool assert_ordering = false;
  auto* report = app.add_subcommand("report", "Summarise sample CSV files");
  report->add_option("--in", report_in, "directory with sample CSV files")->required();
  report->add_option("--out", report_out, "Markdown report path; a summary CSV is written next to it");
  report->add_flag("--assert-ordering", assert_ordering, "exit nonzero when an ordering property fails");

  std::string dump_path;
  auto* parse = app.add_subcommand("parse", "Parse an AgentSpeak file");
  parse->add_option("--dump", dump_path, "file to parse and pretty-print")->required();

  std::string matrix_config, matrix_out;
  auto* matrix = app.add_subcommand("matrix", "Run the full configured cross-product");
  matrix->add_option("--config", matrix_config, "scenario and matrix config (JSON)")->required();
  matrix->add_option("--out", matrix_out, "output directory (overrides the config)");
  matrix->add_flag("--assert-ordering", assert_ordering, "exit nonzero when an ordering property fails");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      ScenarioConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
      run_cfg.mode = parse_engine(run_mode);
      run_cfg.style = parse_chain_style(run_style);
      BenchmarkRun result = run_benchmark(cfg, run_cfg);
      fs::path dir(run_out);
      std::ostringstream csv;
      write_samples_csv(csv, result.samples);
      write_text(dir / (cell_name(run_cfg) + ".csv"), csv.str());
      save_program(dir, run_cfg);
      std::vector<double> values;
      for (const auto& s : result.samples) values.push_back(static_cast<double>(s.elapsed_ns));
      StatsSummary s = describe(values);
      std::cout << cell_name(run_cfg) << ": n=" << s.count << " mean=" << s.mean / 1e6 << " ms wcet=" << s.max / 1e6
                << " ms\n";
      return 0;
    }
    if (*report) {
      std::vector<BenchmarkSample> samples;
      for (const auto& entry : fs::directory_iterator(report_in)) {
        if (entry.path().extension() != ".csv") continue;
        std::ifstream in(entry.path());
        std::string header;
        if (!std::getline(in, header) || header != kSampleCsvHeader) continue;
        in.seekg(0);
        auto more = read_samples_csv(in);
        samples.insert(samples.end(), more.begin(), more.end());
      }
      if (samples.empty()) throw std::runtime_error("no sample CSV files in " + report_in);
      return emit_report(samples, report_out, assert_ordering);
    }
    if (*parse) {
      try {
        std::cout << pretty_print(parse_program(read_text(dump_path)));
      } catch (const SyntaxError& e) {
        std::cerr << dump_path << ": " << e.what() << "\n";
        return 1;
      }
      return 0;
    }
    if (*matrix) {
      ScenarioConfig cfg = load_config(matrix_config);
      const MatrixConfig& m = cfg.matrix;
      fs::path dir(matrix_out.empty() ? m.out : matrix_out);
      std::vector<BenchmarkSample> samples;
      for (const auto& scenario : m.scenarios) {
        for (const auto& mode : m.modes) {
          for (int k : m.ks) {
            for (const auto& style : m.styles) {
              BenchmarkConfig c{scenario, parse_engine(mode), k, parse_chain_style(style), m.cycles, m.reps,
                                m.warmup, m.seed};
              BenchmarkRun result = run_benchmark(cfg, c);
              save_program(dir, c);
              std::cout << cell_name(c) << ": wcet=" << result.wcet() / 1e6 << " ms\n";
              samples.insert(samples.end(), result.samples.begin(), result.samples.end());
            }
          }
        }
      }
      std::ostringstream csv;
      write_samples_csv(csv, samples);
      write_text(dir / "samples.csv", csv.str());
      return emit_report(samples, dir / "report.md", assert_ordering);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
