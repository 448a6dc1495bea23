// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzybdi/agent.hpp"
#include "fuzzybdi/bench.hpp"
#include "fuzzybdi/fuzzy.hpp"
#include "fuzzybdi/parser.hpp"
#include "fuzzybdi/ruleset.hpp"
#include "fuzzybdi/scenario.hpp"
#include "fuzzybdi/stats.hpp"

using namespace fbdi;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("violated: " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome parser_corpus() {
  Outcome o;
  const char* listings[] = {"fan_tight.asl",       "fan_loose.asl",      "fan_boolean.asl", "scaler_isit_rule.asl",
                            "scaler_fuzzy.asl",    "scaler_boolean.asl", "robots_fuzzy.asl", "robots_boolean.asl",
                            "line_fuzzy.asl",      "line_wcet_chain.asl"};
  std::vector<std::string> texts;
  for (const char* name : listings) texts.push_back(read_file(std::string(FBDI_DATA_DIR) + "/listings/" + name));
  auto t0 = Clock::now();
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      Program p = parse_program(texts[i]);
      std::string printed = pretty_print(p);
      Program again = parse_program(printed);
      o.check(again == p && pretty_print(again) == printed, std::string(listings[i]) + " round trip");
    } catch (const std::exception& e) {
      o.check(false, std::string(listings[i]) + ": " + e.what());
    }
  }
  double s = seconds_since(t0);
  o.check(s < 1.0, "runtime under 1 s");
  o.note(std::to_string(texts.size()) + " listings, " + fmt("%.4f s", s));
  return o;
}

LinguisticVariable temp_variable() {
  return {"temp",
          0,
          40,
          {{"cold", MembershipFunction::triangular(0, 0, 20)},
           {"warm", MembershipFunction::triangular(10, 22, 34)},
           {"hot", MembershipFunction::triangular(25, 40, 40)}}};
}

class FanEnv : public Environment {
 public:
  explicit FanEnv(double temp) : temp_(temp) {}
  Percept perceive(const std::string&) override { return {{{"temp", temp_}}, {}}; }
  void act(const std::string&, const Term& action) override { actions.push_back(action); }
  bool is_sensing(const std::string&, const std::string& name) const override {
    return name == "senseEnv" || name == "sampleSensorData";
  }
  std::vector<Term> actions;

 private:
  double temp_;
};

/// The tight fan program with the per-label thresholds of the loose and
/// Boolean listings (cold 450, warm 650, hot 750).
const char* kTightFan =
    "!sense.\n"
    "+!sense: true <- senseEnv; !keepCool[fuzzy].\n"
    "+!keepCool[fuzzy]:temp(warm) <- fanAction(650)[fuzzy].\n"
    "+!keepCool[fuzzy]:temp(cold) <- fanAction(450)[fuzzy].\n"
    "+!keepCool[fuzzy]:temp(hot)  <- fanAction(750)[fuzzy].\n";

double fan_value(const std::string& source, Mode mode) {
  FanEnv env(18);
  Agent agent("fan", parse_program(source), env, {mode, {temp_variable()}, {}});
  for (int i = 0; i < 4 && env.actions.empty(); ++i) agent.cycle();
  if (env.actions.size() != 1 || env.actions[0].functor() != "fanAction") return NAN;
  return env.actions[0].arg(0).number();
}

Outcome fan_golden() {
  Outcome o;
  const double expected = 650.0 * 2.0 / 3.0;
  auto listing = [](const char* name) { return read_file(std::string(FBDI_DATA_DIR) + "/listings/" + name); };
  double tight = fan_value(kTightFan, Mode::FuzzyTight);
  double loose = fan_value(listing("fan_loose.asl"), Mode::FuzzyLoose);
  double boolean = fan_value(listing("fan_boolean.asl"), Mode::Boolean);
  o.check(std::fabs(tight - expected) <= 1e-6, "tight emits 650 x warm degree");
  o.check(std::fabs(loose - tight) <= 1e-9, "loose emits the tight value");
  o.check(boolean == 650.0, "boolean emits 650");
  o.note(fmt("tight %.9f", tight) + fmt(", loose %.9f", loose) + fmt(", boolean %.1f", boolean));
  return o;
}

Outcome mode_equivalence() {
  Outcome o;
  ScenarioConfig cfg = default_config();
  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  for (const std::string& id : scenario_ids()) {
    const auto& vars = cfg.variables_for(id);
    RuleTable table = load_ruleset(id);
    DecisionProbe direct(cfg, id, Engine::Direct), boolean(cfg, id, Engine::Boolean),
        loose(cfg, id, Engine::FuzzyLoose), tight(cfg, id, Engine::FuzzyTight);
    int row_mismatch = 0, uncovered = 0, uncovered_mismatch = 0, value_mismatch = 0, bd_mismatch = 0;
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      std::vector<double> values;
      for (const std::string& name : table.variables) {
        for (const auto& v : vars) {
          if (v.name == name) values.push_back(std::uniform_real_distribution<double>(v.lo, v.hi)(rng));
        }
      }
      Decision dd = direct.decide(values), db = boolean.decide(values);
      Decision dl = loose.decide(values), dt = tight.decide(values);
      bd_mismatch += dd.row != db.row;
      bool covered = dd.row >= 0;
      uncovered += !covered;
      if (dl.row != dt.row || dl.label != dt.label) {
        (covered ? row_mismatch : uncovered_mismatch)++;
        continue;
      }
      if (dl.value.has_value() != dt.value.has_value()) {
        ++value_mismatch;
      } else if (dl.value) {
        double diff = std::fabs(*dl.value - *dt.value);
        worst = std::max(worst, diff);
        value_mismatch += diff > 1e-9;
      }
    }
    o.check(bd_mismatch == 0, id + ": boolean and direct rows (" + std::to_string(bd_mismatch) + " differ)");
    o.check(row_mismatch == 0, id + ": tight and loose rows on covered inputs (" + std::to_string(row_mismatch) + " differ)");
    o.check(uncovered_mismatch == 0, id + ": tight and loose on inputs matching no row (" +
                                         std::to_string(uncovered_mismatch) + " of " + std::to_string(uncovered) +
                                         " differ; tight fires its best-degree row, loose takes the fallback)");
    o.check(value_mismatch == 0, id + ": scaled values (" + std::to_string(value_mismatch) + " differ)");
    o.note(id + ": 10000 inputs, " + std::to_string(uncovered) + " match no row" + fmt(", max value diff %.3g", worst));
  }
  double s = seconds_since(t0);
  o.check(s < 30.0, "runtime under 30 s");
  o.note(fmt("%.2f s", s));
  return o;
}

int run_until_finished(ScenarioRun& run, int max_rounds, int& failures) {
  for (int i = 0; i < max_rounds; ++i) {
    run.step();
    for (const CycleReport& r : run.last_round()) failures += static_cast<int>(r.failures.size());
    if (run.finished()) return i + 1;
  }
  return -1;
}

const Engine kEngines[] = {Engine::Direct, Engine::Boolean, Engine::FuzzyLoose, Engine::FuzzyTight};

Outcome scenario_behaviour() {
  Outcome o;
  ScenarioConfig cfg = default_config();
  for (Engine e : kEngines) {
    int done = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      ScenarioRun run(cfg, {"cleaning-robots", e, 1, ChainStyle::Normal, seed * 37});
      int failures = 0;
      bool ok = run_until_finished(run, 5000, failures) > 0 && failures == 0;
      done += ok;
      o.check(ok, std::string("robots ") + to_string(e) + " seed " + std::to_string(seed * 37));
    }
    o.note(std::string("robots ") + to_string(e) + ": " + std::to_string(done) + "/20 seeds terminated");
  }
  for (Engine e : kEngines) {
    ScenarioRun run(cfg, {"production-line", e, 1, ChainStyle::Normal, 5});
    int failures = 0;
    int rounds = run_until_finished(run, 5000, failures);
    const std::string tag = std::string("line ") + to_string(e);
    o.check(rounds > 0 && failures == 0, tag + " finished without failures");
    // Let the last messages reach the push and build agents.
    for (int i = 0; i < 5; ++i) run.step();
    const ProductionLineEnv& env = *run.line_env();
    o.check(env.labelled() == 200, tag + " labelled 200 products");
    int reds = 0;
    bool once = true;
    for (const auto& p : env.products()) {
      once &= p.routed == 1;
      reds += p.route == ProductionLineEnv::Route::Build;
    }
    o.check(once, tag + " routes every product exactly once");
    o.check(env.pushed() == 200 - reds, tag + " pushes every non-red product");
    o.check(env.built() + static_cast<int>(env.build_queue()) == reds, tag + " builds every red product");
    const auto& log = env.press_log();
    // An odd last red product waits pressed once for its partner.
    bool cycle = log.size() == static_cast<std::size_t>(3 * (reds / 2) + reds % 2);
    const char* expected[] = {"pressOnce", "pressTwice", "ejectProduct"};
    for (std::size_t i = 0; i < log.size(); ++i) cycle &= log[i] == expected[i % 3];
    o.check(cycle && env.press_count() == reds % 2, tag + " press cycle with counter reset");
    o.note(tag + ": " + std::to_string(reds) + " red, " + std::to_string(log.size() / 3) + " press cycles");
  }
  return o;
}

double mean_ns(const BenchmarkRun& run) {
  double s = 0;
  for (const auto& x : run.samples) s += static_cast<double>(x.elapsed_ns);
  return s / static_cast<double>(run.samples.size());
}

Outcome wcet_ordering() {
  Outcome o;
  ScenarioConfig cfg = default_config();
  for (const std::string& id : scenario_ids()) {
    std::map<Engine, double> m;
    for (Engine e : {Engine::Direct, Engine::Boolean, Engine::FuzzyTight}) {
      m[e] = mean_ns(run_benchmark(cfg, {id, e, 10, ChainStyle::Normal, 100, 3, 50, 1}));
    }
    double d = m[Engine::Direct], b = m[Engine::Boolean], t = m[Engine::FuzzyTight];
    o.check(d < b && b < t, id + ": direct < boolean < fuzzy-tight");
    o.check(b >= 2 * d, id + ": boolean at least 2x direct");
    o.note(id + fmt(": direct %.1f us", d / 1e3) + fmt(", boolean %.1f us", b / 1e3) +
           fmt(", fuzzy-tight %.1f us", t / 1e3));
  }
  return o;
}

Outcome recursion_blowup() {
  Outcome o;
  ScenarioConfig cfg = default_config();
  for (Engine e : {Engine::Boolean, Engine::FuzzyLoose, Engine::FuzzyTight}) {
    double normal = mean_ns(run_benchmark(cfg, {"production-line", e, 1, ChainStyle::Normal, 100, 3, 50, 1}));
    double nested = mean_ns(run_benchmark(cfg, {"production-line", e, 1, ChainStyle::FullyNested, 100, 3, 50, 1}));
    double ratio = nested / normal;
    o.check(ratio > 3, std::string(to_string(e)) + fmt(": nested/normal %.2f, needs > 3", ratio));
    o.note(std::string(to_string(e)) + fmt(": normal %.1f us", normal / 1e3) + fmt(", nested %.1f us", nested / 1e3) +
           fmt(", ratio %.2f", ratio));
  }
  return o;
}

double mean_of(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

Outcome stats_oracles() {
  Outcome o;
  AnovaTable t = one_way_anova({{"a", {1, 2, 3}}, {"b", {2, 3, 4}}, {"c", {3, 4, 5}}});
  o.check(std::fabs(t.effects[0].f - 3.0) <= 1e-9, "ANOVA F = 3");
  o.check(std::fabs(t.effects[0].p - 0.125) <= 1e-4, "ANOVA p = 0.125");
  o.note(fmt("F %.12f", t.effects[0].f) + fmt(", p %.12f", t.effects[0].p));

  auto spread = [](double m, double s) { return std::vector<double>{m - s, m, m + s}; };
  std::vector<Group> groups{{"rp3-normal", spread(34.34, 1.19)},
                            {"rp3-recursive", spread(340.93, 145.64)},
                            {"pc-normal", spread(6.49, 0.15)},
                            {"pc-recursive", spread(149.80, 57.73)}};
  auto results = pairwise_posthoc(groups);
  double worst_diff = 0, worst_p = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j, ++k) {
      const auto& x = groups[i].values;
      const auto& y = groups[j].values;
      auto var = [](const std::vector<double>& v) {
        double m = mean_of(v), s = 0;
        for (double a : v) s += (a - m) * (a - m);
        return s / static_cast<double>(v.size() - 1);
      };
      double a = var(x) / 3, b = var(y) / 3;
      double tstat = (mean_of(y) - mean_of(x)) / std::sqrt(a + b);
      double df = (a + b) * (a + b) / (a * a / 2 + b * b / 2);
      double p = 2 * (1 - student_t_cdf(std::fabs(tstat), df));
      worst_diff = std::max(worst_diff, std::fabs(results[k].meandiff - (mean_of(y) - mean_of(x))));
      worst_p = std::max(worst_p, std::fabs(results[k].p - p));
    }
  }
  o.check(worst_diff <= 1e-9, "pairwise mean differences");
  o.check(worst_p <= 1e-6, "pairwise p values");
  o.note(fmt("max mean diff error %.3g", worst_diff) + fmt(", max p error %.3g", worst_p));
  return o;
}

Outcome fuzzy_properties() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> coord(-100, 100), unit(0, 1), factor(0.01, 1.0);
  int bounded = 0, scaled = 0, argmax = 0, chord = 0;
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<double> p{coord(rng), coord(rng), coord(rng), coord(rng)};
    std::sort(p.begin(), p.end());
    bool triangle = i % 2 == 0;
    MembershipFunction mf = triangle ? MembershipFunction::triangular(p[0], p[1], p[3])
                                     : MembershipFunction::trapezoidal(p[0], p[1], p[2], p[3]);
    LinguisticVariable v{"x", p[0] - 10, p[3] + 10, {{"a", mf}}};
    double x = coord(rng) * 1.5;
    double y = fuzzify(v, x)[0].degree;
    bounded += y < 0 || y > 1;

    // Chord between dense samples at each segment's ends.
    std::vector<double> bp = mf.points();
    std::size_t seg = std::uniform_int_distribution<std::size_t>(0, bp.size() - 2)(rng);
    double lo = bp[seg], hi = bp[seg + 1];
    if (hi - lo > 1e-6) {
      double eps = 1e-12 * (hi - lo);
      double ylo = fuzzify(v, lo + eps)[0].degree, yhi = fuzzify(v, hi - eps)[0].degree;
      double u = unit(rng);
      double err = std::fabs(fuzzify(v, lo + u * (hi - lo))[0].degree - (ylo + (yhi - ylo) * u));
      worst = std::max(worst, err);
      chord += err > 1e-9;
    }

    double t = unit(rng) * 1000, d = unit(rng);
    scaled += scale_action(t, d) > t;

    FuzzySlice s{{"a", unit(rng)}, {"b", unit(rng)}, {"c", unit(rng)}};
    FuzzySlice s2 = s;
    double f = factor(rng);
    for (auto& ld : s2) ld.degree *= f;
    argmax += dominant_label(s).label != dominant_label(s2).label;
  }
  o.check(bounded == 0, std::to_string(bounded) + " memberships outside [0,1]");
  o.check(scaled == 0, std::to_string(scaled) + " scaled actions above the threshold");
  o.check(argmax == 0, std::to_string(argmax) + " argmax changes under scaling");
  o.check(chord == 0, std::to_string(chord) + " chord deviations above 1e-9");
  o.note(fmt("10000 cases, max chord error %.3g", worst));
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 parser corpus", parser_corpus},
      {"2 fan golden trace", fan_golden},
      {"3 mode equivalence", mode_equivalence},
      {"4 scenario behaviour", scenario_behaviour},
      {"5 wcet ordering", wcet_ordering},
      {"6 recursion blow-up", recursion_blowup},
      {"7 statistics oracles", stats_oracles},
      {"8 fuzzy properties", fuzzy_properties},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s criterion %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name, seconds_since(t0));
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
