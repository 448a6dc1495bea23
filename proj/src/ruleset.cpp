#include "fuzzybdi/ruleset.hpp"

namespace fbdi {

namespace {

RuleRow row(std::vector<std::pair<std::string, std::string>> ante, std::string action, double value) {
  return {std::move(ante), {std::move(action), value, {}}};
}

RuleRow colour(const char* r, const char* g, const char* b, const char* label) {
  return {{{"red", r}, {"green", g}, {"blue", b}}, {"saveResult", std::nullopt, label}};
}

RuleTable network_scaler() {
  RuleTable t{"network-scaler", {"workLoad", "responseTime"}, {}};
  const char* wl[] = {"low", "medium", "high"};
  const char* rt[] = {"good", "ok", "bad"};
  const double factor[3][3] = {{-15, -10, 10}, {-10, 0, 10}, {0, 10, 15}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t.rows.push_back(row({{"workLoad", wl[i]}, {"responseTime", rt[j]}}, "scaleFactor", factor[i][j]));
  }
  return t;
}

RuleTable cleaning_robots() {
  RuleTable t{"cleaning-robots", {"batteryPower", "vacuumBag", "dirtIntensity"}, {}};
  const char* lv[] = {"min", "mid", "max"};
  // Indexed [battery][bag][dirt]. The (min,min,min) row comes from the sample
  // plan `burnGarb(50,1)`; the remaining 26 follow the table.
  const double power[3][3][3] = {
      {{50, 70, 90}, {50, 70, 90}, {50, 70, 90}},
      {{50, 70, 90}, {50, 70, 90}, {50, 70, 90}},
      {{50, 70, 90}, {50, 100, 100}, {70, 100, 100}},
  };
  for (int b = 0; b < 3; ++b) {
    for (int v = 0; v < 3; ++v) {
      for (int d = 0; d < 3; ++d) {
        t.rows.push_back(row({{"batteryPower", lv[b]}, {"vacuumBag", lv[v]}, {"dirtIntensity", lv[d]}}, "burnGarb",
                             power[b][v][d]));
      }
    }
  }
  return t;
}

RuleTable production_line() {
  RuleTable t{"production-line", {"red", "green", "blue"}, {}};
  t.rows = {
      colour("high", "low", "medium", "Red"),
      colour("high", "medium", "medium", "Red"),
      colour("high", "high", "low", "Red"),
      colour("medium", "medium", "low", "Red"),
      colour("medium", "high", "low", "Red"),
      colour("medium", "veryhigh", "low", "Red"),
      colour("high", "veryhigh", "low", "Red"),
      colour("medium", "medium", "medium", "SpoiledRed"),
      colour("medium", "high", "medium", "SpoiledRed"),
      colour("high", "high", "medium", "SpoiledRed"),
      colour("medium", "medium", "high", "SpoiledRed"),
      colour("high", "medium", "low", "SpoiledRed"),
      colour("medium", "veryhigh", "medium", "SpoiledRed"),
      colour("medium", "veryhigh", "high", "SpoiledRed"),
      colour("high", "veryhigh", "high", "SpoiledRed"),
      colour("medium", "ultramedium", "medium", "LightGreen"),
      colour("medium", "ultralow", "medium", "LightGreen"),
      colour("medium", "ultrahigh", "medium", "LightGreen"),
      colour("medium", "ultramedium", "high", "LightGreen"),
      colour("medium", "ultrahigh", "high", "LightGreen"),
      colour("high", "ultramedium", "medium", "LightGreen"),
      colour("high", "ultramedium", "high", "LightGreen"),
      colour("high", "ultrahigh", "medium", "LightGreen"),
      colour("high", "ultrahigh", "high", "LightGreen"),
      colour("low", "ultralow", "medium", "MiddleGreen"),
      colour("low", "ultralow", "medium", "MiddleGreen"),
      colour("low", "ultralow", "medium", "MiddleGreen"),
      colour("low", "ultralow", "medium", "MiddleGreen"),
      colour("low", "veryhigh", "medium", "MiddleGreen"),
      colour("low", "veryhigh", "medium", "MiddleGreen"),
      colour("low", "veryhigh", "high", "MiddleGreen"),
      colour("low", "ultralow", "high", "DarkGreen"),
      colour("low", "high", "low", "DarkGreen"),
      colour("low", "high", "medium", "DarkGreen"),
      colour("low", "veryhigh", "low", "DarkGreen"),
      colour("low", "low", "low", "DarkGreen"),
  };
  return t;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids{"network-scaler", "cleaning-robots", "production-line"};
  return ids;
}

RuleTable load_ruleset(const std::string& scenario) {
  if (scenario == "network-scaler") return network_scaler();
  if (scenario == "cleaning-robots") return cleaning_robots();
  if (scenario == "production-line") return production_line();
  throw UnknownScenario("unknown scenario " + scenario);
}

int first_matching_row(const RuleTable& table, const std::vector<std::string>& labels) {
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& ante = table.rows[r].antecedent;
    bool match = true;
    for (std::size_t i = 0; i < ante.size() && match; ++i) match = ante[i].second == labels[i];
    if (match) return static_cast<int>(r);
  }
  return -1;
}

}  // namespace fbdi
