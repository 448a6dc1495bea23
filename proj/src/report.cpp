#include "fuzzybdi/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace fbdi {

namespace {

int mode_rank(const std::string& mode) {
  static const char* kOrder[] = {"direct", "boolean", "fuzzy-loose", "fuzzy-tight"};
  for (int i = 0; i < 4; ++i) {
    if (mode == kOrder[i]) return i;
  }
  return 4;
}

bool key_less(const GroupKey& a, const GroupKey& b) {
  auto ta = std::make_tuple(a.scenario, a.k, a.style, mode_rank(a.mode), a.mode);
  auto tb = std::make_tuple(b.scenario, b.k, b.style, mode_rank(b.mode), b.mode);
  return ta < tb;
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double ms(double ns) { return ns / 1e6; }

using Groups = std::map<GroupKey, std::vector<double>, decltype(&key_less)>;

Groups group(const std::vector<BenchmarkSample>& samples) {
  Groups g(&key_less);
  for (const auto& s : samples) g[{s.scenario, s.mode, s.k, s.style}].push_back(static_cast<double>(s.elapsed_ns));
  return g;
}

struct Cursor {
  const Groups& groups;

  const std::vector<double>* find(const std::string& scenario, const std::string& mode, int k,
                                  const std::string& style) const {
    auto it = groups.find({scenario, mode, k, style});
    return it == groups.end() ? nullptr : &it->second;
  }
};

double mean_of(const std::vector<double>& v) { return describe(v).mean; }
double max_of(const std::vector<double>& v) { return describe(v).max; }

void descriptive_section(std::ostringstream& md, const std::vector<GroupSummary>& rows) {
  md << "### Descriptive statistics (ms)\n\n"
     << "| mode | k | style | N | mean | std | min | median | max |\n"
     << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    const auto& s = r.stats;
    md << "| " << r.key.mode << " | " << r.key.k << " | " << r.key.style << " | " << s.count << " | "
       << fixed(ms(s.mean)) << " | " << (s.std_defined ? fixed(ms(s.std)) : std::string("n/a")) << " | "
       << fixed(ms(s.min)) << " | " << fixed(ms(s.median)) << " | " << fixed(ms(s.max)) << " |\n";
  }
  md << "\n";
}

void anova_section(std::ostringstream& md, const std::map<std::pair<int, std::string>, std::vector<Group>>& by_cell,
                   double alpha) {
  std::ostringstream body;
  for (const auto& [cell, groups] : by_cell) {
    if (groups.size() < 2) continue;
    try {
      AnovaTable t = one_way_anova(groups, alpha);
      const AnovaEffect& e = t.effects.front();
      body << "| " << cell.first << " | " << cell.second << " | " << fixed(e.df, 0) << ", " << fixed(t.df_within, 0)
           << " | " << sci(e.f) << " | " << sci(e.p) << " | " << (e.significant ? "yes" : "no") << " |\n";
    } catch (const EmptyGroup&) {
    } catch (const DegenerateVariance&) {
    }
  }
  if (body.str().empty()) return;
  md << "### One-way ANOVA across modes\n\n"
     << "| k | style | df | F | p | significant |\n|---|---|---|---|---|---|\n"
     << body.str() << "\n";
}

void two_way_section(std::ostringstream& md, const std::string& scenario, const Groups& groups, double alpha) {
  std::map<std::string, std::vector<Cell>> by_style;
  for (const auto& [key, values] : groups) {
    if (key.scenario == scenario) by_style[key.style].push_back({key.mode, std::to_string(key.k), values});
  }
  std::ostringstream body;
  for (auto& [style, cells] : by_style) {
    std::size_t n = cells.front().values.size();
    for (const Cell& c : cells) n = std::min(n, c.values.size());
    for (Cell& c : cells) c.values.resize(n);
    try {
      AnovaTable t = two_way_anova(cells, "mode", "k", alpha);
      for (const auto& e : t.effects) {
        body << "| " << style << " | " << e.factor << " | " << fixed(e.df, 0) << " | " << sci(e.f) << " | "
             << sci(e.p) << " | " << (e.significant ? "yes" : "no") << " |\n";
      }
      body << "| " << style << " | residual | " << fixed(t.df_within, 0) << " |  |  |  |\n";
    } catch (const std::exception&) {
    }
  }
  if (body.str().empty()) return;
  md << "### Two-way ANOVA (mode x k)\n\n"
     << "| style | factor | df | F | p | significant |\n|---|---|---|---|---|---|\n"
     << body.str() << "\n";
}

void pairwise_section(std::ostringstream& md, const std::map<std::pair<int, std::string>, std::vector<Group>>& by_cell,
                      double alpha) {
  std::ostringstream body;
  for (const auto& [cell, groups] : by_cell) {
    if (groups.size() < 2) continue;
    try {
      for (const auto& r : pairwise_posthoc(groups, alpha)) {
        body << "| " << cell.first << " | " << cell.second << " | " << r.group1 << " | " << r.group2 << " | "
             << fixed(ms(r.meandiff)) << " | " << sci(r.p_adj) << " | " << fixed(ms(r.lower)) << " | "
             << fixed(ms(r.upper)) << " | " << (r.reject ? "True" : "False") << " |\n";
      }
    } catch (const EmptyGroup&) {
    }
  }
  if (body.str().empty()) return;
  md << "### Pairwise comparisons (Welch, Holm-adjusted)\n\n"
     << "| k | style | group1 | group2 | meandiff (ms) | p-adj | lower | upper | reject |\n"
     << "|---|---|---|---|---|---|---|---|---|\n"
     << body.str() << "\n";
}

std::vector<OrderingVerdict> verdicts(const Groups& groups) {
  std::vector<OrderingVerdict> out;
  Cursor c{groups};
  std::set<std::string> scenarios;
  std::map<std::string, std::set<int>> ks;
  for (const auto& [key, v] : groups) {
    scenarios.insert(key.scenario);
    ks[key.scenario].insert(key.k);
  }
  const char* bdi[] = {"boolean", "fuzzy-loose", "fuzzy-tight"};
  for (const std::string& sc : scenarios) {
    const int kmax = *ks[sc].rbegin(), kmin = *ks[sc].begin();
    auto d = c.find(sc, "direct", kmax, "normal");
    auto b = c.find(sc, "boolean", kmax, "normal");
    auto l = c.find(sc, "fuzzy-loose", kmax, "normal");
    auto t = c.find(sc, "fuzzy-tight", kmax, "normal");
    const std::string scope = sc + ", k=" + std::to_string(kmax) + " normal";
    if (d && b && t) {
      double md = mean_of(*d), mb = mean_of(*b), mt = mean_of(*t);
      out.push_back({"direct < boolean < fuzzy-tight, boolean >= 2x direct", scope,
                     md < mb && mb < mt && mb >= 2 * md,
                     "means " + fixed(ms(md)) + " / " + fixed(ms(mb)) + " / " + fixed(ms(mt)) + " ms"});
    }
    if (d && b && l && t) {
      double md = mean_of(*d), mb = mean_of(*b), ml = mean_of(*l), mt = mean_of(*t);
      out.push_back({"direct < boolean <= fuzzy-loose <= fuzzy-tight", scope, md < mb && mb <= ml && ml <= mt,
                     "means " + fixed(ms(md)) + " / " + fixed(ms(mb)) + " / " + fixed(ms(ml)) + " / " +
                         fixed(ms(mt)) + " ms"});
    }
    if (kmax != kmin) {
      for (const char* m : bdi) {
        for (const char* style : {"normal", "nested", "flat-first", "nested-first"}) {
          auto lo = c.find(sc, m, kmin, style), hi = c.find(sc, m, kmax, style);
          if (!lo || !hi) continue;
          double wlo = max_of(*lo), whi = max_of(*hi);
          out.push_back({"WCET(k=" + std::to_string(kmax) + ") >= WCET(k=" + std::to_string(kmin) + ")",
                         sc + ", " + m + ", " + style, whi >= wlo,
                         fixed(ms(whi)) + " vs " + fixed(ms(wlo)) + " ms"});
        }
      }
    }
    for (const char* m : bdi) {
      for (int k : ks[sc]) {
        auto normal = c.find(sc, m, k, "normal"), nested = c.find(sc, m, k, "nested");
        if (!normal || !nested) continue;
        double mn = mean_of(*normal), mr = mean_of(*nested);
        out.push_back({"mean(nested) > mean(normal)", sc + ", " + m + ", k=" + std::to_string(k), mr > mn,
                       fixed(ms(mr)) + " vs " + fixed(ms(mn)) + " ms (" + fixed(mr / mn, 2) + "x)"});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<GroupSummary> descriptive(const std::vector<BenchmarkSample>& samples) {
  std::vector<GroupSummary> out;
  for (const auto& [key, values] : group(samples)) out.push_back({key, describe(values)});
  return out;
}

bool Report::ordering_ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const OrderingVerdict& v) { return v.holds; });
}

Report build_report(const std::vector<BenchmarkSample>& samples, double alpha) {
  if (samples.empty()) throw EmptyGroup("no samples to report");
  Groups groups = group(samples);
  std::vector<GroupSummary> rows = descriptive(samples);
  int reps = 0, cycles = 0;
  for (const auto& s : samples) {
    reps = std::max(reps, s.rep + 1);
    cycles = std::max(cycles, s.cycle + 1);
  }

  Report r;
  std::ostringstream md;
  md << "# WCET benchmark report\n\n"
     << "- Samples: " << samples.size() << " in " << groups.size() << " groups (" << cycles << " cycles x " << reps
     << " repetitions per group).\n"
     << "- Elapsed time runs from the start of sensing to the end of the last action of a cycle.\n"
     << "- Post-hoc comparisons are Welch t-tests with Holm step-down adjustment (alpha " << alpha
     << "), used in place of Tukey HSD; intervals are Bonferroni-corrected Welch intervals.\n\n";

  std::set<std::string> scenarios;
  for (const auto& row : rows) scenarios.insert(row.key.scenario);
  for (const std::string& sc : scenarios) {
    md << "## " << sc << "\n\n";
    std::vector<GroupSummary> mine;
    std::map<std::pair<int, std::string>, std::vector<Group>> by_cell;
    for (const auto& row : rows) {
      if (row.key.scenario != sc) continue;
      mine.push_back(row);
      by_cell[{row.key.k, row.key.style}].push_back({row.key.mode, groups.at(row.key)});
    }
    descriptive_section(md, mine);
    anova_section(md, by_cell, alpha);
    two_way_section(md, sc, groups, alpha);
    pairwise_section(md, by_cell, alpha);
  }

  r.verdicts = verdicts(groups);
  if (!r.verdicts.empty()) {
    md << "## Ordering verdicts\n\n| property | scope | holds | detail |\n|---|---|---|---|\n";
    for (const auto& v : r.verdicts) {
      md << "| " << v.property << " | " << v.scope << " | " << (v.holds ? "yes" : "NO") << " | " << v.detail
         << " |\n";
    }
    md << "\n";
  }
  r.markdown = md.str();

  std::ostringstream csv;
  csv << "scenario,mode,k,style,n,mean_ns,std_ns,min_ns,median_ns,max_ns\n";
  for (const auto& row : rows) {
    const auto& s = row.stats;
    csv << row.key.scenario << ',' << row.key.mode << ',' << row.key.k << ',' << row.key.style << ',' << s.count
        << ',' << fixed(s.mean, 1) << ',' << fixed(s.std, 1) << ',' << fixed(s.min, 0) << ',' << fixed(s.median, 1)
        << ',' << fixed(s.max, 0) << '\n';
  }
  r.summary_csv = csv.str();
  return r;
}

}  // namespace fbdi
