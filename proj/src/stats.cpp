#include "fuzzybdi/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace fbdi {

namespace {

double mean_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

double sum_sq_dev(const std::vector<double>& v, double m) {
  double s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return s;
}

double beta_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  double qab = a + b, qap = a + 1, qam = a - 1;
  double c = 1, d = 1 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1) < kEps) break;
  }
  return h;
}

AnovaEffect effect(std::string name, double ss, double df, double ms_within, double df_within, double alpha) {
  AnovaEffect e{std::move(name), ss, df, df > 0 ? ss / df : 0};
  e.f = e.ms / ms_within;
  e.p = f_upper_tail(e.f, df, df_within);
  e.significant = e.p < alpha;
  return e;
}

}  // namespace

StatsSummary describe(std::vector<double> values) {
  if (values.empty()) throw EmptyGroup("no values to describe");
  std::sort(values.begin(), values.end());
  StatsSummary s;
  s.count = values.size();
  s.mean = mean_of(values);
  s.min = values.front();
  s.max = values.back();
  std::size_t n = values.size();
  s.median = n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
  s.std_defined = n > 1;
  s.std = n > 1 ? std::sqrt(sum_sq_dev(values, s.mean) / (n - 1)) : 0;
  return s;
}

double regularized_beta(double a, double b, double x) {
  if (a <= 0 || b <= 0) throw std::domain_error("beta parameters must be positive");
  if (x < 0 || x > 1 || std::isnan(x)) throw std::domain_error("beta argument outside [0,1]");
  if (x == 0 || x == 1) return x;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(ln_front);
  if (x < (a + 1) / (a + b + 2)) return front * beta_fraction(a, b, x) / a;
  return 1 - front * beta_fraction(b, a, 1 - x) / b;
}

double f_upper_tail(double f, double d1, double d2) {
  if (d1 <= 0 || d2 <= 0) throw std::domain_error("degrees of freedom must be positive");
  if (std::isinf(f)) return 0;
  if (f <= 0) return 1;
  return regularized_beta(d2 / 2, d1 / 2, d2 / (d2 + d1 * f));
}

double student_t_cdf(double t, double df) {
  if (df <= 0) throw std::domain_error("degrees of freedom must be positive");
  if (std::isinf(t)) return t > 0 ? 1 : 0;
  double t2 = t * t;
  if (t2 < df) {
    double centre = 0.5 * regularized_beta(0.5, df / 2, t2 / (df + t2));
    return t > 0 ? 0.5 + centre : 0.5 - centre;
  }
  double tail = 0.5 * regularized_beta(df / 2, 0.5, df / (df + t2));
  return t > 0 ? 1 - tail : tail;
}

double student_t_quantile(double p, double df) {
  if (p <= 0 || p >= 1) throw std::domain_error("quantile level must be in (0,1)");
  if (p == 0.5) return 0;
  if (p < 0.5) return -student_t_quantile(1 - p, df);
  double lo = -1, hi = 1;
  while (student_t_cdf(lo, df) > p) lo *= 2;
  while (student_t_cdf(hi, df) < p) hi *= 2;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, std::fabs(hi)); ++i) {
    double mid = (lo + hi) / 2;
    (student_t_cdf(mid, df) < p ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

AnovaTable one_way_anova(const std::vector<Group>& groups, double alpha) {
  if (groups.size() < 2) throw EmptyGroup("one-way ANOVA needs at least two groups");
  std::size_t n = 0;
  double total = 0;
  for (const Group& g : groups) {
    if (g.values.size() < 2) throw EmptyGroup("group " + g.name + " has fewer than two values");
    n += g.values.size();
    total += std::accumulate(g.values.begin(), g.values.end(), 0.0);
  }
  double grand = total / n;
  double ss_between = 0, ss_within = 0;
  for (const Group& g : groups) {
    double m = mean_of(g.values);
    ss_between += g.values.size() * (m - grand) * (m - grand);
    ss_within += sum_sq_dev(g.values, m);
  }
  if (ss_within == 0) throw DegenerateVariance("every group is constant");
  AnovaTable t;
  t.df_within = static_cast<double>(n - groups.size());
  t.ss_within = ss_within;
  t.ms_within = ss_within / t.df_within;
  t.effects.push_back(effect("group", ss_between, groups.size() - 1.0, t.ms_within, t.df_within, alpha));
  return t;
}

AnovaTable two_way_anova(const std::vector<Cell>& cells, const std::string& factor_a, const std::string& factor_b,
                         double alpha) {
  if (cells.empty()) throw EmptyGroup("two-way ANOVA needs cells");
  std::vector<std::string> as, bs;
  for (const Cell& c : cells) {
    if (std::find(as.begin(), as.end(), c.a) == as.end()) as.push_back(c.a);
    if (std::find(bs.begin(), bs.end(), c.b) == bs.end()) bs.push_back(c.b);
  }
  if (as.size() < 2 || bs.size() < 2) throw EmptyGroup("each factor needs at least two levels");
  std::map<std::pair<std::string, std::string>, const Cell*> grid;
  for (const Cell& c : cells) {
    if (!grid.emplace(std::make_pair(c.a, c.b), &c).second) throw std::invalid_argument("duplicate cell");
  }
  if (grid.size() != as.size() * bs.size()) throw std::invalid_argument("unbalanced design: missing cells");
  const std::size_t n = cells.front().values.size();
  if (n < 2) throw EmptyGroup("cells need at least two values");
  for (const Cell& c : cells) {
    if (c.values.size() != n) throw std::invalid_argument("unbalanced design: unequal cell sizes");
  }
  const double a = as.size(), b = bs.size();
  double grand = 0;
  std::map<std::pair<std::string, std::string>, double> cell_mean;
  std::map<std::string, double> mean_a, mean_b;
  for (const Cell& c : cells) {
    double m = mean_of(c.values);
    cell_mean[{c.a, c.b}] = m;
    mean_a[c.a] += m / b;
    mean_b[c.b] += m / a;
    grand += m / (a * b);
  }
  double ss_a = 0, ss_b = 0, ss_ab = 0, ss_e = 0;
  for (const auto& [level, m] : mean_a) ss_a += b * n * (m - grand) * (m - grand);
  for (const auto& [level, m] : mean_b) ss_b += a * n * (m - grand) * (m - grand);
  for (const Cell& c : cells) {
    double m = cell_mean[{c.a, c.b}];
    double inter = m - mean_a[c.a] - mean_b[c.b] + grand;
    ss_ab += n * inter * inter;
    ss_e += sum_sq_dev(c.values, m);
  }
  if (ss_e == 0) throw DegenerateVariance("every cell is constant");
  AnovaTable t;
  t.df_within = a * b * (n - 1.0);
  t.ss_within = ss_e;
  t.ms_within = ss_e / t.df_within;
  t.effects.push_back(effect(factor_a, ss_a, a - 1, t.ms_within, t.df_within, alpha));
  t.effects.push_back(effect(factor_b, ss_b, b - 1, t.ms_within, t.df_within, alpha));
  t.effects.push_back(effect(factor_a + ":" + factor_b, ss_ab, (a - 1) * (b - 1), t.ms_within, t.df_within, alpha));
  return t;
}

WelchTest welch_test(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2 || y.size() < 2) throw EmptyGroup("Welch test needs two values per group");
  double mx = mean_of(x), my = mean_of(y);
  double vx = sum_sq_dev(x, mx) / (x.size() - 1), vy = sum_sq_dev(y, my) / (y.size() - 1);
  double qx = vx / x.size(), qy = vy / y.size();
  WelchTest w;
  w.se = std::sqrt(qx + qy);
  if (w.se == 0) {
    w.df = x.size() + y.size() - 2.0;
    w.t = my == mx ? 0 : std::copysign(std::numeric_limits<double>::infinity(), my - mx);
    w.p = my == mx ? 1 : 0;
    return w;
  }
  w.t = (my - mx) / w.se;
  w.df = (qx + qy) * (qx + qy) / (qx * qx / (x.size() - 1) + qy * qy / (y.size() - 1));
  w.p = 2 * student_t_cdf(-std::fabs(w.t), w.df);
  return w;
}

std::vector<PairwiseResult> pairwise_posthoc(const std::vector<Group>& groups, double alpha) {
  if (groups.size() < 2) throw EmptyGroup("pairwise comparisons need at least two groups");
  std::vector<PairwiseResult> out;
  std::vector<double> se;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      WelchTest w = welch_test(groups[i].values, groups[j].values);
      PairwiseResult r;
      r.group1 = groups[i].name;
      r.group2 = groups[j].name;
      r.meandiff = mean_of(groups[j].values) - mean_of(groups[i].values);
      r.t = w.t;
      r.df = w.df;
      r.p = w.p;
      out.push_back(r);
      se.push_back(w.se);
    }
  }
  const std::size_t m = out.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out[a].p < out[b].p; });
  double running = 0;
  for (std::size_t rank = 0; rank < m; ++rank) {
    PairwiseResult& r = out[order[rank]];
    running = std::max(running, std::min(1.0, (m - rank) * r.p));
    r.p_adj = running;
    r.reject = r.p_adj < alpha;
  }
  for (std::size_t k = 0; k < m; ++k) {
    double q = se[k] == 0 ? 0 : student_t_quantile(1 - alpha / (2.0 * m), out[k].df);
    out[k].lower = out[k].meandiff - q * se[k];
    out[k].upper = out[k].meandiff + q * se[k];
  }
  return out;
}

}  // namespace fbdi
