#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fbdi {

class EmptyGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateVariance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StatsSummary {
  double mean = 0;
  /// Sample standard deviation (n-1); 0 with std_defined=false for one value.
  double std = 0;
  double min = 0;
  double median = 0;
  double max = 0;
  std::size_t count = 0;
  bool std_defined = false;
};

StatsSummary describe(std::vector<double> values);

/// I_x(a, b), continued-fraction evaluation.
double regularized_beta(double a, double b, double x);
/// P(F > f) for F(d1, d2).
double f_upper_tail(double f, double d1, double d2);
/// P(T <= t) for Student's t with df degrees of freedom.
double student_t_cdf(double t, double df);
/// q with P(T <= q) = p.
double student_t_quantile(double p, double df);

struct Group {
  std::string name;
  std::vector<double> values;
};

struct AnovaEffect {
  std::string factor;
  double ss = 0;
  double df = 0;
  double ms = 0;
  double f = 0;
  double p = 1;
  bool significant = false;
};

struct AnovaTable {
  std::vector<AnovaEffect> effects;
  double ss_within = 0;
  double df_within = 0;
  double ms_within = 0;
};

/// Throws EmptyGroup for fewer than 2 groups or a group below 2 values, and
/// DegenerateVariance when every group is constant.
AnovaTable one_way_anova(const std::vector<Group>& groups, double alpha = 0.05);

struct Cell {
  std::string a;
  std::string b;
  std::vector<double> values;
};

/// Balanced two-factor design with interaction; every (a, b) pair must be
/// present with the same number of values.
AnovaTable two_way_anova(const std::vector<Cell>& cells, const std::string& factor_a, const std::string& factor_b,
                         double alpha = 0.05);

struct PairwiseResult {
  std::string group1;
  std::string group2;
  /// mean(group2) - mean(group1).
  double meandiff = 0;
  double t = 0;
  double df = 0;
  double p = 1;
  /// Holm step-down adjusted p.
  double p_adj = 1;
  /// Welch interval at the Bonferroni-corrected level.
  double lower = 0;
  double upper = 0;
  bool reject = false;
};

struct WelchTest {
  double t = 0;
  double df = 0;
  double p = 1;
  double se = 0;
};

WelchTest welch_test(const std::vector<double>& x, const std::vector<double>& y);

/// All pairs in input order: (0,1), (0,2), ..., (1,2), ...
std::vector<PairwiseResult> pairwise_posthoc(const std::vector<Group>& groups, double alpha = 0.05);

}  // namespace fbdi
