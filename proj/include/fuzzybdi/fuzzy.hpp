#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbdi {

class DegreeOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class EmptyState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidMembership : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Piecewise-linear membership function. A triangle (a,b,c) is stored as the
/// trapezoid (a,b,b,c). When a == b the set is a left shoulder (degree 1 for
/// every x <= b); when c == d it is a right shoulder.
class MembershipFunction {
 public:
  enum class Shape { Triangular, Trapezoidal };

  static MembershipFunction triangular(double a, double b, double c);
  static MembershipFunction trapezoidal(double a, double b, double c, double d);

  double operator()(double x) const;

  Shape shape() const { return shape_; }
  /// Break points in declaration order (3 for triangles, 4 for trapezoids).
  std::vector<double> points() const;
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  bool left_shoulder() const { return a_ == b_; }
  bool right_shoulder() const { return c_ == d_; }

 private:
  MembershipFunction(Shape s, double a, double b, double c, double d) : shape_(s), a_(a), b_(b), c_(c), d_(d) {}

  Shape shape_;
  double a_, b_, c_, d_;
};

double membership(const MembershipFunction& mf, double x);

struct LabelDegree {
  std::string label;
  double degree = 0.0;

  friend bool operator==(const LabelDegree&, const LabelDegree&) = default;
};

struct LinguisticVariable {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::pair<std::string, MembershipFunction>> labels;

  /// Throws InvalidMembership when fewer than two labels are declared, a label
  /// repeats, or a support leaves the universe.
  void validate() const;
  std::size_t label_index(const std::string& label) const;  // npos when absent
};

/// Degrees for every label of one variable, in declaration order.
using FuzzySlice = std::vector<LabelDegree>;

/// Per-variable fuzzified readings.
class FuzzyState {
 public:
  void set(const std::string& variable, FuzzySlice slice) { slices_[variable] = std::move(slice); }
  bool has(const std::string& variable) const { return slices_.count(variable) != 0; }
  const FuzzySlice& slice(const std::string& variable) const;
  const std::map<std::string, FuzzySlice>& slices() const { return slices_; }

 private:
  std::map<std::string, FuzzySlice> slices_;
};

FuzzySlice fuzzify(const LinguisticVariable& v, double x);

/// Label with the strictly greatest degree; ties go to the earlier label.
LabelDegree dominant_label(const FuzzySlice& slice);
LabelDegree dominant_label(const FuzzyState& state, const std::string& variable);

/// threshold * degree; degree must lie in [0, 1].
double scale_action(double threshold, double degree);

}  // namespace fbdi
