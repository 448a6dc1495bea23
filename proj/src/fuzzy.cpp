#include "fuzzybdi/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fbdi {

MembershipFunction MembershipFunction::triangular(double a, double b, double c) {
  if (!(a <= b && b <= c)) throw InvalidMembership("triangular break points must be non-decreasing");
  return MembershipFunction(Shape::Triangular, a, b, b, c);
}

MembershipFunction MembershipFunction::trapezoidal(double a, double b, double c, double d) {
  if (!(a <= b && b <= c && c <= d)) throw InvalidMembership("trapezoidal break points must be non-decreasing");
  return MembershipFunction(Shape::Trapezoidal, a, b, c, d);
}

std::vector<double> MembershipFunction::points() const {
  if (shape_ == Shape::Triangular) return {a_, b_, d_};
  return {a_, b_, c_, d_};
}

double MembershipFunction::operator()(double x) const {
  if (x <= b_ && left_shoulder()) return 1.0;
  if (x >= c_ && right_shoulder()) return 1.0;
  if (x <= a_ || x >= d_) return 0.0;
  double y;
  if (x < b_) {
    y = (x - a_) / (b_ - a_);
  } else if (x <= c_) {
    y = 1.0;
  } else {
    y = (d_ - x) / (d_ - c_);
  }
  return std::clamp(y, 0.0, 1.0);
}

double membership(const MembershipFunction& mf, double x) { return mf(x); }

void LinguisticVariable::validate() const {
  if (labels.size() < 2) throw InvalidMembership("variable " + name + " needs at least two labels");
  if (!(lo < hi)) throw InvalidMembership("variable " + name + " has an empty universe");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& [label, mf] = labels[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[j].first == label) throw InvalidMembership("variable " + name + " repeats label " + label);
    }
    if (mf.a() < lo || mf.d() > hi) {
      throw InvalidMembership("label " + label + " of " + name + " leaves the universe");
    }
  }
}

std::size_t LinguisticVariable::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].first == label) return i;
  }
  return static_cast<std::size_t>(-1);
}

const FuzzySlice& FuzzyState::slice(const std::string& variable) const {
  auto it = slices_.find(variable);
  if (it == slices_.end()) throw EmptyState("no fuzzified reading for " + variable);
  return it->second;
}

FuzzySlice fuzzify(const LinguisticVariable& v, double x) {
  FuzzySlice out;
  out.reserve(v.labels.size());
  for (const auto& [label, mf] : v.labels) out.push_back({label, mf(x)});
  return out;
}

LabelDegree dominant_label(const FuzzySlice& slice) {
  if (slice.empty()) throw EmptyState("no labels to choose from");
  const LabelDegree* best = &slice.front();
  for (const LabelDegree& ld : slice) {
    if (ld.degree > best->degree) best = &ld;
  }
  return *best;
}

LabelDegree dominant_label(const FuzzyState& state, const std::string& variable) {
  return dominant_label(state.slice(variable));
}

double scale_action(double threshold, double degree) {
  if (!(degree >= 0.0 && degree <= 1.0)) {
    throw DegreeOutOfRange("membership degree " + std::to_string(degree) + " outside [0,1]");
  }
  return threshold * degree;
}

}  // namespace fbdi
