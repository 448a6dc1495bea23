#include "fuzzybdi/runtime.hpp"

#include <chrono>

namespace fbdi {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Boolean:
      return "boolean";
    case Mode::FuzzyTight:
      return "fuzzy-tight";
    case Mode::FuzzyLoose:
      return "fuzzy-loose";
  }
  return "?";
}

Nanos now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace fbdi
