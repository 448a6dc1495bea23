#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fuzzybdi/runtime.hpp"

namespace fbdi {

/// Single-threaded round-robin scheduler; agents talk only through mail.
class MultiAgentSystem : public MessageRouter {
 public:
  MultiAgentSystem() = default;
  MultiAgentSystem(const MultiAgentSystem&) = delete;
  MultiAgentSystem& operator=(const MultiAgentSystem&) = delete;

  /// Returns a reference to the stored controller.
  Controller& add(std::unique_ptr<Controller> c);
  Controller* find(const std::string& name) const;
  Controller& at(std::size_t i) const { return *controllers_[i]; }
  std::size_t size() const { return controllers_.size(); }

  void route(Message m) override;

  /// One cycle of every controller, in insertion order.
  std::vector<CycleReport> round();
  bool all_idle() const;
  void reset();

 private:
  std::vector<std::unique_ptr<Controller>> controllers_;
};

}  // namespace fbdi
