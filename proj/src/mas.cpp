#include "fuzzybdi/mas.hpp"

namespace fbdi {

Controller& MultiAgentSystem::add(std::unique_ptr<Controller> c) {
  if (find(c->name())) throw std::invalid_argument("duplicate agent name " + c->name());
  c->set_router(this);
  controllers_.push_back(std::move(c));
  return *controllers_.back();
}

Controller* MultiAgentSystem::find(const std::string& name) const {
  for (const auto& c : controllers_) {
    if (c->name() == name) return c.get();
  }
  return nullptr;
}

void MultiAgentSystem::route(Message m) {
  Controller* to = find(m.receiver);
  if (!to) throw UnknownReceiver("unknown receiver " + m.receiver);
  to->receive(std::move(m));
}

std::vector<CycleReport> MultiAgentSystem::round() {
  std::vector<CycleReport> out;
  out.reserve(controllers_.size());
  for (auto& c : controllers_) out.push_back(c->cycle());
  return out;
}

bool MultiAgentSystem::all_idle() const {
  for (const auto& c : controllers_) {
    if (!c->idle()) return false;
  }
  return true;
}

void MultiAgentSystem::reset() {
  for (auto& c : controllers_) c->reset();
}

}  // namespace fbdi
