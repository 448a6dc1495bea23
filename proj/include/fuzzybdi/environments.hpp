#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fuzzybdi/config.hpp"
#include "fuzzybdi/runtime.hpp"

namespace fbdi {

/// Cluster of machines draining an irregular workload.
class NetworkScalerEnv : public Environment {
 public:
  NetworkScalerEnv(ScalerParams params, std::uint64_t seed);

  Percept perceive(const std::string& agent) override;
  void act(const std::string& agent, const Term& action) override;
  bool is_sensing(const std::string& agent, const std::string& action) const override;

  void reset(std::uint64_t seed);

  int machines() const { return machines_; }
  double workload() const { return workload_; }
  int arrival_turn() const { return arrival_turn_; }
  int arrivals() const { return arrivals_; }

  /// Machine count after scaleFactor(f) at `machines`.
  static int scaled_machines(int machines, double factor, int max_machines);

 private:
  ScalerParams params_;
  std::mt19937_64 rng_;
  double workload_ = 0;
  int machines_ = 0;
  int arrival_turn_ = 0;
  int arrivals_ = 0;
};

using Tile = std::pair<int, int>;

/// Two vacuum robots sweeping a 14x14 grid from opposite corners.
class CleaningRobotsEnv : public Environment {
 public:
  static constexpr int kSize = 14;

  struct Robot {
    std::vector<Tile> path;
    /// Last tile of the robot's own half.
    Tile meeting;
    int index = -1;
    double battery = 100;
    double bag = 0;
  };

  CleaningRobotsEnv(RobotParams params, std::uint64_t seed);

  Percept perceive(const std::string& agent) override;
  void act(const std::string& agent, const Term& action) override;
  bool is_sensing(const std::string& agent, const std::string& action) const override;

  void reset(std::uint64_t seed);

  const Robot& robot(const std::string& name) const;
  Tile position(const std::string& name) const;
  double dirt(int row, int col) const { return dirt_[row][col]; }
  double total_dirt() const;
  bool bag_full(const std::string& name) const;
  bool depleted(const std::string& name) const;

 private:
  Robot& mutable_robot(const std::string& name);

  RobotParams params_;
  std::array<std::array<double, kSize>, kSize> dirt_{};
  std::map<std::string, Robot> robots_;
};

/// Conveyor feeding coloured products to a sorter, a pusher and a press.
class ProductionLineEnv : public Environment {
 public:
  enum class Route { None, Push, Build };

  struct Product {
    std::array<double, 3> rgb{};
    std::string label;
    Route route = Route::None;
    int routed = 0;
  };

  ProductionLineEnv(LineParams params, std::uint64_t seed);

  Percept perceive(const std::string& agent) override;
  void act(const std::string& agent, const Term& action) override;
  bool is_sensing(const std::string& agent, const std::string& action) const override;

  void reset(std::uint64_t seed);

  const std::vector<Product>& products() const { return products_; }
  /// Products that have received a label.
  int labelled() const { return labelled_; }
  int pushed() const { return pushed_; }
  int built() const { return built_; }
  int press_count() const { return press_count_; }
  std::size_t push_queue() const { return push_queue_.size(); }
  std::size_t build_queue() const { return build_queue_.size(); }
  /// pressOnce / pressTwice / ejectProduct in execution order.
  const std::vector<std::string>& press_log() const { return press_log_; }
  /// All products sampled and labelled.
  bool stream_done() const { return labelled_ >= params_.products; }

 private:
  LineParams params_;
  std::vector<Product> products_;
  int current_ = -1;
  int labelled_ = 0;
  int pushed_ = 0;
  int built_ = 0;
  int press_count_ = 0;
  std::vector<int> push_queue_;
  std::vector<int> build_queue_;
  std::vector<std::string> press_log_;
};

}  // namespace fbdi
