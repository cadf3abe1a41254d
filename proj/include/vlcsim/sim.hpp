#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlcsim/channel.hpp"
#include "vlcsim/pipeline.hpp"

namespace vlcsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct TrafficLight {
  std::string id;
  Vec2 position_m;
  double beam_orientation_rad = 0.0;  // direction the lamp points at
  TransmitterParams tx;
  PipelineConfig pipeline;
};

struct Vehicle {
  std::string id;
  Vec2 position_m;
  double heading_rad = 0.0;  // travel direction; also the receiver axis
  double speed_mps = 0.0;
  ReceiverOptics rx;
};

enum class SourceKind { kPeriodic, kTriggered };

struct MessageSource {
  std::string id;
  SourceKind kind = SourceKind::kPeriodic;
  double interval_s = 1.0;  // periodic
  double rate_hz = 1.0;     // triggered: exponential inter-arrival rate
  std::vector<std::uint8_t> payload;
  std::string sensor_label;  // flame | accelerometer | environment
};

struct Scenario {
  std::vector<TrafficLight> lights;
  std::vector<Vehicle> vehicles;
  std::vector<MessageSource> sources;
  PhyConfig phy;
  NoiseModel noise;
  std::uint64_t seed = 1;
  double duration_s = 1.0;

  // Returns every violation, not just the first; empty means valid.
  std::vector<std::string> validate() const;
};

struct TraceRecord {
  std::uint64_t msg_id = 0;
  std::string source;
  double emit_time_s = 0.0;
  std::string light_id;   // empty when no light was assignable
  std::string vehicle_id;
  std::vector<std::pair<std::string, double>> segments_s;
  double total_s = 0.0;
  bool delivered = false;
  double distance_m = 0.0;
  double channel_gain = 0.0;
  double snr = 0.0;
  double ber = 0.0;
};

// Vehicle position after straight-line motion for t seconds.
Vec2 vehicle_position(const Vehicle& v, double t);

// Link geometry between a light and a vehicle position; angles beyond pi/2
// are clamped into the zero-gain regime.
double gain_to_vehicle(const TrafficLight& light, const Vehicle& vehicle,
                       Vec2 vehicle_pos, double* distance_out = nullptr,
                       double* incidence_out = nullptr);

// Index of the light with the highest positive channel gain, or -1.
// Ties break on the lowest light id.
int assign(const Vehicle& vehicle, Vec2 vehicle_pos,
           const std::vector<TrafficLight>& lights);

struct SimResult {
  std::vector<TraceRecord> trace;
  std::uint64_t emitted = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;
};

SimResult run(const Scenario& scenario, std::uint64_t seed,
              double duration_s);

struct SegmentStats {
  std::string name;
  double min_s = 0.0;
  double max_s = 0.0;
  double median_s = 0.0;
  double modal_bin_center_s = 0.0;
};

struct Summary {
  std::vector<SegmentStats> per_segment;
  SegmentStats total;
  double delivery_ratio = 0.0;
  std::uint64_t records = 0;
};

Summary summarize(const SimResult& result, double bin_width_s = 1e-3);

}  // namespace vlcsim
