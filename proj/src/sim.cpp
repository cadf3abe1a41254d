#include "vlcsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "vlcsim/fitting.hpp"

namespace vlcsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 0.5 * kPi;
}  // namespace

std::vector<std::string> Scenario::validate() const {
  std::vector<std::string> errors;
  auto check = [&](bool ok, const std::string& msg) {
    if (!ok) errors.push_back(msg);
  };
  std::set<std::string> light_ids, vehicle_ids, source_ids;
  for (const auto& l : lights) {
    if (!light_ids.insert(l.id).second)
      errors.push_back("duplicate light id '" + l.id + "'");
    try {
      l.tx.validate();
      l.pipeline.validate();
    } catch (const std::exception& e) {
      errors.push_back("light '" + l.id + "': " + e.what());
    }
  }
  for (const auto& v : vehicles) {
    if (!vehicle_ids.insert(v.id).second)
      errors.push_back("duplicate vehicle id '" + v.id + "'");
    check(v.speed_mps >= 0.0, "vehicle '" + v.id + "': speed must be >= 0");
    try {
      v.rx.validate();
    } catch (const std::exception& e) {
      errors.push_back("vehicle '" + v.id + "': " + e.what());
    }
  }
  for (const auto& s : sources) {
    if (!source_ids.insert(s.id).second)
      errors.push_back("duplicate source id '" + s.id + "'");
    if (s.kind == SourceKind::kPeriodic)
      check(s.interval_s > 0.0, "source '" + s.id + "': interval must be > 0");
    else
      check(s.rate_hz > 0.0, "source '" + s.id + "': rate must be > 0");
    check(!s.payload.empty() && s.payload.size() <= 255,
          "source '" + s.id + "': payload must be 1..255 bytes");
  }
  try {
    phy.validate();
    noise.validate();
  } catch (const std::exception& e) {
    errors.push_back(e.what());
  }
  check(duration_s > 0.0, "duration must be > 0");
  return errors;
}

Vec2 vehicle_position(const Vehicle& v, double t) {
  return {v.position_m.x + v.speed_mps * t * std::cos(v.heading_rad),
          v.position_m.y + v.speed_mps * t * std::sin(v.heading_rad)};
}

double gain_to_vehicle(const TrafficLight& light, const Vehicle& vehicle,
                       Vec2 vehicle_pos, double* distance_out,
                       double* incidence_out) {
  const double dx = vehicle_pos.x - light.position_m.x;
  const double dy = vehicle_pos.y - light.position_m.y;
  const double d = std::hypot(dx, dy);
  if (distance_out) *distance_out = d;
  if (d <= 0.0) return 0.0;

  auto angle_between = [](double ax, double ay, double bx, double by) {
    const double dot = ax * bx + ay * by;
    const double na = std::hypot(ax, ay), nb = std::hypot(bx, by);
    return std::acos(std::clamp(dot / (na * nb), -1.0, 1.0));
  };
  // Irradiance: beam axis vs light->vehicle.  Incidence: receiver axis
  // (vehicle heading) vs vehicle->light.
  const double phi = angle_between(std::cos(light.beam_orientation_rad),
                                   std::sin(light.beam_orientation_rad), dx, dy);
  const double psi = angle_between(std::cos(vehicle.heading_rad),
                                   std::sin(vehicle.heading_rad), -dx, -dy);
  if (incidence_out) *incidence_out = psi;
  if (phi > kHalfPi || psi > kHalfPi) return 0.0;
  return los_channel_gain(LinkGeometry{d, phi, psi}, light.tx, vehicle.rx);
}

int assign(const Vehicle& vehicle, Vec2 vehicle_pos,
           const std::vector<TrafficLight>& lights) {
  int best = -1;
  double best_gain = 0.0;
  for (std::size_t i = 0; i < lights.size(); ++i) {
    const double h = gain_to_vehicle(lights[i], vehicle, vehicle_pos);
    if (h <= 0.0) continue;
    const bool better =
        h > best_gain ||
        (h == best_gain && best >= 0 &&
         lights[i].id < lights[static_cast<std::size_t>(best)].id);
    if (best < 0 || better) {
      best = static_cast<int>(i);
      best_gain = h;
    }
  }
  return best;
}

namespace {

struct Emission {
  double time_s;
  std::size_t source_idx;
  std::uint64_t seq;

  bool operator<(const Emission& other) const {
    if (time_s != other.time_s) return time_s < other.time_s;
    if (source_idx != other.source_idx) return source_idx < other.source_idx;
    return seq < other.seq;
  }
};

}  // namespace

SimResult run(const Scenario& scenario, std::uint64_t seed,
              double duration_s) {
  const auto errors = scenario.validate();
  if (!errors.empty()) {
    std::string msg = "scenario validation failed:";
    for (const auto& e : errors) msg += "\n  - " + e;
    throw std::invalid_argument(msg);
  }

  // Emission schedule.  Triggered sources own a dedicated stream so that
  // edits elsewhere in the scenario never perturb their arrival times.
  std::vector<Emission> emissions;
  for (std::size_t i = 0; i < scenario.sources.size(); ++i) {
    const auto& src = scenario.sources[i];
    if (src.kind == SourceKind::kPeriodic) {
      std::uint64_t k = 0;
      for (double t = 0.0; t < duration_s;
           t = static_cast<double>(++k) * src.interval_s)
        emissions.push_back({t, i, k});
    } else {
      Rng rng(mix_seed(seed, 0x5eed50u, i));
      std::uint64_t k = 0;
      for (double t = rng.exponential(src.rate_hz); t < duration_s;
           t += rng.exponential(src.rate_hz))
        emissions.push_back({t, i, k++});
    }
  }
  std::sort(emissions.begin(), emissions.end());

  SimResult result;
  std::uint64_t msg_id = 0;
  for (const auto& em : emissions) {
    const auto& src = scenario.sources[em.source_idx];
    const Frame frame = build_frame(src.payload);
    ++msg_id;
    for (std::size_t vi = 0; vi < scenario.vehicles.size(); ++vi) {
      const auto& vehicle = scenario.vehicles[vi];
      TraceRecord rec;
      rec.msg_id = msg_id;
      rec.source = src.id;
      rec.emit_time_s = em.time_s;
      rec.vehicle_id = vehicle.id;

      const Vec2 pos_at_emit = vehicle_position(vehicle, em.time_s);
      const int light_idx = assign(vehicle, pos_at_emit, scenario.lights);
      ++result.emitted;
      if (light_idx < 0) {
        ++result.dropped;
        result.trace.push_back(std::move(rec));
        continue;
      }
      const auto& light = scenario.lights[static_cast<std::size_t>(light_idx)];
      rec.light_id = light.id;

      // Per-(message, vehicle) stream: removing unrelated lights or
      // vehicles leaves the draws of everything else untouched.
      Rng rng(mix_seed(seed, msg_id, vi));
      const LatencySample sample = end_to_end(light.pipeline, rng, frame);
      rec.segments_s = sample.per_segment;
      rec.total_s = sample.total_s;

      const Vec2 pos_at_delivery =
          vehicle_position(vehicle, em.time_s + sample.total_s);
      double d = 0.0;
      const double h = gain_to_vehicle(light, vehicle, pos_at_delivery, &d);
      rec.distance_m = d;
      rec.channel_gain = h;
      rec.snr = snr(h, light.tx, vehicle.rx, scenario.noise);
      rec.ber = ook_ber(rec.snr);
      rec.delivered = !sample.lost && h > 0.0;
      if (rec.delivered)
        ++result.delivered;
      else
        ++result.dropped;
      result.trace.push_back(std::move(rec));
    }
  }
  return result;
}

namespace {

SegmentStats stats_for(const std::string& name, std::vector<double>& values,
                       double bin_width_s) {
  SegmentStats s;
  s.name = name;
  std::sort(values.begin(), values.end());
  s.min_s = values.front();
  s.max_s = values.back();
  const std::size_t n = values.size();
  s.median_s = (n % 2 == 1) ? values[n / 2]
                            : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  EmpiricalSample sample{values};
  s.modal_bin_center_s =
      histogram_pdf_estimate(sample, bin_width_s).modal_center;
  return s;
}

}  // namespace

Summary summarize(const SimResult& result, double bin_width_s) {
  if (result.trace.empty())
    throw std::invalid_argument("summarize: empty trace");

  std::vector<std::string> seg_order;
  std::map<std::string, std::vector<double>> seg_values;
  std::vector<double> totals;
  for (const auto& rec : result.trace) {
    if (rec.light_id.empty()) continue;  // undeliverable, no latency drawn
    for (const auto& [name, value] : rec.segments_s) {
      if (seg_values.find(name) == seg_values.end()) seg_order.push_back(name);
      seg_values[name].push_back(value);
    }
    totals.push_back(rec.total_s);
  }

  Summary summary;
  summary.records = result.trace.size();
  summary.delivery_ratio =
      result.emitted == 0
          ? 0.0
          : static_cast<double>(result.delivered) /
                static_cast<double>(result.emitted);
  for (const auto& name : seg_order)
    summary.per_segment.push_back(
        stats_for(name, seg_values[name], bin_width_s));
  if (!totals.empty())
    summary.total = stats_for("total", totals, bin_width_s);
  return summary;
}

}  // namespace vlcsim
