#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vlcsim/distributions.hpp"
#include "vlcsim/phy.hpp"
#include "vlcsim/rng.hpp"

namespace vlcsim {

// Stochastic segment: draws from the distribution by rejection until the
// value lies inside [trunc_lo_s, trunc_hi_s].
struct StochasticSegment {
  DistributionSpec spec;
  double trunc_lo_s = 0.0;
  double trunc_hi_s = 0.0;
};

struct DeterministicSegment {
  double value_s = 0.0;
};

// Airtime of the frame at the configured rate, plus an optional fixed
// receiver decode delay.
struct AirtimeSegment {
  PhyConfig phy;
  double decode_delay_s = 0.0;
};

struct Segment {
  std::string name;
  std::variant<StochasticSegment, DeterministicSegment, AirtimeSegment> model;
  double loss_prob = 0.0;  // optional per-segment loss, for sensitivity runs

  void validate() const;
};

struct PipelineConfig {
  std::vector<Segment> segments;

  void validate() const;  // nonempty, unique names, nested invariants
};

struct LatencySample {
  std::vector<std::pair<std::string, double>> per_segment;  // seconds
  double total_s = 0.0;
  bool lost = false;
};

double sample_segment(const Segment& segment, Rng& rng, const Frame* frame);

LatencySample end_to_end(const PipelineConfig& cfg, Rng& rng,
                         const Frame& frame);

}  // namespace vlcsim
