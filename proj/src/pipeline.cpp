#include "vlcsim/pipeline.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace vlcsim {

void Segment::validate() const {
  if (name.empty()) throw std::invalid_argument("Segment: name must be nonempty");
  if (loss_prob < 0.0 || loss_prob > 1.0)
    throw std::invalid_argument("Segment: loss_prob must lie in [0, 1]");
  if (const auto* s = std::get_if<StochasticSegment>(&model)) {
    s->spec.validate();
    if (!(s->trunc_lo_s >= 0.0 && s->trunc_lo_s < s->trunc_hi_s))
      throw std::invalid_argument(
          "Segment: truncation bounds require 0 <= lo < hi");
  } else if (const auto* d = std::get_if<DeterministicSegment>(&model)) {
    if (d->value_s < 0.0)
      throw std::invalid_argument("Segment: deterministic value must be >= 0");
  } else if (const auto* a = std::get_if<AirtimeSegment>(&model)) {
    a->phy.validate();
    if (a->decode_delay_s < 0.0)
      throw std::invalid_argument("Segment: decode delay must be >= 0");
  }
}

void PipelineConfig::validate() const {
  if (segments.empty())
    throw std::invalid_argument("PipelineConfig: at least one segment required");
  std::set<std::string> names;
  for (const auto& seg : segments) {
    seg.validate();
    if (!names.insert(seg.name).second)
      throw std::invalid_argument("PipelineConfig: duplicate segment name '" +
                                  seg.name + "'");
  }
}

double sample_segment(const Segment& segment, Rng& rng, const Frame* frame) {
  segment.validate();
  if (const auto* s = std::get_if<StochasticSegment>(&segment.model)) {
    const double mass =
        s->spec.cdf(s->trunc_hi_s) - s->spec.cdf(s->trunc_lo_s);
    if (mass < 1e-9)
      throw std::runtime_error("sample_segment: degenerate truncation, segment '" +
                               segment.name + "'");
    for (;;) {
      const double draw = s->spec.sample(rng);
      if (draw >= s->trunc_lo_s && draw <= s->trunc_hi_s) return draw;
    }
  }
  if (const auto* d = std::get_if<DeterministicSegment>(&segment.model))
    return d->value_s;
  const auto& a = std::get<AirtimeSegment>(segment.model);
  if (frame == nullptr)
    throw std::runtime_error(
        "sample_segment: airtime segment '" + segment.name +
        "' requires a frame (configuration error)");
  return frame_airtime(frame->bit_length(), a.phy) + a.decode_delay_s;
}

LatencySample end_to_end(const PipelineConfig& cfg, Rng& rng,
                         const Frame& frame) {
  cfg.validate();
  LatencySample sample;
  sample.per_segment.reserve(cfg.segments.size());
  for (const auto& seg : cfg.segments) {
    const double latency = sample_segment(seg, rng, &frame);
    sample.per_segment.emplace_back(seg.name, latency);
    sample.total_s += latency;
    if (seg.loss_prob > 0.0 && rng.uniform() < seg.loss_prob)
      sample.lost = true;
  }
  return sample;
}

}  // namespace vlcsim
