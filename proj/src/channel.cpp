#include "vlcsim/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "vlcsim/special_functions.hpp"

namespace vlcsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 0.5 * kPi;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}
}  // namespace

void TransmitterParams::validate() const {
  require(power_w > 0.0, "TransmitterParams: power must be > 0");
  require(half_power_semiangle_rad > 0.0 && half_power_semiangle_rad < kHalfPi,
          "TransmitterParams: half-power semiangle must lie in (0, pi/2)");
}

void ReceiverOptics::validate() const {
  require(area_m2 > 0.0, "ReceiverOptics: area must be > 0");
  require(filter_transmission > 0.0 && filter_transmission <= 1.0,
          "ReceiverOptics: filter transmission must lie in (0, 1]");
  require(concentrator_index >= 1.0,
          "ReceiverOptics: concentrator index must be >= 1");
  require(fov_rad > 0.0 && fov_rad <= kHalfPi,
          "ReceiverOptics: FOV must lie in (0, pi/2]");
  require(responsivity_a_per_w > 0.0,
          "ReceiverOptics: responsivity must be > 0");
}

void LinkGeometry::validate() const {
  require(distance_m > 0.0, "LinkGeometry: distance must be > 0");
  require(irradiance_angle_rad >= 0.0 && irradiance_angle_rad <= kHalfPi,
          "LinkGeometry: irradiance angle must lie in [0, pi/2]");
  require(incidence_angle_rad >= 0.0 && incidence_angle_rad <= kHalfPi,
          "LinkGeometry: incidence angle must lie in [0, pi/2]");
}

void NoiseModel::validate() const {
  require(noise_power_w > 0.0, "NoiseModel: noise power must be > 0");
}

double lambertian_order(double half_power_semiangle_rad) {
  require(half_power_semiangle_rad > 0.0 && half_power_semiangle_rad < kHalfPi,
          "lambertian_order: semiangle must lie in (0, pi/2)");
  return -std::log(2.0) / std::log(std::cos(half_power_semiangle_rad));
}

double los_channel_gain(const LinkGeometry& geom, const TransmitterParams& tx,
                        const ReceiverOptics& rx) {
  geom.validate();
  tx.validate();
  rx.validate();
  if (geom.incidence_angle_rad > rx.fov_rad) return 0.0;
  const double m = lambertian_order(tx.half_power_semiangle_rad);
  const double n = rx.concentrator_index;
  const double gain_conc = n * n / (std::sin(rx.fov_rad) * std::sin(rx.fov_rad));
  return (m + 1.0) * rx.area_m2 /
         (2.0 * kPi * geom.distance_m * geom.distance_m) *
         std::pow(std::cos(geom.irradiance_angle_rad), m) *
         rx.filter_transmission * gain_conc *
         std::cos(geom.incidence_angle_rad);
}

double snr(double channel_gain, const TransmitterParams& tx,
           const ReceiverOptics& rx, const NoiseModel& noise,
           bool squared_form) {
  tx.validate();
  rx.validate();
  noise.validate();
  require(channel_gain >= 0.0, "snr: channel gain must be >= 0");
  const double received = rx.responsivity_a_per_w * channel_gain * tx.power_w;
  return squared_form ? received * received / noise.noise_power_w
                      : received / noise.noise_power_w;
}

double ook_ber(double gamma) {
  require(gamma >= 0.0, "ook_ber: gamma must be >= 0");
  return q_function(std::sqrt(gamma));
}

double frame_error_rate(double ber, std::size_t frame_bits) {
  require(ber >= 0.0 && ber <= 1.0, "frame_error_rate: ber must lie in [0, 1]");
  require(frame_bits >= 1, "frame_error_rate: frame_bits must be >= 1");
  if (ber == 1.0) return 1.0;
  return -std::expm1(static_cast<double>(frame_bits) * std::log1p(-ber));
}

double max_range(const TransmitterParams& tx, const ReceiverOptics& rx,
                 const NoiseModel& noise, double gamma_min) {
  require(gamma_min > 0.0, "max_range: gamma_min must be > 0");
  auto snr_at = [&](double d) {
    LinkGeometry g{d, 0.0, 0.0};
    return snr(los_channel_gain(g, tx, rx), tx, rx, noise);
  };
  double lo = 1e-3;
  if (snr_at(lo) < gamma_min)
    throw std::runtime_error("max_range: threshold unreachable (infeasible link)");
  double hi = 1.0;
  while (snr_at(hi) >= gamma_min) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e7)
      throw std::runtime_error("max_range: no finite range below 10^7 m");
  }
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    (snr_at(mid) >= gamma_min ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace vlcsim
