#pragma once

#include <cstddef>

namespace vlcsim {

struct TransmitterParams {
  double power_w = 1.0;                  // optical transmit power P_s
  double half_power_semiangle_rad = 0.0; // Phi_1/2, in (0, pi/2)

  void validate() const;
};

struct ReceiverOptics {
  double area_m2 = 1e-4;            // photodetector area
  double filter_transmission = 1.0; // T_s in (0, 1]
  double concentrator_index = 1.5;  // refractive index n >= 1
  double fov_rad = 0.0;             // Psi_c in (0, pi/2]
  double responsivity_a_per_w = 0.4;

  void validate() const;
};

struct LinkGeometry {
  double distance_m = 1.0;
  double irradiance_angle_rad = 0.0;  // phi
  double incidence_angle_rad = 0.0;   // psi

  void validate() const;
};

struct NoiseModel {
  double noise_power_w = 1e-8;  // cumulative noise power xi

  void validate() const;
};

// m = -ln 2 / ln(cos Phi_1/2).
double lambertian_order(double half_power_semiangle_rad);

// Generalized-Lambertian LOS gain with an ideal non-imaging concentrator;
// zero beyond the receiver FOV.
double los_channel_gain(const LinkGeometry& geom, const TransmitterParams& tx,
                        const ReceiverOptics& rx);

// gamma = R_PD * H * P_s / xi.  With squared_form, the conventional
// electrical SNR (R_PD * H * P_s)^2 / xi is returned instead.
double snr(double channel_gain, const TransmitterParams& tx,
           const ReceiverOptics& rx, const NoiseModel& noise,
           bool squared_form = false);

// OOK hard-decision bit error probability Q(sqrt(gamma)).
double ook_ber(double gamma);

// 1 - (1 - ber)^frame_bits, computed via log1p for small ber.
double frame_error_rate(double ber, std::size_t frame_bits);

// Largest on-axis distance with SNR >= gamma_min, bisected to 1 mm.
// Throws if the threshold is unreachable even at d -> 0.
double max_range(const TransmitterParams& tx, const ReceiverOptics& rx,
                 const NoiseModel& noise, double gamma_min);

}  // namespace vlcsim
