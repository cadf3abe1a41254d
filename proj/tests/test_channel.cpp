#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "vlcsim/channel.hpp"

using namespace vlcsim;

namespace {
constexpr double kDeg = 3.14159265358979323846 / 180.0;

const TransmitterParams kTx{1.0, 60.0 * kDeg};
const ReceiverOptics kRx{1e-4, 1.0, 1.5, 30.0 * kDeg, 0.4};
const NoiseModel kNoise{1e-8};
}  // namespace

TEST_CASE("lambertian order closed forms") {
  CHECK(lambertian_order(60.0 * kDeg) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lambertian_order(45.0 * kDeg) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(lambertian_order(1.0 * kDeg) > 1000.0);
  CHECK_THROWS(lambertian_order(0.0));
  CHECK_THROWS(lambertian_order(90.0 * kDeg));
}

TEST_CASE("gain is zero beyond the FOV") {
  const LinkGeometry geom{10.0, 0.0, 35.0 * kDeg};
  CHECK(los_channel_gain(geom, kTx, kRx) == 0.0);
}

TEST_CASE("inverse square law in distance") {
  const LinkGeometry near{10.0, 0.0, 0.0};
  const LinkGeometry far{20.0, 0.0, 0.0};
  const double ratio =
      los_channel_gain(far, kTx, kRx) / los_channel_gain(near, kTx, kRx);
  CHECK(std::fabs(ratio - 0.25) < 1e-12);
}

TEST_CASE("on-axis gain matches an independent evaluation of the formula") {
  // d=10 m, phi=psi=0, semiangle 60deg (m=1), area 1 cm^2, T_s=1, n=1.5,
  // FOV 30deg: H = (2 * 1e-4 / (2 pi 100)) * (2.25 / 0.25)
  const double expected = (2.0 * 1e-4 / (2.0 * 3.14159265358979323846 * 100.0)) *
                          (1.5 * 1.5 / (0.5 * 0.5));
  const LinkGeometry geom{10.0, 0.0, 0.0};
  CHECK(los_channel_gain(geom, kTx, kRx) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("snr follows the printed linear form") {
  CHECK(snr(0.0, kTx, kRx, kNoise) == 0.0);
  CHECK(snr(1e-6, TransmitterParams{1.0, 60 * kDeg}, ReceiverOptics{1e-4, 1.0, 1.5, 30 * kDeg, 0.4},
            NoiseModel{1e-8}) == doctest::Approx(40.0).epsilon(1e-12));
  TransmitterParams doubled = kTx;
  doubled.power_w *= 2.0;
  CHECK(snr(1e-6, doubled, kRx, kNoise) ==
        doctest::Approx(2.0 * snr(1e-6, kTx, kRx, kNoise)).epsilon(1e-15));
  // Squared electrical form behind the switch.
  const double lin = 0.4 * 1e-6 * 1.0;
  CHECK(snr(1e-6, kTx, kRx, kNoise, true) ==
        doctest::Approx(lin * lin / 1e-8).epsilon(1e-12));
}

TEST_CASE("snr linearity ratios are exact") {
  const double base = snr(2e-6, kTx, kRx, kNoise);
  ReceiverOptics rx2 = kRx;
  rx2.responsivity_a_per_w *= 3.0;
  CHECK(snr(2e-6, kTx, rx2, kNoise) / base == doctest::Approx(3.0).epsilon(1e-15));
  NoiseModel noisy{2e-8};
  CHECK(snr(2e-6, kTx, kRx, noisy) / base == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("ook bit error rate") {
  CHECK(ook_ber(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ook_ber(1e6) < 1e-100);
  // Q(1) via an independent erfc evaluation
  CHECK(ook_ber(1.0) ==
        doctest::Approx(0.5 * std::erfc(1.0 / std::sqrt(2.0))).epsilon(1e-14));
  CHECK_THROWS(ook_ber(-0.1));
  CHECK(ook_ber(1.0) > ook_ber(2.0));
}

TEST_CASE("frame error rate") {
  CHECK(frame_error_rate(0.0, 240) == 0.0);
  CHECK(frame_error_rate(1.0, 240) == 1.0);
  // log1p-based oracle for tiny ber
  const double expected = -std::expm1(240.0 * std::log1p(-1e-9));
  CHECK(frame_error_rate(1e-9, 240) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(frame_error_rate(1e-9, 240) == doctest::Approx(2.4e-7).epsilon(1e-4));
  CHECK(frame_error_rate(1e-4, 310) > frame_error_rate(1e-4, 240));
  CHECK(frame_error_rate(2e-4, 240) > frame_error_rate(1e-4, 240));
}

TEST_CASE("max range consistency and scaling") {
  const LinkGeometry at_1m{1.0, 0.0, 0.0};
  const double snr_1m = snr(los_channel_gain(at_1m, kTx, kRx), kTx, kRx, kNoise);
  CHECK(max_range(kTx, kRx, kNoise, 0.99 * snr_1m) >= 1.0);

  const double r1 = max_range(kTx, kRx, kNoise, 10.0);
  TransmitterParams quad = kTx;
  quad.power_w *= 4.0;
  const double r2 = max_range(quad, kRx, kNoise, 10.0);
  CHECK(r2 == doctest::Approx(2.0 * r1).epsilon(1e-3));

  CHECK(max_range(kTx, kRx, kNoise, 5.0) >= max_range(kTx, kRx, kNoise, 10.0));
  CHECK_THROWS(max_range(kTx, kRx, kNoise, 1e30));
}

TEST_CASE("default documented scenario reaches about 40 m") {
  // Non-paper values, tuned so the link closes around the reported
  // distance at gamma_min = 7.
  const double r = max_range(kTx, kRx, kNoise, 7.0);
  CHECK(r > 35.0);
  CHECK(r < 45.0);
}
