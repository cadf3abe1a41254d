#include <algorithm>

#include "doctest.h"
#include "vlcsim/phy.hpp"
#include "vlcsim/rng.hpp"

using namespace vlcsim;

namespace {
std::vector<std::uint8_t> random_payload(Rng& rng, std::size_t n) {
  std::vector<std::uint8_t> p(n);
  for (auto& b : p)
    b = static_cast<std::uint8_t>(rng.uniform(0.0, 256.0));
  return p;
}
}  // namespace

TEST_CASE("manchester encoding definition") {
  CHECK(manchester_encode({}).empty());
  CHECK(manchester_encode({1}) == std::vector<Chip>{Chip::kHi, Chip::kLo});
  CHECK(manchester_encode({0}) == std::vector<Chip>{Chip::kLo, Chip::kHi});
  CHECK(manchester_encode({1, 0, 1}) ==
        std::vector<Chip>{Chip::kHi, Chip::kLo, Chip::kLo, Chip::kHi,
                          Chip::kHi, Chip::kLo});
}

TEST_CASE("manchester decode errors") {
  CHECK(manchester_decode({Chip::kHi, Chip::kLo}) == std::vector<std::uint8_t>{1});
  CHECK_THROWS_WITH_AS(manchester_decode({Chip::kHi, Chip::kHi}),
                       doctest::Contains("pair 0"), std::runtime_error);
  CHECK_THROWS_WITH_AS(manchester_decode({Chip::kHi}),
                       doctest::Contains("framing"), std::runtime_error);
}

TEST_CASE("manchester roundtrip on a long random stream") {
  Rng rng(5);
  std::vector<std::uint8_t> bits(10000);
  for (auto& b : bits) b = rng.uniform() < 0.5 ? 0 : 1;
  CHECK(manchester_decode(manchester_encode(bits)) == bits);
}

TEST_CASE("ook modulation maps chips to +/-A") {
  PhyConfig cfg;
  cfg.data_rate_bps = 100000.0;
  const auto wf = ook_modulate({Chip::kHi, Chip::kLo}, cfg);
  CHECK(wf.samples == std::vector<double>{1.0, -1.0});
  CHECK(wf.chip_duration == doctest::Approx(5e-6));
  CHECK(ook_modulate({}, cfg).samples.empty());
}

TEST_CASE("manchester waveforms are DC balanced") {
  Rng rng(9);
  PhyConfig cfg;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint8_t> bits(200);
    for (auto& b : bits) b = rng.uniform() < 0.5 ? 0 : 1;
    const auto wf = ook_modulate(manchester_encode(bits), cfg);
    double sum = 0.0;
    std::size_t hi = 0;
    for (double s : wf.samples) {
      sum += s;
      if (s > 0.0) ++hi;
    }
    CHECK(sum == 0.0);
    CHECK(hi == wf.samples.size() / 2);
  }
}

TEST_CASE("frame roundtrip") {
  const std::vector<std::uint8_t> alarm{'A', 'L', 'A', 'R', 'M'};
  CHECK(parse_frame(serialize_frame(build_frame(alarm))) == alarm);

  Rng rng(17);
  const auto big = random_payload(rng, 255);
  CHECK(parse_frame(serialize_frame(build_frame(big))) == big);

  CHECK_THROWS(build_frame({}));
  CHECK_THROWS(build_frame(random_payload(rng, 256)));
}

TEST_CASE("frame roundtrip over random payloads") {
  Rng rng(23);
  for (int i = 0; i < 2000; ++i) {
    const auto payload =
        random_payload(rng, 1 + static_cast<std::size_t>(rng.uniform(0.0, 255.0)));
    CHECK(parse_frame(serialize_frame(build_frame(payload))) == payload);
  }
}

TEST_CASE("single bit flips in length or payload are CRC detected") {
  Rng rng(29);
  const auto frame = build_frame(random_payload(rng, 32));
  const auto bits = serialize_frame(frame);
  // Everything after the preamble is covered: length, payload, CRC itself.
  for (std::size_t pos = 16; pos < bits.size(); ++pos) {
    auto corrupted = bits;
    corrupted[pos] ^= 1;
    CHECK_THROWS(parse_frame(corrupted));
  }
}

TEST_CASE("missing preamble is a sync error") {
  const auto bits = serialize_frame(build_frame({0x42}));
  auto corrupted = bits;
  corrupted[0] ^= 1;
  CHECK_THROWS_WITH_AS(parse_frame(corrupted), doctest::Contains("sync"),
                       std::runtime_error);
}

TEST_CASE("airtime values and monotonicity") {
  PhyConfig cfg;
  cfg.data_rate_bps = 100000.0;
  CHECK(frame_airtime(240, cfg) == doctest::Approx(2.4e-3).epsilon(1e-15));
  CHECK(frame_airtime(310, cfg) == doctest::Approx(3.1e-3).epsilon(1e-15));
  PhyConfig slow;
  slow.data_rate_bps = 1.0;
  CHECK(frame_airtime(1, slow) == doctest::Approx(1.0));

  CHECK(frame_airtime(241, cfg) > frame_airtime(240, cfg));
  PhyConfig faster = cfg;
  faster.data_rate_bps = 200000.0;
  CHECK(frame_airtime(240, faster) < frame_airtime(240, cfg));
  CHECK_THROWS(frame_airtime(0, cfg));
}

TEST_CASE("hex serialization roundtrip") {
  const auto frame = build_frame({0xDE, 0xAD, 0x01});
  CHECK(frame_to_hex(frame) == "dead01");
  CHECK(frame_from_hex("dead01").payload == frame.payload);
  CHECK_THROWS(frame_from_hex("xyz"));
  CHECK_THROWS(frame_from_hex("abc"));
}

TEST_CASE("30-byte payload frame occupies 280 bits") {
  const auto frame = build_frame(std::vector<std::uint8_t>(30, 0xAB));
  CHECK(frame.bit_length() == 280);
  PhyConfig cfg;
  CHECK(frame_airtime(frame.bit_length(), cfg) == doctest::Approx(2.8e-3));
}
