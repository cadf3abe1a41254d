#include "vlcsim/phy.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace vlcsim {

void PhyConfig::validate() const {
  if (!(data_rate_bps > 0.0))
    throw std::invalid_argument("PhyConfig: data_rate_bps must be > 0");
  if (!(amplitude > 0.0))
    throw std::invalid_argument("PhyConfig: amplitude must be > 0");
  if (preamble_bits <= 0)
    throw std::invalid_argument("PhyConfig: preamble_bits must be > 0");
}

std::uint16_t crc16_ccitt_false(const std::uint8_t* data, std::size_t len) {
  std::uint16_t crc = 0xFFFF;
  for (std::size_t i = 0; i < len; ++i) {
    crc ^= static_cast<std::uint16_t>(data[i]) << 8;
    for (int b = 0; b < 8; ++b)
      crc = (crc & 0x8000) ? static_cast<std::uint16_t>((crc << 1) ^ 0x1021)
                           : static_cast<std::uint16_t>(crc << 1);
  }
  return crc;
}

Frame build_frame(const std::vector<std::uint8_t>& payload) {
  if (payload.empty() || payload.size() > 255)
    throw std::invalid_argument("build_frame: payload must be 1..255 bytes");
  return Frame{payload};
}

namespace {

void push_bits(std::vector<std::uint8_t>& bits, std::uint32_t value,
               int nbits) {
  for (int i = nbits - 1; i >= 0; --i)
    bits.push_back(static_cast<std::uint8_t>((value >> i) & 1u));
}

std::uint32_t pop_bits(const std::vector<std::uint8_t>& bits,
                       std::size_t& pos, int nbits) {
  std::uint32_t v = 0;
  for (int i = 0; i < nbits; ++i) v = (v << 1) | (bits[pos++] & 1u);
  return v;
}

}  // namespace

std::vector<std::uint8_t> serialize_frame(const Frame& frame) {
  std::vector<std::uint8_t> bits;
  bits.reserve(frame.bit_length());
  push_bits(bits, kPreamble, 16);
  push_bits(bits, static_cast<std::uint32_t>(frame.payload.size()), 8);
  for (std::uint8_t byte : frame.payload) push_bits(bits, byte, 8);

  std::vector<std::uint8_t> crc_input;
  crc_input.push_back(static_cast<std::uint8_t>(frame.payload.size()));
  crc_input.insert(crc_input.end(), frame.payload.begin(), frame.payload.end());
  push_bits(bits, crc16_ccitt_false(crc_input.data(), crc_input.size()), 16);
  return bits;
}

std::vector<std::uint8_t> parse_frame(const std::vector<std::uint8_t>& bits) {
  if (bits.size() < 16 + 8 + 8 + 16)
    throw std::runtime_error("parse_frame: truncated frame");
  std::size_t pos = 0;
  if (pop_bits(bits, pos, 16) != kPreamble)
    throw std::runtime_error("parse_frame: preamble not found (sync error)");
  const std::uint32_t len = pop_bits(bits, pos, 8);
  if (len == 0) throw std::runtime_error("parse_frame: zero payload length");
  if (bits.size() != 16 + 8 + 8 * len + 16)
    throw std::runtime_error("parse_frame: length field does not match frame size");

  std::vector<std::uint8_t> crc_input;
  crc_input.push_back(static_cast<std::uint8_t>(len));
  for (std::uint32_t i = 0; i < len; ++i)
    crc_input.push_back(static_cast<std::uint8_t>(pop_bits(bits, pos, 8)));
  const auto crc = static_cast<std::uint16_t>(pop_bits(bits, pos, 16));
  if (crc != crc16_ccitt_false(crc_input.data(), crc_input.size()))
    throw std::runtime_error("parse_frame: CRC mismatch (integrity error)");
  return {crc_input.begin() + 1, crc_input.end()};
}

std::vector<Chip> manchester_encode(const std::vector<std::uint8_t>& bits) {
  std::vector<Chip> chips;
  chips.reserve(2 * bits.size());
  for (std::uint8_t bit : bits) {
    if (bit) {
      chips.push_back(Chip::kHi);
      chips.push_back(Chip::kLo);
    } else {
      chips.push_back(Chip::kLo);
      chips.push_back(Chip::kHi);
    }
  }
  return chips;
}

std::vector<std::uint8_t> manchester_decode(const std::vector<Chip>& chips) {
  if (chips.size() % 2 != 0)
    throw std::runtime_error("manchester_decode: odd chip count (framing error)");
  std::vector<std::uint8_t> bits;
  bits.reserve(chips.size() / 2);
  for (std::size_t i = 0; i < chips.size(); i += 2) {
    const Chip a = chips[i], b = chips[i + 1];
    if (a == Chip::kHi && b == Chip::kLo) {
      bits.push_back(1);
    } else if (a == Chip::kLo && b == Chip::kHi) {
      bits.push_back(0);
    } else {
      throw std::runtime_error("manchester_decode: code violation at pair " +
                               std::to_string(i / 2));
    }
  }
  return bits;
}

IntensityWaveform ook_modulate(const std::vector<Chip>& chips,
                               const PhyConfig& cfg) {
  cfg.validate();
  IntensityWaveform wf;
  wf.chip_duration = 1.0 / (2.0 * cfg.data_rate_bps);
  wf.samples.reserve(chips.size());
  for (Chip c : chips)
    wf.samples.push_back(c == Chip::kHi ? cfg.amplitude : -cfg.amplitude);
  return wf;
}

double frame_airtime(std::size_t frame_bits, const PhyConfig& cfg) {
  cfg.validate();
  if (frame_bits < 1)
    throw std::invalid_argument("frame_airtime: frame_bits must be >= 1");
  return static_cast<double>(frame_bits) / cfg.data_rate_bps;
}

std::string frame_to_hex(const Frame& frame) {
  static const char* kDigits = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * frame.payload.size());
  for (std::uint8_t b : frame.payload) {
    hex.push_back(kDigits[b >> 4]);
    hex.push_back(kDigits[b & 0xF]);
  }
  return hex;
}

Frame frame_from_hex(const std::string& hex) {
  if (hex.empty() || hex.size() % 2 != 0)
    throw std::invalid_argument("frame_from_hex: hex string length must be even and nonzero");
  auto nibble = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw std::invalid_argument("frame_from_hex: invalid hex digit");
  };
  std::vector<std::uint8_t> payload;
  payload.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    payload.push_back(static_cast<std::uint8_t>((nibble(hex[i]) << 4) |
                                                nibble(hex[i + 1])));
  return build_frame(payload);
}

void waveform_to_csv(const IntensityWaveform& wf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("waveform_to_csv: cannot open " + path);
  out << "time_s,intensity\n";
  char buf[64];
  for (std::size_t i = 0; i < wf.samples.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g\n",
                  static_cast<double>(i) * wf.chip_duration, wf.samples[i]);
    out << buf;
  }
}

}  // namespace vlcsim
