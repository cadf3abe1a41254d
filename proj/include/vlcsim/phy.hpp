#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vlcsim {

enum class Chip : std::uint8_t { kLo = 0, kHi = 1 };

struct PhyConfig {
  double data_rate_bps = 100000.0;  // information bit rate, post line coding
  double amplitude = 1.0;           // modulation depth around the mean level
  int preamble_bits = 16;

  void validate() const;
};

// Frame layout: 16-bit preamble 0xAA55, 8-bit payload length, payload
// (1..255 bytes), CRC-16/CCITT-FALSE over length + payload.
struct Frame {
  std::vector<std::uint8_t> payload;

  std::size_t bit_length() const { return 16 + 8 + 8 * payload.size() + 16; }
};

constexpr std::uint16_t kPreamble = 0xAA55;

std::uint16_t crc16_ccitt_false(const std::uint8_t* data, std::size_t len);

Frame build_frame(const std::vector<std::uint8_t>& payload);
std::vector<std::uint8_t> serialize_frame(const Frame& frame);  // bits, 1 per byte
std::vector<std::uint8_t> parse_frame(const std::vector<std::uint8_t>& bits);

// Bit 0 -> (LO, HI); bit 1 -> (HI, LO).
std::vector<Chip> manchester_encode(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> manchester_decode(const std::vector<Chip>& chips);

struct IntensityWaveform {
  std::vector<double> samples;   // intensity offsets, each +A or -A
  double chip_duration = 0.0;    // seconds
};

IntensityWaveform ook_modulate(const std::vector<Chip>& chips,
                               const PhyConfig& cfg);

// frame_bits / data_rate.  The rate is the information bit rate; the chip
// rate under Manchester is twice that.
double frame_airtime(std::size_t frame_bits, const PhyConfig& cfg);

std::string frame_to_hex(const Frame& frame);
Frame frame_from_hex(const std::string& hex);

// Writes (time_s, intensity) rows for external plotting.
void waveform_to_csv(const IntensityWaveform& wf, const std::string& path);

}  // namespace vlcsim
