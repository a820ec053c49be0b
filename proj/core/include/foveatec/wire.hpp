#ifndef FOVEATEC_WIRE_HPP
#define FOVEATEC_WIRE_HPP

#include <foveatec/gaze.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace foveatec {

// Gaze wire protocol: the stream opens with a 4-byte magic, followed by
// back-to-back fixed-size sample records. Everything little-endian.
//
//   record layout (20 bytes):
//     0  u64  timestamp_us
//     8  f32  x_px
//     12 f32  y_px
//     16 u32  flags, bit 0 = valid, all other bits reserved (must be zero)
inline constexpr std::array<std::uint8_t, 4> kWireMagic = {'F', 'V', 'G', '1'};
inline constexpr std::size_t kWireRecordSize = 20;

// Throws InputError on non-finite coordinates.
std::array<std::uint8_t, kWireRecordSize> encode_sample(const GazeSample& s);

// Inverse of encode_sample. Throws ProtocolError on anything but exactly 20
// bytes or on reserved flag bits.
GazeSample decode_sample(std::span<const std::uint8_t> record);

// Incremental stream decoder. Feed arbitrary chunks; complete samples become
// available as they close, partial trailing records stay pending. A wrong
// magic throws ProtocolError and poisons the reader.
class WireReader {
public:
  // Appends bytes and returns the samples completed by this chunk.
  std::vector<GazeSample> feed(std::span<const std::uint8_t> bytes);

  bool magic_seen() const { return magic_seen_; }
  std::size_t pending_bytes() const { return pending_.size(); }

private:
  std::vector<std::uint8_t> pending_;
  bool magic_seen_ = false;
  bool poisoned_ = false;
};

}  // namespace foveatec

#endif
