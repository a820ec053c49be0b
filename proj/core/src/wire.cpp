#include <foveatec/wire.hpp>

#include <bit>
#include <cmath>
#include <cstring>

namespace foveatec {

namespace {

void put_u32(std::uint8_t* p, std::uint32_t v) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
  p[2] = static_cast<std::uint8_t>(v >> 16);
  p[3] = static_cast<std::uint8_t>(v >> 24);
}

void put_u64(std::uint8_t* p, std::uint64_t v) {
  put_u32(p, static_cast<std::uint32_t>(v));
  put_u32(p + 4, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

std::uint64_t get_u64(const std::uint8_t* p) {
  return static_cast<std::uint64_t>(get_u32(p)) |
         static_cast<std::uint64_t>(get_u32(p + 4)) << 32;
}

}  // namespace

std::array<std::uint8_t, kWireRecordSize> encode_sample(const GazeSample& s) {
  if (!std::isfinite(s.x_px) || !std::isfinite(s.y_px))
    throw InputError("cannot encode gaze sample with non-finite coordinates");
  std::array<std::uint8_t, kWireRecordSize> out{};
  put_u64(out.data(), s.timestamp_us);
  put_u32(out.data() + 8, std::bit_cast<std::uint32_t>(s.x_px));
  put_u32(out.data() + 12, std::bit_cast<std::uint32_t>(s.y_px));
  put_u32(out.data() + 16, s.valid ? 1u : 0u);
  return out;
}

GazeSample decode_sample(std::span<const std::uint8_t> record) {
  if (record.size() != kWireRecordSize)
    throw ProtocolError("gaze record must be exactly 20 bytes");
  const std::uint32_t flags = get_u32(record.data() + 16);
  if (flags & ~1u)
    throw ProtocolError("reserved gaze flag bits set");
  GazeSample s;
  s.timestamp_us = get_u64(record.data());
  s.x_px = std::bit_cast<float>(get_u32(record.data() + 8));
  s.y_px = std::bit_cast<float>(get_u32(record.data() + 12));
  s.valid = (flags & 1u) != 0;
  return s;
}

std::vector<GazeSample> WireReader::feed(std::span<const std::uint8_t> bytes) {
  if (poisoned_) throw ProtocolError("wire reader poisoned by earlier bad magic");
  pending_.insert(pending_.end(), bytes.begin(), bytes.end());
  std::vector<GazeSample> out;
  std::size_t pos = 0;
  if (!magic_seen_) {
    if (pending_.size() < kWireMagic.size()) return out;
    if (!std::equal(kWireMagic.begin(), kWireMagic.end(), pending_.begin())) {
      poisoned_ = true;
      throw ProtocolError("bad gaze stream magic");
    }
    magic_seen_ = true;
    pos = kWireMagic.size();
  }
  while (pending_.size() - pos >= kWireRecordSize) {
    out.push_back(decode_sample({pending_.data() + pos, kWireRecordSize}));
    pos += kWireRecordSize;
  }
  pending_.erase(pending_.begin(), pending_.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

}  // namespace foveatec
