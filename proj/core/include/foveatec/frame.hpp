#ifndef FOVEATEC_FRAME_HPP
#define FOVEATEC_FRAME_HPP

#include <foveatec/geometry.hpp>

#include <cstdint>
#include <vector>

namespace foveatec {

// Raw 8-bit picture: full-resolution luma plus optional 4:2:0 chroma.
// Chroma planes are (width+1)/2 x (height+1)/2.
struct Frame {
  FrameGeometry geometry;
  std::vector<std::uint8_t> luma;
  std::vector<std::uint8_t> cb;
  std::vector<std::uint8_t> cr;

  int chroma_width() const { return (geometry.width_px + 1) / 2; }
  int chroma_height() const { return (geometry.height_px + 1) / 2; }
  bool has_chroma() const { return !cb.empty(); }

  std::uint8_t luma_at(int x, int y) const {
    return luma[static_cast<std::size_t>(y) * geometry.width_px + x];
  }

  // Zero-filled planes of the right sizes.
  static Frame blank(const FrameGeometry& geom, bool with_chroma);

  void validate() const;
};

}  // namespace foveatec

#endif
