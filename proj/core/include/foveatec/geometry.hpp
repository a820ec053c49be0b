#ifndef FOVEATEC_GEOMETRY_HPP
#define FOVEATEC_GEOMETRY_HPP

#include <foveatec/errors.hpp>

namespace foveatec {

// Frame dimensions plus the macroblock tiling derived from them. The grid
// uses ceiling division, so the right/bottom edge may contain partial blocks.
struct FrameGeometry {
  int width_px = 0;
  int height_px = 0;
  int mb_size_px = 16;

  int mb_cols() const { return (width_px + mb_size_px - 1) / mb_size_px; }
  int mb_rows() const { return (height_px + mb_size_px - 1) / mb_size_px; }
  int mb_count() const { return mb_cols() * mb_rows(); }
  long pixel_count() const { return static_cast<long>(width_px) * height_px; }

  void validate() const {
    if (mb_size_px < 1)
      throw ConfigError("macroblock size must be >= 1");
    if (width_px < mb_size_px || height_px < mb_size_px)
      throw ConfigError("frame must be at least one macroblock in each dimension");
  }

  bool operator==(const FrameGeometry&) const = default;
};

// Macroblock grid coordinates: col along x, row along y.
struct MbIndex {
  int col = 0;
  int row = 0;
  bool operator==(const MbIndex&) const = default;
};

}  // namespace foveatec

#endif
