#ifndef FOVEATEC_FOVEA_HPP
#define FOVEATEC_FOVEA_HPP

#include <foveatec/geometry.hpp>

#include <vector>

namespace foveatec {

// Foveal size W, either in absolute pixels or as a fraction of the frame
// width FW ("fw/8" on the CLI). Resolved against a FrameGeometry before use.
struct WSpec {
  enum class Kind { AbsolutePx, FwFraction };
  Kind kind = Kind::FwFraction;
  double value = 1.0 / 8.0;

  static WSpec absolute_px(double px) { return {Kind::AbsolutePx, px}; }
  static WSpec fw_fraction(double f) { return {Kind::FwFraction, f}; }

  double resolve_px(const FrameGeometry& geom) const;
  bool operator==(const WSpec&) const = default;
};

struct FoveationConfig {
  double qo_max = 16.0;           // QP units, amplitude of the offset surface
  WSpec w = WSpec::fw_fraction(1.0 / 8.0);
};

// FoveationConfig bound to a geometry: W is known in pixels and in
// macroblock units. All offset math runs on this.
struct ResolvedFoveation {
  double qo_max = 0.0;
  double w_px = 0.0;
  double w_mb = 0.0;
};

ResolvedFoveation resolve(const FoveationConfig& cfg, const FrameGeometry& geom);

// QP offset of macroblock `mb` given the gaze macroblock, Gaussian in the
// Euclidean distance between cell indices:
//
//   offset = qo_max * (1 - exp(-((i-x)^2 + (j-y)^2) / (2 * w_mb^2)))
//
// Zero at the gaze cell, approaching qo_max far away; the offset reaches
// (1 - e^-0.5) ~= 39.3% of qo_max at distance exactly w_mb.
double qp_offset(const ResolvedFoveation& cfg, MbIndex gaze, MbIndex mb);

// Pixel gaze coordinates to a clamped macroblock index. Off-screen gaze maps
// to the nearest boundary cell rather than erroring; trackers do report
// glances outside the display.
MbIndex gaze_px_to_mb(const FrameGeometry& geom, double gaze_x_px, double gaze_y_px);

// Per-macroblock offset grid for one frame, with the gaze anchor it was
// built from. Row-major: offsets[row * mb_cols + col].
struct QpOffsetMap {
  FrameGeometry geometry;
  MbIndex gaze_mb;
  double qo_max = 0.0;
  std::vector<double> offsets;

  double at(int row, int col) const { return offsets[static_cast<std::size_t>(row) * geometry.mb_cols() + col]; }
};

QpOffsetMap build_qp_map(const FoveationConfig& cfg, const FrameGeometry& geom,
                         double gaze_x_px, double gaze_y_px);

// Per-pixel relative acuity, Gaussian in pixel distance from the gaze point.
// weights[y * width + x] in (0, 1], exactly 1 at the gaze pixel. scale_px is
// the Gaussian scale, normally the encode's W in pixels.
struct AcuityWeightMap {
  FrameGeometry geometry;
  double gaze_x_px = 0.0;
  double gaze_y_px = 0.0;
  double scale_px = 0.0;
  std::vector<double> weights;

  double at(int x, int y) const { return weights[static_cast<std::size_t>(y) * geometry.width_px + x]; }
};

AcuityWeightMap acuity_weights(const FrameGeometry& geom, double gaze_x_px,
                               double gaze_y_px, double scale_px);

}  // namespace foveatec

#endif
