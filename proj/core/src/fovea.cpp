#include <foveatec/fovea.hpp>

#include <algorithm>
#include <cmath>

namespace foveatec {

double WSpec::resolve_px(const FrameGeometry& geom) const {
  // Fractional W is relative to the frame width only, not the diagonal.
  double px = kind == Kind::AbsolutePx ? value : geom.width_px * value;
  if (!std::isfinite(px) || px <= 0.0)
    throw ConfigError("foveal size W must resolve to a positive pixel value");
  return px;
}

ResolvedFoveation resolve(const FoveationConfig& cfg, const FrameGeometry& geom) {
  geom.validate();
  if (!std::isfinite(cfg.qo_max) || cfg.qo_max < 0.0)
    throw ConfigError("qo_max must be a non-negative finite value");
  ResolvedFoveation r;
  r.qo_max = cfg.qo_max;
  r.w_px = cfg.w.resolve_px(geom);
  r.w_mb = r.w_px / geom.mb_size_px;
  return r;
}

double qp_offset(const ResolvedFoveation& cfg, MbIndex gaze, MbIndex mb) {
  if (cfg.w_mb <= 0.0)
    throw ConfigError("foveation config not resolved against a geometry");
  const double di = mb.col - gaze.col;
  const double dj = mb.row - gaze.row;
  const double d2 = di * di + dj * dj;
  // -expm1 rather than 1-exp: keeps full precision for cells near the gaze,
  // where the exponent is tiny.
  return cfg.qo_max * -std::expm1(-d2 / (2.0 * cfg.w_mb * cfg.w_mb));
}

MbIndex gaze_px_to_mb(const FrameGeometry& geom, double gaze_x_px, double gaze_y_px) {
  if (!std::isfinite(gaze_x_px) || !std::isfinite(gaze_y_px))
    throw InputError("gaze coordinates must be finite");
  const auto to_cell = [&](double px, int cells) {
    int c = static_cast<int>(std::floor(px / geom.mb_size_px));
    return std::clamp(c, 0, cells - 1);
  };
  return {to_cell(gaze_x_px, geom.mb_cols()), to_cell(gaze_y_px, geom.mb_rows())};
}

QpOffsetMap build_qp_map(const FoveationConfig& cfg, const FrameGeometry& geom,
                         double gaze_x_px, double gaze_y_px) {
  const ResolvedFoveation r = resolve(cfg, geom);
  QpOffsetMap map;
  map.geometry = geom;
  map.gaze_mb = gaze_px_to_mb(geom, gaze_x_px, gaze_y_px);
  map.qo_max = r.qo_max;
  map.offsets.resize(static_cast<std::size_t>(geom.mb_count()));
  const int cols = geom.mb_cols();
  const int rows = geom.mb_rows();
  for (int row = 0; row < rows; ++row)
    for (int col = 0; col < cols; ++col)
      map.offsets[static_cast<std::size_t>(row) * cols + col] =
          qp_offset(r, map.gaze_mb, {col, row});
  return map;
}

AcuityWeightMap acuity_weights(const FrameGeometry& geom, double gaze_x_px,
                               double gaze_y_px, double scale_px) {
  geom.validate();
  if (!std::isfinite(scale_px) || scale_px <= 0.0)
    throw ConfigError("acuity weight scale must be positive");
  if (!std::isfinite(gaze_x_px) || !std::isfinite(gaze_y_px))
    throw InputError("gaze coordinates must be finite");
  AcuityWeightMap map;
  map.geometry = geom;
  map.gaze_x_px = gaze_x_px;
  map.gaze_y_px = gaze_y_px;
  map.scale_px = scale_px;
  map.weights.resize(static_cast<std::size_t>(geom.pixel_count()));
  const double inv_2s2 = 1.0 / (2.0 * scale_px * scale_px);
  std::size_t idx = 0;
  for (int y = 0; y < geom.height_px; ++y) {
    const double dy = y - gaze_y_px;
    for (int x = 0; x < geom.width_px; ++x, ++idx) {
      const double dx = x - gaze_x_px;
      map.weights[idx] = std::exp(-(dx * dx + dy * dy) * inv_2s2);
    }
  }
  return map;
}

}  // namespace foveatec
