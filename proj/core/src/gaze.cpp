#include <foveatec/gaze.hpp>

#include <algorithm>
#include <cmath>

namespace foveatec {

GazeSample light_filter(const GazeSample& prev_out, const GazeSample& new_in,
                        const FilterParams& p) {
  p.validate();
  if (new_in.timestamp_us <= prev_out.timestamp_us)
    throw InputError("light_filter requires strictly increasing timestamps");
  const double dt_s = (new_in.timestamp_us - prev_out.timestamp_us) * 1e-6;
  const double dx = static_cast<double>(new_in.x_px) - prev_out.x_px;
  const double dy = static_cast<double>(new_in.y_px) - prev_out.y_px;
  const double v = std::hypot(dx, dy) / dt_s;
  const double alpha = std::clamp(v / p.v_ref_px_per_s, p.alpha_min, 1.0);
  GazeSample out = new_in;
  out.x_px = static_cast<float>(alpha * new_in.x_px + (1.0 - alpha) * prev_out.x_px);
  out.y_px = static_cast<float>(alpha * new_in.y_px + (1.0 - alpha) * prev_out.y_px);
  return out;
}

std::optional<LatestGaze> latest_valid(std::span<const GazeSample> buffer,
                                       std::uint64_t now_us, const FilterParams& p) {
  const GazeSample* best = nullptr;
  for (const GazeSample& s : buffer) {
    if (!s.valid || s.timestamp_us > now_us) continue;
    if (!best || s.timestamp_us > best->timestamp_us) best = &s;
  }
  if (!best) return std::nullopt;
  return LatestGaze{*best, now_us - best->timestamp_us > p.max_age_us};
}

}  // namespace foveatec
