#ifndef FOVEATEC_GAZE_HPP
#define FOVEATEC_GAZE_HPP

#include <foveatec/geometry.hpp>

#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace foveatec {

// One timestamped gaze point in display pixels, top-left origin, y down.
// Timestamps come from the producer's monotonic clock and are strictly
// increasing within a stream. Coordinates are binary32 because that is what
// travels on the wire.
struct GazeSample {
  std::uint64_t timestamp_us = 0;
  float x_px = 0.0f;
  float y_px = 0.0f;
  bool valid = true;

  bool operator==(const GazeSample&) const = default;
};

// Time-ordered gaze recording plus the display geometry it was captured on.
struct GazeTrace {
  FrameGeometry geometry;
  std::vector<GazeSample> samples;
};

// Parameters of the velocity-gated smoother and of staleness detection.
// alpha_min is the strongest smoothing applied to slow (fixational) motion;
// smoothing releases linearly with velocity and is fully off at
// v_ref_px_per_s. Samples older than max_age_us are flagged stale.
struct FilterParams {
  double alpha_min = 0.2;
  double v_ref_px_per_s = 1000.0;
  std::uint64_t max_age_us = 200000;

  void validate() const {
    if (!(alpha_min > 0.0) || alpha_min > 1.0)
      throw ConfigError("alpha_min must be in (0, 1]");
    if (!(v_ref_px_per_s > 0.0))
      throw ConfigError("v_ref_px_per_s must be positive");
  }
};

// Exponential smoothing gated by gaze velocity: slow drift is smoothed at
// alpha_min, fast saccades pass through unchanged. Output keeps new_in's
// timestamp.
GazeSample light_filter(const GazeSample& prev_out, const GazeSample& new_in,
                        const FilterParams& p);

struct LatestGaze {
  GazeSample sample;
  bool stale = false;  // age at now_us exceeded max_age_us
};

// Newest valid sample with timestamp <= now_us; selection depends only on
// timestamps, not arrival order. Empty result means nothing usable was ever
// received; a stale result is still returned and the caller decides policy.
std::optional<LatestGaze> latest_valid(std::span<const GazeSample> buffer,
                                       std::uint64_t now_us, const FilterParams& p);

// Single-slot published snapshot of the newest gaze sample. One writer (the
// network receiver) and one reader (the encoder tick) on different threads.
// Seqlock: the writer never blocks, the reader retries on a torn read. The
// payload is held in three relaxed atomic words; the version word provides
// the acquire/release ordering.
class GazeSnapshotSlot {
public:
  // Publishes if newer than the current sample (latest-wins under reordering).
  void publish(const GazeSample& s) {
    if (has_value_.load(std::memory_order_relaxed) &&
        s.timestamp_us <= load_words()[0])
      return;
    version_.fetch_add(1, std::memory_order_release);  // odd: write in progress
    const auto w = pack(s);
    word_[0].store(w[0], std::memory_order_relaxed);
    word_[1].store(w[1], std::memory_order_relaxed);
    word_[2].store(w[2], std::memory_order_relaxed);
    version_.fetch_add(1, std::memory_order_release);
    has_value_.store(true, std::memory_order_release);
  }

  std::optional<GazeSample> read() const {
    if (!has_value_.load(std::memory_order_acquire)) return std::nullopt;
    for (;;) {
      const std::uint64_t v0 = version_.load(std::memory_order_acquire);
      if (v0 & 1) continue;
      const auto w = load_words();
      std::atomic_thread_fence(std::memory_order_acquire);
      if (version_.load(std::memory_order_relaxed) == v0) return unpack(w);
    }
  }

private:
  using Words = std::array<std::uint64_t, 3>;

  static Words pack(const GazeSample& s) {
    return {s.timestamp_us,
            static_cast<std::uint64_t>(std::bit_cast<std::uint32_t>(s.x_px)) |
                (static_cast<std::uint64_t>(std::bit_cast<std::uint32_t>(s.y_px)) << 32),
            s.valid ? 1ull : 0ull};
  }
  static GazeSample unpack(const Words& w) {
    GazeSample s;
    s.timestamp_us = w[0];
    s.x_px = std::bit_cast<float>(static_cast<std::uint32_t>(w[1] & 0xffffffffu));
    s.y_px = std::bit_cast<float>(static_cast<std::uint32_t>(w[1] >> 32));
    s.valid = (w[2] & 1) != 0;
    return s;
  }
  Words load_words() const {
    return {word_[0].load(std::memory_order_relaxed),
            word_[1].load(std::memory_order_relaxed),
            word_[2].load(std::memory_order_relaxed)};
  }

  std::atomic<std::uint64_t> version_{0};
  std::atomic<std::uint64_t> word_[3]{};
  std::atomic<bool> has_value_{false};
};

}  // namespace foveatec

#endif
