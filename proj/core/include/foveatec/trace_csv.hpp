#ifndef FOVEATEC_TRACE_CSV_HPP
#define FOVEATEC_TRACE_CSV_HPP

#include <foveatec/gaze.hpp>

#include <string>
#include <string_view>

namespace foveatec {

// Gaze trace CSV: header `timestamp_us,x_px,y_px`, one sample per line,
// timestamps strictly increasing. All trace samples are valid by definition;
// invalid tracker output is not recorded.
GazeTrace parse_trace_csv(std::string_view text, const FrameGeometry& geometry);
std::string write_trace_csv(const GazeTrace& trace);

GazeTrace load_trace_csv(const std::string& path, const FrameGeometry& geometry);
void save_trace_csv(const std::string& path, const GazeTrace& trace);

}  // namespace foveatec

#endif
