#include <foveatec/trace_csv.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace foveatec {

namespace {

constexpr std::string_view kHeader = "timestamp_us,x_px,y_px";

std::string_view next_line(std::string_view& rest) {
  const std::size_t nl = rest.find('\n');
  std::string_view line = nl == std::string_view::npos ? rest : rest.substr(0, nl);
  rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

GazeTrace parse_trace_csv(std::string_view text, const FrameGeometry& geometry) {
  geometry.validate();
  GazeTrace trace;
  trace.geometry = geometry;
  std::string_view rest = text;
  std::size_t line_no = 1;
  if (next_line(rest) != kHeader)
    throw ParseError("expected gaze trace header 'timestamp_us,x_px,y_px'", line_no);
  while (!rest.empty()) {
    ++line_no;
    const std::string_view line = next_line(rest);
    if (line.empty()) continue;  // tolerate a trailing newline
    GazeSample s;
    char trailing = 0;
    unsigned long long ts = 0;
    const std::string buf(line);
    if (std::sscanf(buf.c_str(), "%llu,%f,%f%c", &ts, &s.x_px, &s.y_px, &trailing) != 3)
      throw ParseError("malformed gaze trace row", line_no);
    if (!std::isfinite(s.x_px) || !std::isfinite(s.y_px))
      throw ParseError("non-finite gaze coordinates", line_no);
    s.timestamp_us = ts;
    s.valid = true;
    if (!trace.samples.empty() && s.timestamp_us <= trace.samples.back().timestamp_us)
      throw ParseError("timestamps must be strictly increasing", line_no);
    trace.samples.push_back(s);
  }
  return trace;
}

std::string write_trace_csv(const GazeTrace& trace) {
  std::string out(kHeader);
  out += '\n';
  char row[96];
  for (const GazeSample& s : trace.samples) {
    std::snprintf(row, sizeof row, "%llu,%.4f,%.4f\n",
                  static_cast<unsigned long long>(s.timestamp_us),
                  static_cast<double>(s.x_px), static_cast<double>(s.y_px));
    out += row;
  }
  return out;
}

GazeTrace load_trace_csv(const std::string& path, const FrameGeometry& geometry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open gaze trace: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_trace_csv(ss.str(), geometry);
}

void save_trace_csv(const std::string& path, const GazeTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write gaze trace: " + path);
  out << write_trace_csv(trace);
}

}  // namespace foveatec
