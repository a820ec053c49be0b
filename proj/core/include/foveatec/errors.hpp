#ifndef FOVEATEC_ERRORS_HPP
#define FOVEATEC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foveatec {

// Base for everything thrown by this library. The CLI maps subclasses to
// exit codes: InputError and friends -> 2, ProtocolError/SessionError -> 3.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad caller-supplied data: invalid config, malformed files, geometry
// mismatches, out-of-domain arguments.
class InputError : public Error {
public:
  using Error::Error;
};

// Invalid configuration values (non-positive W, base_q below floor, ...).
class ConfigError : public InputError {
public:
  using InputError::InputError;
};

// Text input that failed to parse; carries the 1-based line number.
class ParseError : public InputError {
public:
  ParseError(const std::string& what, std::size_t line)
      : InputError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Unsupported or malformed binary/container format (y4m, pgm).
class FormatError : public InputError {
public:
  using InputError::InputError;
};

// Corrupt or truncated codec bitstream; carries the byte offset at which
// decoding failed.
class DecodeError : public InputError {
public:
  DecodeError(const std::string& what, std::size_t byte_offset)
      : InputError(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

private:
  std::size_t byte_offset_;
};

// Gaze wire protocol violations: bad magic, reserved flag bits, short records.
class ProtocolError : public Error {
public:
  using Error::Error;
};

// Networked session failures: bind/connect errors, lost connections.
class SessionError : public Error {
public:
  using Error::Error;
};

}  // namespace foveatec

#endif
