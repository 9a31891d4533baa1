#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tmc {

using VertexId = std::uint32_t;
using Timestamp = std::int64_t;
using EdgeSeq = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// Total order used wherever the edge sequence has to be strict: timestamp
// first, input ordinal as the tie break. Keys are unique because seq is.
struct TimeKey {
  Timestamp t = 0;
  EdgeSeq seq = 0;
  friend constexpr auto operator<=>(const TimeKey&, const TimeKey&) = default;
};

struct TemporalEdge {
  VertexId src = 0;
  VertexId dst = 0;
  Timestamp t = 0;
  EdgeSeq seq = 0;
  constexpr TimeKey key() const { return {t, seq}; }
  friend constexpr bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or motif text. line() is 1-based, 0 if not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct MotifError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// Estimator asked to run on a motif shape it does not support.
struct UnsupportedMotifError : Error {
  using Error::Error;
};

// Streaming input went backwards in time.
struct StreamOrderError : Error {
  using Error::Error;
};

// An internal self-check failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace tmc
