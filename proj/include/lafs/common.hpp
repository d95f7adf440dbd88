#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lafs {

using Value = std::int64_t;
using Pos = std::int64_t;     // 1-based position in a query array
using NodeId = std::int64_t;  // 0-based tree node id

inline constexpr Pos kNoPos = -1;
inline constexpr NodeId kNoNode = -1;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct EmptyArray : Error { using Error::Error; };
struct StepBoundViolated : Error { using Error::Error; };
struct StepNotUnit : Error { using Error::Error; };
struct PositionOutOfRange : Error { using Error::Error; };
struct HopOutOfRange : Error { using Error::Error; };
struct BadBlockSize : Error { using Error::Error; };
struct BlockSizeTooLarge : Error { using Error::Error; };
struct GapOutOfRange : Error { using Error::Error; };
struct BadDepth : Error { using Error::Error; };
struct SerializeError : Error { using Error::Error; };

// Throws PositionOutOfRange unless 1 <= i <= n.
void check_position(Pos i, Pos n);

// Largest p with 2^p <= v. Requires v >= 1.
inline int floor_log2(std::uint64_t v) { return std::bit_width(v) - 1; }

// Smallest p with 2^p >= v. Requires v >= 1.
inline int ceil_log2(std::uint64_t v) {
  return v <= 1 ? 0 : std::bit_width(v - 1);
}

// Floor division; the bare / operator truncates toward zero for
// negative numerators. Requires b > 0.
inline Value floor_div(Value a, Value b) {
  Value q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

namespace instrument {

// Stored-table cells read by queries since the last take(). Reads of a
// query array's own values are not counted. Thread-local so concurrent
// readers do not interfere; incrementing never affects query results.
inline thread_local std::uint64_t table_reads = 0;

inline void note_table_read() noexcept { ++table_reads; }

inline std::uint64_t take_table_reads() noexcept {
  std::uint64_t v = table_reads;
  table_reads = 0;
  return v;
}

}  // namespace instrument

}  // namespace lafs
