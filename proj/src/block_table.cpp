#include "lafs/block_table.hpp"

#include <cassert>

namespace lafs {

BlockPatternTable::BlockPatternTable(Value k) : k_(k) {
  if (k < 2) throw BadBlockSize("pattern table needs block size >= 2");
  // 2^(k-1) * k * (k-1) cells; beyond ~20 the table stops being a
  // reasonable in-memory object.
  if (k > 20) {
    throw BlockSizeTooLarge("pattern table for block size " +
                            std::to_string(k) + " would be oversized");
  }
  const std::uint64_t patterns = std::uint64_t{1} << (k - 1);
  answers_.assign(patterns * static_cast<std::uint64_t>(k) *
                      static_cast<std::uint64_t>(k - 1),
                  kNoPos);

  std::vector<Value> v(static_cast<std::size_t>(k));
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    v[0] = 0;
    for (Value o = 1; o < k; ++o) {
      v[o] = v[o - 1] + (((pattern >> (o - 1)) & 1) != 0 ? 1 : -1);
    }
    for (Pos start = 1; start <= k; ++start) {
      // Unit steps grow the running drop one at a time, so each depth
      // gets its first witness in a single pass.
      Value max_drop = 0;
      for (Pos o = start + 1; o <= k; ++o) {
        Value drop = v[start - 1] - v[o - 1];
        if (drop == max_drop + 1) {
          assert(drop <= k - 1);
          answers_[cell(pattern, start, drop)] = o;
          max_drop = drop;
        }
      }
    }
  }
}

Pos BlockPatternTable::query(std::uint64_t pattern, Pos start,
                             Value gap) const {
  if (k_ == 0) throw Error("pattern table not built");
  if (pattern >= (std::uint64_t{1} << (k_ - 1))) {
    throw Error("pattern code out of range");
  }
  check_position(start, k_);
  if (gap < 1 || gap > k_ - 1) {
    throw GapOutOfRange("gap " + std::to_string(gap) + " outside [1, " +
                        std::to_string(k_ - 1) + "]");
  }
  instrument::note_table_read();
  return answers_[cell(pattern, start, gap)];
}

std::uint64_t BlockPatternTable::encode(std::span<const Value> block,
                                        Value k) {
  const Pos len = static_cast<Pos>(block.size());
  if (len < 1 || len > k) throw Error("block slice length out of range");
  std::uint64_t code = 0;
  for (Pos b = 0; b + 1 < len; ++b) {
    Value step = block[b + 1] - block[b];
    if (step != 1 && step != -1) {
      throw StepNotUnit("block steps must be exactly one");
    }
    if (step == 1) code |= std::uint64_t{1} << b;
  }
  for (Pos b = len - 1; b < k - 1; ++b) {
    code |= std::uint64_t{1} << b;  // rising padding
  }
  return code;
}

}  // namespace lafs
