#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lafs/common.hpp"

namespace lafs {

/*
 * Shared find-smaller answers for every possible short unit-step block.
 *
 * A block of size k whose adjacent entries differ by exactly one is
 * determined, up to an additive shift, by its k - 1 step signs, encoded
 * as a (k - 1)-bit pattern (set bit = step up). Shifting changes the
 * values but not relative drops, so one table row per pattern answers
 * in-block queries for every block with that shape: entry (pattern,
 * start, gap) is the first offset after start whose value is at least
 * gap below the value at start, or none. Exactly 2^(k-1) * k * (k-1)
 * entries; one table read per query.
 *
 * Blocks shorter than k are padded with rising steps, which never adds
 * a reachable answer below any real start value.
 */
class BlockPatternTable {
 public:
  BlockPatternTable() = default;  // empty; query refuses until built
  explicit BlockPatternTable(Value k);

  // First offset h > start with value(h) <= value(start) - gap under the
  // given pattern, or kNoPos. gap must lie in [1, k - 1].
  Pos query(std::uint64_t pattern, Pos start, Value gap) const;

  // Pattern code for a block slice of length 1..k; short slices get
  // rising padding. Throws StepNotUnit unless adjacent values differ by
  // exactly one.
  static std::uint64_t encode(std::span<const Value> block, Value k);

  Value block_size() const { return k_; }
  bool empty() const { return k_ == 0; }
  std::uint64_t entry_count() const { return answers_.size(); }

 private:
  std::size_t cell(std::uint64_t pattern, Pos start, Value gap) const {
    return (pattern * static_cast<std::uint64_t>(k_) +
            static_cast<std::uint64_t>(start - 1)) *
               static_cast<std::uint64_t>(k_ - 1) +
           static_cast<std::uint64_t>(gap - 1);
  }

  Value k_ = 0;
  std::vector<Pos> answers_;
};

}  // namespace lafs
