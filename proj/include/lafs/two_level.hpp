#pragma once

#include <cstdint>
#include <vector>

#include "lafs/basic_index.hpp"
#include "lafs/block_table.hpp"

namespace lafs {

// Largest power of two not above max(2, log2(n) / 4); the block size
// used when callers do not pick one.
Value choose_block_size(Pos n);

/*
 * Fixed-size block view of a query array: per-block minima, their
 * per-k quotients, and per-position minima to the end of the owning
 * block. On unit-step arrays adjacent minima differ by at most k and
 * adjacent quotients by at most one, so the quotients support a basic
 * index of their own.
 */
struct BlockDecomposition {
  Value k = 0;
  Pos n = 0;
  Value min_value = 0;
  std::vector<Value> minima;
  std::vector<Value> quotients;
  std::vector<Value> suffix_min;

  Pos block_count() const { return static_cast<Pos>(minima.size()); }
  Pos block_of(Pos i) const { return (i - 1) / k + 1; }
  Pos offset_of(Pos i) const { return (i - 1) % k + 1; }
  Pos block_begin(Pos t) const { return (t - 1) * k + 1; }
  Pos block_end(Pos t) const {
    Pos e = t * k;
    return e < n ? e : n;
  }
};

// Throws BadBlockSize (k < 2) and StepBoundViolated.
BlockDecomposition decompose(const FsInstance& inst, Value k);

/*
 * Drop answers over the block minima: entry (t, d) is the first block
 * after t whose minimum is at most minima[t] - d, for d in [1, k].
 * Exactly block_count * k entries, filled along the nearest-smallers
 * chain of the minima.
 */
class BlockDropTable {
 public:
  BlockDropTable() = default;
  BlockDropTable(const std::vector<Value>& minima, Value k);

  // Counted table read. Throws GapOutOfRange unless 1 <= drop <= k.
  Pos at(Pos t, Value drop) const;

  Value depth() const { return k_; }
  Pos block_count() const {
    return k_ == 0 ? 0 : static_cast<Pos>(entries_.size()) / k_;
  }
  std::uint64_t entry_count() const { return entries_.size(); }
  const std::vector<Pos>& raw() const { return entries_; }

  static BlockDropTable restore(Value k, Pos block_count,
                                std::vector<Pos> entries);

 private:
  Value k_ = 0;
  std::vector<Pos> entries_;
};

/*
 * Block layer shared by the two-level and multi-level indexes. A query
 * for the first block at or after t with minimum <= x first tries t
 * itself, then a short drop, then jumps through the quotient index.
 * The quotient threshold floor(x / k) can only undershoot, landing on
 * a block whose minimum is within k - 1 of x, which one drop-table
 * read finishes.
 */
struct GlobalLevel {
  BlockDecomposition decomp;
  BasicFsIndex quotient_index;
  BlockDropTable drops;

  Pos first_block_at_or_below(Pos t, Value x) const;
  std::uint64_t entry_count() const;
};

GlobalLevel build_global_level(const FsInstance& inst, Value k);

enum class LocalKind { basic, table };

/*
 * Two-level find-smaller index: the block layer plus in-block answers,
 * either one small basic index per block or one shared pattern table
 * with a code per block. Table locals require exact unit steps.
 */
class TwoLevelFsIndex {
 public:
  TwoLevelFsIndex(FsInstance inst, Value k, LocalKind kind);

  // Smallest j >= i with a[j] <= x, or kNoPos. Throws PositionOutOfRange.
  Pos query(Pos i, Value x) const;

  const FsInstance& instance() const { return inst_; }
  const GlobalLevel& global() const { return global_; }
  LocalKind local_kind() const { return kind_; }
  Value block_size() const { return global_.decomp.k; }
  const std::vector<BasicFsIndex>& local_indexes() const { return locals_; }
  const BlockPatternTable& pattern_table() const { return pattern_; }
  const std::vector<std::uint64_t>& block_codes() const { return codes_; }
  std::uint64_t entry_count() const;

  static TwoLevelFsIndex restore(FsInstance inst, Value k, LocalKind kind,
                                 GlobalLevel global,
                                 std::vector<BasicFsIndex> locals,
                                 std::vector<std::uint64_t> codes);

 private:
  struct RestoreTag {};
  TwoLevelFsIndex(RestoreTag, FsInstance inst, GlobalLevel global,
                  LocalKind kind, std::vector<BasicFsIndex> locals,
                  std::vector<std::uint64_t> codes);

  // Block-relative answer at or after start inside block t; callers
  // guarantee one exists within reach (gap below k).
  Pos local_query(Pos t, Pos start, Value x) const;

  FsInstance inst_;
  GlobalLevel global_;
  LocalKind kind_;
  std::vector<BasicFsIndex> locals_;
  BlockPatternTable pattern_;
  std::vector<std::uint64_t> codes_;
};

}  // namespace lafs
