#pragma once

#include <cstdint>
#include <vector>

#include "lafs/fs.hpp"

namespace lafs {

// Largest r with 2^r dividing i - 1; position 1 acts as aligned to every
// power and gets ceil(log2(n + 1)). Requires 1 <= i <= n.
int alignment_exponent(Pos i, Pos n);

// Largest j <= i with 2^p dividing j - 1.
Pos aligned_index(Pos i, int p);

/*
 * Constant-time find-smaller index for arrays whose adjacent entries
 * differ by at most one.
 *
 * Each position i stores jump entries: entry j is the first position
 * right of i whose value is at most a[i] - j, for j up to
 * capacity(i) = min(3 * 2^alignment_exponent(i, n), a[i] - min). A query
 * for threshold x below a[i] rounds i down to the aligned position i1
 * whose entries are deep enough to cover the needed drop; adjacent
 * entries differing by at most one makes the redirected answer exact.
 * Builds in time linear in the entry count via the nearest-smallers
 * chain; total entries <= 3n * (ceil(log2(n + 1)) + 2); a query reads
 * one table cell.
 */
class BasicFsIndex {
 public:
  explicit BasicFsIndex(FsInstance inst);

  // Smallest j >= i with a[j] <= x, or kNoPos. Throws PositionOutOfRange.
  Pos query(Pos i, Value x) const;

  const FsInstance& instance() const { return inst_; }
  Value capacity(Pos i) const;
  // Stored entry for 1 <= j <= capacity(i); test and tooling access.
  Pos entry(Pos i, Value j) const;
  std::uint64_t entry_count() const { return entries_.size(); }
  const std::vector<Value>& raw_caps() const { return caps_; }
  const std::vector<Pos>& raw_entries() const { return entries_; }

  // Rebuilds from stored parts, validating shape and ranges; build
  // recomputation is deliberately not redone. Throws SerializeError.
  static BasicFsIndex restore(FsInstance inst, std::vector<Value> caps,
                              std::vector<Pos> entries);

 private:
  struct RestoreTag {};
  BasicFsIndex(RestoreTag, FsInstance inst, std::vector<Value> caps,
               std::vector<Pos> entries);
  void init_offsets();

  FsInstance inst_;
  std::vector<Value> caps_;          // capacity per position
  std::vector<std::size_t> offsets_; // start of each position's entries
  std::vector<Pos> entries_;         // flat jump entries
};

}  // namespace lafs
