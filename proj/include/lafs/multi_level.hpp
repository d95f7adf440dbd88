#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lafs/two_level.hpp"

namespace lafs {

// log2 applied r times; callers use it to size recursion depth.
double iter_log(double n, int r);

/*
 * Recursive find-smaller index: the block layer applied to the array,
 * then to each block, depth - 1 times, with a basic index once the
 * requested depth or a too-small array is reached (below 4 blocks the
 * recursion stops paying for itself). Queries read a constant number
 * of table cells per level.
 */
class MultiLevelFsIndex {
 public:
  // Optional sizer overrides choose_block_size at every level; tests
  // use it to force deep recursion on small arrays.
  using BlockSizer = Value (*)(Pos);

  MultiLevelFsIndex(FsInstance inst, int depth, BlockSizer sizer = nullptr);
  ~MultiLevelFsIndex();
  MultiLevelFsIndex(MultiLevelFsIndex&&) noexcept;
  MultiLevelFsIndex& operator=(MultiLevelFsIndex&&) noexcept;

  // Smallest j >= i with a[j] <= x, or kNoPos. Throws PositionOutOfRange.
  Pos query(Pos i, Value x) const;

  int depth() const { return depth_; }
  bool is_leaf() const { return inner_ == nullptr; }
  const FsInstance& instance() const;
  const BasicFsIndex& leaf_index() const;  // leaves only
  const GlobalLevel& global() const;       // inner nodes only
  const std::vector<MultiLevelFsIndex>& children() const;  // inner only
  Value block_size() const;  // 0 at leaves

  // Longest leaf-reaching chain, counting this level.
  int actual_depth() const;
  std::uint64_t entry_count() const;

  static MultiLevelFsIndex restore(FsInstance inst, int depth,
                                   std::optional<BasicFsIndex> leaf,
                                   std::unique_ptr<GlobalLevel> global,
                                   std::vector<MultiLevelFsIndex> children);

 private:
  struct Inner;
  struct RestoreTag {};
  MultiLevelFsIndex(RestoreTag, int depth, std::optional<BasicFsIndex> leaf,
                    std::unique_ptr<Inner> inner);

  int depth_ = 1;
  std::optional<BasicFsIndex> leaf_;
  std::unique_ptr<Inner> inner_;
};

}  // namespace lafs
