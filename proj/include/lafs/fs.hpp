#pragma once

#include <cstdint>
#include <vector>

#include "lafs/common.hpp"

namespace lafs {

/*
 * Integer array a[1..n] prepared for find-smaller queries:
 * FS(i, x) = smallest j >= i with a[j] <= x, or none.
 * step_bound() is the largest absolute difference between adjacent
 * entries; the constant-time indexes require step_bound() <= 1.
 */
class FsInstance {
 public:
  explicit FsInstance(std::vector<Value> values);

  Pos size() const { return static_cast<Pos>(values_.size()); }
  // 1-based, unchecked; callers validate positions at query entry.
  Value at(Pos i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  Value step_bound() const { return step_bound_; }
  Value min_value() const { return min_value_; }
  const std::vector<Value>& values() const { return values_; }

 private:
  std::vector<Value> values_;
  Value step_bound_ = 0;
  Value min_value_ = 0;
};

// ns[i-1] = smallest j > i with a[j] < a[i], or kNoPos. Right-to-left
// stack sweep, O(n): each position is pushed once and popped at most
// once. op_count, when given, receives the total push+pop count.
std::vector<Pos> nearest_smallers(const FsInstance& inst,
                                  std::uint64_t* op_count = nullptr);

// Reference linear scan. Every index in this library is tested against
// it. Throws PositionOutOfRange.
Pos fs_scan(const FsInstance& inst, Pos i, Value x);

}  // namespace lafs
