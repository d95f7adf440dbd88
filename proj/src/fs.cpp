#include "lafs/fs.hpp"

#include <cstdlib>
#include <utility>

namespace lafs {

FsInstance::FsInstance(std::vector<Value> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw EmptyArray("query array must be non-empty");
  min_value_ = values_[0];
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < min_value_) min_value_ = values_[i];
    if (i > 0) {
      Value step = std::abs(values_[i] - values_[i - 1]);
      if (step > step_bound_) step_bound_ = step;
    }
  }
}

std::vector<Pos> nearest_smallers(const FsInstance& inst,
                                  std::uint64_t* op_count) {
  const std::vector<Value>& a = inst.values();
  const std::size_t n = a.size();
  std::vector<Pos> ns(n, kNoPos);
  std::vector<std::size_t> stack;  // indices of a strictly increasing suffix
  stack.reserve(n);
  std::uint64_t ops = 0;
  for (std::size_t i = n; i-- > 0;) {
    while (!stack.empty() && a[stack.back()] >= a[i]) {
      stack.pop_back();
      ++ops;
    }
    if (!stack.empty()) ns[i] = static_cast<Pos>(stack.back()) + 1;
    stack.push_back(i);
    ++ops;
  }
  if (op_count != nullptr) *op_count = ops;
  return ns;
}

Pos fs_scan(const FsInstance& inst, Pos i, Value x) {
  check_position(i, inst.size());
  for (Pos j = i; j <= inst.size(); ++j) {
    if (inst.at(j) <= x) return j;
  }
  return kNoPos;
}

void check_position(Pos i, Pos n) {
  if (i < 1 || i > n) {
    throw PositionOutOfRange("position " + std::to_string(i) +
                             " outside [1, " + std::to_string(n) + "]");
  }
}

}  // namespace lafs
