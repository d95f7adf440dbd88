#include "lafs/basic_index.hpp"

#include <cassert>
#include <limits>
#include <numeric>
#include <utility>

namespace lafs {

int alignment_exponent(Pos i, Pos n) {
  assert(i >= 1 && i <= n);
  if (i == 1) return ceil_log2(static_cast<std::uint64_t>(n) + 1);
  return std::countr_zero(static_cast<std::uint64_t>(i - 1));
}

Pos aligned_index(Pos i, int p) {
  return (((i - 1) >> p) << p) + 1;
}

namespace {

Value capacity_for(Value value, Value min_value, int r) {
  // 3 * 2^r saturated; r can reach 63 for huge arrays.
  Value limit = r >= 62 ? std::numeric_limits<Value>::max()
                        : (Value{3} << r);
  Value drop = value - min_value;
  return drop < limit ? drop : limit;
}

}  // namespace

BasicFsIndex::BasicFsIndex(FsInstance inst) : inst_(std::move(inst)) {
  if (inst_.step_bound() > 1) {
    throw StepBoundViolated("adjacent entries must differ by at most 1");
  }
  const Pos n = inst_.size();
  caps_.resize(static_cast<std::size_t>(n));
  for (Pos i = 1; i <= n; ++i) {
    caps_[i - 1] =
        capacity_for(inst_.at(i), inst_.min_value(), alignment_exponent(i, n));
  }
  init_offsets();
  entries_.assign(offsets_.back() + static_cast<std::size_t>(caps_[n - 1]),
                  kNoPos);

  // Walking the nearest-smallers chain fills each position's entries in
  // amortized constant time per entry: successive chain values drop by
  // exactly one on unit-step arrays.
  std::vector<Pos> ns = nearest_smallers(inst_);
  for (Pos i = 1; i <= n; ++i) {
    Pos q = ns[i - 1];
    const Value base = inst_.at(i);
    std::size_t off = offsets_[i - 1];
    for (Value j = 1; j <= caps_[i - 1]; ++j) {
      while (q != kNoPos && inst_.at(q) > base - j) q = ns[q - 1];
      entries_[off + static_cast<std::size_t>(j) - 1] = q;
    }
  }
}

void BasicFsIndex::init_offsets() {
  offsets_.resize(caps_.size());
  std::size_t acc = 0;
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    offsets_[i] = acc;
    acc += static_cast<std::size_t>(caps_[i]);
  }
}

Pos BasicFsIndex::query(Pos i, Value x) const {
  check_position(i, inst_.size());
  const Value vi = inst_.at(i);
  if (vi <= x) return i;
  if (x < inst_.min_value()) return kNoPos;

  // 2^p <= vi - x, so the aligned position sits close enough that no
  // value in between can reach x, and far enough up that its entries
  // cover the widened drop.
  const Value d = vi - x;
  const int p = floor_log2(static_cast<std::uint64_t>(d));
  const Pos i1 = aligned_index(i, p);
  const Value j = inst_.at(i1) - x;
  assert(j >= 1 && j <= caps_[i1 - 1]);
  instrument::note_table_read();
  return entries_[offsets_[i1 - 1] + static_cast<std::size_t>(j) - 1];
}

Value BasicFsIndex::capacity(Pos i) const {
  check_position(i, inst_.size());
  return caps_[i - 1];
}

Pos BasicFsIndex::entry(Pos i, Value j) const {
  check_position(i, inst_.size());
  if (j < 1 || j > caps_[i - 1]) {
    throw Error("jump entry " + std::to_string(j) + " outside [1, " +
                std::to_string(caps_[i - 1]) + "] at position " +
                std::to_string(i));
  }
  return entries_[offsets_[i - 1] + static_cast<std::size_t>(j) - 1];
}

BasicFsIndex::BasicFsIndex(RestoreTag, FsInstance inst,
                           std::vector<Value> caps, std::vector<Pos> entries)
    : inst_(std::move(inst)),
      caps_(std::move(caps)),
      entries_(std::move(entries)) {
  init_offsets();
}

BasicFsIndex BasicFsIndex::restore(FsInstance inst, std::vector<Value> caps,
                                   std::vector<Pos> entries) {
  const Pos n = inst.size();
  if (inst.step_bound() > 1) throw SerializeError("stored array steps over 1");
  if (caps.size() != static_cast<std::size_t>(n)) {
    throw SerializeError("capacity table size mismatch");
  }
  std::size_t total = 0;
  for (Pos i = 1; i <= n; ++i) {
    Value expect =
        capacity_for(inst.at(i), inst.min_value(), alignment_exponent(i, n));
    if (caps[i - 1] != expect) throw SerializeError("capacity table corrupt");
    total += static_cast<std::size_t>(caps[i - 1]);
  }
  if (entries.size() != total) throw SerializeError("jump table size mismatch");
  for (Pos e : entries) {
    if (e != kNoPos && (e < 1 || e > n)) {
      throw SerializeError("jump entry out of range");
    }
  }
  return BasicFsIndex(RestoreTag{}, std::move(inst), std::move(caps),
                      std::move(entries));
}

}  // namespace lafs
