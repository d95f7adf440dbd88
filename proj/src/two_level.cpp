#include "lafs/two_level.hpp"

#include <cassert>
#include <cstdlib>
#include <span>
#include <utility>

namespace lafs {

Value choose_block_size(Pos n) {
  if (n < 256) return 2;  // log2(n) / 4 stays below 2
  int t = floor_log2(static_cast<std::uint64_t>(n));
  return Value{1} << (floor_log2(static_cast<std::uint64_t>(t)) - 2);
}

BlockDecomposition decompose(const FsInstance& inst, Value k) {
  if (k < 2) throw BadBlockSize("block size must be at least 2");
  if (inst.step_bound() > 1) {
    throw StepBoundViolated("adjacent entries must differ by at most 1");
  }
  BlockDecomposition d;
  d.k = k;
  d.n = inst.size();
  d.min_value = inst.min_value();
  const Pos bc = (d.n + k - 1) / k;
  d.minima.resize(static_cast<std::size_t>(bc));
  d.suffix_min.resize(static_cast<std::size_t>(d.n));
  for (Pos t = bc; t >= 1; --t) {
    const Pos lo = d.block_begin(t);
    const Pos hi = d.block_end(t);
    Value m = inst.at(hi);
    for (Pos i = hi; i >= lo; --i) {
      Value v = inst.at(i);
      if (v < m) m = v;
      d.suffix_min[i - 1] = m;
    }
    d.minima[t - 1] = d.suffix_min[lo - 1];
  }
  d.quotients.resize(static_cast<std::size_t>(bc));
  for (Pos t = 1; t <= bc; ++t) {
    d.quotients[t - 1] = floor_div(d.minima[t - 1], k);
  }
#ifndef NDEBUG
  for (Pos t = 1; t < bc; ++t) {
    assert(std::abs(d.minima[t] - d.minima[t - 1]) <= k);
    assert(std::abs(d.quotients[t] - d.quotients[t - 1]) <= 1);
  }
#endif
  return d;
}

BlockDropTable::BlockDropTable(const std::vector<Value>& minima, Value k)
    : k_(k) {
  if (k < 1) throw BadBlockSize("drop table needs depth >= 1");
  const Pos bc = static_cast<Pos>(minima.size());
  entries_.assign(static_cast<std::size_t>(bc) * static_cast<std::size_t>(k),
                  kNoPos);
  std::vector<Pos> ns = nearest_smallers(FsInstance(minima));
  for (Pos t = 1; t <= bc; ++t) {
    Pos q = ns[t - 1];
    const Value base = minima[t - 1];
    std::size_t off = static_cast<std::size_t>(t - 1) * k_;
    for (Value d = 1; d <= k_; ++d) {
      while (q != kNoPos && minima[q - 1] > base - d) q = ns[q - 1];
      entries_[off + static_cast<std::size_t>(d) - 1] = q;
    }
  }
}

Pos BlockDropTable::at(Pos t, Value drop) const {
  check_position(t, block_count());
  if (drop < 1 || drop > k_) {
    throw GapOutOfRange("drop " + std::to_string(drop) + " outside [1, " +
                        std::to_string(k_) + "]");
  }
  instrument::note_table_read();
  return entries_[static_cast<std::size_t>(t - 1) * k_ +
                  static_cast<std::size_t>(drop) - 1];
}

BlockDropTable BlockDropTable::restore(Value k, Pos block_count,
                                       std::vector<Pos> entries) {
  if (k < 1) throw SerializeError("drop table depth corrupt");
  if (entries.size() != static_cast<std::size_t>(block_count) *
                            static_cast<std::size_t>(k)) {
    throw SerializeError("drop table size mismatch");
  }
  for (Pos e : entries) {
    if (e != kNoPos && (e < 1 || e > block_count)) {
      throw SerializeError("drop entry out of range");
    }
  }
  BlockDropTable t;
  t.k_ = k;
  t.entries_ = std::move(entries);
  return t;
}

GlobalLevel build_global_level(const FsInstance& inst, Value k) {
  BlockDecomposition d = decompose(inst, k);
  BasicFsIndex quot{FsInstance(d.quotients)};
  BlockDropTable drops{d.minima, k};
  return GlobalLevel{std::move(d), std::move(quot), std::move(drops)};
}

Pos GlobalLevel::first_block_at_or_below(Pos t, Value x) const {
  check_position(t, decomp.block_count());
  if (x < decomp.min_value) return kNoPos;
  instrument::note_table_read();
  const Value mt = decomp.minima[t - 1];
  if (mt <= x) return t;
  const Value d = mt - x;
  if (d <= decomp.k) return drops.at(t, d);
  Pos q = quotient_index.query(t, floor_div(x, decomp.k));
  if (q == kNoPos) return kNoPos;
  instrument::note_table_read();
  const Value mq = decomp.minima[q - 1];
  if (mq <= x) return q;
  // The quotient jump can stop short by less than one block's worth.
  assert(mq - x <= decomp.k - 1);
  return drops.at(q, mq - x);
}

std::uint64_t GlobalLevel::entry_count() const {
  return decomp.minima.size() + decomp.quotients.size() +
         decomp.suffix_min.size() + quotient_index.entry_count() +
         drops.entry_count();
}

TwoLevelFsIndex::TwoLevelFsIndex(FsInstance inst, Value k, LocalKind kind)
    : inst_(std::move(inst)),
      global_(build_global_level(inst_, k)),
      kind_(kind) {
  const BlockDecomposition& d = global_.decomp;
  const std::vector<Value>& a = inst_.values();
  const Pos bc = d.block_count();
  if (kind_ == LocalKind::basic) {
    locals_.reserve(static_cast<std::size_t>(bc));
    for (Pos t = 1; t <= bc; ++t) {
      std::vector<Value> slice(a.begin() + (d.block_begin(t) - 1),
                               a.begin() + d.block_end(t));
      locals_.emplace_back(FsInstance(std::move(slice)));
    }
  } else {
    pattern_ = BlockPatternTable(k);
    codes_.reserve(static_cast<std::size_t>(bc));
    for (Pos t = 1; t <= bc; ++t) {
      std::span<const Value> slice(a.data() + (d.block_begin(t) - 1),
                                   static_cast<std::size_t>(
                                       d.block_end(t) - d.block_begin(t) + 1));
      codes_.push_back(BlockPatternTable::encode(slice, k));
    }
  }
}

Pos TwoLevelFsIndex::query(Pos i, Value x) const {
  check_position(i, inst_.size());
  if (inst_.at(i) <= x) return i;
  if (x < inst_.min_value()) return kNoPos;
  const BlockDecomposition& d = global_.decomp;
  instrument::note_table_read();
  const Pos b = d.block_of(i);
  if (d.suffix_min[i - 1] <= x) {
    Pos off = local_query(b, d.offset_of(i), x);
    assert(off != kNoPos);
    return d.block_begin(b) + off - 1;
  }
  if (b == d.block_count()) return kNoPos;
  Pos t = global_.first_block_at_or_below(b + 1, x);
  if (t == kNoPos) return kNoPos;
  Pos off = local_query(t, 1, x);
  assert(off != kNoPos);
  return d.block_begin(t) + off - 1;
}

Pos TwoLevelFsIndex::local_query(Pos t, Pos start, Value x) const {
  if (kind_ == LocalKind::basic) return locals_[t - 1].query(start, x);
  const Value vstart = inst_.at(global_.decomp.block_begin(t) + start - 1);
  if (vstart <= x) return start;
  instrument::note_table_read();
  // Callers only land here with the answer inside the block, so the
  // gap fits the pattern table's [1, k - 1] domain.
  return pattern_.query(codes_[t - 1], start, vstart - x);
}

std::uint64_t TwoLevelFsIndex::entry_count() const {
  std::uint64_t total = global_.entry_count();
  for (const BasicFsIndex& ix : locals_) total += ix.entry_count();
  total += codes_.size();
  total += pattern_.entry_count();
  return total;
}

TwoLevelFsIndex::TwoLevelFsIndex(RestoreTag, FsInstance inst,
                                 GlobalLevel global, LocalKind kind,
                                 std::vector<BasicFsIndex> locals,
                                 std::vector<std::uint64_t> codes)
    : inst_(std::move(inst)),
      global_(std::move(global)),
      kind_(kind),
      locals_(std::move(locals)),
      codes_(std::move(codes)) {
  if (kind_ == LocalKind::table) pattern_ = BlockPatternTable(global_.decomp.k);
}

TwoLevelFsIndex TwoLevelFsIndex::restore(FsInstance inst, Value k,
                                         LocalKind kind, GlobalLevel global,
                                         std::vector<BasicFsIndex> locals,
                                         std::vector<std::uint64_t> codes) {
  BlockDecomposition expect = decompose(inst, k);
  if (global.decomp.minima != expect.minima ||
      global.decomp.quotients != expect.quotients ||
      global.decomp.suffix_min != expect.suffix_min ||
      global.decomp.k != k || global.decomp.n != inst.size()) {
    throw SerializeError("block layer tables corrupt");
  }
  if (global.quotient_index.instance().values() != expect.quotients) {
    throw SerializeError("quotient index array corrupt");
  }
  if (global.drops.depth() != k ||
      global.drops.block_count() != expect.block_count()) {
    throw SerializeError("drop table shape mismatch");
  }
  const std::vector<Value>& a = inst.values();
  const Pos bc = expect.block_count();
  if (kind == LocalKind::basic) {
    if (!codes.empty() || static_cast<Pos>(locals.size()) != bc) {
      throw SerializeError("local index list shape mismatch");
    }
    for (Pos t = 1; t <= bc; ++t) {
      std::vector<Value> slice(a.begin() + (expect.block_begin(t) - 1),
                               a.begin() + expect.block_end(t));
      if (locals[t - 1].instance().values() != slice) {
        throw SerializeError("local index array corrupt");
      }
    }
  } else {
    if (!locals.empty() || static_cast<Pos>(codes.size()) != bc) {
      throw SerializeError("block code list shape mismatch");
    }
    for (Pos t = 1; t <= bc; ++t) {
      std::span<const Value> slice(
          a.data() + (expect.block_begin(t) - 1),
          static_cast<std::size_t>(expect.block_end(t) -
                                   expect.block_begin(t) + 1));
      if (codes[t - 1] != BlockPatternTable::encode(slice, k)) {
        throw SerializeError("block code corrupt");
      }
    }
  }
  return TwoLevelFsIndex(RestoreTag{}, std::move(inst), std::move(global),
                         kind, std::move(locals), std::move(codes));
}

}  // namespace lafs
