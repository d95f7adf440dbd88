#include "lafs/multi_level.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

namespace lafs {

double iter_log(double n, int r) {
  double v = n;
  while (r-- > 0) v = std::log2(v);
  return v;
}

struct MultiLevelFsIndex::Inner {
  FsInstance inst;
  GlobalLevel global;
  std::vector<MultiLevelFsIndex> children;
};

MultiLevelFsIndex::MultiLevelFsIndex(FsInstance inst, int depth,
                                     BlockSizer sizer)
    : depth_(depth) {
  if (depth < 1) throw BadDepth("recursion depth must be at least 1");
  if (inst.step_bound() > 1) {
    throw StepBoundViolated("adjacent entries must differ by at most 1");
  }
  const Value k = (sizer != nullptr ? sizer : choose_block_size)(inst.size());
  if (depth == 1 || inst.size() < 4 * k) {
    leaf_.emplace(std::move(inst));
    return;
  }
  GlobalLevel global = build_global_level(inst, k);
  std::vector<MultiLevelFsIndex> kids;
  const BlockDecomposition& d = global.decomp;
  kids.reserve(static_cast<std::size_t>(d.block_count()));
  const std::vector<Value>& a = inst.values();
  for (Pos t = 1; t <= d.block_count(); ++t) {
    std::vector<Value> slice(a.begin() + (d.block_begin(t) - 1),
                             a.begin() + d.block_end(t));
    kids.emplace_back(
        MultiLevelFsIndex(FsInstance(std::move(slice)), depth - 1, sizer));
  }
  inner_ = std::make_unique<Inner>(
      Inner{std::move(inst), std::move(global), std::move(kids)});
}

MultiLevelFsIndex::~MultiLevelFsIndex() = default;
MultiLevelFsIndex::MultiLevelFsIndex(MultiLevelFsIndex&&) noexcept = default;
MultiLevelFsIndex& MultiLevelFsIndex::operator=(MultiLevelFsIndex&&) noexcept =
    default;

Pos MultiLevelFsIndex::query(Pos i, Value x) const {
  if (leaf_) return leaf_->query(i, x);
  const Inner& in = *inner_;
  check_position(i, in.inst.size());
  if (in.inst.at(i) <= x) return i;
  if (x < in.inst.min_value()) return kNoPos;
  const BlockDecomposition& d = in.global.decomp;
  instrument::note_table_read();
  const Pos b = d.block_of(i);
  if (d.suffix_min[i - 1] <= x) {
    Pos off = in.children[b - 1].query(d.offset_of(i), x);
    assert(off != kNoPos);
    return d.block_begin(b) + off - 1;
  }
  if (b == d.block_count()) return kNoPos;
  Pos t = in.global.first_block_at_or_below(b + 1, x);
  if (t == kNoPos) return kNoPos;
  Pos off = in.children[t - 1].query(1, x);
  assert(off != kNoPos);
  return d.block_begin(t) + off - 1;
}

const FsInstance& MultiLevelFsIndex::instance() const {
  return leaf_ ? leaf_->instance() : inner_->inst;
}

const BasicFsIndex& MultiLevelFsIndex::leaf_index() const {
  assert(leaf_);
  return *leaf_;
}

const GlobalLevel& MultiLevelFsIndex::global() const {
  assert(inner_);
  return inner_->global;
}

const std::vector<MultiLevelFsIndex>& MultiLevelFsIndex::children() const {
  assert(inner_);
  return inner_->children;
}

Value MultiLevelFsIndex::block_size() const {
  return leaf_ ? 0 : inner_->global.decomp.k;
}

int MultiLevelFsIndex::actual_depth() const {
  if (leaf_) return 1;
  int deepest = 0;
  for (const MultiLevelFsIndex& c : inner_->children) {
    deepest = std::max(deepest, c.actual_depth());
  }
  return deepest + 1;
}

std::uint64_t MultiLevelFsIndex::entry_count() const {
  if (leaf_) return leaf_->entry_count();
  std::uint64_t total = inner_->global.entry_count();
  for (const MultiLevelFsIndex& c : inner_->children) {
    total += c.entry_count();
  }
  return total;
}

MultiLevelFsIndex::MultiLevelFsIndex(RestoreTag, int depth,
                                     std::optional<BasicFsIndex> leaf,
                                     std::unique_ptr<Inner> inner)
    : depth_(depth), leaf_(std::move(leaf)), inner_(std::move(inner)) {}

MultiLevelFsIndex MultiLevelFsIndex::restore(
    FsInstance inst, int depth, std::optional<BasicFsIndex> leaf,
    std::unique_ptr<GlobalLevel> global,
    std::vector<MultiLevelFsIndex> children) {
  if (depth < 1) throw SerializeError("recursion depth corrupt");
  if (leaf.has_value() == (global != nullptr)) {
    throw SerializeError("level must be either a leaf or a block layer");
  }
  if (leaf) {
    if (!children.empty()) throw SerializeError("leaf with children");
    if (leaf->instance().values() != inst.values()) {
      throw SerializeError("leaf array corrupt");
    }
    return MultiLevelFsIndex(RestoreTag{}, depth, std::move(leaf), nullptr);
  }
  const Value k = global->decomp.k;
  BlockDecomposition expect = decompose(inst, k);
  if (global->decomp.minima != expect.minima ||
      global->decomp.quotients != expect.quotients ||
      global->decomp.suffix_min != expect.suffix_min ||
      global->decomp.n != inst.size()) {
    throw SerializeError("block layer tables corrupt");
  }
  if (global->quotient_index.instance().values() != expect.quotients) {
    throw SerializeError("quotient index array corrupt");
  }
  if (global->drops.depth() != k ||
      global->drops.block_count() != expect.block_count()) {
    throw SerializeError("drop table shape mismatch");
  }
  if (static_cast<Pos>(children.size()) != expect.block_count()) {
    throw SerializeError("child count mismatch");
  }
  const std::vector<Value>& a = inst.values();
  for (Pos t = 1; t <= expect.block_count(); ++t) {
    std::vector<Value> slice(a.begin() + (expect.block_begin(t) - 1),
                             a.begin() + expect.block_end(t));
    if (children[t - 1].instance().values() != slice) {
      throw SerializeError("child array corrupt");
    }
    if (children[t - 1].depth() != depth - 1) {
      throw SerializeError("child depth corrupt");
    }
  }
  auto inner = std::make_unique<Inner>(
      Inner{std::move(inst), std::move(*global), std::move(children)});
  return MultiLevelFsIndex(RestoreTag{}, depth, std::nullopt,
                           std::move(inner));
}

}  // namespace lafs
