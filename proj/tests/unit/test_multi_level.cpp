#include "doctest.h"

#include <algorithm>
#include <vector>

#include "lafs/multi_level.hpp"
#include "lafs/random_gen.hpp"
#include "test_util.hpp"

using namespace lafs;

namespace {

const std::vector<Value> kTourLevels = {0, 1, 2, 1, 2, 1, 0, 1, 0};

// Forces two rounds of blocking on arrays in the mid hundreds.
Value forced_sizer(Pos len) { return len >= 64 ? 8 : 2; }

}  // namespace

TEST_CASE("iterated logarithm") {
  CHECK(iter_log(8.0, 0) == doctest::Approx(8.0));
  CHECK(iter_log(65536.0, 1) == doctest::Approx(16.0));
  CHECK(iter_log(65536.0, 2) == doctest::Approx(4.0));
  CHECK(iter_log(65536.0, 3) == doctest::Approx(2.0));
  double third = iter_log(1e75, 3);
  CHECK(third > 2.9);
  CHECK(third <= 3.0);
}

TEST_CASE("depth must be positive") {
  FsInstance inst(kTourLevels);
  CHECK_THROWS_AS((MultiLevelFsIndex{inst, 0}), BadDepth);
  CHECK_THROWS_AS((MultiLevelFsIndex{inst, -3}), BadDepth);
  CHECK_THROWS_AS((MultiLevelFsIndex{FsInstance({0, 2}), 2}),
                  StepBoundViolated);
}

TEST_CASE("frozen queries on the example array") {
  MultiLevelFsIndex ix{FsInstance(kTourLevels), 2};
  CHECK_FALSE(ix.is_leaf());
  CHECK(ix.block_size() == 2);
  CHECK(ix.query(3, 0) == 7);
  CHECK(ix.query(8, 0) == 9);
  CHECK(ix.query(1, 0) == 1);
  CHECK(ix.query(3, 1) == 4);
  CHECK(ix.query(2, -1) == kNoPos);
  CHECK_THROWS_AS(ix.query(0, 0), PositionOutOfRange);
  CHECK_THROWS_AS(ix.query(10, 0), PositionOutOfRange);
}

TEST_CASE("depth one is exactly the basic index") {
  Rng rng(70701);
  for (int round = 0; round < 30; ++round) {
    Pos n = 1 + static_cast<Pos>(rng.below(300));
    std::vector<Value> a = round % 2 == 0 ? random_unit_walk(n, rng)
                                          : test::random_lazy_walk(n, rng);
    FsInstance inst(a);
    MultiLevelFsIndex multi{inst, 1};
    CHECK(multi.is_leaf());
    CHECK(multi.block_size() == 0);
    CHECK(multi.actual_depth() == 1);
    BasicFsIndex basic{inst};
    CHECK(multi.entry_count() == basic.entry_count());
    Value lo = inst.min_value() - 2;
    Value hi = *std::max_element(a.begin(), a.end()) + 2;
    for (Pos i = 1; i <= n; ++i) {
      for (Value x = lo; x <= hi; ++x) {
        REQUIRE(multi.query(i, x) == basic.query(i, x));
      }
    }
  }
}

TEST_CASE("depth two matches the two level index") {
  Rng rng(70702);
  for (int round = 0; round < 25; ++round) {
    Pos n = 8 + static_cast<Pos>(rng.below(600));
    std::vector<Value> a = random_unit_walk(n, rng);
    FsInstance inst(a);
    MultiLevelFsIndex multi{inst, 2};
    TwoLevelFsIndex two{inst, choose_block_size(n), LocalKind::basic};
    Value lo = inst.min_value() - 2;
    Value hi = *std::max_element(a.begin(), a.end()) + 2;
    for (Pos i = 1; i <= n; ++i) {
      for (Value x = lo; x <= hi; ++x) {
        REQUIRE(multi.query(i, x) == two.query(i, x));
      }
    }
  }
}

TEST_CASE("forced sizer reaches depth three") {
  Rng rng(70703);
  std::vector<Value> a = random_unit_walk(512, rng);
  FsInstance inst(a);
  MultiLevelFsIndex ix{inst, 3, forced_sizer};
  CHECK_FALSE(ix.is_leaf());
  CHECK(ix.block_size() == 8);
  CHECK(ix.actual_depth() == 3);
  CHECK(ix.children().size() == 64);
  for (const MultiLevelFsIndex& child : ix.children()) {
    CHECK(child.depth() == 2);
    CHECK_FALSE(child.is_leaf());
    CHECK(child.block_size() == 2);
    for (const MultiLevelFsIndex& grand : child.children()) {
      CHECK(grand.is_leaf());
    }
  }
  // Child instances are exactly the blocks of the parent array.
  for (std::size_t t = 0; t < ix.children().size(); ++t) {
    const std::vector<Value>& s = ix.children()[t].instance().values();
    REQUIRE(s.size() == 8);
    for (std::size_t o = 0; o < 8; ++o) {
      REQUIRE(s[o] == a[t * 8 + o]);
    }
  }

  Value lo = inst.min_value() - 2;
  Value hi = *std::max_element(a.begin(), a.end()) + 2;
  for (Pos i = 1; i <= 512; ++i) {
    for (Value x = lo; x <= hi; ++x) {
      REQUIRE(ix.query(i, x) == fs_scan(inst, i, x));
    }
  }
}

TEST_CASE("requested depth caps the actual depth") {
  Rng rng(70704);
  std::vector<Value> a = random_unit_walk(300, rng);
  for (int depth = 1; depth <= 5; ++depth) {
    MultiLevelFsIndex ix{FsInstance(a), depth, forced_sizer};
    CHECK(ix.actual_depth() <= depth);
    CHECK(ix.depth() == depth);
  }
  // Blocks of 8, then blocks of 2: three levels exhaust the array.
  FsInstance inst(a);
  MultiLevelFsIndex deep{inst, 40, forced_sizer};
  CHECK(deep.actual_depth() == 3);
  for (Pos i = 1; i <= 300; ++i) {
    CHECK(deep.query(i, inst.at(i) - 1) == fs_scan(inst, i, inst.at(i) - 1));
  }
}

TEST_CASE("zero step arrays recurse on basic leaves") {
  Rng rng(70705);
  std::vector<Value> a = test::random_lazy_walk(400, rng);
  FsInstance inst(a);
  MultiLevelFsIndex ix{inst, 3, forced_sizer};
  Value lo = inst.min_value() - 2;
  Value hi = *std::max_element(a.begin(), a.end()) + 2;
  for (Pos i = 1; i <= inst.size(); ++i) {
    for (Value x = lo; x <= hi; ++x) {
      REQUIRE(ix.query(i, x) == fs_scan(inst, i, x));
    }
  }
}

TEST_CASE("bounded table reads per query at every depth") {
  Rng rng(70706);
  std::vector<Value> a = random_unit_walk(4096, rng);
  FsInstance inst(a);
  for (int depth = 1; depth <= 4; ++depth) {
    MultiLevelFsIndex ix{inst, depth, forced_sizer};
    instrument::take_table_reads();
    std::uint64_t worst = 0;
    for (int q = 0; q < 20000; ++q) {
      Pos i = 1 + static_cast<Pos>(rng.below(4096));
      Value x = inst.at(i) - static_cast<Value>(rng.below(40)) + 2;
      ix.query(i, x);
      worst = std::max(worst, instrument::take_table_reads());
    }
    CHECK(worst <= static_cast<std::uint64_t>(8 * depth));
  }
}
