#include "doctest.h"

#include <cstdlib>

#include "lafs/basic_index.hpp"
#include "lafs/euler.hpp"
#include "lafs/random_gen.hpp"

using namespace lafs;

namespace {

// Find-smaller solver backed by the linear scan, to exercise the
// ancestor reduction separately from any index.
struct ScanSolver {
  FsInstance inst;
  Pos query(Pos i, Value x) const { return fs_scan(inst, i, x); }
};

}  // namespace

TEST_CASE("tour of the five node example") {
  RootedTree t = RootedTree::parse("5 0\n-1 0 1 1 0\n");
  EulerTour et = build_euler_tour(t);
  CHECK(et.tour == std::vector<NodeId>{0, 1, 2, 1, 3, 1, 0, 4, 0});
  CHECK(et.tour_levels == std::vector<Value>{0, 1, 2, 1, 2, 1, 0, 1, 0});
  CHECK(et.last_pos == std::vector<Pos>{9, 6, 3, 5, 8});
  CHECK(et.node_levels == std::vector<Value>{0, 1, 2, 2, 1});
  CHECK(et.length() == 9);
  CHECK(et.node_at(4) == 1);
}

TEST_CASE("tour of a path and a single node") {
  EulerTour path = build_euler_tour(RootedTree::parse("3 0\n-1 0 1\n"));
  CHECK(path.tour == std::vector<NodeId>{0, 1, 2, 1, 0});
  CHECK(path.tour_levels == std::vector<Value>{0, 1, 2, 1, 0});

  EulerTour single = build_euler_tour(RootedTree::parse("1 0\n-1\n"));
  CHECK(single.tour == std::vector<NodeId>{0});
  CHECK(single.last_pos == std::vector<Pos>{1});
}

TEST_CASE("tour invariants on random trees") {
  Rng rng(40401);
  for (int round = 0; round < 40; ++round) {
    Pos n = 1 + static_cast<Pos>(rng.below(400));
    RootedTree t = random_tree(n, rng);
    EulerTour et = build_euler_tour(t);

    REQUIRE(et.length() == 2 * n - 1);
    CHECK(et.tour.front() == t.root);
    CHECK(et.tour.back() == t.root);
    Value min_level = et.tour_levels[0];
    for (Pos i = 1; i < et.length(); ++i) {
      CHECK(std::abs(et.tour_levels[i] - et.tour_levels[i - 1]) == 1);
      min_level = std::min(min_level, et.tour_levels[i]);
    }
    CHECK(min_level == 0);
    for (NodeId v = 0; v < n; ++v) {
      REQUIRE(et.last_pos[v] >= 1);
      REQUIRE(et.last_pos[v] <= et.length());
      CHECK(et.node_at(et.last_pos[v]) == v);
      CHECK(et.tour_levels[et.last_pos[v] - 1] == et.node_levels[v]);
      // No later occurrence.
      for (Pos j = et.last_pos[v] + 1; j <= et.length(); ++j) {
        REQUIRE(et.node_at(j) != v);
      }
    }
  }
}

TEST_CASE("ancestor reduction on the example") {
  RootedTree t = RootedTree::parse("5 0\n-1 0 1 1 0\n");
  EulerTour et = build_euler_tour(t);
  ScanSolver solver{FsInstance(et.tour_levels)};
  CHECK(level_ancestor(solver, et, 2, 0) == 2);
  CHECK(level_ancestor(solver, et, 2, 1) == 1);
  CHECK(level_ancestor(solver, et, 2, 2) == 0);
  CHECK(level_ancestor(solver, et, 3, 2) == 0);
  CHECK(level_ancestor(solver, et, 4, 1) == 0);
  CHECK_THROWS_AS(level_ancestor(solver, et, 2, 3), HopOutOfRange);
  CHECK_THROWS_AS(level_ancestor(solver, et, 2, -1), HopOutOfRange);
  CHECK_THROWS_AS(level_ancestor(solver, et, 5, 0), Error);
}

TEST_CASE("ancestor reduction equals parent walking everywhere") {
  Rng rng(40402);
  for (int round = 0; round < 30; ++round) {
    Pos n = 1 + static_cast<Pos>(rng.below(250));
    RootedTree t = random_tree(n, rng);
    EulerTour et = build_euler_tour(t);
    ScanSolver scan{FsInstance(et.tour_levels)};
    BasicFsIndex indexed{FsInstance(et.tour_levels)};
    for (NodeId v = 0; v < n; ++v) {
      for (Value i = 0; i <= et.node_levels[v]; ++i) {
        NodeId expect = walk_ancestor(t, v, i);
        CHECK(level_ancestor(scan, et, v, i) == expect);
        CHECK(level_ancestor(indexed, et, v, i) == expect);
      }
    }
  }
}
