#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "lafs/euler.hpp"
#include "lafs/multi_level.hpp"
#include "lafs/tree.hpp"
#include "lafs/two_level.hpp"

namespace lafs {

enum class Strategy { basic, two_basic, two_table, multi };

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

/*
 * A tree packaged with its Euler tour and one find-smaller index over
 * the tour levels; answers both ancestor queries and raw find-smaller
 * queries. Immutable once built, safe for concurrent readers.
 */
struct LaIndex {
  RootedTree tree;
  EulerTour tour;
  Strategy strategy;
  int levels;  // index recursion depth: 1 basic, 2 two-level, r multi
  std::variant<BasicFsIndex, TwoLevelFsIndex, MultiLevelFsIndex> fs;

  Pos fs_query(Pos i, Value x) const;
  NodeId ancestor(NodeId v, Value hops) const;
  std::uint64_t table_entries() const;
};

// levels is only consulted for Strategy::multi. Throws BadDepth.
LaIndex build_la_index(RootedTree tree, Strategy s, int levels = 2);

}  // namespace lafs
