#include "lafs/la_index.hpp"

#include <utility>

namespace lafs {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::basic: return "basic";
    case Strategy::two_basic: return "two";
    case Strategy::two_table: return "table";
    case Strategy::multi: return "multi";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "basic") return Strategy::basic;
  if (name == "two") return Strategy::two_basic;
  if (name == "table") return Strategy::two_table;
  if (name == "multi") return Strategy::multi;
  return std::nullopt;
}

Pos LaIndex::fs_query(Pos i, Value x) const {
  return std::visit([&](const auto& ix) { return ix.query(i, x); }, fs);
}

NodeId LaIndex::ancestor(NodeId v, Value hops) const {
  return std::visit(
      [&](const auto& ix) { return level_ancestor(ix, tour, v, hops); }, fs);
}

std::uint64_t LaIndex::table_entries() const {
  return std::visit([](const auto& ix) { return ix.entry_count(); }, fs);
}

LaIndex build_la_index(RootedTree tree, Strategy s, int levels) {
  EulerTour et = build_euler_tour(tree);
  FsInstance inst{et.tour_levels};
  switch (s) {
    case Strategy::basic:
      return LaIndex{std::move(tree), std::move(et), s, 1,
                     BasicFsIndex(std::move(inst))};
    case Strategy::two_basic: {
      Value k = choose_block_size(inst.size());
      return LaIndex{std::move(tree), std::move(et), s, 2,
                     TwoLevelFsIndex(std::move(inst), k, LocalKind::basic)};
    }
    case Strategy::two_table: {
      Value k = choose_block_size(inst.size());
      return LaIndex{std::move(tree), std::move(et), s, 2,
                     TwoLevelFsIndex(std::move(inst), k, LocalKind::table)};
    }
    case Strategy::multi:
      return LaIndex{std::move(tree), std::move(et), s, levels,
                     MultiLevelFsIndex(std::move(inst), levels)};
  }
  throw Error("unknown strategy");
}

}  // namespace lafs
