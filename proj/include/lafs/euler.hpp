#pragma once

#include "lafs/common.hpp"
#include "lafs/tree.hpp"

#include <string>
#include <vector>

namespace lafs {

/*
 * Euler tour of a rooted tree: the depth-first node sequence that
 * re-lists a node after each child visit, children in ascending id
 * order. tour_levels has length 2n - 1, starts and ends at the root's
 * level 0, and adjacent entries differ by exactly one, which is what
 * lets ancestor queries ride on find-smaller over it.
 */
struct EulerTour {
  std::vector<NodeId> tour;
  std::vector<Value> tour_levels;
  std::vector<Pos> last_pos;       // node -> last occurrence, 1-based
  std::vector<Value> node_levels;  // node -> level

  Pos length() const { return static_cast<Pos>(tour.size()); }
  NodeId node_at(Pos t) const {
    return tour[static_cast<std::size_t>(t - 1)];
  }
};

EulerTour build_euler_tour(const RootedTree& tree);

/*
 * Ancestor i hops above v, via any find-smaller solver over the tour
 * levels: the first tour position at or after v's last occurrence with
 * level(v) - hops names the ancestor, because the walk from there back
 * to the root passes each ancestor's level exactly once after leaving
 * v's subtree for good.
 */
template <class Solver>
NodeId level_ancestor(const Solver& fs, const EulerTour& et, NodeId v,
                      Value hops) {
  if (v < 0 || v >= static_cast<NodeId>(et.node_levels.size())) {
    throw Error("node id " + std::to_string(v) + " out of range");
  }
  const Value level = et.node_levels[v];
  if (hops < 0 || hops > level) {
    throw HopOutOfRange("hops " + std::to_string(hops) + " outside [0, " +
                        std::to_string(level) + "]");
  }
  Pos j = fs.query(et.last_pos[v], level - hops);
  return et.node_at(j);
}

}  // namespace lafs
