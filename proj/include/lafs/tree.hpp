#pragma once

#include <string_view>
#include <vector>

#include "lafs/common.hpp"

namespace lafs {

/*
 * Rooted tree over node ids 0..n-1 given by a parent array; the root
 * carries parent -1. Children are kept in ascending id order so every
 * traversal of the same tree is reproducible.
 */
struct RootedTree {
  NodeId root = 0;
  std::vector<NodeId> parents;
  std::vector<std::vector<NodeId>> children;

  Pos node_count() const { return static_cast<Pos>(parents.size()); }

  // Validates shape and names the offending node: root out of range,
  // root with a parent, a second parentless node, a parent id out of
  // range, or a parent cycle. Throws ParseError.
  static RootedTree from_parents(NodeId root, std::vector<NodeId> parents);

  // Text form: first line "n root", second line n parent ids, -1 at
  // the root. Throws ParseError with the line named.
  static RootedTree parse(std::string_view text);
};

std::vector<Value> compute_levels(const RootedTree& tree);

// Reference ancestor: climbs hops parent edges one at a time. Throws
// HopOutOfRange when hops is negative or exceeds the node's level.
NodeId walk_ancestor(const RootedTree& tree, NodeId v, Value hops);

}  // namespace lafs
