#include "lafs/random_gen.hpp"

#include <utility>

namespace lafs {

RootedTree random_tree(Pos node_count, Rng& rng) {
  std::vector<NodeId> parents(static_cast<std::size_t>(node_count));
  parents[0] = kNoNode;
  for (Pos v = 1; v < node_count; ++v) {
    parents[v] = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(v)));
  }
  return RootedTree::from_parents(0, std::move(parents));
}

std::vector<Value> random_unit_walk(Pos length, Rng& rng) {
  std::vector<Value> a(static_cast<std::size_t>(length));
  a[0] = rng.range(-4, 4);
  for (Pos i = 1; i < length; ++i) {
    a[i] = a[i - 1] + (rng.below(2) == 0 ? -1 : 1);
  }
  return a;
}

}  // namespace lafs
