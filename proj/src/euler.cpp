#include "lafs/euler.hpp"

#include <utility>

namespace lafs {

EulerTour build_euler_tour(const RootedTree& tree) {
  const Pos n = tree.node_count();
  EulerTour et;
  et.node_levels = compute_levels(tree);
  et.tour.reserve(static_cast<std::size_t>(2 * n - 1));
  et.tour_levels.reserve(static_cast<std::size_t>(2 * n - 1));
  et.last_pos.assign(static_cast<std::size_t>(n), 0);

  auto emit = [&](NodeId v) {
    et.tour.push_back(v);
    et.tour_levels.push_back(et.node_levels[v]);
    et.last_pos[v] = static_cast<Pos>(et.tour.size());
  };

  // Iterative depth-first walk; each frame remembers how many children
  // it has already toured.
  std::vector<std::pair<NodeId, std::size_t>> stack;
  emit(tree.root);
  stack.emplace_back(tree.root, 0);
  while (!stack.empty()) {
    auto& [v, next_child] = stack.back();
    const std::vector<NodeId>& kids = tree.children[v];
    if (next_child < kids.size()) {
      NodeId c = kids[next_child++];
      emit(c);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) emit(stack.back().first);
    }
  }
  return et;
}

}  // namespace lafs
