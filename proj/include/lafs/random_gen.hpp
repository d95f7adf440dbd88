#pragma once

#include <cstdint>
#include <random>

#include "lafs/tree.hpp"

namespace lafs {

/*
 * Deterministic generator for tests and the verify/bench commands.
 * mt19937_64 plus explicit modulo keeps the stream identical across
 * platforms and standard libraries for a given seed.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  // Inclusive on both ends; lo <= hi.
  Value range(Value lo, Value hi) {
    return lo +
           static_cast<Value>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 gen_;
};

// Uniform attachment: node 0 is the root, each later node hangs off a
// uniformly chosen earlier node.
RootedTree random_tree(Pos node_count, Rng& rng);

// Exact unit-step array of the given length; may dip negative.
std::vector<Value> random_unit_walk(Pos length, Rng& rng);

}  // namespace lafs
