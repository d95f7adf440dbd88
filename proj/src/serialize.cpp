#include "lafs/serialize.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <type_traits>
#include <utility>

namespace lafs {

namespace {

constexpr char kMagic[4] = {'L', 'A', 'F', 'S'};
constexpr std::uint64_t kVersion = 1;
constexpr std::uint64_t kMaxCount = std::uint64_t{1} << 32;

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

void put_i64(std::ostream& out, std::int64_t v) {
  put_u64(out, static_cast<std::uint64_t>(v));
}

void put_vec_i64(std::ostream& out, const std::vector<std::int64_t>& v) {
  put_u64(out, v.size());
  for (std::int64_t e : v) put_i64(out, e);
}

void put_vec_u64(std::ostream& out, const std::vector<std::uint64_t>& v) {
  put_u64(out, v.size());
  for (std::uint64_t e : v) put_u64(out, e);
}

std::uint64_t get_u64(std::istream& in) {
  char b[8];
  in.read(b, 8);
  if (!in) throw SerializeError("unexpected end of artifact");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i]))
         << (8 * i);
  }
  return v;
}

std::int64_t get_i64(std::istream& in) {
  return static_cast<std::int64_t>(get_u64(in));
}

std::uint64_t get_count(std::istream& in) {
  std::uint64_t count = get_u64(in);
  if (count > kMaxCount) throw SerializeError("unreasonable array size");
  return count;
}

std::vector<std::int64_t> get_vec_i64(std::istream& in) {
  std::uint64_t count = get_count(in);
  std::vector<std::int64_t> v;
  v.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) v.push_back(get_i64(in));
  return v;
}

std::vector<std::uint64_t> get_vec_u64(std::istream& in) {
  std::uint64_t count = get_count(in);
  std::vector<std::uint64_t> v;
  v.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) v.push_back(get_u64(in));
  return v;
}

void put_basic(std::ostream& out, const BasicFsIndex& ix) {
  put_vec_i64(out, ix.instance().values());
  put_vec_i64(out, ix.raw_caps());
  put_vec_i64(out, ix.raw_entries());
}

BasicFsIndex get_basic(std::istream& in) {
  std::vector<Value> values = get_vec_i64(in);
  std::vector<Value> caps = get_vec_i64(in);
  std::vector<Pos> entries = get_vec_i64(in);
  if (values.empty()) throw SerializeError("empty stored array");
  return BasicFsIndex::restore(FsInstance(std::move(values)), std::move(caps),
                               std::move(entries));
}

void put_global(std::ostream& out, const GlobalLevel& g) {
  put_u64(out, static_cast<std::uint64_t>(g.decomp.k));
  put_vec_i64(out, g.decomp.minima);
  put_vec_i64(out, g.decomp.quotients);
  put_vec_i64(out, g.decomp.suffix_min);
  put_basic(out, g.quotient_index);
  put_vec_i64(out, g.drops.raw());
}

GlobalLevel get_global(std::istream& in) {
  Value k = static_cast<Value>(get_u64(in));
  if (k < 2 || k > (Value{1} << 20)) {
    throw SerializeError("block size corrupt");
  }
  std::vector<Value> minima = get_vec_i64(in);
  std::vector<Value> quotients = get_vec_i64(in);
  std::vector<Value> suffix = get_vec_i64(in);
  if (minima.empty()) throw SerializeError("empty block layer");
  BasicFsIndex quot = get_basic(in);
  BlockDropTable drops = BlockDropTable::restore(
      k, static_cast<Pos>(minima.size()), get_vec_i64(in));
  BlockDecomposition d;
  d.k = k;
  d.n = static_cast<Pos>(suffix.size());
  d.min_value = minima[0];
  for (Value m : minima) {
    if (m < d.min_value) d.min_value = m;
  }
  d.minima = std::move(minima);
  d.quotients = std::move(quotients);
  d.suffix_min = std::move(suffix);
  return GlobalLevel{std::move(d), std::move(quot), std::move(drops)};
}

void put_two(std::ostream& out, const TwoLevelFsIndex& ix) {
  put_vec_i64(out, ix.instance().values());
  put_u64(out, static_cast<std::uint64_t>(ix.block_size()));
  put_u64(out, ix.local_kind() == LocalKind::basic ? 0 : 1);
  put_global(out, ix.global());
  if (ix.local_kind() == LocalKind::basic) {
    put_u64(out, ix.local_indexes().size());
    for (const BasicFsIndex& loc : ix.local_indexes()) put_basic(out, loc);
  } else {
    put_vec_u64(out, ix.block_codes());
  }
}

TwoLevelFsIndex get_two(std::istream& in) {
  std::vector<Value> values = get_vec_i64(in);
  if (values.empty()) throw SerializeError("empty stored array");
  Value k = static_cast<Value>(get_u64(in));
  std::uint64_t kind_tag = get_u64(in);
  if (kind_tag > 1) throw SerializeError("local kind corrupt");
  LocalKind kind = kind_tag == 0 ? LocalKind::basic : LocalKind::table;
  GlobalLevel global = get_global(in);
  std::vector<BasicFsIndex> locals;
  std::vector<std::uint64_t> codes;
  if (kind == LocalKind::basic) {
    std::uint64_t count = get_count(in);
    locals.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) locals.push_back(get_basic(in));
  } else {
    codes = get_vec_u64(in);
  }
  return TwoLevelFsIndex::restore(FsInstance(std::move(values)), k, kind,
                                  std::move(global), std::move(locals),
                                  std::move(codes));
}

void put_multi(std::ostream& out, const MultiLevelFsIndex& ix) {
  put_u64(out, static_cast<std::uint64_t>(ix.depth()));
  put_u64(out, ix.is_leaf() ? 1 : 0);
  if (ix.is_leaf()) {
    put_basic(out, ix.leaf_index());
    return;
  }
  put_vec_i64(out, ix.instance().values());
  put_global(out, ix.global());
  put_u64(out, ix.children().size());
  for (const MultiLevelFsIndex& c : ix.children()) put_multi(out, c);
}

MultiLevelFsIndex get_multi(std::istream& in) {
  int depth = static_cast<int>(get_u64(in));
  if (depth < 1 || depth > 64) throw SerializeError("recursion depth corrupt");
  std::uint64_t leaf_flag = get_u64(in);
  if (leaf_flag > 1) throw SerializeError("leaf flag corrupt");
  if (leaf_flag == 1) {
    BasicFsIndex leaf = get_basic(in);
    FsInstance inst{leaf.instance().values()};
    return MultiLevelFsIndex::restore(std::move(inst), depth, std::move(leaf),
                                      nullptr, {});
  }
  std::vector<Value> values = get_vec_i64(in);
  if (values.empty()) throw SerializeError("empty stored array");
  auto global = std::make_unique<GlobalLevel>(get_global(in));
  std::uint64_t count = get_count(in);
  std::vector<MultiLevelFsIndex> children;
  children.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) children.push_back(get_multi(in));
  return MultiLevelFsIndex::restore(FsInstance(std::move(values)), depth,
                                    std::nullopt, std::move(global),
                                    std::move(children));
}

std::uint64_t strategy_tag(Strategy s) {
  switch (s) {
    case Strategy::basic: return 0;
    case Strategy::two_basic: return 1;
    case Strategy::two_table: return 2;
    case Strategy::multi: return 3;
  }
  throw Error("unknown strategy");
}

LaIndex load_impl(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw SerializeError("not an artifact file (bad magic)");
  }
  std::uint64_t version = get_u64(in);
  if (version != kVersion) {
    throw SerializeError("unsupported artifact version " +
                         std::to_string(version));
  }
  std::uint64_t tag = get_u64(in);
  if (tag > 3) throw SerializeError("strategy tag corrupt");
  int levels = static_cast<int>(get_u64(in));
  std::uint64_t node_count = get_count(in);
  NodeId root = static_cast<NodeId>(get_u64(in));
  std::vector<NodeId> parents = get_vec_i64(in);
  std::vector<NodeId> tour = get_vec_i64(in);
  std::vector<Value> tour_levels = get_vec_i64(in);
  std::vector<Pos> last_pos = get_vec_i64(in);
  std::vector<Value> node_levels = get_vec_i64(in);

  if (parents.size() != node_count) {
    throw SerializeError("parent array size mismatch");
  }
  RootedTree tree = RootedTree::from_parents(root, std::move(parents));
  const Pos n = tree.node_count();
  const Pos len = 2 * n - 1;
  if (static_cast<Pos>(tour.size()) != len ||
      static_cast<Pos>(tour_levels.size()) != len ||
      static_cast<Pos>(last_pos.size()) != n ||
      static_cast<Pos>(node_levels.size()) != n) {
    throw SerializeError("tour array size mismatch");
  }
  if (node_levels != compute_levels(tree)) {
    throw SerializeError("node level array corrupt");
  }
  for (Pos t = 0; t < len; ++t) {
    NodeId v = tour[static_cast<std::size_t>(t)];
    if (v < 0 || v >= n) throw SerializeError("tour node out of range");
    if (tour_levels[static_cast<std::size_t>(t)] != node_levels[v]) {
      throw SerializeError("tour level mismatch");
    }
    if (t > 0) {
      Value d = tour_levels[t] - tour_levels[t - 1];
      if (d != 1 && d != -1) throw SerializeError("tour level step corrupt");
    }
  }
  if (tour.front() != root || tour.back() != root) {
    throw SerializeError("tour endpoints corrupt");
  }
  std::vector<Pos> last_check(static_cast<std::size_t>(n), 0);
  for (Pos t = 1; t <= len; ++t) {
    last_check[tour[static_cast<std::size_t>(t - 1)]] = t;
  }
  if (last_check != last_pos) {
    throw SerializeError("last occurrence array corrupt");
  }
  // Level checks alone cannot tie the tour to the tree: a reparented
  // node at an unchanged depth would slip through.
  if (tour != build_euler_tour(tree).tour) {
    throw SerializeError("tour does not match the tree");
  }

  EulerTour et{std::move(tour), std::move(tour_levels), std::move(last_pos),
               std::move(node_levels)};

  auto check_values = [&](const FsInstance& inst) {
    if (inst.values() != et.tour_levels) {
      throw SerializeError("index array does not match the tour");
    }
  };
  switch (tag) {
    case 0: {
      if (levels != 1) throw SerializeError("depth field corrupt");
      BasicFsIndex ix = get_basic(in);
      check_values(ix.instance());
      return LaIndex{std::move(tree), std::move(et), Strategy::basic, 1,
                     std::move(ix)};
    }
    case 1:
    case 2: {
      if (levels != 2) throw SerializeError("depth field corrupt");
      TwoLevelFsIndex ix = get_two(in);
      check_values(ix.instance());
      Strategy s = tag == 1 ? Strategy::two_basic : Strategy::two_table;
      if ((ix.local_kind() == LocalKind::basic) != (tag == 1)) {
        throw SerializeError("local kind does not match strategy");
      }
      return LaIndex{std::move(tree), std::move(et), s, 2, std::move(ix)};
    }
    default: {
      MultiLevelFsIndex ix = get_multi(in);
      check_values(ix.instance());
      if (ix.depth() != levels) throw SerializeError("depth field corrupt");
      return LaIndex{std::move(tree), std::move(et), Strategy::multi, levels,
                     std::move(ix)};
    }
  }
}

}  // namespace

void save_la_index(const LaIndex& art, std::ostream& out) {
  out.write(kMagic, 4);
  put_u64(out, kVersion);
  put_u64(out, strategy_tag(art.strategy));
  put_u64(out, static_cast<std::uint64_t>(art.levels));
  put_u64(out, static_cast<std::uint64_t>(art.tree.node_count()));
  put_u64(out, static_cast<std::uint64_t>(art.tree.root));
  put_vec_i64(out, art.tree.parents);
  put_vec_i64(out, art.tour.tour);
  put_vec_i64(out, art.tour.tour_levels);
  put_vec_i64(out, art.tour.last_pos);
  put_vec_i64(out, art.tour.node_levels);
  std::visit(
      [&](const auto& ix) {
        using T = std::decay_t<decltype(ix)>;
        if constexpr (std::is_same_v<T, BasicFsIndex>) {
          put_basic(out, ix);
        } else if constexpr (std::is_same_v<T, TwoLevelFsIndex>) {
          put_two(out, ix);
        } else {
          put_multi(out, ix);
        }
      },
      art.fs);
}

LaIndex load_la_index(std::istream& in) {
  try {
    return load_impl(in);
  } catch (const SerializeError&) {
    throw;
  } catch (const Error& e) {
    throw SerializeError(std::string("artifact invalid: ") + e.what());
  }
}

void save_la_index_file(const LaIndex& art, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  save_la_index(art, out);
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

LaIndex load_la_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_la_index(in);
}

}  // namespace lafs
