#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lafs/la_index.hpp"
#include "lafs/random_gen.hpp"
#include "lafs/serialize.hpp"

namespace {

using namespace lafs;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::int64_t> parse_i64(std::string_view tok) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

int run_build(const std::string& input, const std::string& strategy,
              int levels, const std::string& out_path) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot open '" << input << "'\n";
    return 1;
  }
  std::ostringstream text;
  text << in.rdbuf();
  RootedTree tree = RootedTree::parse(text.str());

  Strategy s = *strategy_from_name(strategy);
  auto t0 = Clock::now();
  LaIndex art = build_la_index(std::move(tree), s, levels);
  double secs = seconds_since(t0);
  save_la_index_file(art, out_path);

  std::cout << "strategy " << strategy_name(art.strategy) << "\n"
            << "levels " << art.levels << "\n"
            << "nodes " << art.tree.node_count() << "\n"
            << "array_length " << art.tour.length() << "\n"
            << "total_entries " << art.table_entries() << "\n"
            << "build_seconds " << fmt("%.6f", secs) << "\n"
            << "wrote " << out_path << "\n";
  return 0;
}

int run_query(const std::string& index_path, const std::string& queries_path) {
  LaIndex art = load_la_index_file(index_path);

  std::ifstream qfile;
  std::istream* qs = &std::cin;
  if (!queries_path.empty()) {
    qfile.open(queries_path);
    if (!qfile) {
      std::cerr << "error: cannot open '" << queries_path << "'\n";
      return 1;
    }
    qs = &qfile;
  }

  const Pos n = art.tree.node_count();
  std::string line;
  int line_no = 0;
  while (std::getline(*qs, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string_view> tok = split_ws(line);
    if (tok.empty()) continue;

    bool malformed = tok.size() != 3;
    std::optional<std::int64_t> a, b;
    if (!malformed) {
      a = parse_i64(tok[1]);
      b = parse_i64(tok[2]);
      malformed = !a || !b || (tok[0] != "LA" && tok[0] != "FS");
    }
    if (malformed) {
      std::cerr << "line " << line_no << ": malformed query '" << line
                << "'\n";
      return 1;
    }

    if (tok[0] == "LA") {
      if (*a < 0 || *a >= n) {
        std::cout << "ERR node\n";
        continue;
      }
      try {
        std::cout << art.ancestor(*a, *b) << "\n";
      } catch (const HopOutOfRange&) {
        std::cout << "ERR hops\n";
      }
    } else {
      try {
        Pos r = art.fs_query(*a, *b);
        if (r == kNoPos) {
          std::cout << "NONE\n";
        } else {
          std::cout << r << "\n";
        }
      } catch (const PositionOutOfRange&) {
        std::cout << "ERR pos\n";
      }
    }
  }
  return 0;
}

std::vector<Strategy> strategy_list(const std::string& name) {
  if (name == "all") {
    return {Strategy::basic, Strategy::two_basic, Strategy::two_table,
            Strategy::multi};
  }
  return {*strategy_from_name(name)};
}

int run_verify(const std::string& strategy, int levels, std::int64_t n,
               std::int64_t trees, std::uint64_t seed) {
  std::cout << "verify n=" << n << " trees=" << trees << " seed=" << seed
            << "\n";
  std::uint64_t total_mismatches = 0;
  for (Strategy s : strategy_list(strategy)) {
    Rng rng(seed);
    std::uint64_t la_queries = 0, fs_queries = 0, mismatches = 0;
    for (std::int64_t t = 0; t < trees; ++t) {
      LaIndex art = build_la_index(random_tree(n, rng), s, levels);
      const std::vector<Value>& lv = art.tour.node_levels;
      for (NodeId v = 0; v < n; ++v) {
        for (Value i = 0; i <= lv[v]; ++i) {
          ++la_queries;
          if (art.ancestor(v, i) != walk_ancestor(art.tree, v, i)) {
            ++mismatches;
          }
        }
      }
      const std::vector<Value>& a = art.tour.tour_levels;
      const Pos len = art.tour.length();
      const Value max_level = *std::max_element(a.begin(), a.end());
      for (Value x = -1; x <= max_level + 1; ++x) {
        Pos expect = kNoPos;  // rolling first-at-or-after scan answer
        for (Pos i = len; i >= 1; --i) {
          if (a[i - 1] <= x) expect = i;
          ++fs_queries;
          if (art.fs_query(i, x) != expect) ++mismatches;
        }
      }
    }
    std::cout << "strategy " << strategy_name(s) << "\n"
              << "  la_queries " << la_queries << "\n"
              << "  fs_queries " << fs_queries << "\n"
              << "  mismatches " << mismatches << "\n";
    total_mismatches += mismatches;
  }
  std::cout << (total_mismatches == 0 ? "result PASS" : "result FAIL")
            << "\n";
  return total_mismatches == 0 ? 0 : 3;
}

int run_bench(const std::string& strategy, int levels, std::int64_t n,
              std::int64_t query_count, std::uint64_t seed) {
  Rng rng(seed);
  RootedTree tree = random_tree(n, rng);
  Strategy s = *strategy_from_name(strategy);
  auto t0 = Clock::now();
  LaIndex art = build_la_index(std::move(tree), s, levels);
  double build_secs = seconds_since(t0);

  const std::vector<Value>& lv = art.tour.node_levels;
  std::vector<NodeId> qv(static_cast<std::size_t>(query_count));
  std::vector<Value> qh(static_cast<std::size_t>(query_count));
  for (std::int64_t q = 0; q < query_count; ++q) {
    NodeId v = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
    qv[q] = v;
    qh[q] = static_cast<Value>(
        rng.below(static_cast<std::uint64_t>(lv[v]) + 1));
  }

  std::uint64_t checksum = 0;
  t0 = Clock::now();
  for (std::int64_t q = 0; q < query_count; ++q) {
    checksum += static_cast<std::uint64_t>(art.ancestor(qv[q], qh[q]));
  }
  double query_secs = seconds_since(t0);

  instrument::take_table_reads();
  std::uint64_t reads_total = 0, reads_max = 0;
  for (std::int64_t q = 0; q < query_count; ++q) {
    art.ancestor(qv[q], qh[q]);
    std::uint64_t r = instrument::take_table_reads();
    reads_total += r;
    reads_max = std::max(reads_max, r);
  }

  const double len = static_cast<double>(art.tour.length());
  std::cout << "strategy " << strategy_name(art.strategy) << "\n"
            << "levels " << art.levels << "\n"
            << "seed " << seed << "\n"
            << "nodes " << n << "\n"
            << "array_length " << art.tour.length() << "\n"
            << "total_entries " << art.table_entries() << "\n"
            << "entries_per_element "
            << fmt("%.4f", static_cast<double>(art.table_entries()) / len)
            << "\n"
            << "build_seconds " << fmt("%.6f", build_secs) << "\n"
            << "queries " << query_count << "\n"
            << "queries_per_second "
            << fmt("%.1f", static_cast<double>(query_count) / query_secs)
            << "\n"
            << "table_reads_mean "
            << fmt("%.4f", static_cast<double>(reads_total) /
                               static_cast<double>(query_count))
            << "\n"
            << "table_reads_max " << reads_max << "\n"
            << "answer_checksum " << checksum << "\n";
  return 0;
}

struct DepthAgg {
  std::uint64_t inner = 0;
  std::uint64_t leaves = 0;
  std::uint64_t entries = 0;
};

void walk_levels(const MultiLevelFsIndex& m, std::size_t depth,
                 std::vector<DepthAgg>& agg) {
  if (agg.size() < depth) agg.resize(depth);
  DepthAgg& a = agg[depth - 1];
  if (m.is_leaf()) {
    ++a.leaves;
    a.entries += m.entry_count();
    return;
  }
  ++a.inner;
  a.entries += m.global().entry_count();
  for (const MultiLevelFsIndex& c : m.children()) {
    walk_levels(c, depth + 1, agg);
  }
}

int run_stats(const std::string& index_path) {
  LaIndex art = load_la_index_file(index_path);
  const Pos len = art.tour.length();
  std::cout << "strategy " << strategy_name(art.strategy) << "\n"
            << "levels " << art.levels << "\n"
            << "nodes " << art.tree.node_count() << "\n"
            << "array_length " << len << "\n";

  if (const auto* basic = std::get_if<BasicFsIndex>(&art.fs)) {
    std::uint64_t bound =
        3 * static_cast<std::uint64_t>(len) *
        (ceil_log2(static_cast<std::uint64_t>(len) + 1) + 2);
    std::cout << "jump_entries " << basic->entry_count() << "\n"
              << "jump_entries_bound " << bound << "\n";
  } else if (const auto* two = std::get_if<TwoLevelFsIndex>(&art.fs)) {
    const GlobalLevel& g = two->global();
    const Value k = two->block_size();
    std::cout << "block_size " << k << "\n"
              << "blocks " << g.decomp.block_count() << "\n"
              << "minima_entries " << g.decomp.minima.size() << "\n"
              << "quotient_entries " << g.decomp.quotients.size() << "\n"
              << "suffix_entries " << g.decomp.suffix_min.size() << "\n"
              << "drop_entries " << g.drops.entry_count() << "\n"
              << "drop_entries_bound " << (len + k) << "\n"
              << "quotient_jump_entries " << g.quotient_index.entry_count()
              << "\n";
    if (two->local_kind() == LocalKind::basic) {
      std::uint64_t local_total = 0;
      for (const BasicFsIndex& loc : two->local_indexes()) {
        local_total += loc.entry_count();
      }
      std::cout << "local_jump_entries " << local_total << "\n";
    } else {
      std::cout << "block_codes " << two->block_codes().size() << "\n"
                << "pattern_entries " << two->pattern_table().entry_count()
                << "\n";
    }
  } else if (const auto* multi = std::get_if<MultiLevelFsIndex>(&art.fs)) {
    std::cout << "actual_depth " << multi->actual_depth() << "\n";
    std::vector<DepthAgg> agg;
    walk_levels(*multi, 1, agg);
    for (std::size_t d = 0; d < agg.size(); ++d) {
      std::cout << "level " << (d + 1) << " inner=" << agg[d].inner
                << " leaves=" << agg[d].leaves << " entries=" << agg[d].entries
                << "\n";
    }
  }

  for (int r = 1; r <= 3; ++r) {
    std::cout << "iter_log_" << r << " "
              << fmt("%.4f", iter_log(static_cast<double>(len), r)) << "\n";
  }
  std::cout << "total_entries " << art.table_entries() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level-ancestor / find-smaller index tool"};
  app.require_subcommand(1);

  std::string b_input, b_strategy, b_out;
  int b_levels = 2;
  auto* build = app.add_subcommand("build", "index a tree file");
  build->add_option("--input", b_input, "tree file")->required();
  build->add_option("--strategy", b_strategy, "index kind")
      ->required()
      ->check(CLI::IsMember({"basic", "two", "table", "multi"}));
  build->add_option("--levels", b_levels, "recursion depth for multi");
  build->add_option("--out", b_out, "artifact path")->required();

  std::string q_index, q_queries;
  auto* query = app.add_subcommand("query", "answer LA/FS queries");
  query->add_option("--index", q_index, "artifact path")->required();
  query->add_option("--queries", q_queries, "script file (default stdin)");

  std::string v_strategy = "all";
  int v_levels = 2;
  std::int64_t v_n = 256, v_trees = 25;
  std::uint64_t v_seed = 1;
  auto* verify = app.add_subcommand("verify", "check indexes against oracles");
  verify->add_option("--strategy", v_strategy)
      ->check(CLI::IsMember({"basic", "two", "table", "multi", "all"}));
  verify->add_option("--levels", v_levels, "recursion depth for multi");
  verify->add_option("--n", v_n, "nodes per tree");
  verify->add_option("--trees", v_trees, "tree count");
  verify->add_option("--seed", v_seed);

  std::string e_strategy = "table";
  int e_levels = 2;
  std::int64_t e_n = 1000000, e_queries = 1000000;
  std::uint64_t e_seed = 1;
  auto* bench = app.add_subcommand("bench", "time builds and queries");
  bench->add_option("--strategy", e_strategy)
      ->check(CLI::IsMember({"basic", "two", "table", "multi"}));
  bench->add_option("--levels", e_levels, "recursion depth for multi");
  bench->add_option("--n", e_n, "nodes");
  bench->add_option("--queries", e_queries, "query count");
  bench->add_option("--seed", e_seed);

  std::string s_index;
  auto* stats = app.add_subcommand("stats", "describe an artifact");
  stats->add_option("--index", s_index, "artifact path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto usage = [](const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
  };

  try {
    if (*build) {
      if (b_strategy == "multi" && b_levels < 1) {
        return usage("--levels must be at least 1");
      }
      return run_build(b_input, b_strategy, b_levels, b_out);
    }
    if (*query) return run_query(q_index, q_queries);
    if (*verify) {
      if (v_n < 1) return usage("--n must be at least 1");
      if (v_trees < 1) return usage("--trees must be at least 1");
      if (v_levels < 1) return usage("--levels must be at least 1");
      return run_verify(v_strategy, v_levels, v_n, v_trees, v_seed);
    }
    if (*bench) {
      if (e_n < 1) return usage("--n must be at least 1");
      if (e_queries < 1) return usage("--queries must be at least 1");
      if (e_strategy == "multi" && e_levels < 1) {
        return usage("--levels must be at least 1");
      }
      return run_bench(e_strategy, e_levels, e_n, e_queries, e_seed);
    }
    if (*stats) return run_stats(s_index);
  } catch (const lafs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
