#include "lafs/tree.hpp"

#include <charconv>
#include <utility>

namespace lafs {

namespace {

std::string_view next_line(std::string_view& rest) {
  std::size_t nl = rest.find('\n');
  std::string_view line = rest.substr(0, nl);
  rest = nl == std::string_view::npos ? std::string_view{}
                                      : rest.substr(nl + 1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
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

std::int64_t parse_int(std::string_view token, int line_no) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": '" +
                     std::string(token) + "' is not an integer");
  }
  return value;
}

bool blank(std::string_view line) {
  return split_tokens(line).empty();
}

}  // namespace

RootedTree RootedTree::from_parents(NodeId root,
                                    std::vector<NodeId> parents) {
  const NodeId n = static_cast<NodeId>(parents.size());
  if (n < 1) throw ParseError("tree needs at least one node");
  if (root < 0 || root >= n) {
    throw ParseError("root id " + std::to_string(root) + " out of range");
  }
  if (parents[root] != kNoNode) {
    throw ParseError("root " + std::to_string(root) +
                     " must have parent -1");
  }
  for (NodeId v = 0; v < n; ++v) {
    if (v == root) continue;
    if (parents[v] == kNoNode) {
      throw ParseError("node " + std::to_string(v) +
                       " has no parent but is not the root");
    }
    if (parents[v] < 0 || parents[v] >= n) {
      throw ParseError("parent of node " + std::to_string(v) +
                       " out of range");
    }
  }

  // Every non-root has one parent, so a chain either reaches the root
  // or runs into a cycle; marking the walked path tells which.
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0/1/2 =
  state[root] = 2;  // unknown / on current walk / reaches root
  std::vector<NodeId> path;
  for (NodeId v = 0; v < n; ++v) {
    if (state[v] != 0) continue;
    path.clear();
    NodeId u = v;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = parents[u];
    }
    if (state[u] == 1) {
      if (path.front() == u) {
        throw ParseError("parent cycle at node " + std::to_string(u));
      }
      throw ParseError("node " + std::to_string(path.front()) +
                       " cannot reach the root (parent chain loops at node " +
                       std::to_string(u) + ")");
    }
    for (NodeId w : path) state[w] = 2;
  }

  RootedTree tree;
  tree.root = root;
  tree.parents = std::move(parents);
  tree.children.resize(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    if (v != root) tree.children[tree.parents[v]].push_back(v);
  }
  return tree;
}

RootedTree RootedTree::parse(std::string_view text) {
  std::string_view rest = text;
  std::string_view header = next_line(rest);
  std::vector<std::string_view> head_tokens = split_tokens(header);
  if (head_tokens.size() != 2) {
    throw ParseError("line 1: expected 'n root'");
  }
  std::int64_t n = parse_int(head_tokens[0], 1);
  NodeId root = parse_int(head_tokens[1], 1);
  if (n < 1) throw ParseError("line 1: node count must be at least 1");

  std::vector<std::string_view> parent_tokens = split_tokens(next_line(rest));
  if (static_cast<std::int64_t>(parent_tokens.size()) != n) {
    throw ParseError("line 2: expected " + std::to_string(n) +
                     " parent ids, found " +
                     std::to_string(parent_tokens.size()));
  }
  std::vector<NodeId> parents;
  parents.reserve(static_cast<std::size_t>(n));
  for (std::string_view tok : parent_tokens) {
    parents.push_back(parse_int(tok, 2));
  }

  int line_no = 3;
  while (!rest.empty()) {
    if (!blank(next_line(rest))) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": unexpected trailing content");
    }
    ++line_no;
  }
  return from_parents(root, std::move(parents));
}

std::vector<Value> compute_levels(const RootedTree& tree) {
  std::vector<Value> levels(static_cast<std::size_t>(tree.node_count()), 0);
  std::vector<NodeId> stack{tree.root};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId c : tree.children[v]) {
      levels[c] = levels[v] + 1;
      stack.push_back(c);
    }
  }
  return levels;
}

NodeId walk_ancestor(const RootedTree& tree, NodeId v, Value hops) {
  if (v < 0 || v >= tree.node_count()) {
    throw Error("node id " + std::to_string(v) + " out of range");
  }
  if (hops < 0) throw HopOutOfRange("hops must be non-negative");
  for (Value h = 0; h < hops; ++h) {
    v = tree.parents[v];
    if (v == kNoNode) {
      throw HopOutOfRange("hops exceed the node's level");
    }
  }
  return v;
}

}  // namespace lafs
