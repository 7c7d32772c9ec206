#include "blancmange/sdtree.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace blancmange {

namespace {

std::uint32_t build(std::vector<SdNode>& nodes, std::uint32_t leaves, std::uint16_t depth) {
  const auto index = static_cast<std::uint32_t>(nodes.size());
  nodes.push_back(SdNode{leaves, SdNode::kNone, SdNode::kNone, depth, NodeLabel::Leaf});
  if (leaves == 1) return index;

  const std::uint32_t big = leaves - leaves / 2;
  const std::uint32_t small = leaves / 2;
  const std::uint32_t left = build(nodes, big, static_cast<std::uint16_t>(depth + 1));
  const std::uint32_t right = build(nodes, small, static_cast<std::uint16_t>(depth + 1));

  SdNode& self = nodes[index];
  self.left = left;
  self.right = right;
  self.label = nodes[left].leaf_count == nodes[right].leaf_count ? NodeLabel::S : NodeLabel::D;
  return index;
}

const char* label_text(NodeLabel label) {
  switch (label) {
    case NodeLabel::S:
      return "S";
    case NodeLabel::D:
      return "D";
    case NodeLabel::Leaf:
      break;
  }
  return "leaf";
}

}  // namespace

SdTree build_dnc_tree(std::uint64_t n, std::uint64_t bound) {
  if (n == 0) throw std::domain_error("a tree needs at least one leaf");
  if (n > bound || n >= (std::uint64_t{1} << 31)) {
    throw std::range_error("leaf count " + std::to_string(n) + " exceeds the tree oracle bound " +
                           std::to_string(bound));
  }
  std::vector<SdNode> nodes;
  nodes.reserve(2 * n - 1);
  build(nodes, static_cast<std::uint32_t>(n), 0);
  return SdTree(std::move(nodes));
}

LabelCounts count_labels(const SdTree& tree) {
  LabelCounts counts;
  for (const SdNode& node : tree.nodes()) {
    if (node.label == NodeLabel::S) ++counts.s_count;
    if (node.label == NodeLabel::D) ++counts.d_count;
  }
  return counts;
}

std::uint64_t LevelProfile::total() const {
  std::uint64_t sum = 0;
  for (auto c : d_counts) sum += c;
  return sum;
}

LevelProfile level_d_counts(const SdTree& tree) {
  LevelProfile profile;
  const std::uint64_t n = tree.leaf_count();
  profile.d_counts.assign(static_cast<std::size_t>(std::bit_width(n)) - 1, 0);
  for (const SdNode& node : tree.nodes()) {
    if (node.label != NodeLabel::D) continue;
    if (node.depth >= profile.d_counts.size()) profile.d_counts.resize(node.depth + 1u, 0);
    ++profile.d_counts[node.depth];
  }
  return profile;
}

std::string export_dot(const SdTree& tree) {
  std::ostringstream out;
  out << "digraph dnc {\n";
  const auto nodes = tree.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const SdNode& node = nodes[i];
    out << "  n" << i << " [label=\"" << node.leaf_count;
    if (node.is_leaf()) {
      out << "\", shape=box];\n";
    } else {
      out << ' ' << label_text(node.label) << "\"];\n";
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const SdNode& node = nodes[i];
    if (node.is_leaf()) continue;
    out << "  n" << i << " -> n" << node.left << ";\n";
    out << "  n" << i << " -> n" << node.right << ";\n";
  }
  out << "}\n";
  return out.str();
}

bool is_valid_dnc_tree(const SdTree& tree) {
  const auto nodes = tree.nodes();
  if (nodes.empty()) return false;
  std::uint64_t interior = 0;
  std::uint64_t leaves = 0;
  for (const SdNode& node : nodes) {
    if (node.is_leaf()) {
      if (node.leaf_count != 1 || node.left != SdNode::kNone || node.right != SdNode::kNone) return false;
      ++leaves;
      continue;
    }
    if (node.left >= nodes.size() || node.right >= nodes.size()) return false;
    const SdNode& l = nodes[node.left];
    const SdNode& r = nodes[node.right];
    if (l.depth != node.depth + 1 || r.depth != node.depth + 1) return false;
    if (node.leaf_count != l.leaf_count + r.leaf_count) return false;
    const std::uint32_t gap = l.leaf_count > r.leaf_count ? l.leaf_count - r.leaf_count : r.leaf_count - l.leaf_count;
    if (gap > 1) return false;
    if ((gap == 0) != (node.label == NodeLabel::S)) return false;
    ++interior;
  }
  return leaves == tree.leaf_count() && interior + 1 == leaves;
}

}  // namespace blancmange
