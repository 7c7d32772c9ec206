#pragma once

// Explicit divide-and-conquer trees with S/D labels. This is the brute-force
// oracle the closed forms in delta.hpp are checked against, so nothing here
// depends on those formulas.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace blancmange {

enum class NodeLabel : std::uint8_t { Leaf, S, D };

struct SdNode {
  static constexpr std::uint32_t kNone = UINT32_MAX;

  std::uint32_t leaf_count = 1;
  std::uint32_t left = kNone;
  std::uint32_t right = kNone;
  std::uint16_t depth = 0;
  NodeLabel label = NodeLabel::Leaf;

  bool is_leaf() const { return label == NodeLabel::Leaf; }
};

// Full binary tree stored in preorder; node 0 is the root.
class SdTree {
 public:
  // Largest leaf count build_dnc_tree accepts by default (2^23 - 1 nodes).
  static constexpr std::uint64_t kOracleBound = std::uint64_t{1} << 22;

  explicit SdTree(std::vector<SdNode> nodes) : nodes_(std::move(nodes)) {}

  std::span<const SdNode> nodes() const { return nodes_; }
  const SdNode& root() const { return nodes_.front(); }
  const SdNode& node(std::uint32_t i) const { return nodes_[i]; }
  std::uint64_t leaf_count() const { return nodes_.front().leaf_count; }

 private:
  std::vector<SdNode> nodes_;
};

// Larger half goes left: a node with m leaves has children ceil(m/2), floor(m/2).
// Throws std::domain_error for n = 0, std::range_error for n > bound.
SdTree build_dnc_tree(std::uint64_t n, std::uint64_t bound = SdTree::kOracleBound);

struct LabelCounts {
  std::uint64_t s_count = 0;
  std::uint64_t d_count = 0;
};

LabelCounts count_labels(const SdTree& tree);

// D-node counts per depth, root at depth 0. Sized floor(log2 n) entries, and
// grown if a D-node ever shows up deeper than that.
struct LevelProfile {
  std::vector<std::uint64_t> d_counts;

  std::uint64_t total() const;
};

LevelProfile level_d_counts(const SdTree& tree);

// Graphviz text. Node statements in preorder, then edges, left before right.
std::string export_dot(const SdTree& tree);

// Checks full-binary shape, leaf-count sums, labels and the at-most-one
// imbalance property at every interior node.
bool is_valid_dnc_tree(const SdTree& tree);

}  // namespace blancmange
