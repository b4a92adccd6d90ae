#pragma once

#include <string>
#include <vector>

#include "tcnkit/taxon.hpp"
#include "tcnkit/tree.hpp"

namespace tcnkit {

enum class NodeKind { Root, TreeNode, Reticulate, Leaf };

/// Rooted phylogenetic network: a DAG with an outdegree-1 root,
/// indegree-1/outdegree-2 tree nodes, indegree-&gt;=2/outdegree-1 reticulate
/// nodes and labeled leaves.
///
/// The arena may hold intermediate graphs that violate the degree
/// constraints (construction and display pipelines need that); validate()
/// and kind() are the authority, parsers and builders are not trusted.
class PhyloNetwork {
 public:
  struct Node {
    std::vector<int> parents;
    std::vector<int> children;
    std::string label;  // empty for non-leaves
  };

  int add_node(std::string label = {});
  void add_edge(int parent, int child);
  void remove_edge(int parent, int child);
  void set_root(int id) { root_ = id; }

  int root() const { return root_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  bool has_node(int id) const { return id >= 0 && id < node_count(); }
  bool is_leaf(int id) const { return node(id).children.empty() && !node(id).label.empty(); }

  // Kind derived from degrees and label; throws StructuralError for a node
  // that fits no kind.
  NodeKind kind(int id) const;

  std::vector<int> leaves() const;
  std::vector<std::string> leaf_names() const;  // sorted
  TaxonSet taxon_set(const std::optional<std::string>& reserved = {}) const;
  std::vector<int> reticulations() const;

  void validate() const;

  static PhyloNetwork from_tree(const BinaryTree& tree);
  // Requires a reticulation-free network of binary-tree shape.
  BinaryTree to_tree() const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

// Sum over reticulate nodes of indegree minus one. Zero for a tree.
long long hybridization_number(const PhyloNetwork& net);

// Every non-leaf node has at least one child that is a tree node or a leaf.
bool is_tree_child(const PhyloNetwork& net);

// True when a directed path from v to u exists (reflexively true for u = v).
bool is_below(const PhyloNetwork& net, int u, int v);

// Contracts indegree-1/outdegree-1 nodes until none remain. Accepts graphs
// that violate the network degree constraints; node ids are renumbered
// compactly. Throws StructuralError when a contraction would create a
// parallel edge pair.
PhyloNetwork suppress_degree2(const PhyloNetwork& net);

}  // namespace tcnkit
