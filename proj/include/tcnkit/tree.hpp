#pragma once

#include <string>
#include <vector>

#include "tcnkit/taxon.hpp"

namespace tcnkit {

/// Rooted binary leaf-labeled tree with an outdegree-1 root.
///
/// Nodes live in an arena of integer ids. The root has indegree 0 and
/// outdegree 1, internal nodes outdegree 2, leaves carry the labels.
class BinaryTree {
 public:
  struct Node {
    int parent = -1;
    std::vector<int> children;
    std::string label;  // empty for non-leaves
  };

  int add_node(std::string label = {});
  void add_edge(int parent, int child);
  void set_root(int id) { root_ = id; }

  int root() const { return root_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  bool is_leaf(int id) const { return node(id).children.empty(); }

  std::vector<int> leaves() const;
  // Leaf names sorted ascending.
  std::vector<std::string> leaf_names() const;
  TaxonSet taxon_set(const std::optional<std::string>& reserved = {}) const;
  int leaf_by_name(std::string_view name) const;  // -1 when absent

  // Throws StructuralError naming the offending nodes when any invariant of
  // the shape (degrees, reachability, acyclicity, label bijection) fails.
  void validate() const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

// Canonical text encoding; equal exactly for leaf-labeled-isomorphic trees.
// Children are ordered by smallest descendant leaf name.
std::string canonical_form(const BinaryTree& tree);

// True when every internal node except the root has a leaf child.
bool is_line_tree(const BinaryTree& tree);

}  // namespace tcnkit
