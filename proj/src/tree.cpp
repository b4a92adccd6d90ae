#include "tcnkit/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tcnkit/errors.hpp"

namespace tcnkit {

int BinaryTree::add_node(std::string label) {
  nodes_.push_back(Node{});
  nodes_.back().label = std::move(label);
  return static_cast<int>(nodes_.size()) - 1;
}

void BinaryTree::add_edge(int parent, int child) {
  nodes_.at(static_cast<std::size_t>(parent)).children.push_back(child);
  nodes_.at(static_cast<std::size_t>(child)).parent = parent;
}

std::vector<int> BinaryTree::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i)
    if (is_leaf(i)) out.push_back(i);
  return out;
}

std::vector<std::string> BinaryTree::leaf_names() const {
  std::vector<std::string> out;
  for (int id : leaves()) out.push_back(node(id).label);
  std::sort(out.begin(), out.end());
  return out;
}

TaxonSet BinaryTree::taxon_set(const std::optional<std::string>& reserved) const {
  return TaxonSet::from_names(leaf_names(), reserved);
}

int BinaryTree::leaf_by_name(std::string_view name) const {
  for (int i = 0; i < node_count(); ++i)
    if (is_leaf(i) && node(i).label == name) return i;
  return -1;
}

void BinaryTree::validate() const {
  if (root_ < 0 || root_ >= node_count()) throw StructuralError("tree has no root");
  if (node(root_).parent != -1) throw StructuralError("root has a parent");
  if (node(root_).children.size() != 1)
    throw StructuralError("root must have outdegree 1, node " + std::to_string(root_) +
                          " has outdegree " + std::to_string(node(root_).children.size()));
  std::set<std::string> seen;
  std::vector<int> visited(static_cast<std::size_t>(node_count()), 0);
  std::function<void(int)> dfs = [&](int id) {
    if (visited[static_cast<std::size_t>(id)]) throw StructuralError("node " + std::to_string(id) + " reached twice");
    visited[static_cast<std::size_t>(id)] = 1;
    const Node& n = node(id);
    if (n.children.empty()) {
      if (n.label.empty()) throw StructuralError("unlabeled leaf node " + std::to_string(id));
      if (!is_valid_taxon_name(n.label))
        throw StructuralError("invalid leaf label '" + n.label + "'");
      if (!seen.insert(n.label).second)
        throw StructuralError("duplicate leaf label '" + n.label + "'");
    } else {
      if (!n.label.empty()) throw StructuralError("internal node " + std::to_string(id) + " is labeled");
      if (id != root_ && n.children.size() != 2)
        throw StructuralError("internal node " + std::to_string(id) + " has outdegree " +
                              std::to_string(n.children.size()));
      for (int c : n.children) {
        if (node(c).parent != id)
          throw StructuralError("edge " + std::to_string(id) + "->" + std::to_string(c) +
                                " has inconsistent parent link");
        dfs(c);
      }
    }
  };
  dfs(root_);
  for (int i = 0; i < node_count(); ++i)
    if (!visited[static_cast<std::size_t>(i)])
      throw StructuralError("node " + std::to_string(i) + " unreachable from root");
}

namespace {

// Returns (rendered subtree, smallest descendant leaf name).
std::pair<std::string, std::string> render_canonical(const BinaryTree& t, int id) {
  const BinaryTree::Node& n = t.node(id);
  if (n.children.empty()) return {n.label, n.label};
  std::vector<std::pair<std::string, std::string>> parts;
  for (int c : n.children) parts.push_back(render_canonical(t, c));
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  std::string text = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) text += ',';
    text += parts[i].first;
  }
  text += ')';
  return {text, parts.front().second};
}

}  // namespace

std::string canonical_form(const BinaryTree& tree) {
  tree.validate();
  int top = tree.node(tree.root()).children.front();
  return "(" + render_canonical(tree, top).first + ");";
}

bool is_line_tree(const BinaryTree& tree) {
  tree.validate();
  for (int i = 0; i < tree.node_count(); ++i) {
    if (i == tree.root() || tree.is_leaf(i)) continue;
    bool has_leaf_child = false;
    for (int c : tree.node(i).children)
      if (tree.is_leaf(c)) has_leaf_child = true;
    if (!has_leaf_child) return false;
  }
  return true;
}

}  // namespace tcnkit
