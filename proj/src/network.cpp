#include "tcnkit/network.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tcnkit/errors.hpp"

namespace tcnkit {

int PhyloNetwork::add_node(std::string label) {
  nodes_.push_back(Node{});
  nodes_.back().label = std::move(label);
  return static_cast<int>(nodes_.size()) - 1;
}

void PhyloNetwork::add_edge(int parent, int child) {
  nodes_.at(static_cast<std::size_t>(parent)).children.push_back(child);
  nodes_.at(static_cast<std::size_t>(child)).parents.push_back(parent);
}

void PhyloNetwork::remove_edge(int parent, int child) {
  auto& cs = nodes_.at(static_cast<std::size_t>(parent)).children;
  auto cit = std::find(cs.begin(), cs.end(), child);
  if (cit == cs.end()) throw StructuralError("no such edge to remove");
  cs.erase(cit);
  auto& ps = nodes_.at(static_cast<std::size_t>(child)).parents;
  ps.erase(std::find(ps.begin(), ps.end(), parent));
}

NodeKind PhyloNetwork::kind(int id) const {
  const Node& n = node(id);
  std::size_t in = n.parents.size(), out = n.children.size();
  if (in == 0 && out == 1 && n.label.empty() && id == root_) return NodeKind::Root;
  if (in == 1 && out == 0 && !n.label.empty()) return NodeKind::Leaf;
  if (in == 1 && out == 2 && n.label.empty()) return NodeKind::TreeNode;
  if (in >= 2 && out == 1 && n.label.empty()) return NodeKind::Reticulate;
  throw StructuralError("node " + std::to_string(id) + " fits no node kind (indegree " +
                        std::to_string(in) + ", outdegree " + std::to_string(out) +
                        (n.label.empty() ? ", unlabeled)" : ", labeled '" + n.label + "')"));
}

std::vector<int> PhyloNetwork::leaves() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i)
    if (is_leaf(i)) out.push_back(i);
  return out;
}

std::vector<std::string> PhyloNetwork::leaf_names() const {
  std::vector<std::string> out;
  for (int id : leaves()) out.push_back(node(id).label);
  std::sort(out.begin(), out.end());
  return out;
}

TaxonSet PhyloNetwork::taxon_set(const std::optional<std::string>& reserved) const {
  return TaxonSet::from_names(leaf_names(), reserved);
}

std::vector<int> PhyloNetwork::reticulations() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i)
    if (node(i).parents.size() >= 2) out.push_back(i);
  return out;
}

void PhyloNetwork::validate() const {
  if (root_ < 0 || root_ >= node_count()) throw StructuralError("network has no root");
  for (int i = 0; i < node_count(); ++i) {
    kind(i);  // throws with the offending node
    for (int c : node(i).children) {
      const auto& ps = node(c).parents;
      if (std::count(ps.begin(), ps.end(), i) !=
          std::count(node(i).children.begin(), node(i).children.end(), c))
        throw StructuralError("inconsistent adjacency at edge " + std::to_string(i) + "->" +
                              std::to_string(c));
    }
  }
  // acyclicity and reachability from the root
  std::vector<int> state(static_cast<std::size_t>(node_count()), 0);
  std::function<void(int)> dfs = [&](int id) {
    state[static_cast<std::size_t>(id)] = 1;
    for (int c : node(id).children) {
      if (state[static_cast<std::size_t>(c)] == 1)
        throw StructuralError("cycle through node " + std::to_string(c));
      if (state[static_cast<std::size_t>(c)] == 0) dfs(c);
    }
    state[static_cast<std::size_t>(id)] = 2;
  };
  dfs(root_);
  std::set<std::string> seen;
  for (int i = 0; i < node_count(); ++i) {
    if (state[static_cast<std::size_t>(i)] == 0)
      throw StructuralError("node " + std::to_string(i) + " unreachable from root");
    if (is_leaf(i) && !seen.insert(node(i).label).second)
      throw StructuralError("duplicate leaf label '" + node(i).label + "'");
  }
}

PhyloNetwork PhyloNetwork::from_tree(const BinaryTree& tree) {
  tree.validate();
  PhyloNetwork net;
  for (int i = 0; i < tree.node_count(); ++i) net.add_node(tree.node(i).label);
  for (int i = 0; i < tree.node_count(); ++i)
    for (int c : tree.node(i).children) net.add_edge(i, c);
  net.set_root(tree.root());
  return net;
}

BinaryTree PhyloNetwork::to_tree() const {
  validate();
  if (!reticulations().empty()) throw StructuralError("network has reticulations, not a tree");
  BinaryTree tree;
  for (int i = 0; i < node_count(); ++i) tree.add_node(node(i).label);
  for (int i = 0; i < node_count(); ++i)
    for (int c : node(i).children) tree.add_edge(i, c);
  tree.set_root(root_);
  tree.validate();
  return tree;
}

long long hybridization_number(const PhyloNetwork& net) {
  net.validate();
  long long hn = 0;
  for (int r : net.reticulations()) hn += static_cast<long long>(net.node(r).parents.size()) - 1;
  return hn;
}

bool is_tree_child(const PhyloNetwork& net) {
  net.validate();
  for (int i = 0; i < net.node_count(); ++i) {
    if (net.is_leaf(i)) continue;
    bool ok = false;
    for (int c : net.node(i).children)
      if (net.node(c).parents.size() == 1) ok = true;  // tree node or leaf
    if (!ok) return false;
  }
  return true;
}

bool is_below(const PhyloNetwork& net, int u, int v) {
  if (!net.has_node(u) || !net.has_node(v)) throw DomainError("unknown node id");
  if (u == v) return true;
  std::vector<int> stack{v};
  std::vector<char> seen(static_cast<std::size_t>(net.node_count()), 0);
  seen[static_cast<std::size_t>(v)] = 1;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int c : net.node(cur).children) {
      if (c == u) return true;
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        stack.push_back(c);
      }
    }
  }
  return false;
}

PhyloNetwork suppress_degree2(const PhyloNetwork& net) {
  // Work on mutable adjacency; contract lowest-id degree-2 node first.
  std::vector<PhyloNetwork::Node> nodes;
  nodes.reserve(static_cast<std::size_t>(net.node_count()));
  for (int i = 0; i < net.node_count(); ++i) nodes.push_back(net.node(i));
  std::vector<char> dead(nodes.size(), 0);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      if (dead[v]) continue;
      if (nodes[v].parents.size() != 1 || nodes[v].children.size() != 1) continue;
      int u = nodes[v].parents.front();
      int w = nodes[v].children.front();
      auto& uc = nodes[static_cast<std::size_t>(u)].children;
      if (std::find(uc.begin(), uc.end(), w) != uc.end())
        throw StructuralError("contracting node " + std::to_string(v) +
                              " would create a parallel edge " + std::to_string(u) + "->" +
                              std::to_string(w));
      // splice: u's child slot for v becomes w, w's parent slot for v becomes u
      *std::find(uc.begin(), uc.end(), static_cast<int>(v)) = w;
      auto& wp = nodes[static_cast<std::size_t>(w)].parents;
      *std::find(wp.begin(), wp.end(), static_cast<int>(v)) = u;
      dead[v] = 1;
      changed = true;
    }
  }

  // compact
  std::vector<int> remap(nodes.size(), -1);
  PhyloNetwork out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!dead[i]) remap[i] = out.add_node(nodes[i].label);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (dead[i]) continue;
    for (int c : nodes[i].children) out.add_edge(remap[i], remap[static_cast<std::size_t>(c)]);
  }
  if (net.root() < 0 || dead[static_cast<std::size_t>(net.root())])
    throw StructuralError("root was contracted away");
  out.set_root(remap[static_cast<std::size_t>(net.root())]);
  return out;
}

}  // namespace tcnkit
