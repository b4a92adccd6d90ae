#include "tcnkit/construct.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "tcnkit/errors.hpp"
#include "tcnkit/lts.hpp"

namespace tcnkit {

BinaryTree line_tree_from_permutation(const std::vector<std::string>& perm,
                                      const std::string& reserved) {
  std::set<std::string> seen;
  for (const auto& p : perm) {
    if (!is_valid_taxon_name(p)) throw DomainError("invalid taxon name: '" + p + "'");
    if (!seen.insert(p).second) throw DomainError("duplicate symbol '" + p + "' in permutation");
    if (p == reserved)
      throw DomainError("reserved taxon '" + reserved + "' occurs in the permutation");
  }
  if (!is_valid_taxon_name(reserved))
    throw DomainError("invalid taxon name: '" + reserved + "'");

  BinaryTree tree;
  int root = tree.add_node();
  tree.set_root(root);
  int prev = root;
  for (const auto& p : perm) {
    int spine = tree.add_node();
    tree.add_edge(prev, spine);
    tree.add_edge(spine, tree.add_node(p));
    prev = spine;
  }
  tree.add_edge(prev, tree.add_node(reserved));
  tree.validate();
  return tree;
}

std::vector<std::string> permutation_from_line_tree(const BinaryTree& tree,
                                                    const std::string& reserved) {
  if (!is_line_tree(tree)) throw DomainError("input is not a line tree");
  std::vector<std::string> perm;
  int cur = tree.node(tree.root()).children.front();
  if (tree.is_leaf(cur)) {
    // single-leaf tree: the image of the empty permutation
    if (tree.node(cur).label != reserved)
      throw DomainError("not in the image: the single leaf is not the reserved taxon");
    return perm;
  }
  while (true) {
    const auto& ch = tree.node(cur).children;
    bool leaf0 = tree.is_leaf(ch[0]), leaf1 = tree.is_leaf(ch[1]);
    if (leaf0 && leaf1) {
      // lowest cherry: reserved leaf plus the permutation's last symbol
      const std::string &a = tree.node(ch[0]).label, &b = tree.node(ch[1]).label;
      if (a == reserved) perm.push_back(b);
      else if (b == reserved) perm.push_back(a);
      else
        throw DomainError("not in the image: reserved leaf '" + reserved +
                          "' is not in the lowest cherry");
      return perm;
    }
    int leaf = leaf0 ? ch[0] : ch[1];
    int next = leaf0 ? ch[1] : ch[0];
    if (tree.node(leaf).label == reserved)
      throw DomainError("not in the image: reserved leaf '" + reserved +
                        "' sits above the lowest cherry");
    perm.push_back(tree.node(leaf).label);
    cur = next;
  }
}

PhyloNetwork one_component_network(const std::vector<std::string>& q,
                                   const std::vector<std::string>& alphabet,
                                   const std::string& reserved) {
  TaxonSet sigma = TaxonSet::from_names(alphabet);
  if (sigma.contains(reserved))
    throw DomainError("reserved taxon '" + reserved + "' occurs in the alphabet");
  std::vector<int> occurrences(static_cast<std::size_t>(sigma.size()), 0);
  Seq qs;
  for (const auto& name : q) {
    int i = sigma.require(name);
    ++occurrences[static_cast<std::size_t>(i)];
    qs.push_back(i);
  }
  for (int i = 0; i < sigma.size(); ++i)
    if (occurrences[static_cast<std::size_t>(i)] == 0)
      throw DomainError("symbol '" + sigma.name(i) + "' does not occur in the string");
  if (qs.empty()) throw DomainError("empty string");

  PhyloNetwork net;
  int root = net.add_node();
  net.set_root(root);
  std::vector<int> spine;
  for (std::size_t i = 0; i < qs.size(); ++i) spine.push_back(net.add_node());
  int ell = net.add_node(reserved);
  std::vector<int> collector;
  for (int j = 0; j < sigma.size(); ++j) {
    collector.push_back(net.add_node());
    net.add_edge(collector.back(), net.add_node(sigma.name(j)));
  }
  net.add_edge(root, spine.front());
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) net.add_edge(spine[i], spine[i + 1]);
  net.add_edge(spine.back(), ell);
  for (std::size_t i = 0; i < qs.size(); ++i)
    net.add_edge(spine[i], collector[static_cast<std::size_t>(qs[i])]);

  PhyloNetwork out = suppress_degree2(net);
  out.validate();
  return out;
}

PhyloNetwork construct_network(const Ordering& ord, const std::vector<Seq>& betas) {
  int n = ord.size();
  if (static_cast<int>(betas.size()) != n)
    throw DomainError("betas do not match the ordering size");
  if (!check_c1_c2(betas)) throw DomainError("strings violate C1/C2 for the ordering");

  PhyloNetwork net;
  int root = net.add_node();
  net.set_root(root);
  std::vector<int> collector(static_cast<std::size_t>(n));
  std::vector<int> leaf(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> path(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    collector[static_cast<std::size_t>(i)] = net.add_node();
    int prev = collector[static_cast<std::size_t>(i)];
    for (std::size_t m = 0; m < betas[static_cast<std::size_t>(i)].size(); ++m) {
      int v = net.add_node();
      path[static_cast<std::size_t>(i)].push_back(v);
      net.add_edge(prev, v);
      prev = v;
    }
    leaf[static_cast<std::size_t>(i)] = net.add_node(ord.name_at(i));
    net.add_edge(prev, leaf[static_cast<std::size_t>(i)]);
  }
  net.add_edge(root, collector[0]);
  for (int i = 0; i < n; ++i)
    for (std::size_t m = 0; m < betas[static_cast<std::size_t>(i)].size(); ++m)
      net.add_edge(path[static_cast<std::size_t>(i)][m],
                   collector[static_cast<std::size_t>(betas[static_cast<std::size_t>(i)][m])]);

  // Collectors nothing points at (possible only for synthetic profiles) are
  // hung off a new node spliced above the previous taxon's leaf.
  for (int j = 1; j < n; ++j) {
    if (!net.node(collector[static_cast<std::size_t>(j)]).parents.empty()) continue;
    int lf = leaf[static_cast<std::size_t>(j - 1)];
    int par = net.node(lf).parents.front();
    int u = net.add_node();
    net.remove_edge(par, lf);
    net.add_edge(par, u);
    net.add_edge(u, lf);
    net.add_edge(u, collector[static_cast<std::size_t>(j)]);
  }

  PhyloNetwork out = suppress_degree2(net);
  out.validate();
  return out;
}

namespace {

// Applies one reticulation parent choice, prunes branches that lose all
// children, suppresses degree-2 nodes and reads the result back as a tree.
std::optional<BinaryTree> displayed_tree_for_selection(const PhyloNetwork& net,
                                                       const std::vector<int>& retics,
                                                       const std::vector<int>& choice) {
  PhyloNetwork work;
  for (int i = 0; i < net.node_count(); ++i) work.add_node(net.node(i).label);
  std::vector<int> keep_parent(static_cast<std::size_t>(net.node_count()), -1);
  for (std::size_t r = 0; r < retics.size(); ++r)
    keep_parent[static_cast<std::size_t>(retics[r])] =
        net.node(retics[r]).parents[static_cast<std::size_t>(choice[r])];
  for (int i = 0; i < net.node_count(); ++i) {
    for (int c : net.node(i).children) {
      int kp = keep_parent[static_cast<std::size_t>(c)];
      if (kp == -1 || kp == i) work.add_edge(i, c);
    }
  }
  work.set_root(net.root());

  // prune unlabeled nodes left without children
  std::vector<char> dead(static_cast<std::size_t>(work.node_count()), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < work.node_count(); ++i) {
      if (dead[static_cast<std::size_t>(i)] || !work.node(i).label.empty()) continue;
      bool childless = true;
      for (int c : work.node(i).children)
        if (!dead[static_cast<std::size_t>(c)]) childless = false;
      if (childless) {
        dead[static_cast<std::size_t>(i)] = 1;
        changed = true;
      }
    }
  }
  if (dead[static_cast<std::size_t>(work.root())]) return std::nullopt;

  PhyloNetwork alive;
  std::vector<int> remap(static_cast<std::size_t>(work.node_count()), -1);
  for (int i = 0; i < work.node_count(); ++i)
    if (!dead[static_cast<std::size_t>(i)]) remap[static_cast<std::size_t>(i)] = alive.add_node(work.node(i).label);
  for (int i = 0; i < work.node_count(); ++i) {
    if (dead[static_cast<std::size_t>(i)]) continue;
    for (int c : work.node(i).children)
      if (!dead[static_cast<std::size_t>(c)])
        alive.add_edge(remap[static_cast<std::size_t>(i)], remap[static_cast<std::size_t>(c)]);
  }
  alive.set_root(remap[static_cast<std::size_t>(work.root())]);

  try {
    return suppress_degree2(alive).to_tree();
  } catch (const StructuralError&) {
    return std::nullopt;
  }
}

template <typename Visit>
void for_each_selection(const PhyloNetwork& net, const DisplayOptions& opts, Visit&& visit) {
  net.validate();
  std::vector<int> retics = net.reticulations();
  long long selections = 1;
  for (int r : retics) {
    selections *= static_cast<long long>(net.node(r).parents.size());
    if (selections > opts.selection_budget)
      throw CapacityError("display selection budget exceeded (" +
                          std::to_string(opts.selection_budget) + " selections)");
  }
  std::vector<int> choice(retics.size(), 0);
  while (true) {
    if (visit(retics, choice)) return;
    std::size_t i = 0;
    while (i < retics.size()) {
      if (++choice[i] < static_cast<int>(net.node(retics[i]).parents.size())) break;
      choice[i++] = 0;
    }
    if (i == retics.size()) return;
  }
}

}  // namespace

bool is_displayed(const BinaryTree& tree, const PhyloNetwork& net, const DisplayOptions& opts) {
  tree.validate();
  if (tree.leaf_names() != net.leaf_names())
    throw DomainError("tree and network are on different taxon sets");
  const std::string target = canonical_form(tree);
  bool found = false;
  for_each_selection(net, opts, [&](const std::vector<int>& retics, const std::vector<int>& choice) {
    auto candidate = displayed_tree_for_selection(net, retics, choice);
    if (candidate && canonical_form(*candidate) == target) found = true;
    return found;
  });
  return found;
}

std::vector<std::vector<std::string>> displayed_line_trees(const PhyloNetwork& net,
                                                           const std::string& reserved,
                                                           const DisplayOptions& opts) {
  std::vector<std::string> leaves = net.leaf_names();
  if (std::find(leaves.begin(), leaves.end(), reserved) == leaves.end())
    throw DomainError("reserved taxon '" + reserved + "' is not a leaf of the network");
  std::set<std::vector<std::string>> perms;
  for_each_selection(net, opts, [&](const std::vector<int>& retics, const std::vector<int>& choice) {
    auto candidate = displayed_tree_for_selection(net, retics, choice);
    if (candidate && is_line_tree(*candidate)) {
      try {
        perms.insert(permutation_from_line_tree(*candidate, reserved));
      } catch (const DomainError&) {
        // displayed tree is a line tree outside the T(P) image; skip
      }
    }
    return false;
  });
  return {perms.begin(), perms.end()};
}

}  // namespace tcnkit
