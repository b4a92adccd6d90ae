#include "tcnkit/lts.hpp"

#include <algorithm>
#include <functional>

#include "tcnkit/errors.hpp"

namespace tcnkit {

namespace {

void require_same_taxa(const BinaryTree& tree, const Ordering& ord) {
  std::vector<std::string> tree_names = tree.leaf_names();
  std::vector<std::string> ord_names = ord.taxa().names();
  std::sort(ord_names.begin(), ord_names.end());
  if (tree_names != ord_names)
    throw DomainError("tree taxa do not match the ordering's taxon set");
}

}  // namespace

NodeLabeling label_internal_nodes(const BinaryTree& tree, const Ordering& ord) {
  tree.validate();
  require_same_taxa(tree, ord);

  std::vector<int> min_below(static_cast<std::size_t>(tree.node_count()), -1);
  std::function<int(int)> min_rank = [&](int id) -> int {
    int& m = min_below[static_cast<std::size_t>(id)];
    if (m >= 0) return m;
    if (tree.is_leaf(id)) return m = ord.rank_of(ord.taxa().require(tree.node(id).label));
    int best = ord.size();
    for (int c : tree.node(id).children) best = std::min(best, min_rank(c));
    return m = best;
  };

  NodeLabeling out;
  out.rank_of_node.assign(static_cast<std::size_t>(tree.node_count()), -1);
  out.node_of_rank.assign(static_cast<std::size_t>(ord.size()), -1);
  auto assign = [&](int node, int rank) {
    if (out.node_of_rank[static_cast<std::size_t>(rank)] != -1)
      throw StructuralError("labeling is not a bijection: rank " + std::to_string(rank) +
                            " assigned twice");
    out.rank_of_node[static_cast<std::size_t>(node)] = rank;
    out.node_of_rank[static_cast<std::size_t>(rank)] = node;
  };

  assign(tree.root(), 0);
  for (int id = 0; id < tree.node_count(); ++id) {
    if (id == tree.root() || tree.is_leaf(id)) continue;
    const auto& ch = tree.node(id).children;
    assign(id, std::max(min_rank(ch[0]), min_rank(ch[1])));
  }
  for (int r = 0; r < ord.size(); ++r)
    if (out.node_of_rank[static_cast<std::size_t>(r)] == -1)
      throw StructuralError("labeling is not a bijection: rank " + std::to_string(r) +
                            " unassigned");
  return out;
}

std::vector<Seq> lineage_taxon_strings(const BinaryTree& tree, const Ordering& ord) {
  NodeLabeling labeling = label_internal_nodes(tree, ord);
  std::vector<Seq> out(static_cast<std::size_t>(ord.size()));
  for (int r = 0; r < ord.size(); ++r) {
    int w = labeling.node_of_rank[static_cast<std::size_t>(r)];
    int leaf = tree.leaf_by_name(ord.name_at(r));
    Seq climb;
    int cur = tree.node(leaf).parent;
    while (cur != w) {
      if (cur == -1)
        throw StructuralError("leaf '" + ord.name_at(r) + "' is not below its labeling node");
      climb.push_back(labeling.rank_of_node[static_cast<std::size_t>(cur)]);
      cur = tree.node(cur).parent;
    }
    out[static_cast<std::size_t>(r)].assign(climb.rbegin(), climb.rend());
  }
  return out;
}

bool check_c1_c2(const std::vector<Seq>& strings_by_rank) {
  int n = static_cast<int>(strings_by_rank.size());
  if (n == 0) return true;
  if (!strings_by_rank[static_cast<std::size_t>(n - 1)].empty()) return false;
  for (int i = 0; i < n; ++i)
    for (int sym : strings_by_rank[static_cast<std::size_t>(i)])
      if (sym <= i || sym >= n) return false;
  return true;
}

Seq reconstruct_permutation(const std::vector<Seq>& strings_by_rank, const Ordering& ord) {
  int n = ord.size();
  if (static_cast<int>(strings_by_rank.size()) != n)
    throw DomainError("profile size does not match the ordering");
  int ell = ord.reserved_rank();

  auto fail = [](const std::string& why) {
    throw DomainError("not a line-tree profile: " + why);
  };

  Seq perm;
  if (ell == 0) {
    for (int r = 1; r < n; ++r)
      if (!strings_by_rank[static_cast<std::size_t>(r)].empty())
        fail("reserved-first profile must be empty except for the reserved taxon");
    perm = strings_by_rank[0];
  } else {
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    int cur = 0;
    while (true) {
      if (visited[static_cast<std::size_t>(cur)]) fail("anchor chain revisits a taxon");
      visited[static_cast<std::size_t>(cur)] = 1;
      const Seq& s = strings_by_rank[static_cast<std::size_t>(cur)];
      if (s.empty()) fail("anchor has an empty string");
      if (cur == ell) {
        // terminal anchor: the reserved taxon's string is kept whole
        perm.insert(perm.end(), s.begin(), s.end());
        break;
      }
      perm.insert(perm.end(), s.begin(), s.end() - 1);
      perm.push_back(cur);
      int next = s.back();
      if (strings_by_rank[static_cast<std::size_t>(next)].empty()) {
        if (next != ell) fail("chain ends at a taxon other than the reserved one");
        break;
      }
      cur = next;
    }
    for (int r = 0; r < n; ++r)
      if (!strings_by_rank[static_cast<std::size_t>(r)].empty() &&
          !visited[static_cast<std::size_t>(r)])
        fail("a nonempty string is not part of the anchor chain");
  }

  // The result must be a permutation of the non-reserved taxa.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int sym : perm) {
    if (sym < 0 || sym >= n || sym == ell || seen[static_cast<std::size_t>(sym)])
      fail("result is not a permutation of the non-reserved taxa");
    seen[static_cast<std::size_t>(sym)] = 1;
  }
  if (static_cast<int>(perm.size()) != n - 1)
    fail("result is not a permutation of the non-reserved taxa");
  return perm;
}

}  // namespace tcnkit
