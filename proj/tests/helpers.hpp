#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tcnkit/network.hpp"
#include "tcnkit/taxon.hpp"
#include "tcnkit/tree.hpp"

namespace tcnkit::testing {

// Symbols as char - 'a' (plain SCS tests that need no taxon machinery).
inline Seq cseq(std::string_view text) {
  Seq out;
  for (char c : text) out.push_back(c - 'a');
  return out;
}

inline Seq ranks_of(const Ordering& ord, std::string_view text) {
  Seq out;
  for (const std::string& name : split_sequence_text(text))
    out.push_back(ord.rank_of(ord.taxa().require(name)));
  return out;
}

inline std::string rank_names(const Ordering& ord, const Seq& ranks) {
  std::vector<std::string> names;
  for (int r : ranks) names.push_back(ord.name_at(r));
  return join_sequence(names);
}

inline std::vector<std::string> name_vec(std::string_view text) {
  return split_sequence_text(text);
}

// Every rooted binary tree (outdegree-1 root) on the given leaves, built by
// inserting each leaf on every edge. (2n-3)!! trees for n >= 2.
inline std::vector<BinaryTree> enumerate_trees(const std::vector<std::string>& names) {
  std::vector<BinaryTree> current;
  {
    BinaryTree t;
    int root = t.add_node();
    t.set_root(root);
    t.add_edge(root, t.add_node(names.at(0)));
    current.push_back(std::move(t));
  }
  for (std::size_t k = 1; k < names.size(); ++k) {
    std::vector<BinaryTree> next;
    for (const BinaryTree& t : current) {
      for (int child = 0; child < t.node_count(); ++child) {
        if (child == t.root()) continue;
        // subdivide the edge into `child` and hang the new leaf there
        BinaryTree u;
        for (int i = 0; i < t.node_count(); ++i) u.add_node(t.node(i).label);
        int mid = u.add_node();
        int leaf = u.add_node(names[k]);
        for (int i = 0; i < t.node_count(); ++i) {
          for (int c : t.node(i).children) {
            if (c == child) {
              u.add_edge(i, mid);
              u.add_edge(mid, c);
            } else {
              u.add_edge(i, c);
            }
          }
        }
        u.add_edge(mid, leaf);
        u.set_root(t.root());
        next.push_back(std::move(u));
      }
    }
    current = std::move(next);
  }
  return current;
}

// Independent recursive isomorphism oracle for trees.
inline bool iso_nodes(const BinaryTree& a, int na, const BinaryTree& b, int nb) {
  bool la = a.is_leaf(na), lb = b.is_leaf(nb);
  if (la != lb) return false;
  if (la) return a.node(na).label == b.node(nb).label;
  const auto& ca = a.node(na).children;
  const auto& cb = b.node(nb).children;
  if (ca.size() != cb.size()) return false;
  if (ca.size() == 1) return iso_nodes(a, ca[0], b, cb[0]);
  return (iso_nodes(a, ca[0], b, cb[0]) && iso_nodes(a, ca[1], b, cb[1])) ||
         (iso_nodes(a, ca[0], b, cb[1]) && iso_nodes(a, ca[1], b, cb[0]));
}

inline bool iso_oracle(const BinaryTree& a, const BinaryTree& b) {
  return iso_nodes(a, a.root(), b, b.root());
}

// Backtracking isomorphism oracle for small networks.
inline bool net_iso_try(const PhyloNetwork& a, const PhyloNetwork& b, int na, int nb,
                        std::map<int, int>& fwd, std::map<int, int>& bwd) {
  auto fit = fwd.find(na);
  if (fit != fwd.end()) return fit->second == nb;
  if (bwd.count(nb)) return false;
  if (a.node(na).label != b.node(nb).label) return false;
  if (a.node(na).children.size() != b.node(nb).children.size()) return false;
  if (a.node(na).parents.size() != b.node(nb).parents.size()) return false;
  fwd[na] = nb;
  bwd[nb] = na;
  const auto& ca = a.node(na).children;
  std::vector<int> cb = b.node(nb).children;
  std::sort(cb.begin(), cb.end());
  do {
    bool ok = true;
    std::map<int, int> fwd_copy = fwd, bwd_copy = bwd;
    for (std::size_t i = 0; i < ca.size() && ok; ++i)
      ok = net_iso_try(a, b, ca[i], cb[i], fwd_copy, bwd_copy);
    if (ok) {
      fwd = fwd_copy;
      bwd = bwd_copy;
      return true;
    }
  } while (std::next_permutation(cb.begin(), cb.end()));
  fwd.erase(na);
  bwd.erase(nb);
  return false;
}

inline bool net_iso_oracle(const PhyloNetwork& a, const PhyloNetwork& b) {
  if (a.node_count() != b.node_count()) return false;
  std::map<int, int> fwd, bwd;
  return net_iso_try(a, b, a.root(), b.root(), fwd, bwd);
}

}  // namespace tcnkit::testing
