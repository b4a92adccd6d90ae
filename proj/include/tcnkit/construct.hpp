#pragma once

#include <string>
#include <vector>

#include "tcnkit/network.hpp"
#include "tcnkit/taxon.hpp"
#include "tcnkit/tree.hpp"

namespace tcnkit {

// Line tree T(P): a spine whose i-th node carries leaf P[i], with the
// reserved leaf as the lowest node's second child.
BinaryTree line_tree_from_permutation(const std::vector<std::string>& perm,
                                      const std::string& reserved);

// Inverse of line_tree_from_permutation. The reserved leaf must sit as the
// second leaf of the lowest cherry; other placements raise DomainError.
std::vector<std::string> permutation_from_line_tree(const BinaryTree& tree,
                                                    const std::string& reserved);

// One-component network N(Q): spine over the symbols of Q feeding one
// reticulate collector per alphabet symbol, reserved leaf below the spine
// end; indegree-1 collectors are contracted. Every alphabet symbol must
// occur in Q.
PhyloNetwork one_component_network(const std::vector<std::string>& q,
                                   const std::vector<std::string>& alphabet,
                                   const std::string& reserved);

/// Network construction from an ordering and per-taxon strings satisfying
/// C1/C2 (betas indexed by rank, symbols are ranks): one vertical path per
/// taxon, a cross edge into collector h_j for every occurrence of rank j,
/// indegree-1 collectors contracted, a root above the first path.
/// Collectors no occurrence points at are spliced in above the previous
/// taxon's leaf, which turns an all-empty profile into the caterpillar.
PhyloNetwork construct_network(const Ordering& ord, const std::vector<Seq>& betas);

struct DisplayOptions {
  // Upper bound on the product of reticulation indegrees.
  long long selection_budget = 1'000'000;
};

// True when some choice of one incoming edge per reticulate node, after
// pruning dead branches and suppressing degree-2 nodes, yields a tree
// isomorphic to `tree`. Exhaustive over selections.
bool is_displayed(const BinaryTree& tree, const PhyloNetwork& net,
                  const DisplayOptions& opts = {});

// All permutations P such that T(P) is displayed; sorted. The reserved leaf
// names the shared lowest leaf.
std::vector<std::vector<std::string>> displayed_line_trees(const PhyloNetwork& net,
                                                           const std::string& reserved,
                                                           const DisplayOptions& opts = {});

}  // namespace tcnkit
