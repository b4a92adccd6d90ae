#pragma once

#include <vector>

#include "tcnkit/taxon.hpp"
#include "tcnkit/tree.hpp"

namespace tcnkit {

/// Order-dependent labeling of the root and internal nodes by taxa.
struct NodeLabeling {
  std::vector<int> rank_of_node;  // node id -> rank of its label, -1 for leaves
  std::vector<int> node_of_rank;  // rank -> labeled node id
};

// Root gets the smallest taxon; every other internal node the larger of its
// children's smallest-below taxa. The result is a bijection onto the taxa.
NodeLabeling label_internal_nodes(const BinaryTree& tree, const Ordering& ord);

// Lineage taxon string per taxon: the labels of the nodes strictly between a
// taxon's labeling node and its leaf, top-down. Indexed by rank; symbols are
// ranks. Always satisfies C1/C2.
std::vector<Seq> lineage_taxon_strings(const BinaryTree& tree, const Ordering& ord);

// C1: each string uses only strictly larger ranks. C2: the largest rank's
// string is empty.
bool check_c1_c2(const std::vector<Seq>& strings_by_rank);

// Inverts lineage_taxon_strings for line-tree profiles: follows the anchor
// chain from rank 0 and rebuilds the permutation (reserved-taxon-first
// orderings return the reserved taxon's string directly). The returned
// sequence holds ranks. Malformed profiles raise DomainError.
Seq reconstruct_permutation(const std::vector<Seq>& strings_by_rank, const Ordering& ord);

}  // namespace tcnkit
