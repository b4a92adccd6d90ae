#pragma once

#include <map>
#include <vector>

#include "tcnkit/construct.hpp"
#include "tcnkit/network.hpp"
#include "tcnkit/scs.hpp"
#include "tcnkit/taxon.hpp"
#include "tcnkit/tree.hpp"

namespace tcnkit {

/// Per-taxon lineage taxon strings of a tree set under one ordering, with
/// the per-taxon shortest common supersequences.
struct LtsProfile {
  Ordering ord;
  std::vector<std::vector<Seq>> alphas;  // [tree][rank] -> LTS, symbols are ranks
  std::vector<Seq> betas;                // [rank] -> SCS of that rank's row
};

struct SolveOptions {
  int max_taxa = 9;
  ScsOptions scs;
  DisplayOptions display;
  bool prune = true;
};

struct SolveReport {
  Ordering ordering;
  PhyloNetwork network;
  long long hn = 0;
  std::vector<Seq> betas;  // by rank of `ordering`
  unsigned long long orderings_searched = 0;
};

LtsProfile lts_profile(const std::vector<BinaryTree>& trees, const Ordering& ord,
                       const ScsOptions& opts = {});

// Network and hybridization number for one ordering; the number is counted
// on the graph, not read off the profile.
std::pair<PhyloNetwork, long long> network_for_ordering(const std::vector<BinaryTree>& trees,
                                                        const Ordering& ord,
                                                        const ScsOptions& opts = {});

/// Exact minimum tree-child network: evaluates every ordering of the taxon
/// set (duplicate input trees are collapsed first), keeps the first ordering
/// attaining the minimum in name-lexicographic enumeration order, and
/// verifies that the winning network displays every input before returning.
/// An admissible partial-length bound prunes hopeless orderings; pruning
/// never changes the optimum.
SolveReport solve_min_tcn(const std::vector<BinaryTree>& trees, const SolveOptions& opts = {});

// Case-1 anchor chain of a permutation: from rank 0 down to the smaller of
// the last symbol and the reserved taxon. Input and output are ranks; the
// permutation covers every non-reserved rank. Reserved-first orderings are
// the wrong case and raise DomainError.
Seq anchor_chain(const Seq& perm_ranks, const Ordering& ord);

/// The supersequence assembly: per taxon with any nonempty LTS, the SCS of
/// its strings drops its last letter and gains the taxon as separator; the
/// reserved taxon's block keeps the whole SCS when it comes last; reserved
/// symbols are deleted from the concatenation. Reserved-first orderings
/// return the SCS of the permutations directly. `scs_overrides` swaps in a
/// hand-picked SCS (same length, validated) for a rank's row.
Seq assemble_supersequence(const std::vector<BinaryTree>& line_trees, const Ordering& ord,
                           const std::map<int, Seq>& scs_overrides = {},
                           const ScsOptions& opts = {});

// Fast path for line trees sharing the reserved lowest leaf: the network of
// the SCS of the underlying permutations, with hn = |SCS| - n.
SolveReport solve_line_trees_fast(const std::vector<BinaryTree>& trees,
                                  const std::string& reserved, const SolveOptions& opts = {});

}  // namespace tcnkit
