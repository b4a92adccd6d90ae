#pragma once

#include <string>
#include <string_view>

#include "tcnkit/network.hpp"
#include "tcnkit/tree.hpp"

namespace tcnkit {

// Rooted binary Newick, no branch lengths or internal labels. The outermost
// parenthesis pair is the root edge; a bare top-level subtree gets an
// implicit root. Errors carry character offsets.
BinaryTree parse_newick(std::string_view text);

// Canonical output: children ordered by smallest descendant leaf name, so
// isomorphic trees serialize identically.
std::string write_newick(const BinaryTree& tree);

// Extended Newick with `#H<k>` hybrid tags, one tag occurrence per incoming
// edge of a reticulate node; exactly one occurrence carries the child.
PhyloNetwork parse_extended_newick(std::string_view text);

// Deterministic writer; tags are numbered in topological order of the
// reticulate nodes.
std::string write_extended_newick(const PhyloNetwork& net);

}  // namespace tcnkit
