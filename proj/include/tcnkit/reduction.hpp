#pragma once

#include <string>
#include <vector>

#include "tcnkit/scs.hpp"
#include "tcnkit/taxon.hpp"
#include "tcnkit/tree.hpp"

namespace tcnkit {

/// A 2-SCS instance: length-2 strings of distinct characters plus a budget.
///
/// The source problem family additionally requires that no character occur
/// in every string; encoding and witness mapping work without it, but the
/// size-k <-> size-k' equivalence is only guaranteed when it holds (see
/// has_universal_character).
struct TwoScsInstance {
  std::vector<std::string> alphabet;               // X
  std::vector<std::vector<std::string>> strings;   // each of length 2, distinct
  long long budget = 0;                            // k

  void validate() const;
  bool has_universal_character() const;
};

/// The encoded SCS-on-permutations instance.
struct PermutationScsInstance {
  std::vector<std::string> base;                  // X
  std::vector<std::string> separators;            // Y, |Y| = |X| + k + 1
  std::vector<std::vector<std::string>> permutations;  // one S_ab per input string
  long long budget = 0;                           // k' = k + |Y| + |X|

  std::vector<std::string> full_alphabet() const;  // X then Y
};

// S_ab = a b . Y . X_without_ab; separators are fresh y1..yN tokens and may
// not collide with X.
PermutationScsInstance encode_2scs(const TwoScsInstance& inst);

// T -> T . Y . X; requires T to be a common supersequence of the instance
// within budget, and checks the result against every encoded permutation.
std::vector<std::string> forward_witness(const TwoScsInstance& inst,
                                         const std::vector<std::string>& witness);

struct DecodedWitness {
  std::vector<std::string> witness;  // T
  std::size_t split = 0;             // |P|, prefix length before the minimal suffix R
  std::size_t suffix_len = 0;        // |R|
};

// Splits T' before the smallest suffix containing Y as a subsequence,
// strips separators from the prefix and validates the decoded witness.
DecodedWitness decode_witness(const TwoScsInstance& inst, const PermutationScsInstance& enc,
                              const std::vector<std::string>& witness);

struct EquivalenceReport {
  long long scs_len = 0;          // exact SCS length of the 2-SCS side
  long long encoded_scs_len = 0;  // exact SCS length of the permutation side
  bool left = false;              // scs_len <= k
  bool right = false;             // encoded_scs_len <= k'
  bool agree = false;
  bool witnesses_checked = false;  // forward and decode round-trips ran
};

// Computes both decision sides exactly and maps the witnesses through the
// forward and decode directions when the sides are satisfiable.
EquivalenceReport verify_equivalence(const TwoScsInstance& inst, const ScsOptions& opts = {});

struct HardnessInstance {
  std::vector<BinaryTree> trees;  // T(S_ab) per encoded permutation
  std::string reserved;
  long long target = 0;  // q: reticulation budget equivalent to the 2-SCS budget
};

// Line trees for the encoded permutations plus the reticulation budget
// q = k' - |X u Y|; a tree-child network within q reticulations displaying
// all of them exists exactly when the 2-SCS answer is yes.
HardnessInstance end_to_end_tcn_instance(const TwoScsInstance& inst,
                                         const std::string& reserved = "_ell");

}  // namespace tcnkit
