#pragma once

#include <optional>
#include <vector>

#include "tcnkit/taxon.hpp"

namespace tcnkit {

struct ScsOptions {
  // Upper bound on the product over strings of (length + 1).
  long long state_budget = 10'000'000;
};

// True when sub embeds left-to-right into sup.
bool is_supersequence(const Seq& sup, const Seq& sub);

/// Shortest common supersequence over the symbols 0..alphabet-1.
///
/// Shortest-path search over the lattice of per-string positions; among the
/// minimal-length solutions the lexicographically smallest (by symbol value)
/// is returned, so downstream artifacts are reproducible.
/// Throws CapacityError when the lattice exceeds the state budget.
Seq exact_scs(const std::vector<Seq>& strings, int alphabet, const ScsOptions& opts = {});

// Length-only variant sharing the same search.
long long scs_length(const std::vector<Seq>& strings, int alphabet, const ScsOptions& opts = {});

// Greedy common supersequence: repeatedly emit the symbol heading the most
// remaining strings, ties broken by symbol value. Not necessarily minimal.
Seq majority_merge(const std::vector<Seq>& strings, int alphabet);

// Independent test oracle: enumerates candidate strings by increasing
// length (lexicographic within a length) and returns the first common
// supersequence of length <= max_len, if any.
std::optional<Seq> exhaustive_scs_oracle(const std::vector<Seq>& strings, int alphabet,
                                         int max_len);

}  // namespace tcnkit
