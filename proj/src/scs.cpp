#include "tcnkit/scs.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "tcnkit/errors.hpp"

namespace tcnkit {

bool is_supersequence(const Seq& sup, const Seq& sub) {
  std::size_t i = 0;
  for (int c : sup) {
    if (i < sub.size() && sub[i] == c) ++i;
  }
  return i == sub.size();
}

namespace {

constexpr std::int32_t kUnset = std::numeric_limits<std::int32_t>::max();

struct Lattice {
  std::vector<Seq> strings;      // deduplicated, non-empty
  std::vector<long long> weight;  // mixed-radix weights
  long long states = 1;

  explicit Lattice(const std::vector<Seq>& input, int alphabet, const ScsOptions& opts) {
    for (const Seq& s : input) {
      if (s.empty()) continue;
      for (int c : s)
        if (c < 0 || c >= alphabet) throw DomainError("symbol outside the alphabet");
      if (std::find(strings.begin(), strings.end(), s) == strings.end()) strings.push_back(s);
    }
    weight.resize(strings.size());
    unsigned __int128 total = 1;
    for (std::size_t j = 0; j < strings.size(); ++j) {
      weight[j] = static_cast<long long>(total);
      total *= static_cast<unsigned __int128>(strings[j].size() + 1);
      if (total > static_cast<unsigned __int128>(opts.state_budget))
        throw CapacityError(
            "SCS state budget exceeded (" + std::to_string(opts.state_budget) +
            " states); raise the budget or use the majority-merge heuristic");
    }
    states = static_cast<long long>(total);
  }

  // Distance-to-goal over the full lattice, processed in an order where every
  // successor of a state has a larger linear index.
  std::vector<std::int32_t> solve(int alphabet) const {
    std::vector<std::int32_t> dist(static_cast<std::size_t>(states), kUnset);
    dist[static_cast<std::size_t>(states - 1)] = 0;
    std::size_t k = strings.size();
    std::vector<int> pos(k);
    for (long long idx = states - 2; idx >= 0; --idx) {
      long long rem = idx;
      for (std::size_t j = 0; j < k; ++j) {
        pos[j] = static_cast<int>(rem % static_cast<long long>(strings[j].size() + 1));
        rem /= static_cast<long long>(strings[j].size() + 1);
      }
      std::int32_t best = kUnset;
      for (int c = 0; c < alphabet; ++c) {
        long long next = idx;
        bool advances = false;
        for (std::size_t j = 0; j < k; ++j) {
          if (pos[j] < static_cast<int>(strings[j].size()) &&
              strings[j][static_cast<std::size_t>(pos[j])] == c) {
            next += weight[j];
            advances = true;
          }
        }
        if (!advances) continue;
        std::int32_t d = dist[static_cast<std::size_t>(next)];
        if (d != kUnset && d + 1 < best) best = d + 1;
      }
      dist[static_cast<std::size_t>(idx)] = best;
    }
    return dist;
  }
};

}  // namespace

Seq exact_scs(const std::vector<Seq>& strings, int alphabet, const ScsOptions& opts) {
  Lattice lat(strings, alphabet, opts);
  if (lat.strings.empty()) return {};
  std::vector<std::int32_t> dist = lat.solve(alphabet);

  Seq out;
  long long idx = 0;
  std::size_t k = lat.strings.size();
  std::vector<int> pos(k, 0);
  while (idx != lat.states - 1) {
    std::int32_t cur = dist[static_cast<std::size_t>(idx)];
    long long before = idx;
    for (int c = 0; c < alphabet; ++c) {
      long long next = idx;
      bool advances = false;
      for (std::size_t j = 0; j < k; ++j) {
        if (pos[j] < static_cast<int>(lat.strings[j].size()) &&
            lat.strings[j][static_cast<std::size_t>(pos[j])] == c) {
          next += lat.weight[j];
          advances = true;
        }
      }
      if (!advances || dist[static_cast<std::size_t>(next)] != cur - 1) continue;
      out.push_back(c);
      for (std::size_t j = 0; j < k; ++j)
        if (pos[j] < static_cast<int>(lat.strings[j].size()) &&
            lat.strings[j][static_cast<std::size_t>(pos[j])] == c)
          ++pos[j];
      idx = next;
      break;
    }
    if (idx == before) throw StructuralError("inconsistent SCS distance table");
  }
  return out;
}

long long scs_length(const std::vector<Seq>& strings, int alphabet, const ScsOptions& opts) {
  Lattice lat(strings, alphabet, opts);
  if (lat.strings.empty()) return 0;
  return lat.solve(alphabet)[0];
}

Seq majority_merge(const std::vector<Seq>& strings, int alphabet) {
  std::vector<Seq> rest;
  for (const Seq& s : strings) {
    for (int c : s)
      if (c < 0 || c >= alphabet) throw DomainError("symbol outside the alphabet");
    if (!s.empty()) rest.push_back(s);
  }
  std::vector<std::size_t> pos(rest.size(), 0);
  Seq out;
  while (true) {
    std::vector<int> heads(static_cast<std::size_t>(alphabet), 0);
    bool any = false;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (pos[j] < rest[j].size()) {
        ++heads[static_cast<std::size_t>(rest[j][pos[j]])];
        any = true;
      }
    }
    if (!any) break;
    int best = 0;
    for (int c = 1; c < alphabet; ++c)
      if (heads[static_cast<std::size_t>(c)] > heads[static_cast<std::size_t>(best)]) best = c;
    out.push_back(best);
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (pos[j] < rest[j].size() && rest[j][pos[j]] == best) ++pos[j];
  }
  return out;
}

namespace {

// DFS over candidates of exactly `len` symbols in lexicographic order,
// keeping greedy match positions per string. Branches that cannot finish
// matching in the remaining slots are cut; the cut never skips a feasible
// candidate, so the first hit equals the first hit of plain enumeration.
bool oracle_dfs(const std::vector<Seq>& strings, int alphabet, int len, Seq& prefix,
                std::vector<std::size_t>& pos) {
  std::size_t need = 0;
  for (std::size_t j = 0; j < strings.size(); ++j)
    need = std::max(need, strings[j].size() - pos[j]);
  std::size_t remaining = static_cast<std::size_t>(len) - prefix.size();
  if (need > remaining) return false;
  if (prefix.size() == static_cast<std::size_t>(len)) return need == 0;
  for (int c = 0; c < alphabet; ++c) {
    prefix.push_back(c);
    std::vector<std::size_t> next = pos;
    for (std::size_t j = 0; j < strings.size(); ++j)
      if (next[j] < strings[j].size() && strings[j][next[j]] == c) ++next[j];
    if (oracle_dfs(strings, alphabet, len, prefix, next)) return true;
    prefix.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Seq> exhaustive_scs_oracle(const std::vector<Seq>& strings, int alphabet,
                                         int max_len) {
  for (const Seq& s : strings)
    for (int c : s)
      if (c < 0 || c >= alphabet) throw DomainError("symbol outside the alphabet");
  for (int len = 0; len <= max_len; ++len) {
    Seq prefix;
    std::vector<std::size_t> pos(strings.size(), 0);
    if (oracle_dfs(strings, alphabet, len, prefix, pos)) return prefix;
  }
  return std::nullopt;
}

}  // namespace tcnkit
