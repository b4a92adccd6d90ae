#include "tcnkit/solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tcnkit/errors.hpp"
#include "tcnkit/lts.hpp"

namespace tcnkit {

namespace {

std::vector<BinaryTree> dedupe_trees(const std::vector<BinaryTree>& trees) {
  std::vector<BinaryTree> out;
  std::set<std::string> seen;
  for (const BinaryTree& t : trees)
    if (seen.insert(canonical_form(t)).second) out.push_back(t);
  return out;
}

TaxonSet common_taxa(const std::vector<BinaryTree>& trees,
                     const std::optional<std::string>& reserved = {}) {
  if (trees.empty()) throw DomainError("no input trees");
  std::vector<std::string> names = trees.front().leaf_names();
  for (const BinaryTree& t : trees)
    if (t.leaf_names() != names) throw DomainError("input trees are on different taxon sets");
  return TaxonSet::from_names(names, reserved);
}

long long distinct_symbol_count(const std::vector<Seq>& betas) {
  std::set<int> symbols;
  for (const Seq& b : betas) symbols.insert(b.begin(), b.end());
  return static_cast<long long>(symbols.size());
}

}  // namespace

LtsProfile lts_profile(const std::vector<BinaryTree>& trees, const Ordering& ord,
                       const ScsOptions& opts) {
  if (trees.empty()) throw DomainError("no input trees");
  LtsProfile profile;
  profile.ord = ord;
  for (const BinaryTree& t : trees) profile.alphas.push_back(lineage_taxon_strings(t, ord));
  int n = ord.size();
  profile.betas.resize(static_cast<std::size_t>(n));
  std::vector<Seq> row(profile.alphas.size());
  for (int r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < profile.alphas.size(); ++j)
      row[j] = profile.alphas[j][static_cast<std::size_t>(r)];
    profile.betas[static_cast<std::size_t>(r)] = exact_scs(row, n, opts);
  }
  return profile;
}

std::pair<PhyloNetwork, long long> network_for_ordering(const std::vector<BinaryTree>& trees,
                                                        const Ordering& ord,
                                                        const ScsOptions& opts) {
  LtsProfile profile = lts_profile(trees, ord, opts);
  PhyloNetwork net = construct_network(ord, profile.betas);
  return {net, hybridization_number(net)};
}

SolveReport solve_min_tcn(const std::vector<BinaryTree>& trees, const SolveOptions& opts) {
  std::vector<BinaryTree> inputs = dedupe_trees(trees);
  TaxonSet taxa = common_taxa(inputs);
  int n = taxa.size();
  if (n > opts.max_taxa)
    throw CapacityError("ordering enumeration bound exceeded (" + std::to_string(n) + " > " +
                        std::to_string(opts.max_taxa) +
                        " taxa); use the line-tree fast path or raise --max-taxa");

  long long spare = n - 1;  // distinct symbols across any tree profile
  long long best_hn = -1;
  Seq best_seq;
  std::vector<Seq> best_betas;
  unsigned long long searched = 0;

  Seq seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  std::vector<Seq> row(inputs.size());
  do {
    ++searched;
    Ordering ord(taxa, seq);
    std::vector<std::vector<Seq>> alphas;
    alphas.reserve(inputs.size());
    for (const BinaryTree& t : inputs) alphas.push_back(lineage_taxon_strings(t, ord));

    // max row length lower-bounds each rank's SCS
    std::vector<long long> floor_len(static_cast<std::size_t>(n), 0);
    long long floor_total = 0;
    for (int r = 0; r < n; ++r) {
      for (const auto& a : alphas)
        floor_len[static_cast<std::size_t>(r)] =
            std::max(floor_len[static_cast<std::size_t>(r)],
                     static_cast<long long>(a[static_cast<std::size_t>(r)].size()));
      floor_total += floor_len[static_cast<std::size_t>(r)];
    }
    if (opts.prune && best_hn >= 0 && floor_total - spare >= best_hn) continue;

    std::vector<Seq> betas(static_cast<std::size_t>(n));
    long long partial = 0;
    bool abandoned = false;
    for (int r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < inputs.size(); ++j)
        row[j] = alphas[j][static_cast<std::size_t>(r)];
      betas[static_cast<std::size_t>(r)] = exact_scs(row, n, opts.scs);
      partial += static_cast<long long>(betas[static_cast<std::size_t>(r)].size());
      floor_total -= floor_len[static_cast<std::size_t>(r)];
      if (opts.prune && best_hn >= 0 && partial + floor_total - spare >= best_hn) {
        abandoned = true;
        break;
      }
    }
    if (abandoned) continue;
    long long hn = partial - distinct_symbol_count(betas);
    if (best_hn < 0 || hn < best_hn) {
      best_hn = hn;
      best_seq = seq;
      best_betas = betas;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));

  SolveReport report;
  report.ordering = Ordering(taxa, best_seq);
  report.network = construct_network(report.ordering, best_betas);
  report.hn = hybridization_number(report.network);
  report.betas = best_betas;
  report.orderings_searched = searched;
  if (report.hn != best_hn)
    throw StructuralError("graph hybridization number disagrees with the profile count");
  if (!is_tree_child(report.network))
    throw StructuralError("solver produced a network that is not tree-child");
  for (const BinaryTree& t : inputs)
    if (!is_displayed(t, report.network, opts.display))
      throw StructuralError("solver network fails to display an input tree");
  return report;
}

Seq anchor_chain(const Seq& perm_ranks, const Ordering& ord) {
  int n = ord.size();
  int ell = ord.reserved_rank();
  if (ell == 0) throw DomainError("wrong case: the reserved taxon is the smallest");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < perm_ranks.size(); ++i) {
    int r = perm_ranks[i];
    if (r < 0 || r >= n || r == ell || pos[static_cast<std::size_t>(r)] != -1)
      throw DomainError("input is not a permutation of the non-reserved taxa");
    pos[static_cast<std::size_t>(r)] = static_cast<int>(i);
  }
  if (perm_ranks.size() + 1 != static_cast<std::size_t>(n))
    throw DomainError("input is not a permutation of the non-reserved taxa");

  int last = perm_ranks.back();
  int terminal = std::min(last, ell);
  Seq chain{0};
  while (chain.back() != terminal) {
    int from = pos[static_cast<std::size_t>(chain.back())];
    int next = ell;
    for (std::size_t i = static_cast<std::size_t>(from) + 1; i < perm_ranks.size(); ++i)
      next = std::min(next, perm_ranks[i]);
    chain.push_back(next);
  }
  return chain;
}

Seq assemble_supersequence(const std::vector<BinaryTree>& line_trees, const Ordering& ord,
                           const std::map<int, Seq>& scs_overrides, const ScsOptions& opts) {
  if (line_trees.empty()) throw DomainError("no input trees");
  int n = ord.size();
  int ell = ord.reserved_rank();
  common_taxa(line_trees);
  std::string reserved = ord.taxa().name(*ord.taxa().reserved());

  std::vector<Seq> perms;
  for (const BinaryTree& t : line_trees) {
    std::vector<std::string> p = permutation_from_line_tree(t, reserved);
    Seq pr;
    for (const auto& name : p) pr.push_back(ord.rank_of(ord.taxa().require(name)));
    perms.push_back(std::move(pr));
  }

  if (ell == 0) return exact_scs(perms, n, opts);

  std::vector<std::vector<Seq>> alphas;
  for (const BinaryTree& t : line_trees) alphas.push_back(lineage_taxon_strings(t, ord));

  Seq blocks;
  int last_block = -1;
  for (int r = 0; r < n; ++r) {
    bool nonempty = false;
    for (const auto& a : alphas)
      if (!a[static_cast<std::size_t>(r)].empty()) nonempty = true;
    if (nonempty) last_block = r;
  }
  for (int r = 0; r < n; ++r) {
    std::vector<Seq> row;
    bool nonempty = false;
    for (const auto& a : alphas) {
      row.push_back(a[static_cast<std::size_t>(r)]);
      if (!row.back().empty()) nonempty = true;
    }
    if (!nonempty) continue;
    Seq w;
    auto it = scs_overrides.find(r);
    if (it != scs_overrides.end()) {
      w = it->second;
      for (const Seq& s : row)
        if (!is_supersequence(w, s))
          throw DomainError("override for rank " + std::to_string(r) +
                            " is not a common supersequence of the row");
      if (static_cast<long long>(w.size()) != scs_length(row, n, opts))
        throw DomainError("override for rank " + std::to_string(r) + " is not of SCS length");
    } else {
      w = exact_scs(row, n, opts);
    }
    if (r == last_block && r == ell) {
      blocks.insert(blocks.end(), w.begin(), w.end());
    } else {
      blocks.insert(blocks.end(), w.begin(), w.end() - 1);
      blocks.push_back(r);
    }
  }
  Seq q;
  for (int sym : blocks)
    if (sym != ell) q.push_back(sym);

  for (const Seq& p : perms)
    if (!is_supersequence(q, p))
      throw StructuralError("assembled string is not a supersequence of an input permutation");
  return q;
}

SolveReport solve_line_trees_fast(const std::vector<BinaryTree>& trees,
                                  const std::string& reserved, const SolveOptions& opts) {
  std::vector<BinaryTree> inputs = dedupe_trees(trees);
  TaxonSet taxa = common_taxa(inputs, reserved);

  std::vector<std::string> sigma;
  for (const std::string& name : taxa.names())
    if (name != reserved) sigma.push_back(name);
  TaxonSet sigma_set = TaxonSet::from_names(sigma);
  int n = sigma_set.size();

  std::vector<Seq> perms;
  for (const BinaryTree& t : inputs) {
    std::vector<std::string> p = permutation_from_line_tree(t, reserved);
    Seq pr;
    for (const auto& name : p) pr.push_back(sigma_set.require(name));
    perms.push_back(std::move(pr));
  }

  Seq q = exact_scs(perms, n, opts.scs);

  SolveReport report;
  Seq ord_seq{taxa.require(reserved)};
  for (const std::string& name : sigma) ord_seq.push_back(taxa.require(name));
  report.ordering = Ordering(taxa, ord_seq);
  report.network = one_component_network(sigma_set.seq_names(q), sigma, reserved);
  report.hn = hybridization_number(report.network);
  report.betas.assign(static_cast<std::size_t>(taxa.size()), {});
  for (int sym : q) report.betas[0].push_back(sym + 1);  // sigma ranks shift past the reserved
  report.orderings_searched = 1;
  if (report.hn != static_cast<long long>(q.size()) - n)
    throw StructuralError("one-component network count disagrees with |Q| - n");
  return report;
}

}  // namespace tcnkit
