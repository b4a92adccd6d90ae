// Python bindings: the main operations at the text level. Trees travel as
// Newick strings, networks as extended Newick, sequences as lists of taxon
// names.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tcnkit/construct.hpp"
#include "tcnkit/errors.hpp"
#include "tcnkit/lts.hpp"
#include "tcnkit/newick.hpp"
#include "tcnkit/reduction.hpp"
#include "tcnkit/scs.hpp"
#include "tcnkit/solver.hpp"

namespace py = pybind11;
using namespace tcnkit;

namespace {

using Names = std::vector<std::string>;

TaxonSet alphabet_of(const std::vector<Names>& strings, const std::optional<Names>& alphabet) {
  if (alphabet) return TaxonSet::from_names(*alphabet);
  std::set<std::string> symbols;
  for (const Names& s : strings) symbols.insert(s.begin(), s.end());
  return TaxonSet::from_names({symbols.begin(), symbols.end()});
}

std::pair<std::vector<Seq>, TaxonSet> to_seqs(const std::vector<Names>& strings,
                                              const std::optional<Names>& alphabet) {
  TaxonSet taxa = alphabet_of(strings, alphabet);
  std::vector<Seq> seqs;
  for (const Names& s : strings) {
    Seq seq;
    for (const std::string& sym : s) seq.push_back(taxa.require(sym));
    seqs.push_back(std::move(seq));
  }
  return {std::move(seqs), std::move(taxa)};
}

Ordering ordering_of(const Names& order, const std::optional<std::string>& reserved) {
  return Ordering::from_names(order, reserved);
}

std::vector<BinaryTree> parse_trees(const Names& newicks) {
  std::vector<BinaryTree> trees;
  for (const std::string& text : newicks) trees.push_back(parse_newick(text));
  return trees;
}

py::dict report_dict(const SolveReport& report) {
  py::dict out;
  out["hn"] = report.hn;
  out["ordering"] = report.ordering.names_in_order();
  out["network"] = write_extended_newick(report.network);
  py::dict betas;
  for (int r = 0; r < report.ordering.size(); ++r) {
    Names names;
    for (int sym : report.betas[static_cast<std::size_t>(r)])
      names.push_back(report.ordering.name_at(sym));
    betas[py::str(report.ordering.name_at(r))] = names;
  }
  out["betas"] = betas;
  out["searched"] = report.orderings_searched;
  return out;
}

TwoScsInstance two_scs(const Names& alphabet, const std::vector<Names>& strings,
                       long long budget) {
  TwoScsInstance inst;
  inst.alphabet = alphabet;
  inst.strings = strings;
  inst.budget = budget;
  return inst;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tree-child networks, lineage taxon strings and shortest common supersequences";

  py::register_exception<ParseError>(m, "TextParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "InputError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "GraphError", PyExc_RuntimeError);
  py::register_exception<CapacityError>(m, "BudgetError", PyExc_RuntimeError);

  m.def(
      "line_tree_from_permutation",
      [](const Names& perm, const std::string& reserved) {
        return write_newick(line_tree_from_permutation(perm, reserved));
      },
      py::arg("permutation"), py::arg("reserved") = "_ell");

  m.def(
      "permutation_from_line_tree",
      [](const std::string& newick, const std::string& reserved) {
        return permutation_from_line_tree(parse_newick(newick), reserved);
      },
      py::arg("newick"), py::arg("reserved") = "_ell");

  m.def(
      "one_component_network",
      [](const Names& q, const std::optional<Names>& alphabet, const std::string& reserved) {
        Names a;
        if (alphabet) {
          a = *alphabet;
        } else {
          std::set<std::string> symbols(q.begin(), q.end());
          a.assign(symbols.begin(), symbols.end());
        }
        return write_extended_newick(one_component_network(q, a, reserved));
      },
      py::arg("q"), py::arg("alphabet") = std::nullopt, py::arg("reserved") = "_ell");

  m.def(
      "construct_network",
      [](const Names& order, const std::map<std::string, Names>& betas) {
        Ordering ord = Ordering::from_names(order);
        std::vector<Seq> by_rank(static_cast<std::size_t>(ord.size()));
        for (const auto& [taxon, value] : betas) {
          int rank = ord.rank_of(ord.taxa().require(taxon));
          for (const std::string& sym : value)
            by_rank[static_cast<std::size_t>(rank)].push_back(
                ord.rank_of(ord.taxa().require(sym)));
        }
        return write_extended_newick(construct_network(ord, by_rank));
      },
      py::arg("order"), py::arg("betas"));

  m.def("canonical_form",
        [](const std::string& newick) { return canonical_form(parse_newick(newick)); });
  m.def("is_line_tree", [](const std::string& newick) { return is_line_tree(parse_newick(newick)); });
  m.def("hybridization_number", [](const std::string& enewick) {
    return hybridization_number(parse_extended_newick(enewick));
  });
  m.def("is_tree_child",
        [](const std::string& enewick) { return is_tree_child(parse_extended_newick(enewick)); });

  m.def(
      "is_displayed",
      [](const std::string& tree, const std::string& network, long long budget) {
        DisplayOptions opts;
        opts.selection_budget = budget;
        return is_displayed(parse_newick(tree), parse_extended_newick(network), opts);
      },
      py::arg("tree"), py::arg("network"), py::arg("budget") = 1'000'000);

  m.def(
      "displayed_line_trees",
      [](const std::string& network, const std::string& reserved, long long budget) {
        DisplayOptions opts;
        opts.selection_budget = budget;
        return displayed_line_trees(parse_extended_newick(network), reserved, opts);
      },
      py::arg("network"), py::arg("reserved") = "_ell", py::arg("budget") = 1'000'000);

  m.def(
      "lineage_taxon_strings",
      [](const std::string& newick, const Names& order) {
        Ordering ord = Ordering::from_names(order);
        std::vector<Seq> rows = lineage_taxon_strings(parse_newick(newick), ord);
        py::dict out;
        for (int r = 0; r < ord.size(); ++r) {
          Names names;
          for (int sym : rows[static_cast<std::size_t>(r)]) names.push_back(ord.name_at(sym));
          out[py::str(ord.name_at(r))] = names;
        }
        return out;
      },
      py::arg("newick"), py::arg("order"));

  m.def(
      "reconstruct_permutation",
      [](const std::map<std::string, Names>& strings, const Names& order,
         const std::string& reserved) {
        Ordering ord = ordering_of(order, reserved);
        std::vector<Seq> rows(static_cast<std::size_t>(ord.size()));
        for (const auto& [taxon, value] : strings) {
          int rank = ord.rank_of(ord.taxa().require(taxon));
          for (const std::string& sym : value)
            rows[static_cast<std::size_t>(rank)].push_back(ord.rank_of(ord.taxa().require(sym)));
        }
        Names out;
        for (int r : reconstruct_permutation(rows, ord)) out.push_back(ord.name_at(r));
        return out;
      },
      py::arg("strings"), py::arg("order"), py::arg("reserved") = "_ell");

  m.def(
      "exact_scs",
      [](const std::vector<Names>& strings, const std::optional<Names>& alphabet,
         long long state_budget) {
        auto [seqs, taxa] = to_seqs(strings, alphabet);
        ScsOptions opts;
        opts.state_budget = state_budget;
        return taxa.seq_names(exact_scs(seqs, taxa.size(), opts));
      },
      py::arg("strings"), py::arg("alphabet") = std::nullopt,
      py::arg("state_budget") = 10'000'000);

  m.def(
      "scs_length",
      [](const std::vector<Names>& strings, const std::optional<Names>& alphabet,
         long long state_budget) {
        auto [seqs, taxa] = to_seqs(strings, alphabet);
        ScsOptions opts;
        opts.state_budget = state_budget;
        return scs_length(seqs, taxa.size(), opts);
      },
      py::arg("strings"), py::arg("alphabet") = std::nullopt,
      py::arg("state_budget") = 10'000'000);

  m.def(
      "majority_merge",
      [](const std::vector<Names>& strings, const std::optional<Names>& alphabet) {
        auto [seqs, taxa] = to_seqs(strings, alphabet);
        return taxa.seq_names(majority_merge(seqs, taxa.size()));
      },
      py::arg("strings"), py::arg("alphabet") = std::nullopt);

  m.def(
      "is_supersequence",
      [](const Names& sup, const Names& sub) {
        auto [seqs, taxa] = to_seqs({sup, sub}, std::nullopt);
        return is_supersequence(seqs[0], seqs[1]);
      },
      py::arg("sup"), py::arg("sub"));

  m.def(
      "solve_min_tcn",
      [](const Names& trees, int max_taxa) {
        SolveOptions opts;
        opts.max_taxa = max_taxa;
        return report_dict(solve_min_tcn(parse_trees(trees), opts));
      },
      py::arg("trees"), py::arg("max_taxa") = 9);

  m.def(
      "solve_line_trees_fast",
      [](const Names& trees, const std::string& reserved) {
        return report_dict(solve_line_trees_fast(parse_trees(trees), reserved));
      },
      py::arg("trees"), py::arg("reserved") = "_ell");

  m.def(
      "assemble_supersequence",
      [](const Names& trees, const Names& order, const std::string& reserved) {
        Ordering ord = ordering_of(order, reserved);
        Names out;
        for (int r : assemble_supersequence(parse_trees(trees), ord)) out.push_back(ord.name_at(r));
        return out;
      },
      py::arg("trees"), py::arg("order"), py::arg("reserved") = "_ell");

  m.def(
      "anchor_chain",
      [](const Names& permutation, const Names& order, const std::string& reserved) {
        Ordering ord = ordering_of(order, reserved);
        Seq ranks;
        for (const std::string& name : permutation)
          ranks.push_back(ord.rank_of(ord.taxa().require(name)));
        Names out;
        for (int r : anchor_chain(ranks, ord)) out.push_back(ord.name_at(r));
        return out;
      },
      py::arg("permutation"), py::arg("order"), py::arg("reserved") = "_ell");

  m.def(
      "encode_2scs",
      [](const Names& alphabet, const std::vector<Names>& strings, long long budget) {
        PermutationScsInstance enc = encode_2scs(two_scs(alphabet, strings, budget));
        py::dict out;
        out["alphabet"] = enc.full_alphabet();
        out["separators"] = enc.separators;
        out["permutations"] = enc.permutations;
        out["budget"] = enc.budget;
        return out;
      },
      py::arg("alphabet"), py::arg("strings"), py::arg("budget"));

  m.def(
      "verify_equivalence",
      [](const Names& alphabet, const std::vector<Names>& strings, long long budget) {
        EquivalenceReport report = verify_equivalence(two_scs(alphabet, strings, budget));
        py::dict out;
        out["scs_length"] = report.scs_len;
        out["encoded_scs_length"] = report.encoded_scs_len;
        out["left"] = report.left;
        out["right"] = report.right;
        out["agree"] = report.agree;
        out["witnesses_checked"] = report.witnesses_checked;
        return out;
      },
      py::arg("alphabet"), py::arg("strings"), py::arg("budget"));

  m.def(
      "hardness_instance",
      [](const Names& alphabet, const std::vector<Names>& strings, long long budget,
         const std::string& reserved) {
        HardnessInstance hard = end_to_end_tcn_instance(two_scs(alphabet, strings, budget), reserved);
        py::dict out;
        Names trees;
        for (const BinaryTree& t : hard.trees) trees.push_back(write_newick(t));
        out["trees"] = trees;
        out["reserved"] = hard.reserved;
        out["target"] = hard.target;
        return out;
      },
      py::arg("alphabet"), py::arg("strings"), py::arg("budget"),
      py::arg("reserved") = "_ell");
}
