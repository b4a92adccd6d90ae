// tcnkit command line: codecs, lineage-string tools, the exact tree-child
// network solver and the 2-SCS reduction, with stable exit codes:
//   0 success, 1 domain failure, 2 usage or parse error, 3 capacity exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tcnkit/construct.hpp"
#include "tcnkit/errors.hpp"
#include "tcnkit/instance.hpp"
#include "tcnkit/lts.hpp"
#include "tcnkit/newick.hpp"
#include "tcnkit/reduction.hpp"
#include "tcnkit/scs.hpp"
#include "tcnkit/solver.hpp"

using namespace tcnkit;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

InstanceFile load_instance(const std::string& path) {
  InstanceFile inst = InstanceFile::from_json_text(read_input(path));
  inst.validate();
  return inst;
}

std::vector<std::string> parse_order_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

std::string seq_text(const Ordering& ord, const Seq& ranks) {
  std::vector<std::string> names;
  for (int r : ranks) names.push_back(ord.name_at(r));
  return join_sequence(names);
}

json report_to_json(const SolveReport& report) {
  json betas = json::object();
  for (int r = 0; r < report.ordering.size(); ++r)
    betas[report.ordering.name_at(r)] =
        seq_text(report.ordering, report.betas[static_cast<std::size_t>(r)]);
  return json{{"hn", report.hn},
              {"ordering", report.ordering.names_in_order()},
              {"network", write_extended_newick(report.network)},
              {"betas", betas},
              {"searched", report.orderings_searched}};
}

void print_report(const SolveReport& report, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(report).dump(2) << "\n";
    return;
  }
  std::cout << "hn: " << report.hn << "\n";
  std::cout << "ordering: " << join_sequence(report.ordering.names_in_order()) << "\n";
  std::cout << "network: " << write_extended_newick(report.network) << "\n";
  std::cout << "searched: " << report.orderings_searched << "\n";
}

int run_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
  };

  Ordering alpha = Ordering::from_names({"a", "b", "c", "d", "e", "l"}, std::string("l"));
  BinaryTree t1 = line_tree_from_permutation({"e", "d", "a", "b", "c"}, "l");
  std::vector<Seq> lts = lineage_taxon_strings(t1, alpha);
  auto cell = [&](const Ordering& ord, const std::vector<Seq>& rows, const std::string& taxon) {
    Seq row = rows[static_cast<std::size_t>(ord.rank_of(ord.taxa().require(taxon)))];
    return seq_text(ord, row);
  };
  check(cell(alpha, lts, "a") == "edb" && cell(alpha, lts, "b") == "c" &&
            cell(alpha, lts, "c") == "l" && cell(alpha, lts, "d").empty() &&
            cell(alpha, lts, "e").empty() && cell(alpha, lts, "l").empty(),
        "lineage strings of the worked line tree");

  Ordering ord2 = Ordering::from_names({"a", "b", "c", "l", "d", "e"}, std::string("l"));
  std::vector<BinaryTree> trees{line_tree_from_permutation({"e", "a", "d", "b", "c"}, "l"),
                                line_tree_from_permutation({"c", "a", "e", "b", "d"}, "l"),
                                line_tree_from_permutation({"c", "a", "b", "e", "d"}, "l")};
  LtsProfile profile = lts_profile(trees, ord2);
  std::vector<std::size_t> lens;
  for (const char* taxon : {"a", "b", "c", "l", "d", "e"})
    lens.push_back(
        profile.betas[static_cast<std::size_t>(ord2.rank_of(ord2.taxa().require(taxon)))].size());
  check(lens == std::vector<std::size_t>{3, 4, 1, 2, 0, 0}, "per-taxon SCS lengths");

  PhyloNetwork built = construct_network(ord2, profile.betas);
  bool built_ok = hybridization_number(built) == 5 && is_tree_child(built);
  for (const BinaryTree& t : trees) built_ok = built_ok && is_displayed(t, built);
  check(built_ok, "constructed network has HN 5 and displays the trees");

  PhyloNetwork one = one_component_network(
      {"e", "c", "a", "d", "e", "b", "c", "e", "d"}, {"a", "b", "c", "d", "e"}, "l");
  bool one_ok = hybridization_number(one) == 4 && is_tree_child(one);
  for (const BinaryTree& t : trees) one_ok = one_ok && is_displayed(t, one);
  check(one_ok, "one-component network has HN 4 and displays the trees");

  SolveReport solved = solve_min_tcn(trees);
  check(solved.hn == 4 && solved.orderings_searched == 720, "exact solver reaches HN 4");

  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"tree-child networks, lineage taxon strings and shortest common supersequences"};
  app.require_subcommand(1);

  std::string ell = "_ell";
  bool as_json = false;
  ScsOptions scs_opts;
  DisplayOptions display_opts;
  SolveOptions solve_opts;

  auto add_common = [&](CLI::App* cmd, bool with_ell = true) {
    cmd->add_flag("--json", as_json, "emit a JSON payload");
    if (with_ell) cmd->add_option("--ell", ell, "name of the reserved extra leaf");
  };

  // ---- p2t
  std::string perm_text;
  CLI::App* p2t = app.add_subcommand("p2t", "permutation to line tree Newick");
  p2t->add_option("permutation", perm_text)->required();
  add_common(p2t);

  // ---- t2p
  std::string tree_text;
  CLI::App* t2p = app.add_subcommand("t2p", "line tree Newick to permutation");
  t2p->add_option("newick", tree_text)->required();
  add_common(t2p);

  // ---- nq
  std::string q_text, alphabet_text;
  CLI::App* nq = app.add_subcommand("nq", "one-component network of a string");
  nq->add_option("string", q_text)->required();
  nq->add_option("--alphabet", alphabet_text, "comma-separated alphabet (default: symbols of the string)");
  add_common(nq);

  // ---- lts
  std::string lts_tree, order_text;
  CLI::App* lts_cmd = app.add_subcommand("lts", "lineage taxon strings of a tree under an ordering");
  lts_cmd->add_option("newick", lts_tree)->required();
  lts_cmd->add_option("--order", order_text, "comma-separated taxa, smallest first")->required();
  add_common(lts_cmd, false);

  // ---- scs
  std::vector<std::string> scs_strings;
  std::string scs_mode = "exact", scs_instance;
  CLI::App* scs_cmd = app.add_subcommand("scs", "shortest common supersequence");
  scs_cmd->add_option("strings", scs_strings);
  scs_cmd->add_option("--instance", scs_instance, "instance file ('-' for stdin) supplying the strings");
  scs_cmd->add_option("--mode", scs_mode)->check(CLI::IsMember({"exact", "heuristic"}));
  scs_cmd->add_option("--scs-states", scs_opts.state_budget, "state budget for the exact search");
  add_common(scs_cmd, false);

  // ---- construct
  std::vector<std::string> beta_args;
  std::string construct_order;
  CLI::App* construct_cmd = app.add_subcommand("construct", "network from an ordering and per-taxon strings");
  construct_cmd->add_option("--order", construct_order, "comma-separated taxa, smallest first")->required();
  construct_cmd->add_option("--beta", beta_args, "taxon=string, repeatable");
  add_common(construct_cmd, false);

  // ---- check-display
  std::string disp_tree, disp_net;
  CLI::App* check_cmd = app.add_subcommand("check-display", "is the tree displayed in the network");
  check_cmd->add_option("tree", disp_tree)->required();
  check_cmd->add_option("network", disp_net)->required();
  check_cmd->add_option("--display-budget", display_opts.selection_budget);
  add_common(check_cmd, false);

  // ---- solve / solve-fast
  std::string solve_path, fast_path;
  CLI::App* solve_cmd = app.add_subcommand("solve", "exact minimum tree-child network");
  solve_cmd->add_option("instance", solve_path, "instance file ('-' for stdin)")->required();
  solve_cmd->add_option("--max-taxa", solve_opts.max_taxa);
  solve_cmd->add_option("--scs-states", solve_opts.scs.state_budget);
  solve_cmd->add_option("--display-budget", solve_opts.display.selection_budget);
  add_common(solve_cmd);

  CLI::App* fast_cmd = app.add_subcommand("solve-fast", "line-tree fast path via one SCS");
  fast_cmd->add_option("instance", fast_path)->required();
  fast_cmd->add_option("--scs-states", solve_opts.scs.state_budget);
  add_common(fast_cmd);

  // ---- assemble-q
  std::string assemble_path, assemble_order;
  CLI::App* assemble_cmd = app.add_subcommand("assemble-q", "supersequence assembly for line trees");
  assemble_cmd->add_option("instance", assemble_path)->required();
  assemble_cmd->add_option("--order", assemble_order, "comma-separated taxa, smallest first")->required();
  add_common(assemble_cmd);

  // ---- reduce / verify-reduction / hardness-instance
  std::string reduce_path, verify_path, hardness_path;
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "encode a 2-SCS instance over permutations");
  reduce_cmd->add_option("instance", reduce_path)->required();
  add_common(reduce_cmd, false);

  CLI::App* verify_cmd = app.add_subcommand("verify-reduction", "check both sides of the encoding");
  verify_cmd->add_option("instance", verify_path)->required();
  verify_cmd->add_option("--scs-states", scs_opts.state_budget);
  add_common(verify_cmd, false);

  CLI::App* hardness_cmd = app.add_subcommand("hardness-instance", "line trees and budget for the encoded instance");
  hardness_cmd->add_option("instance", hardness_path)->required();
  add_common(hardness_cmd);

  app.add_subcommand("selftest", "run the built-in golden checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (p2t->parsed()) {
      BinaryTree tree = line_tree_from_permutation(split_sequence_text(perm_text), ell);
      std::string text = write_newick(tree);
      if (as_json) std::cout << json{{"newick", text}}.dump(2) << "\n";
      else std::cout << text << "\n";
    } else if (t2p->parsed()) {
      std::vector<std::string> perm = permutation_from_line_tree(parse_newick(tree_text), ell);
      if (as_json) std::cout << json{{"permutation", join_sequence(perm)}}.dump(2) << "\n";
      else std::cout << join_sequence(perm) << "\n";
    } else if (nq->parsed()) {
      std::vector<std::string> q = split_sequence_text(q_text);
      std::vector<std::string> alphabet;
      if (alphabet_text.empty()) {
        std::set<std::string> symbols(q.begin(), q.end());
        alphabet.assign(symbols.begin(), symbols.end());
      } else {
        alphabet = parse_order_list(alphabet_text);
      }
      PhyloNetwork net = one_component_network(q, alphabet, ell);
      std::string text = write_extended_newick(net);
      long long hn = hybridization_number(net);
      if (as_json) std::cout << json{{"network", text}, {"hn", hn}}.dump(2) << "\n";
      else std::cout << text << "\nhn: " << hn << "\n";
    } else if (lts_cmd->parsed()) {
      BinaryTree tree = parse_newick(lts_tree);
      Ordering ord = Ordering::from_names(parse_order_list(order_text));
      std::vector<Seq> rows = lineage_taxon_strings(tree, ord);
      json payload = json::object();
      for (int r = 0; r < ord.size(); ++r)
        payload[ord.name_at(r)] = seq_text(ord, rows[static_cast<std::size_t>(r)]);
      if (as_json) {
        std::cout << payload.dump(2) << "\n";
      } else {
        for (int r = 0; r < ord.size(); ++r)
          std::cout << ord.name_at(r) << ": "
                    << seq_text(ord, rows[static_cast<std::size_t>(r)]) << "\n";
      }
    } else if (scs_cmd->parsed()) {
      std::vector<std::vector<std::string>> strings;
      if (!scs_instance.empty()) {
        InstanceFile inst = load_instance(scs_instance);
        if (!inst.strings) throw DomainError("instance file has no strings");
        for (const std::string& s : *inst.strings) strings.push_back(split_sequence_text(s));
      }
      for (const std::string& s : scs_strings) strings.push_back(split_sequence_text(s));
      std::set<std::string> symbols;
      for (const auto& s : strings) symbols.insert(s.begin(), s.end());
      TaxonSet alphabet = TaxonSet::from_names({symbols.begin(), symbols.end()});
      std::vector<Seq> seqs;
      for (const auto& s : strings) {
        Seq seq;
        for (const std::string& sym : s) seq.push_back(alphabet.require(sym));
        seqs.push_back(std::move(seq));
      }
      Seq result = scs_mode == "exact" ? exact_scs(seqs, alphabet.size(), scs_opts)
                                       : majority_merge(seqs, alphabet.size());
      std::string text = join_sequence(alphabet.seq_names(result));
      if (as_json)
        std::cout << json{{"scs", text}, {"length", result.size()}, {"mode", scs_mode}}.dump(2)
                  << "\n";
      else
        std::cout << text << "\nlength: " << result.size() << "\n";
    } else if (construct_cmd->parsed()) {
      Ordering ord = Ordering::from_names(parse_order_list(construct_order));
      std::vector<Seq> betas(static_cast<std::size_t>(ord.size()));
      for (const std::string& arg : beta_args) {
        std::size_t eq = arg.find('=');
        if (eq == std::string::npos) throw DomainError("--beta expects taxon=string");
        int rank = ord.rank_of(ord.taxa().require(arg.substr(0, eq)));
        for (const std::string& sym : split_sequence_text(arg.substr(eq + 1)))
          betas[static_cast<std::size_t>(rank)].push_back(
              ord.rank_of(ord.taxa().require(sym)));
      }
      PhyloNetwork net = construct_network(ord, betas);
      std::string text = write_extended_newick(net);
      long long hn = hybridization_number(net);
      if (as_json) std::cout << json{{"network", text}, {"hn", hn}}.dump(2) << "\n";
      else std::cout << text << "\nhn: " << hn << "\n";
    } else if (check_cmd->parsed()) {
      bool shown = is_displayed(parse_newick(disp_tree), parse_extended_newick(disp_net),
                                display_opts);
      if (as_json) std::cout << json{{"displayed", shown}}.dump(2) << "\n";
      else std::cout << (shown ? "displayed" : "not displayed") << "\n";
      if (!shown) return 1;
    } else if (solve_cmd->parsed()) {
      InstanceFile inst = load_instance(solve_path);
      std::vector<BinaryTree> trees;
      for (const std::string& text : inst.trees) trees.push_back(parse_newick(text));
      print_report(solve_min_tcn(trees, solve_opts), as_json);
    } else if (fast_cmd->parsed()) {
      InstanceFile inst = load_instance(fast_path);
      std::vector<BinaryTree> trees;
      for (const std::string& text : inst.trees) trees.push_back(parse_newick(text));
      print_report(solve_line_trees_fast(trees, inst.reserved.value_or(ell), solve_opts),
                   as_json);
    } else if (assemble_cmd->parsed()) {
      InstanceFile inst = load_instance(assemble_path);
      std::vector<BinaryTree> trees;
      for (const std::string& text : inst.trees) trees.push_back(parse_newick(text));
      Ordering ord = Ordering::from_names(parse_order_list(assemble_order),
                                          inst.reserved.value_or(ell));
      Seq q = assemble_supersequence(trees, ord, {}, scs_opts);
      std::string text = seq_text(ord, q);
      if (as_json) std::cout << json{{"q", text}, {"length", q.size()}}.dump(2) << "\n";
      else std::cout << text << "\n";
    } else if (reduce_cmd->parsed()) {
      InstanceFile inst = load_instance(reduce_path);
      if (!inst.strings || !inst.budget)
        throw DomainError("reduce needs an instance with strings and a budget");
      TwoScsInstance two;
      two.alphabet = inst.alphabet;
      for (const std::string& s : *inst.strings) two.strings.push_back(split_sequence_text(s));
      two.budget = *inst.budget;
      if (two.has_universal_character())
        std::cerr << "warning: a character occurs in every string; the size equivalence is not "
                     "guaranteed for such instances\n";
      PermutationScsInstance enc = encode_2scs(two);
      InstanceFile out;
      out.alphabet = enc.full_alphabet();
      out.strings = std::vector<std::string>{};
      for (const auto& p : enc.permutations) out.strings->push_back(join_sequence(p));
      out.budget = enc.budget;
      std::cout << out.to_json_text();
    } else if (verify_cmd->parsed()) {
      InstanceFile inst = load_instance(verify_path);
      if (!inst.strings || !inst.budget)
        throw DomainError("verify-reduction needs an instance with strings and a budget");
      TwoScsInstance two;
      two.alphabet = inst.alphabet;
      for (const std::string& s : *inst.strings) two.strings.push_back(split_sequence_text(s));
      two.budget = *inst.budget;
      EquivalenceReport report = verify_equivalence(two, scs_opts);
      json payload{{"scs_length", report.scs_len},
                   {"encoded_scs_length", report.encoded_scs_len},
                   {"left", report.left},
                   {"right", report.right},
                   {"agree", report.agree},
                   {"witnesses_checked", report.witnesses_checked}};
      if (as_json) std::cout << payload.dump(2) << "\n";
      else
        std::cout << "scs length: " << report.scs_len << " (budget " << two.budget << ")\n"
                  << "encoded scs length: " << report.encoded_scs_len << "\n"
                  << "sides: " << (report.left ? "yes" : "no") << " / "
                  << (report.right ? "yes" : "no") << "\n"
                  << "agree: " << (report.agree ? "yes" : "no") << "\n";
      if (!report.agree) return 1;
    } else if (hardness_cmd->parsed()) {
      InstanceFile inst = load_instance(hardness_path);
      if (!inst.strings || !inst.budget)
        throw DomainError("hardness-instance needs an instance with strings and a budget");
      TwoScsInstance two;
      two.alphabet = inst.alphabet;
      for (const std::string& s : *inst.strings) two.strings.push_back(split_sequence_text(s));
      two.budget = *inst.budget;
      HardnessInstance hard = end_to_end_tcn_instance(two, ell);
      InstanceFile out;
      out.alphabet = encode_2scs(two).full_alphabet();
      out.alphabet.push_back(hard.reserved);
      out.reserved = hard.reserved;
      for (const BinaryTree& t : hard.trees) out.trees.push_back(write_newick(t));
      out.budget = hard.target;
      std::cout << out.to_json_text();
    } else {  // selftest
      return run_selftest();
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int main(int argc, char** argv) { return run(argc, argv); }
