#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tcnkit/construct.hpp"
#include "tcnkit/errors.hpp"
#include "tcnkit/instance.hpp"
#include "tcnkit/newick.hpp"

using namespace tcnkit;
using testing::enumerate_trees;
using testing::name_vec;

TEST_SUITE_BEGIN("codec");

TEST_CASE("parse_newick accepts the worked tree") {
  BinaryTree t = parse_newick("((e,(d,(a,(b,(c,l))))));");
  CHECK(canonical_form(t) == canonical_form(line_tree_from_permutation(name_vec("edabc"), "l")));
}

TEST_CASE("parse_newick single leaf") {
  BinaryTree t = parse_newick("(a);");
  CHECK(t.node_count() == 2);
  CHECK(t.leaf_names() == std::vector<std::string>{"a"});
  CHECK(write_newick(t) == "(a);");
}

TEST_CASE("parse_newick errors carry offsets") {
  CHECK_THROWS_WITH_AS(parse_newick("((a,b,c));"), doctest::Contains("non-binary"), ParseError);
  CHECK_THROWS_WITH_AS(parse_newick("((a,b);"), doctest::Contains("unbalanced"), ParseError);
  CHECK_THROWS_WITH_AS(parse_newick("((a,));"), doctest::Contains("empty label"), ParseError);
  CHECK_THROWS_WITH_AS(parse_newick("((a,a));"), doctest::Contains("duplicate leaf label"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_newick("((a,b)); x"), doctest::Contains("trailing"), ParseError);
  try {
    parse_newick("((a,b,c));");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("write_newick is canonical") {
  CHECK(write_newick(parse_newick("((b,a));")) == "((a,b));");
  BinaryTree t = line_tree_from_permutation(name_vec("edabc"), "l");
  BinaryTree back = parse_newick(write_newick(t));
  CHECK(canonical_form(back) == canonical_form(t));
}

TEST_CASE("extended newick handles plain trees") {
  PhyloNetwork net = parse_extended_newick("((a,(b,c)));");
  CHECK(net.reticulations().empty());
  CHECK(write_extended_newick(net) == "((a,(b,c)));");
}

TEST_CASE("extended newick round-trips a one-component network") {
  PhyloNetwork net = one_component_network(name_vec("ababc"), name_vec("abc"), "l");
  std::string text = write_extended_newick(net);
  std::set<std::string> tags;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == '#') tags.insert(text.substr(i, text.find_first_of("),;", i) - i));
  CHECK(tags.size() == 2);  // reticulate collectors for a and b
  PhyloNetwork back = parse_extended_newick(text);
  CHECK(hybridization_number(back) == 2);
  CHECK(write_extended_newick(back) == text);
  CHECK(testing::net_iso_oracle(net, back));
}

TEST_CASE("extended newick tag errors") {
  CHECK_THROWS_WITH_AS(parse_extended_newick("(((a)#H1,b));"), doctest::Contains("appears once"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_extended_newick("((#H1,x));"), doctest::Contains("no definition"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_extended_newick("(((a)#H1,((b)#H1,#H1)));"),
                       doctest::Contains("defined more than once"), ParseError);
  CHECK_THROWS_WITH_AS(parse_extended_newick("((((#H1,x))#H1,y));"), doctest::Contains("cycle"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_extended_newick("((a,b)#H1,#H1);"),
                       doctest::Contains("exactly one child"), ParseError);
}

TEST_CASE("suppress_degree2") {
  PhyloNetwork net = one_component_network(name_vec("aba"), name_vec("ab"), "l");
  PhyloNetwork again = suppress_degree2(net);
  CHECK(write_extended_newick(again) == write_extended_newick(net));  // fixpoint, idempotent

  PhyloNetwork chain;
  int root = chain.add_node();
  chain.set_root(root);
  int u = chain.add_node();
  int v = chain.add_node();
  chain.add_edge(root, u);
  chain.add_edge(u, v);
  chain.add_edge(v, chain.add_node("a"));
  PhyloNetwork collapsed = suppress_degree2(chain);
  CHECK(collapsed.node_count() == 2);  // root and leaf

  PhyloNetwork diamond;
  int r2 = diamond.add_node();
  diamond.set_root(r2);
  int s = diamond.add_node();
  int mid = diamond.add_node();
  int w = diamond.add_node();
  diamond.add_edge(r2, s);
  diamond.add_edge(s, mid);
  diamond.add_edge(mid, w);
  diamond.add_edge(s, w);
  diamond.add_edge(w, diamond.add_node("a"));
  CHECK_THROWS_WITH_AS(suppress_degree2(diamond), doctest::Contains("parallel edge"),
                       StructuralError);
}

TEST_CASE("newick round-trip over all line trees with up to 7 leaves") {
  std::vector<std::string> symbols = name_vec("abcdef");
  for (std::size_t n = 1; n <= symbols.size(); ++n) {
    std::vector<std::string> perm(symbols.begin(), symbols.begin() + static_cast<long>(n));
    std::sort(perm.begin(), perm.end());
    do {
      BinaryTree t = line_tree_from_permutation(perm, "l");
      BinaryTree back = parse_newick(write_newick(t));
      CHECK(canonical_form(back) == canonical_form(t));
      CHECK(permutation_from_line_tree(back, "l") == perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("newick round-trip over general trees") {
  for (const BinaryTree& t : enumerate_trees(name_vec("abcde"))) {
    BinaryTree back = parse_newick(write_newick(t));
    CHECK(canonical_form(back) == canonical_form(t));
  }
}

TEST_CASE("extended newick round-trip over pipeline networks") {
  for (const char* q : {"aba", "ababc", "ecadebced", "abcabc", "aabbcc"}) {
    std::vector<std::string> qs = name_vec(q);
    std::set<std::string> alphabet(qs.begin(), qs.end());
    PhyloNetwork net = one_component_network(
        qs, std::vector<std::string>(alphabet.begin(), alphabet.end()), "l");
    std::string text = write_extended_newick(net);
    PhyloNetwork back = parse_extended_newick(text);
    CHECK(write_extended_newick(back) == text);
    CHECK(hybridization_number(back) == hybridization_number(net));
    CHECK(testing::net_iso_oracle(net, back));
  }
}

TEST_CASE("instance file json round-trip") {
  InstanceFile inst;
  inst.alphabet = name_vec("abcl");
  inst.reserved = "l";
  inst.trees = {write_newick(line_tree_from_permutation(name_vec("abc"), "l"))};
  inst.strings = std::vector<std::string>{"ab", "ba"};
  inst.budget = 3;
  InstanceFile back = InstanceFile::from_json_text(inst.to_json_text());
  CHECK(back.alphabet == inst.alphabet);
  CHECK(back.reserved == inst.reserved);
  CHECK(back.trees == inst.trees);
  CHECK(back.strings == inst.strings);
  CHECK(back.budget == inst.budget);
  back.validate();

  CHECK_THROWS_AS(InstanceFile::from_json_text("{"), ParseError);
  CHECK_THROWS_AS(InstanceFile::from_json_text("{\"alphabet\": 3}"), ParseError);
  InstanceFile bad = back;
  bad.alphabet = name_vec("ab");
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_SUITE_END();
