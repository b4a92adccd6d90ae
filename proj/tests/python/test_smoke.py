"""Smoke tests for the python module against the worked examples."""

import pytest

import tcnkit


ORDER = ["a", "b", "c", "l", "d", "e"]
PERMS = ["eadbc", "caebd", "cabed"]


def tree_of(perm):
    return tcnkit.line_tree_from_permutation(list(perm), reserved="l")


def test_permutation_round_trip():
    newick = tree_of("edabc")
    assert tcnkit.is_line_tree(newick)
    assert tcnkit.permutation_from_line_tree(newick, reserved="l") == list("edabc")


def test_worked_lineage_strings():
    strings = tcnkit.lineage_taxon_strings(tree_of("edabc"), ["a", "b", "c", "d", "e", "l"])
    assert strings == {
        "a": ["e", "d", "b"],
        "b": ["c"],
        "c": ["l"],
        "d": [],
        "e": [],
        "l": [],
    }


def test_reconstruction_inverts_lineage_strings():
    strings = tcnkit.lineage_taxon_strings(tree_of("caebd"), ORDER)
    assert tcnkit.reconstruct_permutation(strings, ORDER, reserved="l") == list("caebd")


def test_scs_engine():
    assert tcnkit.scs_length([list("ab"), list("ba")]) == 3
    assert tcnkit.exact_scs([list("ab"), list("ba")]) == list("aba")
    assert tcnkit.is_supersequence(list("ecadebced"), list("eadbc"))
    merged = tcnkit.majority_merge([list("ab"), list("ba")])
    assert len(merged) == 3


def test_one_component_network():
    net = tcnkit.one_component_network(list("ababc"), reserved="l")
    assert tcnkit.hybridization_number(net) == 2
    assert tcnkit.is_tree_child(net)
    assert tcnkit.is_displayed(tree_of("abc"), net)
    assert not tcnkit.is_displayed(tree_of("cba"), net)
    assert tcnkit.displayed_line_trees(net, reserved="l") == [list("abc"), list("bac")]


def test_constructed_network_golden():
    betas = {"a": list("ecb"), "b": list("dcel"), "c": ["l"], "l": list("ed")}
    net = tcnkit.construct_network(ORDER, betas)
    assert tcnkit.hybridization_number(net) == 5
    assert tcnkit.is_tree_child(net)
    for perm in PERMS:
        assert tcnkit.is_displayed(tree_of(perm), net)


def test_solver_reaches_the_optimum():
    trees = [tree_of(p) for p in PERMS]
    report = tcnkit.solve_min_tcn(trees)
    assert report["hn"] == 4
    assert report["searched"] == 720
    fast = tcnkit.solve_line_trees_fast(trees, reserved="l")
    assert fast["hn"] == 4
    assert tcnkit.is_tree_child(fast["network"])


def test_assembly_and_anchor_chain():
    trees = [tree_of(p) for p in PERMS]
    q = tcnkit.assemble_supersequence(trees, ORDER, reserved="l")
    for perm in PERMS:
        assert tcnkit.is_supersequence(q, list(perm))
    assert tcnkit.anchor_chain(list("eadbc"), ORDER, reserved="l") == ["a", "b", "c"]


def test_reduction():
    enc = tcnkit.encode_2scs(["a", "b", "c"], [list("ab"), list("bc"), list("ca")], 4)
    assert len(enc["separators"]) == 8
    assert enc["budget"] == 15
    report = tcnkit.verify_equivalence(["a", "b", "c"], [list("ab"), list("bc"), list("ca")], 4)
    assert report["agree"] and report["left"] and report["right"]
    hard = tcnkit.hardness_instance(["a", "b", "c"], [list("ab"), list("bc"), list("ca")], 4)
    solved = tcnkit.solve_line_trees_fast(hard["trees"], reserved=hard["reserved"])
    assert (solved["hn"] <= hard["target"]) == (report["scs_length"] <= 4)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        tcnkit.canonical_form("((a,b,c));")
    with pytest.raises(ValueError):
        tcnkit.line_tree_from_permutation(["a", "a"], reserved="l")
    with pytest.raises(RuntimeError):
        tcnkit.exact_scs([list("abc"), list("cba")], state_budget=2)
