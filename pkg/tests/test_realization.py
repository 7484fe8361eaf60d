import pytest

from conftest import TREFOIL

from shadowkit import (
    TRIVIAL,
    Arc,
    RealizationFailed,
    circle_number,
    connected_sum,
    is_isotopic,
    is_prime,
    non_seifert_resolve,
    parse_gauss,
    parse_tree,
    primify,
    realize_arrangement,
    realize_prime,
    reduce,
    strong_equiv,
    trees_with_edges,
)
from shadowkit.realization import FIXTURES, gadget_library, peel


def test_gadgets():
    lib = gadget_library()
    assert lib.arrangements["3_1"].ahu != lib.arrangements["6_3"].ahu
    assert {lib.arrangements[k].circles for k in ("3_1", "6_3")} == {3}
    assert lib.fixtures["6_3"].n == 6 and is_prime(lib.fixtures["6_3"])
    for name in FIXTURES:
        assert lib.attachments[name]


def test_peel_reaches_one_edge():
    for m in (3, 5, 7, 9):
        for code in trees_with_edges(m):
            chain = peel(parse_tree(code))
            assert [len(t) for t in chain] == list(range(m, 0, -2))


def test_realize_examples(trefoil):
    assert circle_number(realize_arrangement("(())")) == 1
    assert is_isotopic(realize_arrangement("(()()())"), trefoil)
    path5 = "(((((())))))"
    P = realize_arrangement(path5)
    assert non_seifert_resolve(P).ahu == "(((()))(()))"
    assert circle_number(P) == 5


@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_realize_every_odd_tree(m):
    for code in trees_with_edges(m):
        for build in (realize_arrangement, realize_prime):
            P = build(parse_tree(code))
            assert non_seifert_resolve(P).ahu == code
        assert is_prime(P)


def test_even_trees_are_rejected():
    with pytest.raises(RealizationFailed):
        realize_arrangement("(()())")
    with pytest.raises(RealizationFailed):
        realize_prime([])


def test_primify_examples(trefoil):
    assert is_isotopic(primify(trefoil), trefoil)
    T2 = connected_sum(trefoil, Arc(0, "L"), trefoil, Arc(1, "R"))
    assert not is_prime(T2)
    P = primify(T2)
    assert is_prime(P) and circle_number(P) == 5
    assert non_seifert_resolve(P).ahu == non_seifert_resolve(T2).ahu
    assert strong_equiv(P, T2)
    O = primify(TRIVIAL)
    assert is_prime(O) and circle_number(O) == 1
    assert is_isotopic(O, parse_gauss(FIXTURES["4_1"]))


def test_primify_keeps_strong_class_of_sums():
    T = parse_gauss(TREFOIL)
    lib = gadget_library()
    for name in ("3_1", "4_1", "5_1", "5_2", "6_3"):
        G = lib.fixtures[name]
        for arc in G.arcs()[:6]:
            S = connected_sum(T, Arc(2, "R"), G, arc)
            P = primify(S)
            assert is_prime(P)
            assert non_seifert_resolve(P).ahu == non_seifert_resolve(S).ahu
            assert is_isotopic(reduce(P, "strong"), reduce(S, "strong"))
            assert is_isotopic(primify(P), P)
