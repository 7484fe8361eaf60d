"""Acceptance suite: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py`` (the lines appear in the terminal
summary) or ``python tests/test_acceptance.py``.
"""
import random
import time
from collections import Counter

from conftest import ACCEPTANCE_LINES, CINQUEFOIL, FIGURE_EIGHT, TREFOIL

from shadowkit import (
    TRIVIAL,
    RealizationFailed,
    ahu_code,
    canonical_code,
    circle_number,
    connected_sum,
    glue_trees,
    is_isotopic,
    is_prime,
    non_seifert_resolve,
    parse_gauss,
    realize_prime,
    reduce,
    trees_with_edges,
    x_invariant,
)
from shadowkit.census import enumerate_projections
from shadowkit.moves import apply_move, find_moves, inflate
from shadowkit.projection import INCOHERENT
from shadowkit.realization import gadget_library


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_01_census_counts():
    t = time.perf_counter()
    found = enumerate_projections(7, prime=True, no_onegon=True)
    elapsed = time.perf_counter() - t
    counts = dict(Counter(P.n for P in found))
    ok = counts == {3: 1, 4: 1, 5: 2, 6: 3, 7: 10} and len(found) == 17 and elapsed < 60
    report(1, "census counts for n <= 7, prime, no 1-gon", ok,
           f"{counts}, total {len(found)}, {elapsed:.2f} s")


def test_02_circle_numbers(census):
    values = {name: circle_number(parse_gauss(c)) for name, c in
              (("O", "0;;"), ("3_1", TREFOIL), ("4_1", FIGURE_EIGHT), ("5_1", CINQUEFOIL))}
    trefoil_tree = non_seifert_resolve(parse_gauss(TREFOIL)).ahu
    six = [non_seifert_resolve(P) for P in census if P.n == 6]
    odd_ones = [A for A in six if A.circles == 3 and A.ahu != trefoil_tree]
    ok = values == {"O": 1, "3_1": 3, "4_1": 1, "5_1": 5} and len(odd_ones) == 1
    report(2, "circle numbers of O, 3_1, 4_1, 5_1 and the 6_3 role", ok,
           f"{values}, n=6 three-circle trees unlike 3_1: {len(odd_ones)}")


def test_03_oddness(census, scrambles):
    pool = list(census) + list(scrambles)
    bad = [P for P in pool if circle_number(P) % 2 == 0]
    report(3, "circle number is odd", not bad and len(scrambles) >= 1000,
           f"{len(pool)} projections, {len(bad)} violations")


def _pick_arc(P, rng):
    return rng.choice(list(P.arcs()))


def test_04_additivity(census):
    rng = random.Random(4)
    bad = 0
    for _ in range(200):
        P, Q = rng.choice(census), rng.choice(census)
        a, b = _pick_arc(P, rng), _pick_arc(Q, rng)
        R = connected_sum(P, a, Q, b)
        A, B, C = non_seifert_resolve(P), non_seifert_resolve(Q), non_seifert_resolve(R)
        da, db = P.dart_of(a), Q.dart_of(b)
        glued = glue_trees(A.edges, A.circle_of[da], A.region_of[P.face_of(da)],
                           B.edges, B.circle_of[db], B.region_of[Q.face_of(db)])
        if C.circles != A.circles + B.circles - 1 or ahu_code(glued) != C.ahu:
            bad += 1
    report(4, "additivity and tree gluing under connected sum", bad == 0,
           f"200 random sums, {bad} violations")


def test_05_strong_invariance(census):
    rng = random.Random(5)
    kinds = ["1a", "1b", "s2a", "s2b"]
    moves = bad = 0
    for P0 in census:
        ref = (non_seifert_resolve(P0).ahu, x_invariant(P0)[1])
        P = P0
        for _ in range(300):
            allowed = kinds if P.n < 12 else ["1b", "s2b"]
            sites = find_moves(P, allowed) or find_moves(P, kinds)
            P = apply_move(P, rng.choice(sites))
            moves += 1
            if (non_seifert_resolve(P).ahu, x_invariant(P)[1]) != ref:
                bad += 1
    report(5, "arrangement and X mod 2 invariant under strong moves", bad == 0 and moves >= 5000,
           f"{moves} moves, {bad} violations")


def test_06_weak_and_r3_parity(census):
    changes, bad, total = Counter(), 0, 0
    for P in census:
        before = circle_number(P)
        for site in find_moves(P, {"w2a", "w2b", "r3"}):
            delta = circle_number(apply_move(P, site)) - before
            changes[delta] += 1
            total += 1
            bad += delta not in (-2, 0, 2)
    report(6, "w2a/w2b/r3 change the circle number by -2, 0 or +2", bad == 0 and total > 0,
           f"{total} sites, deltas {dict(sorted(changes.items()))}")


def test_07_confluence(census):
    rng = random.Random(7)
    t = time.perf_counter()
    bad = runs = 0
    for mode, up in (("weak", ["1a", "w2a"]), ("strong", ["1a", "s2a"])):
        for P in census:
            target = reduce(P, mode)
            for _ in range(50):
                Q = inflate(P, up, rng.randint(1, 4), rng)
                if not is_isotopic(reduce(Q, mode, rng), target):
                    bad += 1
                runs += 1
    elapsed = time.perf_counter() - t
    report(7, "random inflations reduce back to the same reduced form", bad == 0 and elapsed < 120,
           f"{runs} runs, {bad} mismatches, {elapsed:.1f} s")


def test_08_doubly_trivial_iff_ri_trivial(census, scrambles):
    bad = 0
    pool = list(census) + list(scrambles)
    for P in pool:
        both = reduce(P, "weak").trivial and reduce(P, "strong").trivial
        bad += both != reduce(P, "ri-only").trivial
    T = parse_gauss(TREFOIL)
    trefoil_ok = reduce(T, "weak").trivial and not reduce(T, "strong").trivial
    report(8, "weak- and strong-trivial iff RI-trivial", bad == 0 and trefoil_ok,
           f"{len(pool)} projections, {bad} violations, trefoil weak-only trivial: {trefoil_ok}")


def test_09_strictness(census):
    seven = [P for P in census if P.n == 7]
    by_tree = Counter(non_seifert_resolve(P).ahu for P in seven)
    shared = any(k > 1 for k in by_tree.values())
    trees_by_count: dict[int, set] = {}
    for P in census:
        A = non_seifert_resolve(P)
        trees_by_count.setdefault(A.circles, set()).add(A.ahu)
    split = any(len(v) > 1 for v in trees_by_count.values())
    report(9, "arrangement is not complete and is finer than the circle number",
           shared and split, f"n=7 shared trees: {shared}, same count different tree: {split}")


def test_10_realization():
    t = time.perf_counter()
    odd = [c for m in range(1, 6) for c in trees_with_edges(m) if m % 2]
    even = [c for m in range(1, 6) for c in trees_with_edges(m) if m % 2 == 0]
    from shadowkit import parse_tree

    failures = 0
    for code in odd:
        P = realize_prime(parse_tree(code))
        failures += not (is_prime(P) and non_seifert_resolve(P).ahu == code)
    rejected = 0
    for code in even:
        try:
            realize_prime(parse_tree(code))
        except RealizationFailed:
            rejected += 1
    elapsed = time.perf_counter() - t
    ok = failures == 0 and len(odd) + len(even) == 13 and rejected == len(even) and elapsed < 30
    report(10, "prime realization of every tree with at most 5 edges", ok,
           f"{len(odd)} odd-edge trees realized, {failures} failures; "
           f"{rejected}/{len(even)} even-edge trees rejected as unrealizable; {elapsed:.1f} s")


def test_11_incoherent_bigon_bound(census, scrambles):
    pool = list(census) + list(scrambles) + list(gadget_library().fixtures.values())
    with_bigon = [P for P in pool if any(f.kind == INCOHERENT for f in P.faces)]
    bad = [P for P in with_bigon if circle_number(P) < 3]
    report(11, "an incoherent 2-gon forces at least three circles", not bad and with_bigon,
           f"{len(with_bigon)} projections with one, {len(bad)} violations")


if __name__ == "__main__":
    import pytest

    raise SystemExit(pytest.main([__file__, "-q"]))
