"""Realising circle arrangements by (prime) knot projections.

Any tree with an odd number ``m`` of edges is the circle arrangement of a
projection built from O by connected sums with two gadgets whose
arrangements are the two trees with three edges.  Peeling the target tree
two edges at a time (a pair of sibling leaves, or a leaf hanging from a
degree-two vertex) down to a single edge gives the order of the sums.
Necks left by the sums are removed with ``s2a`` (preceded by ``1a`` when the
two arcs have the face on opposite sides), which keeps the arrangement.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .circles import (
    CircleArrangement,
    ahu_code,
    glue_trees,
    non_seifert_resolve,
    parse_tree,
)
from .errors import RealizationFailed
from .moves import apply_move, find_moves
from .projection import (
    Arc,
    KnotProjection,
    TRIVIAL,
    canonical_code,
    closed_intervals,
    connected_sum,
    is_prime,
    parse_gauss,
)

FIXTURES = {
    "O": "0;;",
    "3_1": "3; 1 2 3 1 2 3; + - +",
    "4_1": "4; 1 2 3 1 4 3 2 4; + + - +",
    "5_1": "5; 1 2 3 4 5 1 2 3 4 5; + - + - +",
    "5_2": "5; 1 2 3 1 4 5 2 3 5 4; + - + + -",
}


@dataclass(frozen=True)
class Attachment:
    """Where a connected sum can be made and what it does to the tree."""

    arc: Arc
    circle: int
    region: int


@dataclass
class GadgetLibrary:
    fixtures: dict[str, KnotProjection]
    arrangements: dict[str, CircleArrangement] = field(default_factory=dict)
    attachments: dict[str, list[Attachment]] = field(default_factory=dict)

    def gadget_for(self, code: str) -> str:
        for name in ("3_1", "6_3"):
            if self.arrangements[name].ahu == code:
                return name
        raise KeyError(code)


def attachments(P: KnotProjection) -> list[Attachment]:
    """One representative arc per (circle, region) incidence of tau(P)."""
    A = non_seifert_resolve(P)
    if P.trivial:
        return [Attachment(Arc(0, "L"), 0, 0), Attachment(Arc(0, "R"), 0, 1)]
    seen = {}
    for arc in P.arcs():
        d = P.dart_of(arc)
        key = (A.circle_of[d], A.region_of[P.face_of(d)])
        seen.setdefault(key, Attachment(arc, *key))
    return [seen[k] for k in sorted(seen)]


def _find_six3_role() -> KnotProjection:
    """The 6-crossing prime 1-gon-free projection whose 3-circle tree is not the trefoil's."""
    from .census import enumerate_projections

    trefoil = non_seifert_resolve(parse_gauss(FIXTURES["3_1"])).ahu
    hits = [P for P in enumerate_projections(6, prime=True, no_onegon=True, nmin=6)
            if non_seifert_resolve(P).circles == 3 and non_seifert_resolve(P).ahu != trefoil]
    if len(hits) != 1:
        raise RealizationFailed(f"expected one 6_3-role projection, found {len(hits)}")
    return hits[0]


@lru_cache(maxsize=None)
def gadget_library() -> GadgetLibrary:
    fixtures = {name: parse_gauss(code) for name, code in FIXTURES.items()}
    fixtures["6_3"] = _find_six3_role()
    lib = GadgetLibrary(fixtures)
    for name, P in fixtures.items():
        lib.arrangements[name] = non_seifert_resolve(P)
        lib.attachments[name] = attachments(P)
    return lib


# ---------------------------------------------------------------------------
# tree peeling


def _as_edges(tree) -> list[tuple[int, int]]:
    if isinstance(tree, str):
        return parse_tree(tree)
    if isinstance(tree, CircleArrangement):
        return list(tree.edges)
    return [tuple(e) for e in tree]


def peel(edges) -> list[list[tuple[int, int]]]:
    """Trees ``T_0 = T, T_1, ..., T_k`` with ``T_k`` a single edge.

    Each step deletes two sibling leaves or a leaf together with its
    degree-two neighbour.
    """
    edges = [tuple(e) for e in edges]
    if len(edges) % 2 == 0:
        raise RealizationFailed("circle arrangements have an odd number of circles")
    chain = [edges]
    while len(edges) > 1:
        adj: dict[int, set[int]] = {}
        for a, b in edges:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        drop = None
        for v in sorted(adj):
            leaves = sorted(w for w in adj[v] if len(adj[w]) == 1)
            if len(leaves) >= 2:
                drop = set(leaves[:2])
                break
        if drop is None:
            for v in sorted(adj):
                if len(adj[v]) == 1:
                    (u,) = adj[v]
                    if len(adj[u]) == 2:
                        drop = {v, u}
                        break
        if drop is None:
            raise RealizationFailed("no removable leaf pair; input is not a tree")
        edges = [e for e in edges if not set(e) & drop]
        chain.append(edges)
    return chain


# ---------------------------------------------------------------------------
# construction


def _grow(P: KnotProjection, target: str, lib: GadgetLibrary) -> KnotProjection:
    """One connected sum with a gadget taking tau(P) to the tree ``target``."""
    A = non_seifert_resolve(P)
    if P.trivial:
        return lib.fixtures[lib.gadget_for(target)]
    for site in attachments(P):
        for name in ("3_1", "6_3"):
            G = lib.arrangements[name]
            for att in lib.attachments[name]:
                glued = glue_trees(A.edges, site.circle, site.region,
                                   G.edges, att.circle, att.region)
                if ahu_code(glued) != target:
                    continue
                R = connected_sum(P, site.arc, lib.fixtures[name], att.arc)
                if non_seifert_resolve(R).ahu != target:
                    raise RealizationFailed("gluing prediction disagrees with tau")
                return R
    raise RealizationFailed(f"no gadget sum reaches {target}")


def realize_arrangement(tree) -> KnotProjection:
    """A projection P with tau(P) isomorphic to ``tree``.

    ``tree`` may be an edge list, a nested-parentheses string or a
    :class:`CircleArrangement`.
    """
    return _realize(_as_edges(tree), prime=False)


def realize_prime(tree) -> KnotProjection:
    """A prime projection P with tau(P) isomorphic to ``tree``."""
    P = _realize(_as_edges(tree), prime=True)
    if not is_prime(P):
        raise RealizationFailed("result is not prime")
    return P


def _realize(edges, prime: bool) -> KnotProjection:
    if not edges:
        raise RealizationFailed("tree must have at least one edge")
    lib = gadget_library()
    chain = peel(edges)
    P = TRIVIAL
    for T in reversed(chain[:-1]):
        P = _grow(P, ahu_code(T), lib)
        if prime:
            P = primify(P)
    if prime and P.trivial:
        P = primify(P)
    if non_seifert_resolve(P).ahu != ahu_code(edges):
        raise RealizationFailed("recomputed arrangement differs from the target")
    return P


# ---------------------------------------------------------------------------
# primification


@lru_cache(maxsize=None)
def _inflated_trivial() -> tuple[KnotProjection, tuple]:
    """4_1 reached from O by 1a and s2a moves (breadth-first)."""
    goal = gadget_library().fixtures["4_1"]
    code = canonical_code(goal)
    queue = deque([(TRIVIAL, ())])
    seen = {canonical_code(TRIVIAL)}
    while queue:
        P, path = queue.popleft()
        for site in find_moves(P, {"1a", "s2a"}):
            Q = apply_move(P, site)
            c = canonical_code(Q)
            if Q.n > goal.n or c in seen:
                continue
            if c == code:
                return Q, path + (site,)
            seen.add(c)
            queue.append((Q, path + (site,)))
    raise RealizationFailed("4_1 not reachable by 1a/s2a")


def _neck_candidates(P: KnotProjection, start: int, length: int):
    m = 2 * P.n
    inside = {(start + i) % m for i in range(length)}
    necks = {(start - 1) % m, (start + length - 1) % m}

    def part(e):
        a, b = e in inside, (e + 1) % m in inside
        return "in" if a and b else "out" if not a and not b else "neck"

    faces = {P.face_of(P.dart_of((e, s))) for e in necks for s in ("L", "R")}
    strict, loose = [], []
    for f in sorted(faces):
        arcs = [P.arc_of(d) for d in P.faces[f].darts]
        for a1 in arcs:
            for a2 in arcs:
                if a1.edge == a2.edge:
                    continue
                p1, p2 = part(a1.edge), part(a2.edge)
                if p1 == "in" and p2 == "out":
                    strict.append((a1, a2))
                elif p1 != p2 and "out" != p1 and "in" != p2:
                    loose.append((a1, a2))
    return strict + loose


def _neck_move(P: KnotProjection, a1: Arc, a2: Arc) -> KnotProjection:
    """``s2a`` on the two arcs, or ``1a`` on ``a1`` followed by ``s2a``."""
    if a1.side == a2.side:
        return apply_move(P, _site("s2a", P, a1, a2))
    Q = apply_move(P, _site("1a", P, a1))
    loop = Arc(a1.edge + 1, a2.side)
    e2 = a2.edge + 2 if a2.edge > a1.edge else a2.edge
    return apply_move(Q, _site("s2a", Q, loop, Arc(e2, a2.side)))


def _site(kind, P, *arcs):
    from .moves import MoveSite

    face = P.face_of(P.dart_of(arcs[0]))
    return MoveSite(kind, face, tuple(sorted(arcs)) if len(arcs) > 1 else arcs)


def primify(P: KnotProjection) -> KnotProjection:
    """A prime projection strongly (1, 2) homotopic to ``P``.

    Only ``1a`` and ``s2a`` moves are used.  The trivial projection becomes
    the 4_1 projection.
    """
    if P.trivial:
        return _inflated_trivial()[0]
    while True:
        intervals = closed_intervals(P.word)
        if not intervals:
            return P
        start, length = min(intervals, key=lambda iv: (iv[1], iv[0]))
        best = None
        for a1, a2 in _neck_candidates(P, start, length):
            Q = _neck_move(P, a1, a2)
            score = len(closed_intervals(Q.word))
            if best is None or score < best[0]:
                best = (score, Q)
                if score == 0:
                    break
        if best is None or best[0] >= len(intervals):
            raise RealizationFailed("could not remove a connected-sum neck")
        P = best[1]


__all__ = [
    "FIXTURES",
    "GadgetLibrary",
    "gadget_library",
    "attachments",
    "peel",
    "realize_arrangement",
    "realize_prime",
    "primify",
]
