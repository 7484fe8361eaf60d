"""Flat Reidemeister moves, reduced forms and (1, 2) homotopy deciders.

Move kinds
----------
``1a``/``1b``   add/remove a kink (one-gon);
``s2a``/``s2b`` add/remove a coherent 2-gon (strong RII);
``w2a``/``w2b`` add/remove an incoherent 2-gon (weak RII);
``r3``          flat RIII across a triangle with three distinct vertices.

Decreasing sites are faces.  A ``1a`` site is an arc (edge and side); a
second-move site is an unordered pair of arcs of distinct edges bounding a
common face.  Pushing one of the two arcs across the other through that
face creates a coherent 2-gon exactly when the face lies on the same side
of both arcs, so the kind of a pair is fixed by the pair itself.
"""
from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import StaleSite
from .projection import (
    COHERENT,
    FULL,
    INCOHERENT,
    ONE_GON,
    ORIENTED,
    TRIANGLE,
    Arc,
    KnotProjection,
    TRIVIAL,
    _Draft,
    canonical_code,
    is_isotopic,
)

KINDS = ("1a", "1b", "s2a", "s2b", "w2a", "w2b", "r3")
INCREASING = ("1a", "s2a", "w2a")
DECREASING = ("1b", "s2b", "w2b")
DELTA = {"1a": 1, "1b": -1, "s2a": 2, "s2b": -2, "w2a": 2, "w2b": -2, "r3": 0}
INVERSE = {"1a": "1b", "1b": "1a", "s2a": "s2b", "s2b": "s2a",
           "w2a": "w2b", "w2b": "w2a", "r3": "r3"}

ALPHABETS = {
    "weak": ("1b", "w2b"),
    "strong": ("1b", "s2b"),
    "full-12": ("1b", "s2b", "w2b"),
    "ri-only": ("1b",),
}
_MODE_ALIASES = {"full": "full-12", "ri": "ri-only"}

_FACE_KIND = {ONE_GON: "1b", COHERENT: "s2b", INCOHERENT: "w2b", TRIANGLE: "r3"}


class MoveSite(NamedTuple):
    kind: str
    face: int | None
    arcs: tuple[Arc, ...] = ()


class TraceStep(NamedTuple):
    kind: str
    site: MoveSite
    code: str
    result: KnotProjection


def _flip(side: str) -> str:
    return "L" if side == "R" else "R"


def find_moves(P: KnotProjection, kinds: Iterable[str] = KINDS) -> list[MoveSite]:
    """All sites of the requested kinds, in a deterministic order."""
    kinds = set(kinds)
    unknown = kinds - set(KINDS)
    if unknown:
        raise ValueError(f"unknown move kinds {sorted(unknown)}")
    sites: list[MoveSite] = []
    for f in P.faces:
        k = _FACE_KIND.get(f.kind)
        if k in kinds:
            sites.append(MoveSite(k, f.id))
    if "1a" in kinds:
        for arc in P.arcs():
            face = None if P.trivial else P.face_of(P.dart_of(arc))
            sites.append(MoveSite("1a", face, (arc,)))
    if kinds & {"s2a", "w2a"}:
        for f in P.faces:
            ds = sorted(f.darts)
            for i, d1 in enumerate(ds):
                for d2 in ds[i + 1:]:
                    a1, a2 = P.arc_of(d1), P.arc_of(d2)
                    if a1.edge == a2.edge:
                        continue
                    k = "s2a" if a1.side == a2.side else "w2a"
                    if k in kinds:
                        sites.append(MoveSite(k, f.id, tuple(sorted((a1, a2)))))
    return sites


def _check_site(P: KnotProjection, site: MoveSite) -> None:
    kind = site.kind
    if kind in _FACE_KIND.values():
        if site.face is None or not 0 <= site.face < len(P.faces) or \
                _FACE_KIND.get(P.faces[site.face].kind) != kind:
            raise StaleSite(f"{site} is not a site of this projection")
        return
    if kind == "1a":
        if len(site.arcs) != 1:
            raise StaleSite("1a takes exactly one arc")
        P.dart_of(site.arcs[0])
        return
    if kind in ("s2a", "w2a"):
        if len(site.arcs) != 2:
            raise StaleSite(f"{kind} takes two arcs")
        (e1, s1), (e2, s2) = site.arcs
        d1, d2 = P.dart_of(site.arcs[0]), P.dart_of(site.arcs[1])
        if P.trivial or e1 == e2 or P.face_of(d1) != P.face_of(d2):
            raise StaleSite("arcs must be distinct edges on a common face")
        if (s1 == s2) != (kind == "s2a"):
            raise StaleSite(f"these arcs admit the other kind of second move, not {kind}")
        return
    raise StaleSite(f"unknown move kind {kind!r}")


def apply_move(P: KnotProjection, site: MoveSite) -> KnotProjection:
    _check_site(P, site)
    kind = site.kind
    if kind in ("1b", "s2b", "w2b"):
        draft = _Draft.of(P)
        for v in set(P.faces[site.face].vertices):
            draft.remove_vertex(v)
        return draft.build()
    if kind == "r3":
        draft = _Draft.of(P)
        m = 2 * P.n
        for d in P.faces[site.face].darts:
            e = P.edge_of(d)
            j = (e + 1) % m
            draft.seq[e], draft.seq[j] = draft.seq[j], draft.seq[e]
        return draft.build()
    if kind == "1a":
        return _add_kink(P, site.arcs[0])
    return _add_bigon(P, *site.arcs)


def _add_kink(P: KnotProjection, arc: Arc) -> KnotProjection:
    edge, side = arc
    if P.trivial:
        return KnotProjection((0, 0), (-1 if side == "L" else 1,))
    draft = _Draft.of(P)
    k1, k2 = ("kink", 1), ("kink", 2)
    draft.insert_after(edge, k1, k2)
    draft.vertex[k1] = draft.vertex[k2] = "kink"
    if side == "L":
        cyc = ((k1, 0), (k2, 1), (k1, 1), (k2, 0))
    else:
        cyc = ((k1, 0), (k2, 0), (k1, 1), (k2, 1))
    draft.rot["kink"] = cyc
    return draft.build()


def _reverse_cycle(c):
    return (c[0], c[3], c[2], c[1])


def _add_bigon(P: KnotProjection, arc1: Arc, arc2: Arc) -> KnotProjection:
    # Local frame: arc1 runs east with the common face to its north; a finger
    # of arc1 rises across arc2 at x, then returns across it at y.
    (e1, s1), (e2, s2) = arc1, arc2
    mirrored = s1 == "R"
    east = (s2 if not mirrored else _flip(s2)) == "R"
    x1, y1, x2, y2 = ("x", 1), ("y", 1), ("x", 2), ("y", 2)
    if east:
        cx = ((x1, 0), (x2, 1), (x1, 1), (x2, 0))
        cy = ((y1, 0), (y2, 0), (y1, 1), (y2, 1))
    else:
        cx = ((x1, 0), (x2, 0), (x1, 1), (x2, 1))
        cy = ((y1, 0), (y2, 1), (y1, 1), (y2, 0))
    if mirrored:
        cx, cy = _reverse_cycle(cx), _reverse_cycle(cy)
    draft = _Draft.of(P)
    draft.insert_after(e1, x1, y1)
    draft.insert_after(e2, *((x2, y2) if east else (y2, x2)))
    draft.vertex.update({x1: "x", x2: "x", y1: "y", y2: "y"})
    draft.rot["x"], draft.rot["y"] = cx, cy
    return draft.build()


def inverse_site(P: KnotProjection, site: MoveSite) -> tuple[KnotProjection, MoveSite]:
    """Apply ``site`` and locate a site of the inverse kind that undoes it."""
    Q = apply_move(P, site)
    target = canonical_code(P, ORIENTED)
    for back in find_moves(Q, {INVERSE[site.kind]}):
        if canonical_code(apply_move(Q, back), ORIENTED) == target:
            return Q, back
    raise AssertionError(f"no inverse for {site}")


# ---------------------------------------------------------------------------
# reduction


def _alphabet(mode: str) -> tuple[str, ...]:
    mode = _MODE_ALIASES.get(mode, mode)
    try:
        return ALPHABETS[mode]
    except KeyError:
        raise ValueError(f"unknown reduction mode {mode!r}") from None


def reduction_steps(P: KnotProjection, mode: str, rng: random.Random | None = None
                    ) -> Iterator[TraceStep]:
    """Greedy decreasing moves; yields one step per move applied.

    Without ``rng`` the lowest face id is taken at every step.
    """
    kinds = _alphabet(mode)
    while True:
        sites = find_moves(P, kinds)
        if not sites:
            return
        site = rng.choice(sites) if rng else min(sites, key=lambda s: s.face)
        P = apply_move(P, site)
        yield TraceStep(site.kind, site, canonical_code(P).hex(), P)


def reduce(P: KnotProjection, mode: str = "full-12", rng: random.Random | None = None
           ) -> KnotProjection:
    """Reduced form of ``P`` for ``mode`` in {weak, strong, full-12, ri-only}."""
    for step in reduction_steps(P, mode, rng):
        P = step.result
    return P


def weak_equiv(P: KnotProjection, Q: KnotProjection) -> bool:
    return is_isotopic(reduce(P, "weak"), reduce(Q, "weak"))


def strong_equiv(P: KnotProjection, Q: KnotProjection) -> bool:
    return is_isotopic(reduce(P, "strong"), reduce(Q, "strong"))


def full_equiv(P: KnotProjection, Q: KnotProjection) -> bool:
    return is_isotopic(reduce(P, "full-12"), reduce(Q, "full-12"))


# ---------------------------------------------------------------------------
# random rewriting


def random_moves(P: KnotProjection, kinds: Sequence[str], steps: int,
                 rng: random.Random) -> KnotProjection:
    """Apply ``steps`` moves, each drawn uniformly among a random kind's sites."""
    kinds = list(kinds)
    for _ in range(steps):
        pool = list(kinds)
        rng.shuffle(pool)
        for kind in pool:
            sites = find_moves(P, {kind})
            if sites:
                P = apply_move(P, rng.choice(sites))
                break
    return P


def inflate(P: KnotProjection, kinds: Sequence[str], steps: int,
            rng: random.Random) -> KnotProjection:
    if set(kinds) - set(INCREASING):
        raise ValueError("inflate only uses increasing moves")
    return random_moves(P, kinds, steps, rng)


# ---------------------------------------------------------------------------
# connection search


def _count_onegons(P: KnotProjection) -> int:
    return sum(f.kind == ONE_GON for f in P.faces)


def _search_up(src: KnotProjection, dst: KnotProjection, kind: str, budget: int):
    k = dst.n - src.n - 2
    if k < 0 or k > budget:
        return None
    goal = canonical_code(dst, FULL)
    goal_onegons = _count_onegons(dst)
    start = (src, 0, False)
    seen = {(canonical_code(src, FULL), 0, False)}
    queue = deque([(start, [])])
    while queue:
        (P, ones, used), path = queue.popleft()
        if ones == k and used:
            if canonical_code(P, FULL) == goal:
                return path
            continue
        moves = []
        if ones < k:
            moves += [(s, ones + 1, used) for s in find_moves(P, {"1a"})]
        if not used:
            moves += [(s, ones, True) for s in find_moves(P, {kind})]
        for site, nones, nused in moves:
            Q = apply_move(P, site)
            # a single second move destroys at most two one-gons; 1a never lowers the count
            if _count_onegons(Q) - (0 if nused else 2) > goal_onegons:
                continue
            key = (canonical_code(Q, FULL), nones, nused)
            if key in seen:
                continue
            seen.add(key)
            queue.append(((Q, nones, nused), path + [site]))
    return None


def connect_search(P: KnotProjection, Q: KnotProjection, kind: str, budget: int = 2
                   ) -> list[MoveSite] | None:
    """Look for ``1a`` moves (at most ``budget``) plus one ``kind`` move joining P and Q.

    The search runs upward from the projection with fewer double points.
    Returns the move sequence, or ``None`` when nothing is found within the
    budget; ``None`` does not prove that no connection exists.
    """
    if kind not in ("s2a", "w2a"):
        raise ValueError("kind must be 's2a' or 'w2a'")
    if budget < 0:
        raise ValueError("budget must be non-negative")
    if P.n <= Q.n:
        return _search_up(P, Q, kind, budget)
    return _search_up(Q, P, kind, budget)


__all__ = [
    "KINDS",
    "MoveSite",
    "TraceStep",
    "find_moves",
    "apply_move",
    "inverse_site",
    "reduce",
    "reduction_steps",
    "weak_equiv",
    "strong_equiv",
    "full_equiv",
    "random_moves",
    "inflate",
    "connect_search",
    "TRIVIAL",
]
