"""Circle invariants: non-Seifert resolution, circle arrangements, X(P).

Resolving every double point of a projection by the smoothing that does
*not* respect an orientation of the curve leaves a family of disjoint
simple closed curves on the sphere.  Their incidence structure is a tree
whose vertices are the complementary regions and whose edges are the
circles; that tree, up to isomorphism, is the circle arrangement.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .projection import KnotProjection

__all__ = [
    "CircleArrangement",
    "non_seifert_resolve",
    "circle_number",
    "arrangement_name",
    "x_invariant",
    "interlaced_pairs",
    "ahu_code",
    "trees_with_edges",
    "glue_trees",
    "parse_tree",
    "tree_to_parens",
    "arrangement_dot",
]


@dataclass(frozen=True)
class CircleArrangement:
    """Region/circle incidence tree of a resolved projection.

    ``edges[c]`` is the pair of regions on the two sides of circle ``c``.
    ``circle_of[d]`` is the circle through dart ``d`` and ``region_of[f]``
    the region containing face ``f`` of the source projection; both are
    empty for the trivial projection.
    """

    edges: tuple[tuple[int, int], ...]
    circle_of: tuple[int, ...] = ()
    region_of: tuple[int, ...] = ()

    @property
    def circles(self) -> int:
        return len(self.edges)

    @property
    def regions(self) -> int:
        return len(self.edges) + 1

    @cached_property
    def ahu(self) -> str:
        return ahu_code(self.edges)

    @property
    def ahu_bytes(self) -> bytes:
        return self.ahu.encode("ascii")

    @property
    def name(self) -> str:
        return arrangement_name(self)

    def isomorphic(self, other: "CircleArrangement") -> bool:
        return self.ahu == other.ahu


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def smoothing_partner(P: KnotProjection) -> list[int]:
    """Pairing of darts at each double point made by the non-Seifert smoothing.

    The two incoming half-edges are joined, and so are the two outgoing
    ones.  Reversing the curve swaps "incoming" and "outgoing", so the
    pairing does not depend on the chosen orientation.
    """
    beta = [0] * (4 * P.n)
    for p1, p2 in P.positions:
        beta[2 * p1], beta[2 * p2] = 2 * p2, 2 * p1
        beta[2 * p1 + 1], beta[2 * p2 + 1] = 2 * p2 + 1, 2 * p1 + 1
    return beta


def non_seifert_resolve(P: KnotProjection) -> CircleArrangement:
    if P.trivial:
        return CircleArrangement(((0, 1),))
    m = 4 * P.n
    beta = smoothing_partner(P)
    sigma = P.sigma

    circle_of = [-1] * m
    count = 0
    for start in range(m):
        if circle_of[start] >= 0:
            continue
        d = start
        while circle_of[d] < 0:
            circle_of[d] = count
            e = P.alpha(d)
            circle_of[e] = count
            d = beta[e]
        count += 1

    # a smoothing keeps the two corners it hugs apart and merges the other two
    nfaces = len(P.faces)
    uf = _UnionFind(nfaces)
    for p1, p2 in P.positions:
        merged = [P.face_of(sigma[x]) for x in (2 * p1, 2 * p1 + 1, 2 * p2, 2 * p2 + 1)
                  if beta[x] != sigma[x]]
        assert len(merged) == 2
        uf.union(*merged)
    roots = sorted({uf.find(f) for f in range(nfaces)})
    index = {r: i for i, r in enumerate(roots)}
    region_of = tuple(index[uf.find(f)] for f in range(nfaces))

    edges: list = [None] * count
    for d in range(m):
        pair = (region_of[P.face_of(d)], region_of[P.face_of(P.alpha(d))])
        c = circle_of[d]
        if edges[c] is None:
            edges[c] = pair
        elif set(edges[c]) != set(pair):
            raise AssertionError("circle separates more than two regions")
    if len(roots) != count + 1 or not _is_tree(edges, count + 1):
        raise AssertionError("region/circle incidence is not a tree")
    return CircleArrangement(tuple(tuple(e) for e in edges), tuple(circle_of), region_of)


def circle_number(P: KnotProjection) -> int:
    return non_seifert_resolve(P).circles


def _is_tree(edges: Sequence[tuple[int, int]], nvert: int) -> bool:
    if len(edges) != nvert - 1:
        return False
    uf = _UnionFind(nvert)
    for a, b in edges:
        if uf.find(a) == uf.find(b):
            return False
        uf.union(a, b)
    return True


# ---------------------------------------------------------------------------
# AHU canonical form


def _adjacency(edges: Iterable[tuple[int, int]]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def tree_centers(edges: Sequence[tuple[int, int]]) -> list[int]:
    adj = _adjacency(edges)
    if not adj:
        return [0]
    degree = {v: len(nb) for v, nb in adj.items()}
    layer = [v for v, k in degree.items() if k <= 1]
    remaining = len(adj)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(adj: dict[int, list[int]], root: int) -> str:
    # iterative post-order; trees from long scrambles can be deep
    order, parent = [], {root: None}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj.get(v, ()):
            if w != parent[v]:
                parent[w] = v
                stack.append(w)
    code: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code[w] for w in adj.get(v, ()) if w != parent[v])
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def ahu_code(edges: Sequence[tuple[int, int]]) -> str:
    """Canonical parenthesis string of an unrooted tree.

    The tree is rooted at its center; for a bicentral tree both centers are
    tried and the lexicographically least string is kept.
    """
    adj = _adjacency(edges)
    return min(_rooted_code(adj, c) for c in tree_centers(edges))


@lru_cache(maxsize=None)
def trees_with_edges(m: int) -> tuple[str, ...]:
    """AHU codes of all unlabeled trees with ``m`` edges, sorted."""
    import networkx as nx

    if m < 1:
        raise ValueError("a circle arrangement has at least one circle")
    codes = {ahu_code(list(T.edges())) for T in nx.nonisomorphic_trees(m + 1)}
    return tuple(sorted(codes))


NAMING_LIMIT = 13


def _letters(i: int) -> str:
    s = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        s = chr(ord("a") + r) + s
    return s


def arrangement_name(A: CircleArrangement | str) -> str:
    """``"<m><letters>"``: circle count and rank of the AHU code among trees.

    This is a deterministic naming scheme of our own; it does not reproduce
    any published lettering.  Beyond ``NAMING_LIMIT`` circles the rank is
    not computed and the name is ``"<m>*"``.
    """
    code = ahu_code(parse_tree(A)) if isinstance(A, str) else A.ahu
    m = code.count("(") - 1
    if m > NAMING_LIMIT:
        return f"{m}*"
    return f"{m}{_letters(trees_with_edges(m).index(code))}"


def glue_trees(a_edges, a_circle: int, a_region: int, b_edges, b_circle: int, b_region: int):
    """Identify circle ``a_circle`` of one tree with ``b_circle`` of another.

    Region ``a_region`` (an end of ``a_circle``) is identified with
    ``b_region`` (an end of ``b_circle``) and the two other ends with each
    other.  Returns the edge list of the glued tree.
    """
    a0, a1 = a_edges[a_circle]
    b0, b1 = b_edges[b_circle]
    if a_region not in (a0, a1) or b_region not in (b0, b1):
        raise ValueError("region is not an end of the circle")
    a_other = a1 if a_region == a0 else a0
    b_other = b1 if b_region == b0 else b0
    nb = len(b_edges) + 1
    offset = len(a_edges) + 1

    def rename(v):
        if v == b_region:
            return a_region
        if v == b_other:
            return a_other
        return offset + v

    edges = list(a_edges)
    edges += [(rename(x), rename(y)) for i, (x, y) in enumerate(b_edges) if i != b_circle]
    # compact vertex ids
    used = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(used)}
    assert len(used) == len(a_edges) + nb - 1
    return [(index[x], index[y]) for x, y in edges]


# ---------------------------------------------------------------------------
# tree text formats


def parse_tree(text: str) -> list[tuple[int, int]]:
    """Edge list from a nested-parentheses rooted tree, e.g. ``"(()(()))"``."""
    text = "".join(text.split())
    edges: list[tuple[int, int]] = []
    stack: list[int] = []
    count = 0
    for i, ch in enumerate(text):
        if ch == "(":
            if stack:
                edges.append((stack[-1], count))
            elif count:
                raise ValueError("more than one root")
            stack.append(count)
            count += 1
        elif ch == ")":
            if not stack:
                raise ValueError(f"unbalanced ')' at offset {i}")
            stack.pop()
        else:
            raise ValueError(f"unexpected character {ch!r}")
    if stack or not count:
        raise ValueError("unbalanced tree specification")
    return edges


def tree_to_parens(edges) -> str:
    return ahu_code(edges)


def arrangement_dot(A: CircleArrangement, name: str = "arrangement") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for r in range(A.regions):
        lines.append(f'  r{r} [label="R{r}"];')
    for c, (a, b) in enumerate(A.edges):
        lines.append(f'  r{a} -- r{b} [label="c{c}"];')
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# chord interlacement


def interlaced_pairs(P: KnotProjection) -> list[tuple[int, int]]:
    """Pairs of chords of the Gauss diagram whose endpoints alternate."""
    pos = P.positions
    out = []
    for i in range(P.n):
        a1, a2 = pos[i]
        for j in range(i + 1, P.n):
            b1, b2 = pos[j]
            if (a1 < b1 < a2) != (a1 < b2 < a2):
                out.append((i, j))
    return out


def x_invariant(P: KnotProjection) -> tuple[int, int]:
    x = len(interlaced_pairs(P))
    return x, x % 2
