r"""
Knot projections as combinatorial maps.

A projection with ``n`` double points is stored as its Gauss word (a cyclic
sequence of ``2n`` labels, each label used twice, first occurrences
increasing) together with one chirality sign per double point.  Word and
signs determine a rotation system, hence an embedding of the 4-regular
graph, and the embedding is accepted only if it lives on the sphere.

Darts
-----
Position ``p`` of the word carries two darts: ``2p`` (the half-edge on which
the curve *enters* the double point) and ``2p + 1`` (the half-edge on which
it *leaves*).  Thus ``strand_next(d) = d + 1 (mod 4n)`` and the edge
involution pairs ``2p + 1`` with ``2p + 2``.

Edge ``p`` runs from position ``p`` to position ``p + 1``.  The face traced
from dart ``2p + 1`` lies on the right of edge ``p`` (with respect to the
direction of the curve) and the face traced from dart ``2p + 2`` lies on its
left.  An :class:`Arc` ``(edge, side)`` is therefore just another name for a
dart.

Signs
-----
Let the first pass through double point ``k`` enter on ``f_in`` and leave on
``f_out``, the second enter on ``g_in`` and leave on ``g_out``.  Sign ``+1``
means the counterclockwise rotation is ``(f_in, g_in, f_out, g_out)``, sign
``-1`` means ``(f_in, g_out, f_out, g_in)``.  Flipping every sign is the
mirror image.

EXAMPLES::

    >>> P = parse_gauss("3; 1 2 3 1 2 3; + + +")
    >>> P.n, len(P.faces)
    (3, 5)
    >>> serialize_gauss(parse_gauss("0;;"))
    '0;;'
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidArc, MalformedCode, NotDoubleOccurrence, NotSpherical

__all__ = [
    "Arc",
    "Dart",
    "Face",
    "KnotProjection",
    "CanonicalCode",
    "TRIVIAL",
    "parse_gauss",
    "serialize_gauss",
    "faces",
    "canonical_code",
    "is_isotopic",
    "is_prime",
    "connected_sum",
    "mirror",
    "rebase",
    "to_record",
]

SIDES = ("L", "R")

ONE_GON = "one-gon"
COHERENT = "coherent-2-gon"
INCOHERENT = "incoherent-2-gon"
TRIANGLE = "triangle"
OTHER = "other"

FULL = "full"
ORIENTED = "oriented-sphere"
MODES = (FULL, ORIENTED)


class Arc(NamedTuple):
    """An edge together with one of its two sides ('L' or 'R')."""

    edge: int
    side: str


class Dart(NamedTuple):
    id: int
    vertex: int
    partner: int
    rotation_next: int
    strand_next: int


class Face(NamedTuple):
    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]
    kind: str

    @property
    def degree(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class KnotProjection:
    """Immutable knot projection on the 2-sphere.

    ``word`` uses 0-based labels whose first occurrences are increasing;
    ``signs[k]`` is the chirality of double point ``k``.  The empty word is
    the simple closed curve O.
    """

    word: tuple[int, ...] = ()
    signs: tuple[int, ...] = ()
    _face_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        word, signs = tuple(self.word), tuple(self.signs)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "signs", signs)
        n = len(signs)
        if len(word) != 2 * n:
            raise NotDoubleOccurrence(f"word has length {len(word)}, expected {2 * n}")
        counts = [0] * n
        for label in word:
            if not 0 <= label < n:
                raise NotDoubleOccurrence(f"label {label} out of range")
            counts[label] += 1
        if any(c != 2 for c in counts):
            raise NotDoubleOccurrence("every label must occur exactly twice")
        seen = 0
        for label in word:
            if label == seen:
                seen += 1
            elif label > seen:
                raise MalformedCode("first occurrences of labels must be increasing")
        if any(s not in (1, -1) for s in signs):
            raise MalformedCode("signs must be +1 or -1")
        face_of, count = _trace_faces(self.sigma, 4 * n)
        if n and count != n + 2:
            raise NotSpherical(
                f"V - E + F = {n} - {2 * n} + {count} = {count - n}, not 2"
            )
        object.__setattr__(self, "_face_of", face_of)

    @property
    def n(self) -> int:
        return len(self.signs)

    @property
    def trivial(self) -> bool:
        return not self.signs

    @cached_property
    def positions(self) -> tuple[tuple[int, int], ...]:
        """``positions[k] = (p1, p2)``, the two word positions of label ``k``."""
        pos: list[list[int]] = [[] for _ in range(self.n)]
        for p, label in enumerate(self.word):
            pos[label].append(p)
        return tuple((a, b) for a, b in pos)

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        """Counterclockwise rotation permutation on darts."""
        sig = [0] * (4 * self.n)
        for (p1, p2), s in zip(self.positions, self.signs):
            for cycle in (_rotation(p1, p2, s),):
                for i in range(4):
                    sig[cycle[i]] = cycle[(i + 1) % 4]
        return tuple(sig)

    def alpha(self, d: int) -> int:
        """Edge involution."""
        m = 4 * self.n
        return (d + 1) % m if d % 2 else (d - 1) % m

    def vertex_of(self, d: int) -> int:
        return self.word[d // 2]

    def face_of(self, d: int) -> int:
        return self._face_of[d]

    # arcs <-> darts
    def edge_of(self, d: int) -> int:
        m = 2 * self.n
        return d // 2 if d % 2 else (d // 2 - 1) % m

    def arc_of(self, d: int) -> Arc:
        return Arc(self.edge_of(d), "R" if d % 2 else "L")

    def dart_of(self, arc: Sequence) -> int:
        edge, side = arc
        m = 2 * self.n
        if side not in SIDES or not isinstance(edge, int) or not 0 <= edge < max(m, 1):
            raise InvalidArc(f"{tuple(arc)!r} is not an arc of a {self.n}-crossing projection")
        if self.trivial:
            return 1 if side == "R" else 0
        return 2 * edge + 1 if side == "R" else (2 * edge + 2) % (2 * m)

    def arcs(self) -> list[Arc]:
        return [Arc(e, s) for e in range(max(2 * self.n, 1)) for s in SIDES]

    @cached_property
    def darts(self) -> tuple[Dart, ...]:
        m = 4 * self.n
        return tuple(
            Dart(d, self.vertex_of(d), self.alpha(d), self.sigma[d], (d + 1) % m)
            for d in range(m)
        )

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        if self.trivial:
            return ()
        orbits: dict[int, list[int]] = {}
        for d, f in enumerate(self._face_of):
            orbits.setdefault(f, []).append(d)
        result = []
        for f in range(len(orbits)):
            start = orbits[f][0]
            cycle = [start]
            d = self.sigma[self.alpha(start)]
            while d != start:
                cycle.append(d)
                d = self.sigma[self.alpha(d)]
            verts = tuple(self.vertex_of(x) for x in cycle)
            result.append(Face(f, tuple(cycle), verts, self._classify(cycle, verts)))
        return tuple(result)

    def _classify(self, cycle, verts) -> str:
        k = len(cycle)
        distinct = len(set(verts))
        if k == 1:
            return ONE_GON
        if k == 2 and distinct == 2:
            # both bounding edges run a -> b along the curve: pattern ab..ab
            ends = {self._edge_ends(self.edge_of(d)) for d in cycle}
            return INCOHERENT if len(ends) == 1 else COHERENT
        if k == 3 and distinct == 3:
            return TRIANGLE
        return OTHER

    def _edge_ends(self, e: int) -> tuple[int, int]:
        return self.word[e], self.word[(e + 1) % (2 * self.n)]

    def __str__(self) -> str:
        return serialize_gauss(self)



def _rotation(p1: int, p2: int, s: int) -> tuple[int, int, int, int]:
    if s > 0:
        return (2 * p1, 2 * p2, 2 * p1 + 1, 2 * p2 + 1)
    return (2 * p1, 2 * p2 + 1, 2 * p1 + 1, 2 * p2)


def _trace_faces(sigma: Sequence[int], m: int) -> tuple[tuple[int, ...], int]:
    face_of = [-1] * m
    count = 0
    for start in range(m):
        if face_of[start] >= 0:
            continue
        d = start
        while face_of[d] < 0:
            face_of[d] = count
            a = d + 1 if d % 2 else d - 1
            d = sigma[a % m]
        count += 1
    return tuple(face_of), count


def is_spherical(word: Sequence[int], signs: Sequence[int]) -> bool:
    """Fast Euler-characteristic test for a (word, signs) pair."""
    n = len(signs)
    if n == 0:
        return True
    pos: list[list[int]] = [[] for _ in range(n)]
    for p, label in enumerate(word):
        pos[label].append(p)
    sig = [0] * (4 * n)
    for (p1, p2), s in zip(pos, signs):
        c = _rotation(p1, p2, s)
        sig[c[0]], sig[c[1]], sig[c[2]], sig[c[3]] = c[1], c[2], c[3], c[0]
    return _trace_faces(sig, 4 * n)[1] == n + 2


TRIVIAL = KnotProjection()


# ---------------------------------------------------------------------------
# text format

_CODE_RE = re.compile(r"^\s*(\d+)\s*;([^;]*);([^;]*)$")


def parse_gauss(text: str) -> KnotProjection:
    """Parse ``"n; w_1 ... w_2n; s_1 ... s_n"`` (labels 1-based)."""
    m = _CODE_RE.match(text)
    if not m:
        raise MalformedCode(f"cannot parse Gauss code {text!r}")
    n = int(m.group(1))
    try:
        word = [int(t) for t in m.group(2).split()]
    except ValueError:
        raise MalformedCode(f"non-integer label in {text!r}") from None
    signs = m.group(3).split()
    if len(signs) == 1 and n > 1 and set(signs[0]) <= {"+", "-"}:
        signs = list(signs[0])
    if len(signs) != n or any(s not in ("+", "-") for s in signs):
        raise MalformedCode(f"expected {n} signs from {{+,-}} in {text!r}")
    if any(not 1 <= w <= n for w in word):
        raise MalformedCode(f"labels must lie in 1..{n}")
    if len(word) != 2 * n:
        raise NotDoubleOccurrence(f"expected {2 * n} labels, got {len(word)}")
    return KnotProjection(tuple(w - 1 for w in word), tuple(1 if s == "+" else -1 for s in signs))


def format_gauss(word: Sequence[int], signs: Sequence[int]) -> str:
    n = len(signs)
    if n == 0:
        return "0;;"
    w = " ".join(str(x + 1) for x in word)
    s = " ".join("+" if x > 0 else "-" for x in signs)
    return f"{n}; {w}; {s}"


def serialize_gauss(P: KnotProjection) -> str:
    """Deterministic Gauss code of ``P`` (least traversal, no reflection)."""
    if P.trivial:
        return "0;;"
    word, signs = _least(_traversals(P, mirror=False))
    return format_gauss(word, signs)


def _encode(P: KnotProjection, start: int, step: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Word and signs of ``P`` read from ``start`` in direction ``step``."""
    m = 2 * P.n
    sigma = P.sigma
    relabel: dict[int, int] = {}
    first_in: list[int] = []
    word = []
    signs = [0] * P.n
    for i in range(m):
        q = (start + step * i) % m
        v = P.word[q]
        d_in = 2 * q if step > 0 else 2 * q + 1
        k = relabel.get(v)
        if k is None:
            k = relabel[v] = len(first_in)
            first_in.append(d_in)
        else:
            signs[k] = 1 if sigma[first_in[k]] == d_in else -1
        word.append(k)
    return tuple(word), tuple(signs)


def _traversals(P: KnotProjection, mirror: bool):
    for start in range(2 * P.n):
        for step in (1, -1):
            word, signs = _encode(P, start, step)
            yield word, signs
            if mirror:
                yield word, tuple(-s for s in signs)


def _least(traversals):
    # '+' sorts before '-', matching the bit order used in canonical codes
    return min(traversals, key=lambda ws: (ws[0], tuple(s < 0 for s in ws[1])))


def rebase(P: KnotProjection, start: int, reverse: bool = False) -> KnotProjection:
    """The same curve read from another base point and/or direction."""
    if P.trivial:
        return P
    return KnotProjection(*_encode(P, start, -1 if reverse else 1))


def mirror(P: KnotProjection) -> KnotProjection:
    return KnotProjection(P.word, tuple(-s for s in P.signs))


# ---------------------------------------------------------------------------
# canonical codes


@dataclass(frozen=True, order=True)
class CanonicalCode:
    data: bytes
    mode: str = FULL

    def hex(self) -> str:
        return self.data.hex()

    def __str__(self) -> str:
        return self.data.hex()


def _pack(n: int, word: Iterable[int], signs: Iterable[int]) -> bytes:
    items = [n, *word, *(0 if s > 0 else 1 for s in signs)]
    if n < 256:
        return bytes(items)
    return b"".join(x.to_bytes(2, "big") for x in items)


def canonical_code(P: KnotProjection, mode: str = FULL) -> CanonicalCode:
    """Least encoding over base points, directions and (``full``) mirrors."""
    if mode not in MODES:
        raise ValueError(f"unknown chirality mode {mode!r}")
    if P.trivial:
        return CanonicalCode(b"\x00", mode)
    best = _least(_traversals(P, mirror=(mode == FULL)))
    return CanonicalCode(_pack(P.n, *best), mode)


def is_isotopic(P: KnotProjection, Q: KnotProjection, mode: str = FULL) -> bool:
    if P.n != Q.n:
        return False
    return canonical_code(P, mode) == canonical_code(Q, mode)


def faces(P: KnotProjection) -> tuple[Face, ...]:
    return P.faces


# ---------------------------------------------------------------------------
# primality and connected sum


def closed_intervals(word: Sequence[int]) -> list[tuple[int, int]]:
    """Proper cyclic intervals ``(start, length)`` closed under labels.

    Each interval has length between 2 and ``len(word) - 2`` and contains
    both occurrences of each of its labels.
    """
    m = len(word)
    out = []
    for start in range(m):
        open_labels: set[int] = set()
        for length in range(1, m - 1):
            label = word[(start + length - 1) % m]
            if label in open_labels:
                open_labels.remove(label)
            else:
                open_labels.add(label)
            if not open_labels and length >= 2:
                out.append((start, length))
    return out


def is_prime(P: KnotProjection) -> bool:
    """Non-trivial and not a connected sum of two non-trivial projections."""
    if P.trivial:
        return False
    return not closed_intervals(P.word)


class _Draft:
    """Mutable scratch copy of a projection used for local surgery.

    Occurrences are tokens (any hashable); a dart is ``(token, 0)`` for the
    incoming and ``(token, 1)`` for the outgoing half-edge.  ``rot`` maps a
    vertex key to its counterclockwise cycle of four darts.
    """

    def __init__(self, seq=None, vertex=None, rot=None):
        self.seq: list = list(seq or [])
        self.vertex: dict = dict(vertex or {})
        self.rot: dict = dict(rot or {})

    @classmethod
    def of(cls, P: KnotProjection, tag=None, reverse: bool = False) -> "_Draft":
        m = 2 * P.n
        tok = (lambda p: p) if tag is None else (lambda p: (tag, p))
        key = (lambda v: v) if tag is None else (lambda v: (tag, v))
        order = range(m) if not reverse else range(m - 1, -1, -1)
        draft = cls()
        draft.seq = [tok(p) for p in order]
        draft.vertex = {tok(p): key(P.word[p]) for p in range(m)}
        for k, (p1, p2) in enumerate(P.positions):
            cyc = _rotation(p1, p2, P.signs[k])
            # reversing the traversal swaps the roles of in and out darts
            draft.rot[key(k)] = tuple(
                (tok(d // 2), (d % 2) ^ reverse) for d in cyc
            )
        return draft

    def index(self, token) -> int:
        return self.seq.index(token)

    def insert_after(self, token, *new_tokens) -> None:
        i = self.seq.index(token) + 1
        self.seq[i:i] = new_tokens

    def remove_vertex(self, key) -> None:
        self.seq = [t for t in self.seq if self.vertex[t] != key]
        del self.rot[key]

    def build(self) -> KnotProjection:
        pos = {t: i for i, t in enumerate(self.seq)}
        relabel: dict = {}
        word = []
        for t in self.seq:
            v = self.vertex[t]
            if v not in relabel:
                relabel[v] = len(relabel)
            word.append(relabel[v])
        signs = [0] * len(relabel)
        for v, cyc in self.rot.items():
            darts = [2 * pos[t] + io for t, io in cyc]
            p1 = min(d // 2 for d in darts)
            p2 = max(d // 2 for d in darts)
            i = darts.index(2 * p1)
            c = darts[i:] + darts[:i]
            if c[2] != 2 * p1 + 1 or {c[1], c[3]} != {2 * p2, 2 * p2 + 1}:
                raise AssertionError(f"non-transverse rotation at vertex {v!r}")
            signs[relabel[v]] = 1 if c[1] == 2 * p2 else -1
        return KnotProjection(tuple(word), tuple(signs))


def connected_sum(P: KnotProjection, arc_p, Q: KnotProjection, arc_q) -> KnotProjection:
    """Splice ``Q`` into ``P`` so that the faces on the chosen sides merge.

    ``arc_p`` and ``arc_q`` are ``(edge, side)`` pairs.  The face on side
    ``arc_p.side`` of ``arc_p.edge`` becomes one face with the face on side
    ``arc_q.side`` of ``arc_q.edge``.
    """
    dp = P.dart_of(arc_p)
    dq = Q.dart_of(arc_q)
    if Q.trivial:
        return P
    if P.trivial:
        return Q
    ep, sp = P.arc_of(dp)
    eq, sq = Q.arc_of(dq)
    forward = sp == sq
    left = _Draft.of(P, "P")
    right = _Draft.of(Q, "Q", reverse=not forward)
    # first Q occurrence after the cut, in the chosen traversal direction
    first = ("Q", (eq + 1) % (2 * Q.n)) if forward else ("Q", eq)
    i = right.index(first)
    qseq = right.seq[i:] + right.seq[:i]
    j = ep + 1
    left.seq[j:j] = qseq
    left.vertex.update(right.vertex)
    left.rot.update(right.rot)
    return left.build()


def to_record(P: KnotProjection) -> dict:
    code = serialize_gauss(P)
    word, signs = _least(_traversals(P, mirror=False)) if P.n else ((), ())
    return {
        "n": P.n,
        "gauss": code,
        "word": [w + 1 for w in word],
        "signs": ["+" if s > 0 else "-" for s in signs],
        "canonical_code": canonical_code(P).hex(),
    }
