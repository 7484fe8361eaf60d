"""Exhaustive census of knot projections and their invariant table.

Candidates are Gauss words with increasing first occurrences in which the
two occurrences of every label sit at positions of opposite parity (an even
number of letters between them, a necessary condition for any curve on the
sphere).  Words are kept only in their least rotation/reversal reading;
every sign vector with a leading ``+`` is tried, the Euler check retains
the spherical ones, and full-mode canonical codes remove duplicates.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterator, Sequence

from .circles import non_seifert_resolve, x_invariant
from .errors import LimitExceeded
from .moves import connect_search, reduce
from .projection import (
    ONE_GON,
    KnotProjection,
    canonical_code,
    closed_intervals,
    is_prime,
    is_spherical,
    serialize_gauss,
)

MAX_N = 8

CSV_COLUMNS = ("n", "canonical_code", "circle_number", "arrangement_name",
               "x", "x_mod2", "weak_trivial", "strong_trivial")


def _matchings(n: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Words of length 2n, first occurrences increasing, partners of opposite parity."""
    m = 2 * n
    word = [-1] * m

    def fill(p: int, label: int):
        while p < m and word[p] >= 0:
            p += 1
        if p == m:
            yield tuple(word)
            return
        word[p] = label
        partners = range(p + 1, m, 2)
        if p == 0 and first is not None:
            partners = [first]
        for q in partners:
            if word[q] < 0:
                word[q] = label
                yield from fill(p + 1, label + 1)
                word[q] = -1
        word[p] = -1

    yield from fill(0, 0)


def all_matchings(n: int) -> Iterator[tuple[int, ...]]:
    """Every double-occurrence word of length 2n with increasing first occurrences."""
    m = 2 * n
    word = [-1] * m

    def fill(p: int, label: int):
        while p < m and word[p] >= 0:
            p += 1
        if p == m:
            yield tuple(word)
            return
        word[p] = label
        for q in range(p + 1, m):
            if word[q] < 0:
                word[q] = label
                yield from fill(p + 1, label + 1)
                word[q] = -1
        word[p] = -1

    yield from fill(0, 0)


def _relabel(seq: Sequence[int]) -> tuple[int, ...]:
    names: dict[int, int] = {}
    return tuple(names.setdefault(x, len(names)) for x in seq)


def least_reading(word: Sequence[int]) -> tuple[int, ...]:
    m = len(word)
    best = None
    for start in range(m):
        for step in (1, -1):
            r = _relabel([word[(start + step * i) % m] for i in range(m)])
            if best is None or r < best:
                best = r
    return best


def _has_adjacent_repeat(word: Sequence[int]) -> bool:
    m = len(word)
    return any(word[i] == word[(i + 1) % m] for i in range(m))


def _word_ok(word, prime: bool, no_onegon: bool) -> bool:
    if no_onegon and _has_adjacent_repeat(word):
        return False
    if prime and closed_intervals(word):
        return False
    return True


def _project_word(word, prime, no_onegon, dedupe_words=True):
    """Spherical projections (full-mode code -> projection) over one word."""
    found = {}
    if not _word_ok(word, prime, no_onegon):
        return found
    if dedupe_words and least_reading(word) != word:
        return found
    n = len(word) // 2
    for rest in itertools.product((1, -1), repeat=n - 1):
        signs = (1,) + rest
        if not is_spherical(word, signs):
            continue
        P = KnotProjection(word, signs)
        if no_onegon and any(f.kind == ONE_GON for f in P.faces):
            continue
        found.setdefault(canonical_code(P).data, P)
    return found


def _enumerate_chunk(args):
    n, first, prime, no_onegon = args
    out = {}
    for w in _matchings(n, first):
        for code, P in _project_word(w, prime, no_onegon).items():
            out.setdefault(code, P)
    return out


def enumerate_projections(nmax: int, prime: bool = False, no_onegon: bool = False,
                          workers: int = 1, nmin: int = 1) -> list[KnotProjection]:
    """All projections with ``nmin <= n <= nmax`` double points, up to isotopy.

    Output is sorted by ``(n, canonical code)``.  With ``workers > 1`` the
    word space is split by the partner of the first letter and the partial
    code sets are merged.
    """
    if not 1 <= nmax <= MAX_N:
        raise LimitExceeded(f"nmax must lie in 1..{MAX_N}, got {nmax}")
    jobs = [(n, first, prime, no_onegon)
            for n in range(max(nmin, 1), nmax + 1)
            for first in range(1, 2 * n, 2)]
    merged: dict[bytes, KnotProjection] = {}
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_enumerate_chunk, jobs))
    else:
        parts = [_enumerate_chunk(j) for j in jobs]
    for part in parts:
        for code, P in part.items():
            merged.setdefault(code, P)
    return [merged[c] for c in sorted(merged, key=lambda c: (merged[c].n, c))]


def enumerate_unpruned(n: int, prime: bool = False, no_onegon: bool = False,
                       rng: random.Random | None = None) -> set[bytes]:
    """Reference census over every word and every sign vector (small n only).

    No parity pruning, no word canonicalisation, optional shuffled order.
    """
    words = list(all_matchings(n))
    if rng is not None:
        rng.shuffle(words)
    codes = set()
    for w in words:
        if not _word_ok(w, prime, no_onegon):
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if is_spherical(w, signs):
                P = KnotProjection(w, signs)
                if no_onegon and any(f.kind == ONE_GON for f in P.faces):
                    continue
                codes.add(canonical_code(P).data)
    return codes


# ---------------------------------------------------------------------------
# invariant table


@dataclass(frozen=True)
class InvariantRecord:
    canonical_code: str
    n: int
    gauss: str
    prime: bool
    reduced: bool
    circle_number: int
    arrangement_name: str
    ahu_code: str
    x: int
    x_mod2: int
    weak_trivial: bool
    strong_trivial: bool

    def as_dict(self) -> dict:
        return asdict(self)


def invariant_record(P: KnotProjection) -> InvariantRecord:
    A = non_seifert_resolve(P)
    x, x2 = x_invariant(P)
    return InvariantRecord(
        canonical_code=canonical_code(P).hex(),
        n=P.n,
        gauss=serialize_gauss(P),
        prime=is_prime(P),
        reduced=not any(f.kind == ONE_GON for f in P.faces),
        circle_number=A.circles,
        arrangement_name=A.name,
        ahu_code=A.ahu,
        x=x,
        x_mod2=x2,
        weak_trivial=reduce(P, "weak").trivial,
        strong_trivial=reduce(P, "strong").trivial,
    )


@dataclass(frozen=True)
class Connection:
    """A found ``s``/``w`` line between records ``a`` and ``b`` (indices)."""

    a: int
    b: int
    kind: str
    budget: int
    moves: int


@dataclass(frozen=True)
class Table:
    records: list
    projections: list
    connections: list
    budget: int
    note: str = ("connections come from a bounded search; a missing line "
                 "means none was found within the budget, not that none exists")


def tabulate(nmax: int, connect_budget: int = 2, workers: int = 1) -> Table:
    census = enumerate_projections(nmax, prime=True, no_onegon=True, workers=workers)
    records = [invariant_record(P) for P in census]
    edges = []
    for i, j in itertools.combinations(range(len(census)), 2):
        P, Q = census[i], census[j]
        if abs(P.n - Q.n) < 2:
            continue
        for kind in ("s2a", "w2a"):
            path = connect_search(P, Q, kind, connect_budget)
            if path is not None:
                edges.append(Connection(i, j, kind[0], connect_budget, len(path)))
    return Table(records, census, edges, connect_budget)


# ---------------------------------------------------------------------------
# export


def records_csv(records: Sequence[InvariantRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        d = r.as_dict()
        writer.writerow([str(d[c]).lower() if isinstance(d[c], bool) else d[c]
                         for c in CSV_COLUMNS])
    return buf.getvalue()


def records_jsonl(records: Sequence[InvariantRecord]) -> str:
    return "".join(json.dumps(r.as_dict(), sort_keys=True) + "\n" for r in records)


def connections_dot(table: Table) -> str:
    lines = ["graph census {"]
    for i, r in enumerate(table.records):
        lines.append(f'  p{i} [label="{r.n}:{r.arrangement_name}"];')
    for c in table.connections:
        lines.append(f'  p{c.a} -- p{c.b} [label="{c.kind}"];')
    lines.append("}")
    return "\n".join(lines)
