"""Reference implementations that share no code with the library."""
from __future__ import annotations

import numpy as np


def gauss_from_curve(f, samples=3000):
    """Gauss word and signs of a closed parametric plane curve, found numerically.

    The sign of a double point is the orientation of (first tangent, second
    tangent); labels are numbered by first occurrence.
    """
    t = np.linspace(0, 2 * np.pi, samples, endpoint=False)
    pts = np.array([f(x) for x in t])
    nxt = np.roll(pts, -1, axis=0)
    hits = []
    for i in range(samples):
        a, r = pts[i], nxt[i] - pts[i]
        c = pts[i + 2:]
        s = nxt[i + 2:] - c
        if i == 0:
            c, s = c[:-1], s[:-1]
        den = r[0] * s[:, 1] - r[1] * s[:, 0]
        ok = np.abs(den) > 1e-15
        ca = c - a
        with np.errstate(divide="ignore", invalid="ignore"):
            u = (ca[:, 0] * s[:, 1] - ca[:, 1] * s[:, 0]) / den
            v = (ca[:, 0] * r[1] - ca[:, 1] * r[0]) / den
        for k in np.nonzero(ok & (u >= 0) & (u < 1) & (v >= 0) & (v < 1))[0]:
            hits.append((i + u[k], i + 2 + k + v[k], 1 if den[k] > 0 else -1))
    events = sorted((x, k) for k, h in enumerate(hits) for x in h[:2])
    label: dict[int, int] = {}
    word = [label.setdefault(k, len(label)) for _, k in events]
    signs = [0] * len(hits)
    for k, h in enumerate(hits):
        signs[label[k]] = h[2]
    return tuple(word), tuple(signs)


def gf2_rank(rows) -> int:
    rows = [int("".join(map(str, r)), 2) if len(r) else 0 for r in rows]
    rank = 0
    while rows:
        pivot = max(rows)
        if pivot == 0:
            break
        rows.remove(pivot)
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if r >> top & 1 else r for r in rows]
        rank += 1
    return rank


def circles_from_chords(word) -> int:
    """Circle count of the all-non-Seifert smoothing via linear algebra over GF(2).

    Each such smoothing reverses the stretch of the curve between the two
    visits of a double point; the number of resulting curves is one more
    than the nullity of (interlacement matrix + identity).
    """
    n = len(word) // 2
    pos: dict[int, list[int]] = {}
    for i, w in enumerate(word):
        pos.setdefault(w, []).append(i)
    chords = [pos[k] for k in sorted(pos)]
    M = [[1 if i == j else int((a1 < b1 < a2) != (a1 < b2 < a2))
          for j, (b1, b2) in enumerate(chords)]
         for i, (a1, a2) in enumerate(chords)]
    return 1 + n - gf2_rank(M)


def is_composite_by_faces(P) -> bool:
    """Two distinct edges bounding the same two faces cut off a summand."""
    m = 2 * P.n
    sides = {}
    for e in range(m):
        sides[e] = frozenset(P.face_of(P.dart_of((e, s))) for s in ("L", "R"))
    for e1 in range(m):
        for e2 in range(e1 + 1, m):
            if len(sides[e1]) == 2 and sides[e1] == sides[e2] and 2 <= e2 - e1 <= m - 2:
                return True
    return False
