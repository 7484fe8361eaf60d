import csv
import io
import json
import random
from collections import Counter

import pytest

from shadowkit import LimitExceeded, canonical_code, circle_number, is_prime
from shadowkit.census import (
    CSV_COLUMNS,
    all_matchings,
    connections_dot,
    enumerate_projections,
    enumerate_unpruned,
    invariant_record,
    least_reading,
    records_csv,
    records_jsonl,
    tabulate,
)
from shadowkit.projection import ONE_GON


def test_small_counts():
    assert [P.n for P in enumerate_projections(3, prime=True, no_onegon=True)] == [3]
    counts = Counter(P.n for P in enumerate_projections(5, prime=True, no_onegon=True))
    assert counts == {3: 1, 4: 1, 5: 2}
    assert enumerate_projections(2, prime=True, no_onegon=True) == []


def test_unfiltered_counts():
    # curves on the sphere with n = 1..4 double points, up to isotopy and reflection
    counts = Counter(P.n for P in enumerate_projections(5))
    assert counts == {1: 1, 2: 2, 3: 6, 4: 19, 5: 76}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pruned_census_equals_exhaustive(n):
    rng = random.Random(n)
    got = {canonical_code(P).data for P in enumerate_projections(n, nmin=n)}
    assert got == enumerate_unpruned(n, rng=rng)
    got = {canonical_code(P).data for P in enumerate_projections(n, True, True, nmin=n)}
    assert got == enumerate_unpruned(n, prime=True, no_onegon=True, rng=rng)


def test_census_is_sorted_and_filtered(census):
    keys = [(P.n, canonical_code(P).data) for P in census]
    assert keys == sorted(keys)
    assert all(is_prime(P) and not any(f.kind == ONE_GON for f in P.faces) for P in census)


def test_workers_agree():
    serial = enumerate_projections(6, prime=True)
    parallel = enumerate_projections(6, prime=True, workers=2)
    assert [canonical_code(P) for P in serial] == [canonical_code(P) for P in parallel]


def test_limits():
    with pytest.raises(LimitExceeded):
        enumerate_projections(9)
    with pytest.raises(LimitExceeded):
        enumerate_projections(0)


def test_word_space():
    assert sum(1 for _ in all_matchings(3)) == 15
    assert least_reading((1, 0, 1, 2, 0, 2))[0] == 0


def test_records(census):
    records = [invariant_record(P) for P in census]
    for r in records:
        assert r.circle_number % 2 == 1
        assert r.prime and r.reduced
        assert not (r.weak_trivial and r.strong_trivial)
    six = [r for r in records if r.n == 6 and r.circle_number == 3]
    trefoil = records[0]
    assert trefoil.n == 3 and trefoil.circle_number == 3
    assert {r.arrangement_name for r in six} == {"3a", "3b"}
    assert trefoil.arrangement_name in {r.arrangement_name for r in six}
    seven = [r for r in records if r.n == 7]
    names = Counter(r.arrangement_name for r in seven)
    assert len(seven) == 10 and max(names.values()) > 1


def test_export_formats(census):
    records = [invariant_record(P) for P in census[:4]]
    rows = list(csv.reader(io.StringIO(records_csv(records))))
    assert tuple(rows[0]) == CSV_COLUMNS and len(rows) == 5
    assert rows[1][CSV_COLUMNS.index("weak_trivial")] in ("true", "false")
    lines = records_jsonl(records).splitlines()
    assert json.loads(lines[0])["canonical_code"] == records[0].canonical_code


def test_tabulate_reports_budget():
    table = tabulate(5, connect_budget=1)
    assert len(table.records) == 4 and table.budget == 1
    assert "budget" in table.note
    assert all(c.kind in ("s", "w") and c.moves <= 2 for c in table.connections)
    assert connections_dot(table).startswith("graph census")
    assert all(circle_number(table.projections[c.a]) for c in table.connections)
