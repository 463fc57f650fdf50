"""Census enumeration: clause tables, determinism, bounds."""

from __future__ import annotations

import pytest

from tritangle import BoundsTooLarge, census_csv, census_decomposition, classify, run_census


def rows_as_dict(kind, bound):
    return {(r.m, r.n): (r.branch, r.count) for r in run_census(kind, bound)}


def test_tautau_bound_seven():
    rows = rows_as_dict("tautau", 7)
    values = [-7, -5, -3, 3, 5, 7]
    assert len(rows) == len(values) ** 2
    assert rows[(3, 3)] == ("tautau (i)", "inf")
    assert rows[(-3, -3)] == ("tautau (i)", "inf")
    assert rows[(3, -3)] == ("tautau (ii)", "3")
    assert rows[(-3, 3)] == ("tautau (ii)", "3")
    assert rows[(5, 3)] == ("tautau (iii)", "1")
    assert rows[(7, -5)] == ("tautau (iii)", "1")


def test_taurho_clause_table():
    rows = rows_as_dict("taurho", 5)
    # tau slopes 1/3, 1/5 against torus parameters p in [2, 5]
    assert rows[(3, 2)] == ("taurho (i)", "inf")
    assert rows[(3, 3)] == ("taurho (ii)", "4")
    assert rows[(3, 5)] == ("taurho (ii)", "4")
    assert rows[(5, 3)] == ("taurho (iii)", "2")
    assert rows[(5, 2)] == ("taurho (iv)", "1")


def test_rhorho_branch_table():
    rows = rows_as_dict("rhorho", 3)
    assert rows[(0, 0)] == ("rhorho (otherwise)", "0")
    assert rows[(0, 2)] == ("rhorho (ii)", "1")
    assert rows[(3, 0)] == ("rhorho (ii)", "1")
    assert rows[(2, 3)] == ("rhorho (i)", "2")


def test_rows_match_reconstructed_decompositions():
    for kind, bound in (("tautau", 5), ("taurho", 4), ("rhorho", 3)):
        for row in run_census(kind, bound):
            verdict = classify(census_decomposition(kind, row.m, row.n))
            assert (row.branch, row.count) == (verdict.branch, str(verdict.annulus_count))


def test_csv_deterministic_and_sorted():
    first = census_csv(run_census("tautau", 9))
    second = census_csv(run_census("tautau", 9))
    assert first == second
    lines = first.splitlines()
    assert lines[0] == "m,n,branch,count"
    keys = [tuple(map(int, line.split(",")[:2])) for line in lines[1:]]
    assert keys == sorted(keys)


def test_empty_range_has_header_only():
    assert census_csv(run_census("tautau", 1)) == "m,n,branch,count\n"


def test_bound_above_cap_rejected():
    with pytest.raises(BoundsTooLarge):
        run_census("tautau", 100)


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        run_census("sigma", 5)
