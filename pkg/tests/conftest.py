"""Shared test-local constructions.

The table builders and brute-force predicates here are deliberately
independent of the library code paths they are used to check: they are
small, direct transcriptions of the definitions.
"""

import itertools

import pytest


def ek_tables(k):
    """Tables for E_k = {0, 1, .., k, inf} with saturating addition.

    Index i < k+1 holds the integer i; index k+1 holds inf.  Sums
    exceeding k become inf, which is absorbing.
    """
    n = k + 2
    inf = k + 1

    def val_add(a, b):
        if a == inf or b == inf:
            return inf
        s = a + b
        return s if s <= k else inf

    add = [[val_add(a, b) for b in range(n)] for a in range(n)]
    leq = [[1 if (a <= b or b == inf) else 0 for b in range(n)] for a in range(n)]
    names = [str(i) for i in range(k + 1)] + ["inf"]
    return n, add, leq, names


def nbar_prime_tables(cap):
    """Truncation of Nbar with an extra compact 1' incomparable to 1.

    Carrier order: [0, 1', 1, 2, .., cap, inf].  1' + 1' = 2 and
    1' + m = 1 + m for m >= 1; sums beyond cap saturate to inf.
    """
    vals = [("i", 0), ("p",)] + [("i", j) for j in range(1, cap + 1)] + [("inf",)]
    n = len(vals)

    def magnitude(v):
        return 1 if v == ("p",) else v[1]

    def add(a, b):
        if ("inf",) in (a, b):
            return ("inf",)
        if a == ("i", 0):
            return b
        if b == ("i", 0):
            return a
        if a == ("p",) and b == ("p",):
            return ("i", 2)
        s = magnitude(a) + magnitude(b)
        return ("i", s) if s <= cap else ("inf",)

    def leq(a, b):
        if a == ("i", 0) or b == ("inf",) or a == b:
            return 1
        if a == ("inf",):
            return 0
        if a == ("p",):
            return 1 if (b[0] == "i" and b[1] >= 2) else 0
        if b == ("p",):
            return 0  # only 0 and 1' sit below 1'
        return 1 if a[1] <= b[1] else 0

    idx = {v: i for i, v in enumerate(vals)}
    add_t = [[idx[add(a, b)] for b in vals] for a in vals]
    leq_t = [[leq(a, b) for b in vals] for a in vals]
    names = ["0", "1'"] + [str(j) for j in range(1, cap + 1)] + ["inf"]
    return n, add_t, leq_t, names


def brute_o5(n, add, leq):
    """Direct five-fold quantification of O5 (with << read as <=)."""
    for xp, x, yp, y, z in itertools.product(range(n), repeat=5):
        if not (leq[xp][x] and leq[yp][y] and leq[add[x][y]][z]):
            continue
        if not any(
            leq[add[xp][c]][z] and leq[z][add[x][c]] and leq[yp][c]
            for c in range(n)
        ):
            return (xp, x, yp, y, z)
    return None


def brute_o6(n, add, leq):
    """Direct quantification of O6; returns the lex-least failing tuple."""
    failures = []
    for xp, x, y, z in itertools.product(range(n), repeat=4):
        if not (leq[xp][x] and leq[x][add[y][z]]):
            continue
        ok = any(
            leq[v][x] and leq[v][y] and leq[w][x] and leq[w][z]
            and leq[xp][add[v][w]]
            for v in range(n)
            for w in range(n)
        )
        if not ok:
            failures.append((xp, x, y, z))
    return min(failures) if failures else None


def brute_dim0(n, add, leq):
    """Direct zero-dimension check: every x' <= x <= y1+y2 admits
    z1 <= y1, z2 <= y2 with x' <= z1+z2 <= x."""
    for xp, x, y1, y2 in itertools.product(range(n), repeat=4):
        if not (leq[xp][x] and leq[x][add[y1][y2]]):
            continue
        ok = any(
            leq[z1][y1] and leq[z2][y2]
            and leq[xp][add[z1][z2]] and leq[add[z1][z2]][x]
            for z1 in range(n)
            for z2 in range(n)
        )
        if not ok:
            return (xp, x, y1, y2)
    return None


@pytest.fixture
def e3():
    from cudim import validate_presentation

    n, add, leq, names = ek_tables(3)
    return validate_presentation(n, add, leq, names, name="E(3)")


@pytest.fixture
def e4():
    from cudim import validate_presentation

    n, add, leq, names = ek_tables(4)
    return validate_presentation(n, add, leq, names, name="E(4)")
