"""Closure of the toolkit under the standard constructions: direct sums,
ideals, quotients, sequential limits of finite stages, and retract
verification.

Chain systems are linearly ordered (omega-chains) with additive,
zero- and order-preserving connecting maps; in finite stages order
preservation already gives way-below preservation.  The limit of a finite
chain is carried by its last stage: classes are compared at that common
later stage, and the depth-d basis slice is the image of stage
min(d, last), so the slices grow exactly as the classes of earlier stages
stabilize.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .core import FiniteCuPresentation, validate_presentation
from .symbolic import SymbolicSemigroup


@dataclass(frozen=True)
class IdealDescriptor:
    """Downward closed, addition closed subset of a finite carrier."""

    members: frozenset

    def __contains__(self, x):
        return x in self.members

    def sorted(self):
        return sorted(self.members)


@dataclass(frozen=True)
class ChainSystem:
    """Finite omega-chain of presentations with connecting maps.

    ``maps[i]`` sends stage i indices to stage i+1 indices.
    """

    stages: Tuple[FiniteCuPresentation, ...]
    maps: Tuple[Tuple[int, ...], ...]

    def push(self, stage: int, x: int, target: int) -> int:
        for i in range(stage, target):
            x = self.maps[i][x]
        return x


@dataclass(frozen=True)
class RetractPair:
    """Pointwise maps iota: S -> T and sigma: T -> S."""

    iota: Callable
    sigma: Callable
    name: str = "retract-pair"


@dataclass(frozen=True)
class RetractReport:
    ok: bool
    violation: Optional[tuple] = None  # (kind, elements...)
    params: dict = None

    def __bool__(self):
        return self.ok


def direct_sum(S, T):
    """Componentwise sum; both finite (product tables) or both symbolic
    (pair encodings with the product basis)."""
    fin_s = isinstance(S, FiniteCuPresentation)
    fin_t = isinstance(T, FiniteCuPresentation)
    if fin_s != fin_t:
        raise ValueError("kind-mismatch: cannot sum a finite and a symbolic semigroup")
    if fin_s:
        n, m = S.size, T.size
        size = n * m

        def pid(a, b):
            return a * m + b

        add = [[0] * size for _ in range(size)]
        leq = [[0] * size for _ in range(size)]
        names = [""] * size
        for a, b in itertools.product(range(n), range(m)):
            i = pid(a, b)
            names[i] = f"({S.names[a]}|{T.names[b]})"
            for c, d in itertools.product(range(n), range(m)):
                j = pid(c, d)
                add[i][j] = pid(S.add(a, c), T.add(b, d))
                leq[i][j] = 1 if (S.leq(a, c) and T.leq(b, d)) else 0
        return validate_presentation(size, add, leq, names,
                                     name=f"{S.name}(+){T.name}", max_size=None)

    def pair(a, b):
        return ("pair", a, b)

    return SymbolicSemigroup(
        name=f"{S.name}(+){T.name}",
        add=lambda x, y: pair(S.add(x[1], y[1]), T.add(x[2], y[2])),
        leq=lambda x, y: S.leq(x[1], y[1]) and T.leq(x[2], y[2]),
        way_below=lambda x, y: S.way_below(x[1], y[1]) and T.way_below(x[2], y[2]),
        is_zero=lambda x: S.is_zero(x[1]) and T.is_zero(x[2]),
        basis=lambda d: [pair(a, b) for a in S.basis(d) for b in T.basis(d)],
        fmt=lambda x: f"({S.fmt(x[1])}|{T.fmt(x[2])})",
        zero=("pair", S.zero, T.zero))


def ideal_generated(S: FiniteCuPresentation, gens) -> IdealDescriptor:
    """Least subset containing the generators that is downward closed and
    closed under addition (finite fixpoint)."""
    members = {0} | {int(g) for g in gens}
    while True:
        new = set()
        for x in members:
            for z in S.elements():
                if S.leq(z, x) and z not in members:
                    new.add(z)
        for x, y in itertools.combinations_with_replacement(sorted(members), 2):
            s = S.add(x, y)
            if s not in members:
                new.add(s)
        if not new:
            return IdealDescriptor(frozenset(members))
        members |= new


def all_ideals(S: FiniteCuPresentation):
    """Every ideal of a finite presentation, by closing each subset of
    generators; small carriers only."""
    seen = set()
    out = []
    for r in range(S.size + 1):
        for gens in itertools.combinations(range(S.size), r):
            ideal = ideal_generated(S, gens)
            if ideal.members not in seen:
                seen.add(ideal.members)
                out.append(ideal)
    return sorted(out, key=lambda i: (len(i.members), tuple(i.sorted())))


def ideal_presentation(S: FiniteCuPresentation, I: IdealDescriptor) -> FiniteCuPresentation:
    """The ideal as a presentation in its own right (indices re-packed in
    increasing order; closure under addition makes the tables total)."""
    elems = I.sorted()
    pos = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    add = [[pos[S.add(a, b)] for b in elems] for a in elems]
    leq = [[1 if S.leq(a, b) else 0 for b in elems] for a in elems]
    names = [S.names[e] for e in elems]
    return validate_presentation(n, add, leq, names,
                                 name=f"{S.name}|ideal{elems}", max_size=None)


def quotient_classes(S: FiniteCuPresentation, I: IdealDescriptor):
    """Partition of the carrier by the ideal congruence.

    x is below y modulo I when x <= y + z for some z in I; mutual
    domination gives the classes.  Returns (class_of, representatives)
    with representatives the least member of each class, listed in
    increasing order.
    """
    n = S.size
    members = I.sorted()
    below = [[False] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            below[x][y] = any(S.leq(x, S.add(y, z)) for z in members)
    class_of = [-1] * n
    reps = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        rep = len(reps)
        reps.append(x)
        class_of[x] = rep
        for y in range(x + 1, n):
            if class_of[y] < 0 and below[x][y] and below[y][x]:
                class_of[y] = rep
    return class_of, reps, below


def quotient(S: FiniteCuPresentation, I: IdealDescriptor) -> FiniteCuPresentation:
    """The quotient presentation with the induced sum and order; class
    representatives are least indices, listed in increasing order."""
    class_of, reps, below = quotient_classes(S, I)
    n = len(reps)
    add = [[class_of[S.add(a, b)] for b in reps] for a in reps]
    leq = [[1 if below[a][b] else 0 for b in reps] for a in reps]
    names = [f"[{S.names[r]}]" for r in reps]
    return validate_presentation(n, add, leq, names,
                                 name=f"{S.name}/I{I.sorted()}", max_size=None)


def validate_chain(sys: ChainSystem) -> None:
    """Check each connecting map is additive, zero preserving and order
    preserving; raises ValueError('invalid-map ...') otherwise."""
    if len(sys.stages) != len(sys.maps) + 1:
        raise ValueError("invalid-map: need exactly one map per adjacent stage pair")
    for i, phi in enumerate(sys.maps):
        A, B = sys.stages[i], sys.stages[i + 1]
        if len(phi) != A.size:
            raise ValueError(f"invalid-map: map {i} has wrong domain size")
        if any(not 0 <= v < B.size for v in phi):
            raise ValueError(f"invalid-map: map {i} image out of range")
        if phi[0] != 0:
            raise ValueError(f"invalid-map: map {i} moves zero")
        for x in A.elements():
            for y in A.elements():
                if phi[A.add(x, y)] != B.add(phi[x], phi[y]):
                    raise ValueError(f"invalid-map: map {i} not additive at ({x},{y})")
                if A.leq(x, y) and not B.leq(phi[x], phi[y]):
                    raise ValueError(f"invalid-map: map {i} not monotone at ({x},{y})")


def chain_limit(sys: ChainSystem) -> SymbolicSemigroup:
    """Sequential limit of a finite chain.

    Classes are written ('cls', j) for a last-stage index j; use
    :func:`inject` to map a stage element to its class.  Two stage
    elements are identified exactly when their images at the last stage
    agree, and order and way-below are evaluated there.
    """
    validate_chain(sys)
    last = len(sys.stages) - 1
    L = sys.stages[last]

    def cls(j):
        return ("cls", j)

    def basis(d):
        stage = min(d, last)
        seen = []
        got = set()
        for x in sys.stages[stage].elements():
            j = sys.push(stage, x, last)
            if j not in got:
                got.add(j)
                seen.append(cls(j))
        return seen

    return SymbolicSemigroup(
        name="lim(" + "->".join(s.name for s in sys.stages) + ")",
        add=lambda a, b: cls(L.add(a[1], b[1])),
        leq=lambda a, b: L.leq(a[1], b[1]),
        way_below=lambda a, b: L.leq(a[1], b[1]),
        is_zero=lambda a: a[1] == 0,
        basis=basis,
        fmt=lambda a: f"[{L.names[a[1]]}]",
        zero=cls(0))


def inject(sys: ChainSystem, stage: int, x: int):
    """Class of a stage element in the chain limit."""
    return ("cls", sys.push(stage, x, len(sys.stages) - 1))


def retract_check(S: SymbolicSemigroup, T: SymbolicSemigroup, pair: RetractPair,
                  depth: int, budget: int = 2) -> RetractReport:
    """Sampled retract verification.

    Checks sigma(iota(x)) = x, additivity and order/way-below
    preservation of iota on the closure of S, and additivity and order
    preservation of sigma on the closure of T.  Reports the first
    violation as (kind, elements).
    """
    from .symbolic import basis_closure

    params = {"depth": depth, "budget": budget}
    es = basis_closure(S, depth, budget)
    et = basis_closure(T, depth, budget)

    def fail(kind, *elems):
        return RetractReport(False, (kind,) + tuple(elems), params)

    try:
        for x in es:
            if pair.sigma(pair.iota(x)) != x:
                return fail("sigma-iota-not-identity", x)
        for x, y in itertools.product(es, repeat=2):
            if pair.iota(S.add(x, y)) != T.add(pair.iota(x), pair.iota(y)):
                return fail("iota-not-additive", x, y)
            if S.leq(x, y) and not T.leq(pair.iota(x), pair.iota(y)):
                return fail("iota-not-monotone", x, y)
            if S.way_below(x, y) and not T.way_below(pair.iota(x), pair.iota(y)):
                return fail("iota-not-way-below-preserving", x, y)
        for u, v in itertools.product(et, repeat=2):
            if pair.sigma(T.add(u, v)) != S.add(pair.sigma(u), pair.sigma(v)):
                return fail("sigma-not-additive", u, v)
            if T.leq(u, v) and not S.leq(pair.sigma(u), pair.sigma(v)):
                return fail("sigma-not-monotone", u, v)
    except KeyError as exc:
        raise ValueError(f"map-undefined: {exc}") from exc
    return RetractReport(True, None, params)
