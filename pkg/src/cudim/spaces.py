"""Finite topological spaces and lower-semicontinuous function semigroups.

A finite space is an explicit family of open sets.  Covering dimension is
computed exactly: the least n such that every irreducible open cover
admits an open refinement that splits into n+1 families of pairwise
disjoint sets.  Only irreducible covers (no removable member) are
enumerated; a removable member never affects the existence of a colorable
refinement.

``lsc_semigroup`` builds the finite presentation of lower-semicontinuous
functions with values in {0, .., cap, inf} under pointwise saturating
addition.  This truncation keeps inf absorbing and makes the one-point
space coincide with the elementary semigroup E_cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .core import FiniteCuPresentation, ValidationError, validate_presentation


@dataclass(frozen=True)
class FinSpace:
    """Finite topological space: named points plus the open-set family.

    ``opens`` is canonically sorted by (size, membership tuple) and is
    closed under union and intersection; the empty set and the full set
    are always present.
    """

    points: Tuple[str, ...]
    opens: Tuple[frozenset, ...]
    name: str = "space"

    @property
    def npoints(self) -> int:
        return len(self.points)

    def full(self) -> frozenset:
        return frozenset(range(self.npoints))

    def open_names(self):
        return [sorted(self.points[i] for i in o) for o in self.opens]

    def __repr__(self):
        return f"FinSpace({self.name!r}, points={len(self.points)}, opens={len(self.opens)})"


def _canon(sets: Iterable[frozenset]) -> Tuple[frozenset, ...]:
    return tuple(sorted(set(sets), key=lambda s: (len(s), tuple(sorted(s)))))


def make_space(points: Sequence[str], opens: Iterable[Iterable], strict: bool = False,
               name: str = "space") -> FinSpace:
    """Build a validated finite space.

    ``opens`` lists point names (or indices).  With ``strict`` the family
    must already contain the empty set and the whole set and be closed
    under union and intersection; otherwise the closure is completed.
    """
    points = tuple(points)
    if len(set(points)) != len(points):
        raise ValueError("duplicate point names")
    index = {p: i for i, p in enumerate(points)}
    fam = set()
    for o in opens:
        s = frozenset(index[p] if p in index else int(p) for p in o)
        if not s <= frozenset(range(len(points))):
            raise ValueError(f"open set {sorted(o)} mentions unknown points")
        fam.add(s)
    full = frozenset(range(len(points)))
    required = {frozenset(), full}
    if strict:
        if not required <= fam:
            raise ValueError("strict space must list the empty and full open sets")
    fam |= required
    while True:
        new = set()
        for a, b in itertools.combinations(fam, 2):
            u, i = a | b, a & b
            if u not in fam:
                new.add(u)
            if i not in fam:
                new.add(i)
        if not new:
            break
        if strict:
            missing = _canon(new)[0]
            raise ValueError(f"family not closed under union/intersection: missing {sorted(missing)}")
        fam |= new
    return FinSpace(points, _canon(fam), name)


def point_space() -> FinSpace:
    return make_space(["p"], [["p"]], name="point")


def discrete_space(k: int) -> FinSpace:
    pts = [f"p{i}" for i in range(k)]
    return make_space(pts, [[p] for p in pts], name=f"discrete{k}")


def sierpinski_space() -> FinSpace:
    # a open, b closed
    return make_space(["a", "b"], [["a"]], name="sierpinski")


def v_space() -> FinSpace:
    # one open point a under two closed points b, c
    return make_space(["a", "b", "c"], [["a"], ["a", "b"], ["a", "c"]], name="vspace")


def from_preorder(relation) -> FinSpace:
    """Space of a reflexive-transitive relation: opens are the up-sets."""
    k = len(relation)
    pts = [f"p{i}" for i in range(k)]
    opens = []
    for bits in itertools.product((0, 1), repeat=k):
        s = [i for i in range(k) if bits[i]]
        if all(not relation[i][j] or j in s for i in s for j in range(k)):
            opens.append([pts[i] for i in s])
    return make_space(pts, opens, name=f"preorder{k}")


def all_topologies(k: int):
    """Every topology on k labeled points, via preorder enumeration."""
    out = []
    for bits in itertools.product((0, 1), repeat=k * k):
        rel = [[bits[i * k + j] for j in range(k)] for i in range(k)]
        if any(not rel[i][i] for i in range(k)):
            continue
        if any(rel[i][j] and rel[j][l] and not rel[i][l]
               for i in range(k) for j in range(k) for l in range(k)):
            continue
        out.append(from_preorder(rel))
    return out


def disjoint_union(a: FinSpace, b: FinSpace) -> FinSpace:
    pts = [f"L.{p}" for p in a.points] + [f"R.{p}" for p in b.points]
    shift = a.npoints
    opens = []
    for oa in a.opens:
        for ob in b.opens:
            opens.append([pts[i] for i in oa] + [pts[j + shift] for j in ob])
    return make_space(pts, opens, strict=True, name=f"{a.name}+{b.name}")


def _irreducible_covers(X: FinSpace):
    full = X.full()
    cand = [o for o in X.opens if o]
    for r in range(1, X.npoints + 1):
        for combo in itertools.combinations(cand, r):
            union = frozenset().union(*combo)
            if union != full:
                continue
            if all(frozenset().union(*(combo[:i] + combo[i + 1:]), frozenset()) != full
                   for i in range(r)):
                yield combo


def _disjoint_unions(refinement):
    """All sets obtainable as a union of pairwise disjoint members."""
    reach = {frozenset()}
    for o in refinement:
        extra = {p | o for p in reach if not (p & o)}
        reach |= extra
    return reach


def _min_cover_size(parts, full) -> Optional[int]:
    """Fewest members of ``parts`` whose union is ``full`` (BFS over
    covered point sets)."""
    parts = [p for p in parts if p]
    frontier = {frozenset()}
    seen = {frozenset()}
    steps = 0
    while frontier:
        if full in frontier:
            return steps
        steps += 1
        nxt = set()
        for s in frontier:
            for p in parts:
                t = s | p
                if t not in seen:
                    seen.add(t)
                    nxt.add(t)
        frontier = nxt
    return None


def covering_dim(X: FinSpace) -> int:
    """Exact covering dimension of a finite space.

    For each irreducible cover U the refinement candidates are all
    nonempty opens contained in some member of U.  A refinement colorable
    with m colors exists iff the full set is a union of m sets, each of
    which is a disjoint union of candidates; the least such m is found by
    breadth-first search.  The dimension is the worst such m minus one.
    """
    full = X.full()
    if not full:
        return 0
    worst = 1
    for cover in _irreducible_covers(X):
        cand = [o for o in X.opens if o and any(o <= u for u in cover)]
        parts = _disjoint_unions(cand)
        m = _min_cover_size(parts, full)
        # every irreducible cover refines itself, so m is always finite
        worst = max(worst, m)
    return worst - 1


# ---------------------------------------------------------------------------
# lower-semicontinuous function semigroups

INF_RANK_LABEL = "inf"


def _rank_name(rank: int, cap: int) -> str:
    return INF_RANK_LABEL if rank == cap + 1 else str(rank)


def lsc_functions(X: FinSpace, cap: int):
    """All lsc maps points -> {0,..,cap,inf} as rank tuples, sorted.

    Rank cap+1 stands for inf; lsc means every threshold set
    {p : f(p) >= t} is open.
    """
    openset = set(X.opens)
    out = []
    for f in itertools.product(range(cap + 2), repeat=X.npoints):
        if all(frozenset(p for p in range(X.npoints) if f[p] >= t) in openset
               for t in range(1, cap + 2)):
            out.append(f)
    out.sort()
    return out


def lsc_semigroup(X: FinSpace, cap: int, variant: str = "full",
                  max_carrier: int = 64) -> FiniteCuPresentation:
    """Finite presentation of Lsc(X, {0..cap, inf}) under pointwise
    saturating addition and pointwise order.

    ``variant='strictly-positive'`` keeps only the zero function and the
    functions that are everywhere >= 1.  Raises carrier-too-large when
    the carrier would exceed ``max_carrier`` (pass None to lift).
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if variant not in ("full", "strictly-positive"):
        raise ValueError(f"unknown variant {variant!r}")
    fns = lsc_functions(X, cap)
    if variant == "strictly-positive":
        fns = [f for f in fns if all(v == 0 for v in f) or all(v >= 1 for v in f)]
    if max_carrier is not None and len(fns) > max_carrier:
        raise ValidationError("carrier-too-large", (len(fns),),
                              f"{len(fns)} lsc functions exceed the cap {max_carrier}")
    idx = {f: i for i, f in enumerate(fns)}
    inf_rank = cap + 1

    def radd(a: int, b: int) -> int:
        if a == inf_rank or b == inf_rank:
            return inf_rank
        s = a + b
        return s if s <= cap else inf_rank

    n = len(fns)
    add = [[idx[tuple(radd(a, b) for a, b in zip(f, g))] for g in fns] for f in fns]
    leq = [[1 if all(a <= b for a, b in zip(f, g)) else 0 for g in fns] for f in fns]
    names = ["(" + ",".join(_rank_name(v, cap) for v in f) + ")" for f in fns]
    tag = "" if variant == "full" else ",strict"
    return validate_presentation(n, add, leq, names,
                                 name=f"Lsc({X.name},{cap}{tag})", max_size=None)


def lsc_index(X: FinSpace, cap: int, values, variant: str = "full") -> int:
    """Carrier index of the function given by a point->value mapping
    (values may use cap+1 or the string 'inf' for inf)."""
    fns = lsc_functions(X, cap)
    if variant == "strictly-positive":
        fns = [f for f in fns if all(v == 0 for v in f) or all(v >= 1 for v in f)]
    want = tuple(cap + 1 if v in (INF_RANK_LABEL, cap + 1) else int(v) for v in values)
    return fns.index(want)


def chi_index(X: FinSpace, cap: int, open_names, variant: str = "full") -> int:
    """Index of the characteristic function of an open set."""
    members = {X.points.index(p) for p in open_names}
    return lsc_index(X, cap, [1 if p in members else 0 for p in range(X.npoints)], variant)
