"""Countable Cu-semigroups given by predicates and a depth-indexed basis.

A :class:`SymbolicSemigroup` packages the element operations (addition,
order, way-below, zero test) together with a growing finite basis slice
``basis(depth)``.  Universal statements can only be checked on samples:
a failing verdict is a sound refutation (the counterexample replays), a
passing verdict is bounded verification at the recorded depth.

All arithmetic in the catalog encodings is exact (Fractions plus one
infinity sentinel); order predicates never touch floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from .core import AxiomVerdict, FiniteCuPresentation, SearchSpaceTooLarge


class BudgetExceeded(RuntimeError):
    """basis_closure would exceed its configured element cap."""


@dataclass(frozen=True)
class SymbolicSemigroup:
    """Immutable bundle of predicates defining a countable semigroup.

    ``basis(d)`` must be monotone in d (as a set of encodings) and its
    enumeration order is the canonical element order used for
    deterministic search and first-counterexample reporting.
    """

    name: str
    add: Callable
    leq: Callable
    way_below: Callable
    is_zero: Callable
    basis: Callable[[int], list]
    fmt: Callable = field(default=repr)
    zero: object = None

    def sum_list(self, xs: Sequence) -> object:
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x) if acc is not None else x
        return self.zero if acc is None else acc

    def __repr__(self):
        return f"SymbolicSemigroup({self.name!r})"


def from_finite(S: FiniteCuPresentation) -> SymbolicSemigroup:
    """Symbolic view of a finite presentation: elements are the carrier
    indices and every basis slice is the whole carrier, so sampled checks
    coincide with exhaustive ones."""
    carrier = list(range(S.size))
    return SymbolicSemigroup(
        name=S.name,
        add=S.add,
        leq=S.leq,
        way_below=S.leq,
        is_zero=lambda x: x == 0,
        basis=lambda d: list(carrier),
        fmt=lambda x: S.names[x],
        zero=0,
    )


_closure_cache = {}


def basis_closure(S: SymbolicSemigroup, depth: int, ops_budget: int = 2,
                  element_cap: int = 4096) -> list:
    """basis(depth) together with all sums of at most ops_budget members,
    deduplicated, in deterministic generation order.

    Results are cached per (semigroup, depth, budget); callers must not
    mutate the returned list.
    """
    key = (id(S), depth, ops_budget, element_cap)
    got = _closure_cache.get(key)
    if got is not None:
        return got
    out = _build_closure(S, depth, ops_budget, element_cap)
    # key by identity: catalog constructors build fresh objects, so also
    # pin the semigroup to keep the id stable
    _closure_cache[key] = out
    _closure_cache.setdefault(("pin", id(S)), S)
    return out


def _build_closure(S, depth, ops_budget, element_cap):
    base = list(dict.fromkeys(S.basis(depth)))
    out = list(base)
    seen = set(out)
    level = list(base)
    for _ in range(max(0, ops_budget - 1)):
        nxt = []
        for a in level:
            for b in base:
                s = S.add(a, b)
                if s not in seen:
                    seen.add(s)
                    out.append(s)
                    nxt.append(s)
                if len(out) > element_cap:
                    raise BudgetExceeded(
                        f"budget-exceeded: closure of {S.name} at depth {depth} "
                        f"passed {element_cap} elements")
        level = nxt
    return out


def _fastkey(e):
    """Cheaply hashable stand-in for an element encoding (Fraction hashing
    is slow enough to dominate the samplers)."""
    if isinstance(e, tuple):
        return tuple(_fastkey(v) for v in e)
    if isinstance(e, Fraction):
        return (e.numerator, e.denominator)
    return e


class SpaceIndex:
    """Indexed view of a finite element list with memoized relation masks.

    Masks are Python int bitmasks over list positions.  ``down_of`` and
    ``up_of`` accept arbitrary elements (for example sums that fall
    outside the list) and memoize per encoding.
    """

    def __init__(self, S: SymbolicSemigroup, elements: Sequence):
        self.S = S
        self.elements = list(elements)
        self.pos = {_fastkey(e): i for i, e in enumerate(self.elements)}
        self._down = {}
        self._up = {}
        self._wb_down = {}
        self._wb_up = {}
        self._add = {}

    def __len__(self):
        return len(self.elements)

    def add(self, a, b):
        key = (_fastkey(a), _fastkey(b))
        got = self._add.get(key)
        if got is None:
            got = self.S.add(a, b)
            self._add[key] = got
        return got

    def _mask(self, cache, e, pred, flip) -> int:
        key = _fastkey(e)
        got = cache.get(key)
        if got is None:
            got = 0
            for i, z in enumerate(self.elements):
                if (pred(e, z) if flip else pred(z, e)):
                    got |= 1 << i
            cache[key] = got
        return got

    def down_of(self, e) -> int:
        """mask of { i : elements[i] <= e }"""
        return self._mask(self._down, e, self.S.leq, False)

    def up_of(self, e) -> int:
        """mask of { i : e <= elements[i] }"""
        return self._mask(self._up, e, self.S.leq, True)

    def wb_down_of(self, e) -> int:
        """mask of { i : elements[i] << e }"""
        return self._mask(self._wb_down, e, self.S.way_below, False)

    def wb_up_of(self, e) -> int:
        """mask of { i : e << elements[i] }"""
        return self._mask(self._wb_up, e, self.S.way_below, True)

    def bits(self, mask):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _o5_sample(S: SymbolicSemigroup, B: list, E: SpaceIndex):
    """Lexicographically first O5 failure over (x', x, y', y, z) in
    basis order, with the witness c drawn from E; or None."""
    idxB = SpaceIndex(S, B)
    nb = len(B)
    for ip in range(nb):
        xp = B[ip]
        for ix in _bits(idxB.wb_up_of(xp)):
            x = B[ix]
            # cmask[z-pos] = mask over E of { c : x'+c <= z <= x+c }
            cmask = [0] * nb
            for ci, c in enumerate(E.elements):
                a = E.add(xp, c)
                b = E.add(x, c)
                zs = idxB.up_of(a) & idxB.down_of(b)
                cbit = 1 << ci
                for zi in _bits(zs):
                    cmask[zi] |= cbit
            for jp in range(nb):
                yp = B[jp]
                ok_c = E.wb_up_of(yp)
                badz = 0
                for zi in range(nb):
                    if not (cmask[zi] & ok_c):
                        badz |= 1 << zi
                if not badz:
                    continue
                for jy in _bits(idxB.wb_up_of(yp)):
                    y = B[jy]
                    need = idxB.up_of(idxB.add(x, y)) & badz
                    if need:
                        zi = (need & -need).bit_length() - 1
                        return (xp, x, yp, y, B[zi])
    return None


def _o6_sample(S: SymbolicSemigroup, B: list, E: SpaceIndex):
    """Lexicographically least O6 failure over (x', x, y, z) in basis
    order, with v, w drawn from E; or None."""
    idxB = SpaceIndex(S, B)
    nb = len(B)
    # down-mask in B of E[vi] + E[wi], filled on demand, keyed by position
    vw_down = [dict() for _ in range(len(E))]
    covered_memo = {}
    best = None
    for ix in range(nb):
        x = B[ix]
        need = idxB.wb_down_of(x)  # the x' that must be reached
        vx = E.down_of(x)
        for iy in range(nb):
            y = B[iy]
            if S.leq(x, y):
                continue  # v = x, w = 0 always works
            vmask = vx & E.down_of(y)
            for iz in range(nb):
                z = B[iz]
                if not S.leq(x, idxB.add(y, z)):
                    continue
                if S.leq(x, z):
                    continue
                wmask = vx & E.down_of(z)
                key = (vmask, wmask, need)
                covered = covered_memo.get(key)
                if covered is None:
                    covered = 0
                    for vi in _bits(vmask):
                        row = vw_down[vi]
                        for wi in _bits(wmask):
                            got = row.get(wi)
                            if got is None:
                                got = idxB.down_of(
                                    S.add(E.elements[vi], E.elements[wi]))
                                row[wi] = got
                            covered |= got
                        if covered & need == need:
                            break
                    covered_memo[key] = covered
                bad = need & ~covered
                if bad:
                    ip = (bad & -bad).bit_length() - 1
                    cand = (ip, ix, iy, iz)
                    if best is None or cand < best:
                        best = cand
    if best is None:
        return None
    return (B[best[0]], B[best[1]], B[best[2]], B[best[3]])


def _wc_sample(S: SymbolicSemigroup, B: list):
    """First weak-cancellation failure (x, y, z) over basis tuples."""
    idxB = SpaceIndex(S, B)
    wb = S.way_below
    for x in B:
        for y in B:
            if wb(x, y):
                continue
            for z in B:
                if wb(idxB.add(x, z), idxB.add(y, z)):
                    return (x, y, z)
    return None


def sample_check_axioms(S: SymbolicSemigroup, depth: int, slack: int = 2):
    """Bounded check of O5, O6 and weak cancellation.

    Universal quantifiers run over basis(depth) tuples, existential
    witnesses over basis(depth + slack).  Failures are sound
    counterexamples; passes only certify the sampled range, which the
    verdict records in its params.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    B = list(dict.fromkeys(S.basis(depth)))
    E = SpaceIndex(S, list(dict.fromkeys(S.basis(depth + slack))))
    params = {"depth": depth, "slack": slack}
    out = {}
    bad5 = _o5_sample(S, B, E)
    out["O5"] = AxiomVerdict("O5", bad5 is None, bad5,
                             exact=bad5 is not None, params=dict(params))
    bad6 = _o6_sample(S, B, E)
    out["O6"] = AxiomVerdict("O6", bad6 is None, bad6,
                             exact=bad6 is not None, params=dict(params))
    badw = _wc_sample(S, B)
    out["weak-cancellation"] = AxiomVerdict(
        "weak-cancellation", badw is None, badw,
        exact=badw is not None, params=dict(params))
    return out


def replay_symbolic_axiom(S: SymbolicSemigroup, verdict: AxiomVerdict,
                          witness_pool: Optional[list] = None) -> bool:
    """Re-evaluate a sampled counterexample directly through the axiom
    statement; True means the tuple genuinely violates the axiom within
    the given witness pool (defaults to basis(6))."""
    t = verdict.counterexample
    if t is None:
        return False
    pool = witness_pool if witness_pool is not None else S.basis(6)
    add, leq, wb = S.add, S.leq, S.way_below
    if verdict.axiom == "O5":
        xp, x, yp, y, z = t
        assert wb(xp, x) and wb(yp, y) and leq(add(x, y), z)
        return not any(
            leq(add(xp, c), z) and leq(z, add(x, c)) and wb(yp, c)
            for c in pool)
    if verdict.axiom == "O6":
        xp, x, y, z = t
        assert wb(xp, x) and leq(x, add(y, z))
        return not any(
            leq(v, x) and leq(v, y) and leq(w, x) and leq(w, z)
            and leq(xp, add(v, w))
            for v in pool for w in pool)
    if verdict.axiom == "weak-cancellation":
        x, y, z = t
        assert wb(add(x, z), add(y, z))
        return not wb(x, y)
    raise ValueError(f"unknown axiom {verdict.axiom!r}")
