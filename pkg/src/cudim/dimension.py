"""Covering-dimension engine.

An *instance* is a triple x' << x << y_1 + .. + y_r.  A witness against
dimension n is a matrix z[j][k] (j = 1..r, k = 0..n) with

    (i)   z[j][k] << y_j            for each j, k
    (ii)  x' << sum over j, k of z[j][k]
    (iii) sum over j of z[j][k] << x   for each k

(strict form); the relaxed form replaces << by <= everywhere, which
characterizes the same dimension.  Dimension <= n means every instance
has a witness.

Finite presentations admit exact decisions: way-below equals the order,
a witness for the diagonal instance (x, x, ys) serves every x' <= x, and
the zero-dimension case quantifies with two summands only, because a
two-summand refinement extends to any r by induction.  Countable
semigroups get bounded verdicts: instances are drawn from a closure of a
basis slice, witnesses from a deeper slice; refutations replay, passes
record their search parameters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from ._backend import kernels
from .core import FiniteCuPresentation, SearchSpaceTooLarge
from .symbolic import SymbolicSemigroup, basis_closure


@dataclass(frozen=True)
class Instance:
    """A covering instance x' << x << sum(ys); ys is nonempty."""

    x_prime: object
    x: object
    ys: Tuple

    def __post_init__(self):
        if not self.ys:
            raise ValueError("invalid-instance: ys must be nonempty")


@dataclass(frozen=True)
class Witness:
    """Witness matrix z[j][k], j over summands, k over the n+1 colors."""

    z: Tuple[Tuple, ...]
    form: str  # "strict" | "relaxed"

    @property
    def ncolors(self):
        return len(self.z[0])


@dataclass(frozen=True)
class BoundedVerdict:
    """Outcome of a bounded or certified check.

    status: "refuted" (witness/instance replays), "verified-up-to"
    (bounded pass at the recorded parameters), "certified" (named
    sufficient condition) or "not-certified" (with the failing tuple).
    """

    status: str
    witness: object = None
    reason: Optional[str] = None
    params: dict = field(default_factory=dict)

    @property
    def verified(self):
        return self.status in ("verified-up-to", "certified")


@dataclass
class Dim0Result:
    """Exact zero-dimension verdict for a finite presentation."""

    holds: bool
    counterexample: Optional[Instance]
    _S: FiniteCuPresentation

    def __bool__(self):
        return self.holds

    def witness_for(self, inst: Instance) -> Optional[Witness]:
        """Two-summand witness for one instance, or None; the instance
        must use carrier indices."""
        S = self._S
        y1, y2 = inst.ys
        got = kernels.dim0_witness(S.size, list(S.add_table), list(S.leq_table),
                                   inst.x_prime, inst.x, y1, y2)
        if got is None:
            return None
        return Witness(((got[0],), (got[1],)), "relaxed")


def _ops(S):
    if isinstance(S, FiniteCuPresentation):
        return S.add, S.leq, S.leq, (lambda x: x == 0), 0
    return S.add, S.leq, S.way_below, S.is_zero, S.zero


def sum_elements(S, xs):
    add, _, _, _, zero = _ops(S)
    acc = zero
    for x in xs:
        acc = add(acc, x)
    return acc


def make_instance(S, x_prime, x, ys) -> Instance:
    """Validate the defining way-below relations and build the instance."""
    _, _, wb, _, _ = _ops(S)
    ys = tuple(ys)
    if not wb(x_prime, x):
        raise ValueError("invalid-instance: x' is not way below x")
    if not wb(x, sum_elements(S, ys)):
        raise ValueError("invalid-instance: x is not way below the sum of ys")
    return Instance(x_prime, x, ys)


def check_witness(S, inst: Instance, wit: Witness, form: Optional[str] = None) -> bool:
    """Replay a witness directly against conditions (i)-(iii)."""
    add, leq, wb, _, zero = _ops(S)
    rel = wb if (form or wit.form) == "strict" else leq
    r = len(inst.ys)
    if len(wit.z) != r:
        return False
    ncolors = wit.ncolors
    for j in range(r):
        if len(wit.z[j]) != ncolors:
            return False
        for k in range(ncolors):
            if not rel(wit.z[j][k], inst.ys[j]):
                return False
    total = zero
    for k in range(ncolors):
        col = zero
        for j in range(r):
            col = add(col, wit.z[j][k])
        if not rel(col, inst.x):
            return False
        total = add(total, col)
    return rel(inst.x_prime, total)


def find_witness(S, inst: Instance, n: int, space: Sequence, form: str = "strict",
                 space_cap: int = 4096, slot_cap: int = 64) -> Optional[Witness]:
    """Exhaustive witness search over the given element list.

    Slots are filled j-major then k, each running through ``space`` in
    enumeration order, and the first complete assignment is returned, so
    the result is the lexicographically least witness over that order.
    Failed partial states (color sums after a full summand) are memoized.
    Instances with zero x' short-circuit to the all-zero witness.
    """
    add, leq, wb, is_zero, zero = _ops(S)
    rel = wb if form == "strict" else leq
    r = len(inst.ys)
    ncolors = n + 1
    if is_zero(inst.x_prime):
        return Witness(tuple((zero,) * ncolors for _ in range(r)), form)
    if len(space) > space_cap:
        raise SearchSpaceTooLarge(
            f"search space has {len(space)} elements (cap {space_cap})")
    if r * ncolors > slot_cap:
        raise SearchSpaceTooLarge(
            f"witness matrix has {r * ncolors} slots (cap {slot_cap})")
    space = list(dict.fromkeys(space))
    x = inst.x
    cand = []
    for y in inst.ys:
        cand.append([z for z in space if rel(z, y) and rel(z, x)])
    failed = set()

    def extend(j, k, sums, row):
        # slot (j, k); sums = color sums over the first j full summands,
        # updated in place column by column within summand j via `row`
        if k == ncolors:
            new_sums = tuple(add(sums[i], row[i]) for i in range(ncolors))
            if any(not rel(s, x) for s in new_sums):
                return None
            return advance(j + 1, new_sums)
        for z in cand[j]:
            row[k] = z
            got = extend(j, k + 1, sums, row)
            if got is not None:
                return got
        return None

    rows = [None] * r

    def advance(j, sums):
        if j == r:
            total = zero
            for s in sums:
                total = add(total, s)
            return rows[:] if rel(inst.x_prime, total) else None
        key = (j, sums)
        if key in failed:
            return None
        row = [zero] * ncolors
        rows[j] = row
        got = extend(j, 0, sums, row)
        if got is None:
            failed.add(key)
            rows[j] = None
        else:
            got[j] = tuple(row)
        return got

    start = tuple(zero for _ in range(ncolors))
    got = advance(0, start)
    if got is None:
        return None
    return Witness(tuple(got), form)


def dim_zero_exact(S: FiniteCuPresentation) -> Dim0Result:
    """Exact zero-dimension decision on a finite presentation.

    Quantifies over all x' <= x <= y1 + y2 for a two-summand witness
    x' <= z1 + z2 <= x with z_i <= y_i.  On failure the counterexample is
    the lexicographically first failing 4-tuple in index order.
    """
    n, add, leq = S.size, list(S.add_table), list(S.leq_table)
    bad = kernels.dim0_scan(n, add, leq)
    if bad is None:
        return Dim0Result(True, None, S)
    cex = kernels.dim0_cex(n, add, leq)
    xp, x, y1, y2 = cex
    return Dim0Result(False, Instance(xp, x, (y1, y2)), S)


_DEFAULT_NODE_CAP = 2_000_000


def dim_bounded(S, n: int, r_max: Optional[int] = None, depth: int = 4,
                slack: int = 2, budget: int = 2,
                node_cap: int = _DEFAULT_NODE_CAP) -> BoundedVerdict:
    """Bounded dimension <= n verification.

    Finite presentations: every instance with at most r_max summands is
    checked exactly (diagonal x' = x suffices); r_max defaults to the
    carrier size.  Symbolic semigroups: instances come from
    basis_closure(depth), witnesses (relaxed form) from
    basis_closure(depth + slack); r_max defaults to 2.  A refutation is
    flagged exact when every element of the instance is compact and the
    witness space exhausts the summands' lower bounds, which holds for
    the compact slices of the catalog entries.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if isinstance(S, FiniteCuPresentation):
        if r_max is None:
            r_max = S.size
        got = kernels.bounded_scan(S.size, list(S.add_table), list(S.leq_table),
                                   n + 1, r_max, node_cap)
        params = {"n": n, "r_max": r_max}
        if got[0] == "cap":
            raise SearchSpaceTooLarge(
                f"instance tree for r_max={r_max} exceeds {node_cap} nodes")
        if got[0] == "ok":
            return BoundedVerdict("verified-up-to", params=params)
        x, ys = got[1], got[2]
        return BoundedVerdict("refuted", Instance(x, x, tuple(ys)),
                              params=dict(params, exact=True))
    return _dim_bounded_symbolic(S, n, 2 if r_max is None else r_max,
                                 depth, slack, budget, node_cap)


def _dim_bounded_symbolic(S: SymbolicSemigroup, n, r_max, depth, slack, budget,
                          node_cap) -> BoundedVerdict:
    add, leq, wb, is_zero, zero = _ops(S)
    inst_space = basis_closure(S, depth, budget)
    wit_space = basis_closure(S, depth + slack, budget)
    params = {"n": n, "r_max": r_max, "depth": depth, "slack": slack,
              "budget": budget, "form": "relaxed",
              "instance_space": len(inst_space), "witness_space": len(wit_space)}
    nonzero = [e for e in inst_space if not is_zero(e)]
    pairs = [(xp, x) for xp in inst_space for x in inst_space if wb(xp, x)]
    est = len(pairs)
    width = 1.0
    for r in range(1, r_max + 1):
        width = width * (len(nonzero) + r - 1) / r
        est += len(pairs) * width
        if est > node_cap:
            raise SearchSpaceTooLarge(
                f"symbolic sweep would visit about {int(est)} nodes (cap {node_cap})")
    ncolors = n + 1
    cand_memo = {}

    def cands(y, x):
        key = (y, x)
        got = cand_memo.get(key)
        if got is None:
            got = [z for z in wit_space if leq(z, y) and leq(z, x)]
            cand_memo[key] = got
        return got

    def witness_exists(xp, x, reach):
        total = set(reach)
        for _ in range(ncolors - 1):
            total = {add(a, b) for a in total for b in reach}
        return any(leq(xp, t) for t in total)

    for xp, x in pairs:
        if is_zero(xp):
            continue

        def rec(min_i, ys, reach, ys_sum):
            for i in range(min_i, len(nonzero)):
                y = nonzero[i]
                ys2 = ys + (y,)
                reach2 = set()
                zs = cands(y, x)
                for s in reach:
                    for z in zs:
                        t = add(s, z)
                        if leq(t, x):
                            reach2.add(t)
                sum2 = add(ys_sum, y)
                if wb(x, sum2) and not witness_exists(xp, x, reach2):
                    return ys2
                if len(ys2) < r_max:
                    got = rec(i, ys2, reach2, sum2)
                    if got is not None:
                        return got
            return None

        bad = rec(0, (), {zero}, zero)
        if bad is not None:
            inst = Instance(xp, x, bad)
            exact = all(wb(e, e) for e in (xp, x) + bad)
            return BoundedVerdict("refuted", inst, params=dict(params, exact=exact))
    return BoundedVerdict("verified-up-to", params=params)


def certify_dim0(S, method: str, depth: int = 3, slack: int = 2,
                 budget: int = 2) -> BoundedVerdict:
    """Certified sufficient conditions for zero dimension.

    ``idempotent``: x + x = x for every sampled x (then 0, inf scaling
    collapses every instance).  ``riesz``: the designated sup-dense
    submonoid (the carrier, or the basis slice) satisfies the Riesz
    decomposition property for the pre-order induced by way-below.
    """
    params = {"method": method, "depth": depth}
    if method == "idempotent":
        add, _, _, _, _ = _ops(S)
        sample = (list(S.elements()) if isinstance(S, FiniteCuPresentation)
                  else basis_closure(S, depth, budget))
        for x in sample:
            if add(x, x) != x:
                return BoundedVerdict("not-certified", (x,), reason="idempotent",
                                      params=params)
        return BoundedVerdict("certified", reason="idempotent", params=params)
    if method == "riesz":
        if isinstance(S, FiniteCuPresentation):
            bad = kernels.riesz_decomp(S.size, list(S.add_table), list(S.leq_table))
            if bad is None:
                return BoundedVerdict("certified", reason="riesz", params=params)
            return BoundedVerdict("not-certified", tuple(bad), reason="riesz",
                                  params=params)
        return _riesz_symbolic(S, depth, slack, params)
    raise ValueError(f"unknown certificate method {method!r}")


def _riesz_symbolic(S: SymbolicSemigroup, depth, slack, params) -> BoundedVerdict:
    add, leq, wb, _, _ = _ops(S)
    B = list(dict.fromkeys(S.basis(depth)))
    E = list(dict.fromkeys(S.basis(depth + slack)))
    by_sum = {}
    for e, f in itertools.product(E, repeat=2):
        by_sum.setdefault(add(e, f), []).append((e, f))
    for x in B:
        splits = by_sum.get(x, ())
        for y in B:
            for z in B:
                if not wb(x, add(y, z)):
                    continue
                if not any(wb(e, y) and wb(f, z) for e, f in splits):
                    return BoundedVerdict("not-certified", (x, y, z),
                                          reason="riesz", params=params)
    return BoundedVerdict("certified", reason="riesz", params=params)


@dataclass
class DimReport:
    """Aggregated per-semigroup verdicts for reporting."""

    name: str
    dim0: object
    bounded: dict
    certificates: dict


def report(S, ns=(0, 1), r_max=None, depth: int = 4,
           certificates=()) -> DimReport:
    name = S.name if hasattr(S, "name") else "semigroup"
    dim0 = dim_zero_exact(S) if isinstance(S, FiniteCuPresentation) else None
    bounded = {n: dim_bounded(S, n, r_max=r_max, depth=depth) for n in ns}
    certs = {m: certify_dim0(S, m, depth=depth) for m in certificates}
    return DimReport(name, dim0, bounded, certs)
