"""Finite Cu-semigroup presentations.

A presentation is a finite positively ordered commutative monoid given by
an addition table and a partial-order table.  Index 0 is the monoid zero
and the least element.  In a finite poset every increasing sequence is
eventually constant, so the way-below relation coincides with the order,
every element is compact, and the completeness axioms O1-O4 hold by
construction.  The optional axioms O5, O6 and weak cancellation are
decided exhaustively.

Counterexamples always report the lexicographically first failing index
tuple, giving reproducible regression baselines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from ._backend import kernels
from . import _kernels_py as _codes

SIZE_SOFT_CAP = 64

_ERROR_NAMES = {
    _codes.ERR_NON_COMMUTATIVE: "non-commutative",
    _codes.ERR_NON_ASSOCIATIVE: "non-associative",
    _codes.ERR_MISSING_UNIT: "missing-unit",
    _codes.ERR_NOT_REFLEXIVE: "order-not-partial",
    _codes.ERR_NOT_ANTISYMMETRIC: "order-not-partial",
    _codes.ERR_NOT_TRANSITIVE: "order-not-partial",
    _codes.ERR_ZERO_NOT_LEAST: "zero-not-least",
    _codes.ERR_ORDER_INCOMPATIBLE: "order-incompatible",
}


class ValidationError(ValueError):
    """A presentation table violates one of its invariants."""

    def __init__(self, code: str, witness: Tuple[int, ...], detail: str = ""):
        self.code = code
        self.witness = witness
        msg = f"{code} at {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class SearchSpaceTooLarge(RuntimeError):
    """An exhaustive scan would exceed its configured cap."""


@dataclass(frozen=True)
class FiniteCuPresentation:
    """Validated finite presentation; immutable after construction.

    ``add`` and ``leq`` are flat row-major tuples of length size*size.
    Build instances through :func:`validate_presentation`.
    """

    size: int
    add_table: Tuple[int, ...]
    leq_table: Tuple[int, ...]
    names: Tuple[str, ...]
    name: str = "finite"

    def add(self, x: int, y: int) -> int:
        return self.add_table[x * self.size + y]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.leq_table[x * self.size + y])

    def way_below(self, x: int, y: int) -> bool:
        # finite poset: increasing sequences stabilize, so << equals <=
        return self.leq(x, y)

    def elements(self):
        return range(self.size)

    def sum_list(self, xs: Sequence[int]) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def down_set(self, x: int):
        return [z for z in range(self.size) if self.leq(z, x)]

    def element_name(self, x: int) -> str:
        return self.names[x]

    def __repr__(self):
        return f"FiniteCuPresentation({self.name!r}, size={self.size})"


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of one axiom check.

    ``holds`` is exact for finite presentations.  A failing verdict
    carries the first counterexample tuple in the axiom's canonical
    variable order (O5: (x', x, y', y, z); O6: (x', x, y, z); weak
    cancellation: (x, y, z)).
    """

    axiom: str
    holds: bool
    counterexample: Optional[Tuple[int, ...]] = None
    exact: bool = True
    params: dict = field(default_factory=dict)


AXIOMS = ("O5", "O6", "weak-cancellation")


def validate_presentation(size, add_rows, leq_rows, names=None, name="finite",
                          max_size=SIZE_SOFT_CAP) -> FiniteCuPresentation:
    """Validate raw tables and return an immutable presentation.

    ``add_rows``/``leq_rows`` are size x size matrices (any nested
    sequences).  Raises :class:`ValidationError` naming the first violated
    invariant with a witness tuple.  Carriers larger than ``max_size``
    (default 64) are rejected because the axiom scans are polynomial of
    degree up to five in the size; pass ``max_size=None`` to override.
    """
    if size < 1:
        raise ValidationError("missing-unit", (), "carrier must contain the zero element")
    if max_size is not None and size > max_size:
        raise ValidationError(
            "carrier-too-large", (size,),
            f"size {size} exceeds the soft cap {max_size}; pass max_size=None to override")
    if len(add_rows) != size or len(leq_rows) != size:
        raise ValidationError("bad-shape", (len(add_rows), len(leq_rows)))
    add = []
    leq = []
    for row in add_rows:
        if len(row) != size:
            raise ValidationError("bad-shape", (len(row),))
        for v in row:
            v = int(v)
            if not 0 <= v < size:
                raise ValidationError("bad-shape", (v,), "addition entry out of range")
            add.append(v)
    for row in leq_rows:
        if len(row) != size:
            raise ValidationError("bad-shape", (len(row),))
        leq.extend(1 if v else 0 for v in row)
    bad = kernels.validate_tables(size, add, leq)
    if bad is not None:
        code = _ERROR_NAMES[bad[0]]
        raise ValidationError(code, tuple(bad[1:]))
    if names is None:
        names = tuple(str(i) for i in range(size))
    else:
        names = tuple(str(s) for s in names)
        if len(names) != size:
            raise ValidationError("bad-shape", (len(names),), "names length differs from size")
    return FiniteCuPresentation(size, tuple(add), tuple(leq), names, name)


def way_below_finite(S: FiniteCuPresentation, x: int, y: int) -> bool:
    """Exact way-below relation of a finite presentation (equals <=)."""
    return S.leq(x, y)


def _o5_holds(S: FiniteCuPresentation, t) -> bool:
    xp, x, yp, y, z = t
    if not (S.leq(S.add(x, y), z) and S.leq(xp, x) and S.leq(yp, y)):
        return True  # premise fails: tuple is not an instance
    for c in S.elements():
        if S.leq(S.add(xp, c), z) and S.leq(z, S.add(x, c)) and S.leq(yp, c):
            return True
    return False


def _o6_holds(S: FiniteCuPresentation, t) -> bool:
    xp, x, y, z = t
    if not (S.leq(xp, x) and S.leq(x, S.add(y, z))):
        return True
    for v in S.elements():
        if not (S.leq(v, x) and S.leq(v, y)):
            continue
        for w in S.elements():
            if S.leq(w, x) and S.leq(w, z) and S.leq(xp, S.add(v, w)):
                return True
    return False


def _wc_holds(S: FiniteCuPresentation, t) -> bool:
    x, y, z = t
    if not S.leq(S.add(x, z), S.add(y, z)):
        return True
    return S.leq(x, y)


AXIOM_PREDICATES = {
    "O5": _o5_holds,
    "O6": _o6_holds,
    "weak-cancellation": _wc_holds,
}


def check_axiom(S: FiniteCuPresentation, which: str) -> AxiomVerdict:
    """Exhaustively decide O5, O6 or weak cancellation on a finite
    presentation (with way-below instantiated as <=)."""
    n, add, leq = S.size, list(S.add_table), list(S.leq_table)
    if which == "O5":
        bad = kernels.axiom_o5(n, add, leq)
    elif which == "O6":
        bad = kernels.axiom_o6(n, add, leq)
    elif which == "weak-cancellation":
        bad = kernels.axiom_wc(n, add, leq)
    else:
        raise ValueError(f"unknown axiom {which!r}")
    if bad is None:
        return AxiomVerdict(which, True)
    return AxiomVerdict(which, False, tuple(bad))


def axiom_report(S: FiniteCuPresentation):
    """All three axiom verdicts, as a dict keyed by axiom name."""
    return {a: check_axiom(S, a) for a in AXIOMS}


def replay_axiom(S: FiniteCuPresentation, verdict: AxiomVerdict) -> bool:
    """Re-evaluate a counterexample through the plain axiom predicate;
    True means the tuple indeed violates the axiom."""
    if verdict.counterexample is None:
        return False
    return not AXIOM_PREDICATES[verdict.axiom](S, verdict.counterexample)
