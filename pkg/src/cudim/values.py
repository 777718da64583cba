"""Exact extended non-negative rationals: Fraction values plus a single
infinity sentinel.

Order predicates on soft elements compare rationals strictly, so every
quantity in the catalog encodings is either a ``fractions.Fraction`` or
the module-level ``INF`` object.  No floats are ever involved.
"""

from __future__ import annotations

from fractions import Fraction


class _Infinity:
    """Singleton top value for the extended non-negative rationals."""

    __slots__ = ()

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_get_inf, ())


INF = _Infinity()


def _get_inf():
    return INF


def is_inf(a) -> bool:
    return a is INF


def q_le(a, b) -> bool:
    """a <= b in the extended order."""
    if a is INF:
        return b is INF
    if b is INF:
        return True
    return a <= b


def q_lt(a, b) -> bool:
    """a < b in the extended order (INF < INF is false)."""
    if a is INF:
        return False
    if b is INF:
        return True
    return a < b


def q_add(a, b):
    if a is INF or b is INF:
        return INF
    return a + b


def q_sort_key(a):
    # INF sorts after every finite value; second component only compared
    # between two Fractions.
    if a is INF:
        return (1, Fraction(0))
    return (0, a)


def q_repr(a) -> str:
    if a is INF:
        return "inf"
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def dyadics(depth: int, bound: int):
    """All positive dyadic rationals with denominator <= 2**depth and
    value <= bound, in ascending order."""
    den = 1 << depth
    out = []
    seen = set()
    for num in range(1, bound * den + 1):
        q = Fraction(num, den)
        if q not in seen:
            seen.add(q)
            out.append(q)
    return out
