"""Element and semigroup classifiers: compact, soft, thin boundary,
complementable, simple / elementary / algebraic, Riesz properties,
almost divisibility, and the doubled-small-element finder.

On countable semigroups the universally quantified flags are bounded:
universal quantifiers run over a basis closure at the recorded depth,
existential witnesses over a deeper slice.  Compactness is exact
everywhere (a single way-below evaluation).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from ._backend import kernels
from .core import AxiomVerdict, FiniteCuPresentation
from .dimension import BoundedVerdict, _ops
from .symbolic import SymbolicSemigroup, basis_closure


def _spaces(S, depth, slack, budget):
    if isinstance(S, FiniteCuPresentation):
        carrier = list(S.elements())
        return carrier, carrier, True
    return (basis_closure(S, depth, budget),
            basis_closure(S, depth + slack, budget),
            False)


@dataclass(frozen=True)
class ElementClass:
    """Per-element flags with the parameters they were established under.

    ``compact`` is exact.  ``soft`` and ``thin_boundary`` confirmations
    are depth-relative; a thin-boundary refutation exhibits a concrete
    failing t and is exact.  ``complementable`` reflects the sampled
    dominators only.
    """

    compact: bool
    soft: bool
    thin_boundary: bool
    complementable: bool
    params: dict = field(default_factory=dict)
    thin_refutation: Optional[tuple] = None


def classify_element(S, x, depth: int = 4, slack: int = 2, budget: int = 2,
                     sample_y: int = 8) -> ElementClass:
    add, leq, wb, is_zero, zero = _ops(S)
    universe, witnesses, exact = _spaces(S, depth, slack, budget)
    params = {"depth": depth, "slack": slack, "sample_y": sample_y,
              "exact": exact}

    compact = wb(x, x)

    if is_zero(x):
        soft = True
    else:
        soft = True
        for xp in universe:
            if not wb(xp, x):
                continue
            if not any(not is_zero(t) and wb(add(xp, t), x) for t in witnesses):
                soft = False
                break

    thin = True
    thin_refutation = None
    for t in universe:
        if is_zero(t):
            continue
        if not wb(x, add(x, t)):
            thin = False
            thin_refutation = (x, t)
            break

    dominators = [y for y in universe if wb(x, y)][:sample_y]
    complementable = all(
        any(add(x, z) == y for z in witnesses) for y in dominators)

    return ElementClass(compact, soft, thin, complementable, params,
                        thin_refutation)


@dataclass(frozen=True)
class SemigroupProfile:
    simple: bool
    elementary: bool
    algebraic: bool
    soft: bool
    idempotent: bool
    dichotomy: str  # "algebraic" | "soft" | "neither" | "unknown"
    params: dict = field(default_factory=dict)


def _simple_finite(S: FiniteCuPresentation) -> bool:
    from .constructions import ideal_generated

    full = frozenset(range(S.size))
    return all(ideal_generated(S, {x}).members == full for x in range(1, S.size))


def _minimal_nonzero_finite(S: FiniteCuPresentation) -> Optional[int]:
    for m in range(1, S.size):
        if all(y in (0, m) for y in range(S.size) if S.leq(y, m)):
            return m
    return None


def profile(S, depth: int = 3, slack: int = 2, budget: int = 2,
            m_max: Optional[int] = None) -> SemigroupProfile:
    """Structure flags; exact on finite presentations, bounded otherwise.

    Simplicity of a countable semigroup is sampled through fullness:
    every nonzero y must absorb every compactly dominated x' into some
    multiple m*y with m <= m_max (default depth * 2**depth + 2).  The
    dichotomy field classifies simple semigroups as algebraic, soft or
    neither; by the zero-dimension dichotomy a simple weakly cancellative
    semigroup with O5 that is neither cannot be zero-dimensional.
    """
    add, leq, wb, is_zero, zero = _ops(S)
    finite = isinstance(S, FiniteCuPresentation)
    params = {"depth": depth, "slack": slack, "exact": finite}

    if finite:
        simple = _simple_finite(S)
        elementary = simple and (_minimal_nonzero_finite(S) is not None or S.size == 1)
        algebraic = True  # every element of a finite presentation is compact
        idempotent = all(S.add(x, x) == x for x in S.elements())
        soft_flag = all(
            classify_element(S, x, depth, slack, budget).soft for x in S.elements())
    else:
        B = list(dict.fromkeys(S.basis(depth)))
        E = list(dict.fromkeys(S.basis(depth + slack)))
        if m_max is None:
            m_max = depth * 2 ** depth + 2
        params["m_max"] = m_max
        dominated = [xp for xp in B if any(wb(xp, x) for x in B)]
        nonzero = [y for y in B if not is_zero(y)]

        def absorbed(xp, y):
            acc = zero
            for _ in range(m_max):
                acc = add(acc, y)
                if leq(xp, acc):
                    return True
            return False

        simple = all(absorbed(xp, y) for y in nonzero for xp in dominated
                     if not is_zero(xp))
        elementary = simple and any(
            all(is_zero(y) or y == m for y in E if leq(y, m)) for m in nonzero)
        algebraic = True
        for xp in B:
            for x in B:
                if not wb(xp, x):
                    continue
                if not any(wb(c, c) and leq(xp, c) and wb(c, x) for c in E):
                    algebraic = False
                    break
            if not algebraic:
                break
        idempotent = all(add(x, x) == x for x in B)
        soft_flag = all(
            classify_element(S, x, depth, slack, budget).soft for x in B)

    if not simple:
        dichotomy = "unknown"
    elif algebraic:
        dichotomy = "algebraic"
    elif soft_flag:
        dichotomy = "soft"
    else:
        dichotomy = "neither"
    return SemigroupProfile(simple, elementary, algebraic, soft_flag,
                            idempotent, dichotomy, params)


def small_elements_witness(S, u0, u1, depth: int = 2, slack: int = 2,
                           budget: int = 2):
    """First nonzero w in the closure with w + w way below both u0 and
    u1, or None.  In a simple nonelementary semigroup with O5 and O6 such
    a w always exists; elementary carriers return None."""
    add, leq, wb, is_zero, _ = _ops(S)
    if is_zero(u0) or is_zero(u1):
        raise ValueError("u0 and u1 must be nonzero")
    space, _, _ = _spaces(S, depth, slack, budget)
    for w in space:
        if is_zero(w):
            continue
        ww = add(w, w)
        if wb(ww, u0) and wb(ww, u1):
            return w
    return None


def riesz_interpolation_check(S: FiniteCuPresentation) -> AxiomVerdict:
    """Exhaustive Riesz interpolation on a finite presentation: any
    x0, x1 <= y0, y1 admit z between them."""
    bad = kernels.riesz_interp(S.size, list(S.leq_table))
    return AxiomVerdict("riesz-interpolation", bad is None,
                        None if bad is None else tuple(bad))


def almost_divisible_check(S, n_max: int, depth: int = 3, slack: int = 2,
                           budget: int = 2) -> BoundedVerdict:
    """Bounded almost divisibility: for each n <= n_max and sampled
    x' << x there is y with n*y <= x and x' <= (n+1)*y."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    add, leq, wb, is_zero, zero = _ops(S)
    universe, witnesses, exact = _spaces(S, depth, slack, budget)
    params = {"n_max": n_max, "depth": depth, "slack": slack, "exact": exact}

    def times(n, y):
        acc = zero
        for _ in range(n):
            acc = add(acc, y)
        return acc

    for n in range(1, n_max + 1):
        for xp in universe:
            for x in universe:
                if not wb(xp, x):
                    continue
                if not any(leq(times(n, y), x) and leq(xp, times(n + 1, y))
                           for y in witnesses):
                    return BoundedVerdict("refuted", (n, xp, x), params=params)
    return BoundedVerdict("verified-up-to", params=params)
