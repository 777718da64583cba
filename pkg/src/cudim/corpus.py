"""Seeded corpus of small valid presentations for the permanence suites.

Random tables essentially never satisfy associativity, so the corpus is
drawn from parameterized families that are valid by construction
(elementary, bivariant, truncated, lsc over tiny spaces, union-closed
set families) and then shuffled through validity-preserving
transformations (ideals, quotients).  Every emitted presentation is run
through the validator.
"""

from __future__ import annotations

import itertools
import random
from typing import List

from . import catalog
from .constructions import all_ideals, ideal_presentation, quotient
from .core import FiniteCuPresentation, validate_presentation

MAX_SIZE = 6


def union_closed_presentation(family, ground: int, name: str) -> FiniteCuPresentation:
    """Join semilattice of a union-closed family over range(ground): add
    is union, order is inclusion.  Idempotent, hence always valid."""
    fam = {frozenset()} | {frozenset(s) for s in family}
    while True:
        extra = {a | b for a, b in itertools.combinations(fam, 2)} - fam
        if not extra:
            break
        fam |= extra
    elems = sorted(fam, key=lambda s: (len(s), tuple(sorted(s))))
    idx = {s: i for i, s in enumerate(elems)}
    n = len(elems)
    add = [[idx[a | b] for b in elems] for a in elems]
    leq = [[1 if a <= b else 0 for b in elems] for a in elems]
    names = ["{" + ",".join(map(str, sorted(s))) + "}" for s in elems]
    return validate_presentation(n, add, leq, names, name=name)


def base_pool() -> List[FiniteCuPresentation]:
    """Deterministic pool of distinct valid presentations of size <= 6."""
    from .constructions import direct_sum

    pool = [catalog.elementary(k) for k in range(5)]
    pool += [catalog.hom_elementary(k, l)
             for k, l in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (2, 5), (3, 5)]]
    pool += [catalog.nbar_prime_truncated(2), catalog.nbar_prime_truncated(3)]
    pool.append(catalog.lsc_fin("sierpinski", 1))
    pool.append(direct_sum(catalog.elementary(0), catalog.elementary(0)))
    pool.append(direct_sum(catalog.elementary(0), catalog.elementary(1)))
    pool.append(union_closed_presentation([{0}, {1}], 2, "uc2"))
    pool.append(union_closed_presentation([{0}, {1, 2}, {0, 2}], 3, "uc3"))
    seen = set()
    out = []
    for S in pool:
        key = (S.size, S.add_table, S.leq_table)
        if key not in seen and S.size <= MAX_SIZE:
            seen.add(key)
            out.append(S)
    return out


def random_presentations(seed: int, count: int) -> List[FiniteCuPresentation]:
    """Seeded stream of valid presentations of size <= MAX_SIZE, mixing
    pool members with random ideal and quotient transformations."""
    rng = random.Random(seed)
    pool = base_pool()
    out = []
    while len(out) < count:
        S = rng.choice(pool)
        move = rng.randrange(4)
        if move == 1:
            ideals = [i for i in all_ideals(S) if len(i.members) > 1]
            if ideals:
                S = ideal_presentation(S, rng.choice(ideals))
        elif move == 2:
            ideals = all_ideals(S)
            S = quotient(S, rng.choice(ideals))
        elif move == 3:
            fam = [set(rng.sample(range(3), rng.randrange(1, 3)))
                   for _ in range(rng.randrange(1, 4))]
            T = union_closed_presentation(fam, 3, f"uc[{seed}]")
            if T.size <= MAX_SIZE:
                S = T
        if S.size <= MAX_SIZE:
            out.append(S)
    return out
