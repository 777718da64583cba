"""Reference (pure Python) implementations of the exhaustive table kernels.

The compiled backend in ``_kernels.pyx`` mirrors these functions exactly;
``_backend`` picks whichever is importable.  Both operate on a lowered form
of a finite presentation:

- ``n``        carrier size; elements are the indices ``0 .. n-1``,
- ``add``      flat row-major table, ``add[x*n + y]`` = index of x + y,
- ``leq``      flat 0/1 table, ``leq[x*n + y] == 1``  iff  x <= y.

Element 0 is the additive zero and the least element.  Every scan walks
index tuples in ascending (lexicographic) order and reports the first
offending tuple, so verdicts and counterexamples are identical across
backends and runs.

Down-sets are handled as Python int bitmasks (bit ``i`` = element ``i``),
which keeps the fallback usable up to a few hundred elements.
"""

from __future__ import annotations

# validate_tables error codes (witness layout in parentheses)
ERR_NON_COMMUTATIVE = 1  # (x, y)
ERR_NON_ASSOCIATIVE = 2  # (x, y, z)
ERR_MISSING_UNIT = 3  # (x,)
ERR_NOT_REFLEXIVE = 4  # (x,)
ERR_NOT_ANTISYMMETRIC = 5  # (x, y)
ERR_NOT_TRANSITIVE = 6  # (x, y, z)
ERR_ZERO_NOT_LEAST = 7  # (x,)
ERR_ORDER_INCOMPATIBLE = 8  # (x, x2, y): x <= x2 but x+y !<= x2+y


def _down_masks(n, leq):
    """down[i] = bitmask of { j : j <= i }."""
    down = [0] * n
    for j in range(n):
        base = j * n
        bit = 1 << j
        for i in range(n):
            if leq[base + i]:
                down[i] |= bit
    return down


def _up_masks(n, leq):
    """up[i] = bitmask of { j : i <= j }."""
    up = [0] * n
    for i in range(n):
        base = i * n
        m = 0
        for j in range(n):
            if leq[base + j]:
                m |= 1 << j
        up[i] = m
    return up


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def validate_tables(n, add, leq):
    """Check the finite-presentation invariants.

    Returns None if every invariant holds, else ``(code, witness...)`` for
    the first violation in fixed order: commutativity, associativity, unit,
    reflexivity, antisymmetry, transitivity, zero-least, order
    compatibility.
    """
    for x in range(n):
        for y in range(x + 1, n):
            if add[x * n + y] != add[y * n + x]:
                return (ERR_NON_COMMUTATIVE, x, y)
    for x in range(n):
        for y in range(n):
            xy = add[x * n + y]
            for z in range(n):
                if add[xy * n + z] != add[x * n + add[y * n + z]]:
                    return (ERR_NON_ASSOCIATIVE, x, y, z)
    for x in range(n):
        if add[x] != x:  # add[0*n + x] by commutativity row 0
            return (ERR_MISSING_UNIT, x)
    for x in range(n):
        if not leq[x * n + x]:
            return (ERR_NOT_REFLEXIVE, x)
    for x in range(n):
        for y in range(n):
            if x != y and leq[x * n + y] and leq[y * n + x]:
                return (ERR_NOT_ANTISYMMETRIC, x, y)
    for x in range(n):
        for y in range(n):
            if not leq[x * n + y]:
                continue
            for z in range(n):
                if leq[y * n + z] and not leq[x * n + z]:
                    return (ERR_NOT_TRANSITIVE, x, y, z)
    for x in range(n):
        if not leq[x]:  # 0 <= x
            return (ERR_ZERO_NOT_LEAST, x)
    # x <= x2 implies x + y <= x2 + y; the two-sided version follows by
    # commutativity and transitivity.
    for x in range(n):
        for x2 in range(n):
            if not leq[x * n + x2]:
                continue
            for y in range(n):
                if not leq[add[x * n + y] * n + add[x2 * n + y]]:
                    return (ERR_ORDER_INCOMPATIBLE, x, x2, y)
    return None


def dim0_scan(n, add, leq):
    """Fast zero-dimensionality sweep.

    In a finite presentation the way-below relation equals <=, so the
    witness conditions collapse (by antisymmetry at x' = x) to an exact
    refinement: every x <= y1 + y2 must split as x = z1 + z2 with
    z1 <= y1 and z2 <= y2.  Returns None if every triple splits, else the
    first (x, y1, y2) in index order that does not.
    """
    down = _down_masks(n, leq)
    # pairs bucketed by their sum
    buckets = [[] for _ in range(n)]
    for z1 in range(n):
        for z2 in range(n):
            buckets[add[z1 * n + z2]].append((z1, z2))
    for x in range(n):
        pairs = buckets[x]
        for y1 in range(n):
            # avail = { z2 : (z1, z2) sums to x for some z1 <= y1 }
            avail = 0
            d1 = down[y1]
            for z1, z2 in pairs:
                if d1 & (1 << z1):
                    avail |= 1 << z2
            for y2 in range(n):
                if leq[x * n + add[y1 * n + y2]] and not (avail & down[y2]):
                    return (x, y1, y2)
    return None


def dim0_cex(n, add, leq):
    """First failing covering instance (x', x, y1, y2) in index order.

    An instance fails when no z1 <= y1, z2 <= y2 satisfy
    x' <= z1 + z2 <= x.  Used only after dim0_scan reported a failure, to
    produce the lexicographically first 4-tuple.
    """
    down = _down_masks(n, leq)
    sums = {}

    def covered(x, y1, y2):
        # bitmask of x' for which a witness sum exists
        key = (x, y1, y2)
        got = sums.get(key)
        if got is None:
            got = 0
            dx = down[x]
            for z1 in _bits(down[y1]):
                row = z1 * n
                for z2 in _bits(down[y2]):
                    s = add[row + z2]
                    if dx & (1 << s):
                        got |= down[s]
            sums[key] = got
        return got

    for xp in range(n):
        bit = 1 << xp
        for x in range(n):
            if not leq[xp * n + x]:
                continue
            for y1 in range(n):
                for y2 in range(n):
                    if leq[x * n + add[y1 * n + y2]] and not (covered(x, y1, y2) & bit):
                        return (xp, x, y1, y2)
    return None


def dim0_witness(n, add, leq, xp, x, y1, y2):
    """First (z1, z2) in index order with z1 <= y1, z2 <= y2 and
    x' <= z1 + z2 <= x, or None."""
    for z1 in range(n):
        if not leq[z1 * n + y1]:
            continue
        for z2 in range(n):
            if not leq[z2 * n + y2]:
                continue
            s = add[z1 * n + z2]
            if leq[xp * n + s] and leq[s * n + x]:
                return (z1, z2)
    return None


def bounded_scan(n, add, leq, ncolors, r_max, node_cap):
    """Sweep all covering instances with at most r_max summands for an
    (ncolors)-colored witness.

    Only diagonal instances (x' = x) are tested: a witness for (x, x, ys)
    serves every x' <= x, and a diagonal failure is itself a valid
    counterexample.  Summand tuples run over nondecreasing sequences of
    nonzero elements; zero summands never affect witness existence.

    Witness existence for one instance: a color channel can reach exactly
    the sums R = { z_1 + .. + z_r : z_j <= y_j, partial sums <= x }, the
    channels are independent, and the witness needs some total of ncolors
    channel sums to dominate x.

    Returns ('ok',), ('refuted', x, ys) with ys the first failing tuple in
    depth-first order, or ('cap',) when the instance tree would exceed
    node_cap nodes.
    """
    down = _down_masks(n, leq)
    nonzero = list(range(1, n))

    # tree-size guard: nondecreasing tuples of length <= r_max
    total = 0
    count = 1.0
    for r in range(1, r_max + 1):
        count = count * (len(nonzero) + r - 1) / r
        total += count
        if total > node_cap:
            return ("cap",)

    for x in range(n):
        result = _bounded_dfs(n, add, leq, down, x, nonzero, ncolors, r_max)
        if result is not None:
            return ("refuted", x, result)
    return ("ok",)


def _bounded_dfs(n, add, leq, down, x, nonzero, ncolors, r_max):
    """Return the first (depth-first) failing summand tuple for x, or None."""
    dx = down[x]
    xbit = 1 << x
    xrow = x * n

    def channel_extend(mask_r, y):
        # append one summand: new reachable sums, pruned to down(x)
        out = 0
        dy = down[y]
        for s in _bits(mask_r):
            row = s * n
            for z in _bits(dy & dx):
                t = add[row + z]
                if dx & (1 << t):
                    out |= 1 << t
        return out

    def has_witness(mask_r):
        if mask_r & xbit:
            return True
        total_mask = mask_r
        for _ in range(ncolors - 1):
            acc = 0
            for a in _bits(total_mask):
                row = a * n
                for b in _bits(mask_r):
                    acc |= 1 << add[row + b]
            total_mask = acc
        for t in _bits(total_mask):
            if leq[xrow + t]:
                return True
        return False

    def rec(min_i, ys, mask_r, ys_sum, depth):
        for i in range(min_i, len(nonzero)):
            y = nonzero[i]
            ys2 = ys + (y,)
            m2 = channel_extend(mask_r, y)
            s2 = add[ys_sum * n + y]
            if leq[xrow + s2] and not has_witness(m2):
                return ys2
            if depth + 1 < r_max:
                bad = rec(i, ys2, m2, s2, depth + 1)
                if bad is not None:
                    return bad
        return None

    return rec(0, (), 1, 0, 0)


def axiom_o5(n, add, leq):
    """First (x', x, y', y, z) violating O5, or None.

    O5: x + y <= z, x' <= x, y' <= y  imply some c with
    x' + c <= z <= x + c and y' <= c.
    """
    down = _down_masks(n, leq)
    up = _up_masks(n, leq)
    for xp in range(n):
        for x in _bits(up[xp]):
            # cmask[z] = bitmask of c with x' + c <= z <= x + c
            cmask = [0] * n
            for c in range(n):
                a = add[xp * n + c]
                b = add[x * n + c]
                zs = up[a] & down[b]
                cbit = 1 << c
                for z in _bits(zs):
                    cmask[z] |= cbit
            for yp in range(n):
                uyp = up[yp]
                badz = 0
                for z in range(n):
                    if not (cmask[z] & uyp):
                        badz |= 1 << z
                if not badz:
                    continue
                for y in _bits(uyp):
                    hit = up[add[x * n + y]] & badz
                    if hit:
                        z = (hit & -hit).bit_length() - 1
                        return (xp, x, yp, y, z)
    return None


def axiom_o6(n, add, leq):
    """First (x', x, y, z) violating O6, or None.

    O6: x' <= x <= y + z imply some v <= x, y and w <= x, z with
    x' <= v + w.  The scan is (x, y, z)-major; the reported tuple is the
    lexicographic minimum over all failures.
    """
    down = _down_masks(n, leq)
    best = None
    for x in range(n):
        dx = down[x]
        for y in range(n):
            v_mask = dx & down[y]
            for z in range(n):
                if not leq[x * n + add[y * n + z]]:
                    continue
                w_mask = dx & down[z]
                covered = 0
                for v in _bits(v_mask):
                    row = v * n
                    for w in _bits(w_mask):
                        covered |= down[add[row + w]]
                    if covered & dx == dx:
                        break
                bad = dx & ~covered
                if bad:
                    xp = (bad & -bad).bit_length() - 1
                    cand = (xp, x, y, z)
                    if best is None or cand < best:
                        best = cand
    return best


def axiom_wc(n, add, leq):
    """First (x, y, z) violating weak cancellation (x+z <= y+z but not
    x <= y), or None."""
    for x in range(n):
        for y in range(n):
            if leq[x * n + y]:
                continue
            for z in range(n):
                if leq[add[x * n + z] * n + add[y * n + z]]:
                    return (x, y, z)
    return None


def riesz_decomp(n, add, leq):
    """First (x, y, z) with x <= y + z admitting no split x = e + f,
    e <= y, f <= z; or None.  Certificate route, kept independent of
    dim0_scan."""
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not leq[x * n + add[y * n + z]]:
                    continue
                ok = False
                for e in range(n):
                    if not leq[e * n + y]:
                        continue
                    row = e * n
                    for f in range(n):
                        if leq[f * n + z] and add[row + f] == x:
                            ok = True
                            break
                    if ok:
                        break
                if not ok:
                    return (x, y, z)
    return None


def riesz_interp(n, leq):
    """First (x0, x1, y0, y1) with x_j <= y_k for all j,k but no z with
    x_j <= z <= y_k; or None."""
    down = _down_masks(n, leq)
    up = _up_masks(n, leq)
    for x0 in range(n):
        for x1 in range(n):
            ux = up[x0] & up[x1]
            for y0 in range(n):
                if not (leq[x0 * n + y0] and leq[x1 * n + y0]):
                    continue
                m = ux & down[y0]
                for y1 in range(n):
                    if not (leq[x0 * n + y1] and leq[x1 * n + y1]):
                        continue
                    if not (m & down[y1]):
                        return (x0, x1, y0, y1)
    return None
