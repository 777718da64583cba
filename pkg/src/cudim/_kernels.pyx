# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels.

Function-for-function mirror of ``_kernels_py`` (same iteration order,
same first-counterexample tuples); see that module for the contract.
Down-sets are kept as multiword uint64 bitmasks, so carriers are limited
only by memory.
"""

from cpython cimport array
import array

ctypedef unsigned long long u64

ERR_NON_COMMUTATIVE = 1
ERR_NON_ASSOCIATIVE = 2
ERR_MISSING_UNIT = 3
ERR_NOT_REFLEXIVE = 4
ERR_NOT_ANTISYMMETRIC = 5
ERR_NOT_TRANSITIVE = 6
ERR_ZERO_NOT_LEAST = 7
ERR_ORDER_INCOMPATIBLE = 8

cdef array.array _INT_TMPL = array.array('i', [])
cdef array.array _U64_TMPL = array.array('Q', [])


cdef array.array _as_ints(seq):
    if isinstance(seq, array.array) and seq.typecode == 'i':
        return seq
    return array.array('i', seq)


cdef array.array _down_words(int n, int[::1] leq, int nw):
    # down[i] = bits of { j : j <= i }, laid out as n rows of nw words
    cdef array.array buf = array.clone(_U64_TMPL, n * nw, True)
    cdef u64[::1] w = buf
    cdef int i, j
    for j in range(n):
        for i in range(n):
            if leq[j * n + i]:
                w[i * nw + (j >> 6)] |= (<u64>1) << (j & 63)
    return buf


cdef array.array _up_words(int n, int[::1] leq, int nw):
    cdef array.array buf = array.clone(_U64_TMPL, n * nw, True)
    cdef u64[::1] w = buf
    cdef int i, j
    for i in range(n):
        for j in range(n):
            if leq[i * n + j]:
                w[i * nw + (j >> 6)] |= (<u64>1) << (j & 63)
    return buf


cdef inline bint _isset(u64[::1] w, int row, int nw, int bit):
    return (w[row * nw + (bit >> 6)] >> (bit & 63)) & 1


def validate_tables(n, add_seq, leq_seq):
    cdef int nn = n
    cdef array.array add_a = _as_ints(add_seq)
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] add = add_a
    cdef int[::1] leq = leq_a
    cdef int x, y, z, xy
    for x in range(nn):
        for y in range(x + 1, nn):
            if add[x * nn + y] != add[y * nn + x]:
                return (ERR_NON_COMMUTATIVE, x, y)
    for x in range(nn):
        for y in range(nn):
            xy = add[x * nn + y]
            for z in range(nn):
                if add[xy * nn + z] != add[x * nn + add[y * nn + z]]:
                    return (ERR_NON_ASSOCIATIVE, x, y, z)
    for x in range(nn):
        if add[x] != x:
            return (ERR_MISSING_UNIT, x)
    for x in range(nn):
        if not leq[x * nn + x]:
            return (ERR_NOT_REFLEXIVE, x)
    for x in range(nn):
        for y in range(nn):
            if x != y and leq[x * nn + y] and leq[y * nn + x]:
                return (ERR_NOT_ANTISYMMETRIC, x, y)
    for x in range(nn):
        for y in range(nn):
            if not leq[x * nn + y]:
                continue
            for z in range(nn):
                if leq[y * nn + z] and not leq[x * nn + z]:
                    return (ERR_NOT_TRANSITIVE, x, y, z)
    for x in range(nn):
        if not leq[x]:
            return (ERR_ZERO_NOT_LEAST, x)
    for x in range(nn):
        for y in range(nn):
            if not leq[x * nn + y]:
                continue
            for z in range(nn):
                if not leq[add[x * nn + z] * nn + add[y * nn + z]]:
                    return (ERR_ORDER_INCOMPATIBLE, x, y, z)
    return None


def dim0_scan(n, add_seq, leq_seq):
    cdef int nn = n
    cdef array.array add_a = _as_ints(add_seq)
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] add = add_a
    cdef int[::1] leq = leq_a
    cdef int nw = (nn + 63) >> 6
    cdef array.array down_a = _down_words(nn, leq, nw)
    cdef u64[::1] down = down_a
    # CSR buckets of (z1, z2) pairs by their sum, in (z1, z2) order
    cdef array.array cnt_a = array.clone(_INT_TMPL, nn + 1, True)
    cdef int[::1] cnt = cnt_a
    cdef int z1, z2, s, x, y1, y2, k, w
    for z1 in range(nn):
        for z2 in range(nn):
            cnt[add[z1 * nn + z2] + 1] += 1
    for s in range(nn):
        cnt[s + 1] += cnt[s]
    cdef array.array p1_a = array.clone(_INT_TMPL, nn * nn, True)
    cdef array.array p2_a = array.clone(_INT_TMPL, nn * nn, True)
    cdef int[::1] p1 = p1_a
    cdef int[::1] p2 = p2_a
    cdef array.array fill_a = array.clone(_INT_TMPL, nn, True)
    cdef int[::1] fill = fill_a
    for z1 in range(nn):
        for z2 in range(nn):
            s = add[z1 * nn + z2]
            k = cnt[s] + fill[s]
            p1[k] = z1
            p2[k] = z2
            fill[s] += 1
    cdef array.array avail_a = array.clone(_U64_TMPL, nw, True)
    cdef u64[::1] avail = avail_a
    cdef bint hit
    for x in range(nn):
        for y1 in range(nn):
            for w in range(nw):
                avail[w] = 0
            for k in range(cnt[x], cnt[x + 1]):
                if _isset(down, y1, nw, p1[k]):
                    avail[p2[k] >> 6] |= (<u64>1) << (p2[k] & 63)
            for y2 in range(nn):
                if not leq[x * nn + add[y1 * nn + y2]]:
                    continue
                hit = False
                for w in range(nw):
                    if avail[w] & down[y2 * nw + w]:
                        hit = True
                        break
                if not hit:
                    return (x, y1, y2)
    return None


def dim0_cex(n, add_seq, leq_seq):
    cdef int nn = n
    cdef array.array add_a = _as_ints(add_seq)
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] add = add_a
    cdef int[::1] leq = leq_a
    cdef int nw = (nn + 63) >> 6
    cdef array.array down_a = _down_words(nn, leq, nw)
    cdef u64[::1] down = down_a
    cdef array.array cov_a = array.clone(_U64_TMPL, nw, True)
    cdef u64[::1] cov = cov_a
    cdef int xp, x, y1, y2, z1, z2, s, w
    for xp in range(nn):
        for x in range(nn):
            if not leq[xp * nn + x]:
                continue
            for y1 in range(nn):
                for y2 in range(nn):
                    if not leq[x * nn + add[y1 * nn + y2]]:
                        continue
                    for w in range(nw):
                        cov[w] = 0
                    for z1 in range(nn):
                        if not leq[z1 * nn + y1]:
                            continue
                        for z2 in range(nn):
                            if not leq[z2 * nn + y2]:
                                continue
                            s = add[z1 * nn + z2]
                            if leq[s * nn + x]:
                                for w in range(nw):
                                    cov[w] |= down[s * nw + w]
                    if not ((cov[xp >> 6] >> (xp & 63)) & 1):
                        return (xp, x, y1, y2)
    return None


def dim0_witness(n, add_seq, leq_seq, xp, x, y1, y2):
    cdef int nn = n
    cdef array.array add_a = _as_ints(add_seq)
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] add = add_a
    cdef int[::1] leq = leq_a
    cdef int z1, z2, s
    cdef int cxp = xp, cx = x, cy1 = y1, cy2 = y2
    for z1 in range(nn):
        if not leq[z1 * nn + cy1]:
            continue
        for z2 in range(nn):
            if not leq[z2 * nn + cy2]:
                continue
            s = add[z1 * nn + z2]
            if leq[cxp * nn + s] and leq[s * nn + cx]:
                return (z1, z2)
    return None


cdef int _bounded_rec(int nn, int[::1] add, int[::1] leq, u64[::1] down,
                      int x, int ncolors, int r_max, int depth, int min_i,
                      int nw, u64[::1] reach, u64[::1] scratch,
                      int[::1] ys) nogil:
    # depth-first over nondecreasing nonzero summand tuples; reach holds
    # the channel sums of the current prefix at reach[depth*nw ..]
    cdef int i, y, s, z, t, w, c, a, b, total_sum
    cdef bint ok, any_bit
    cdef u64 m
    for i in range(min_i, nn - 1):
        y = i + 1
        # extend the channel reach set by one summand
        for w in range(nw):
            reach[(depth + 1) * nw + w] = 0
        for s in range(nn):
            if not ((reach[depth * nw + (s >> 6)] >> (s & 63)) & 1):
                continue
            for z in range(nn):
                if not (leq[z * nn + y] and leq[z * nn + x]):
                    continue
                t = add[s * nn + z]
                if leq[t * nn + x]:
                    reach[(depth + 1) * nw + (t >> 6)] |= (<u64>1) << (t & 63)
        ys[depth] = y
        # running sum of the summands
        if depth == 0:
            total_sum = y
        else:
            total_sum = add[ys[nn + depth - 1] * nn + y]
        ys[nn + depth] = total_sum
        if leq[x * nn + total_sum]:
            # an instance: witness iff some total of ncolors channel sums
            # dominates x
            ok = False
            if (reach[(depth + 1) * nw + (x >> 6)] >> (x & 63)) & 1:
                ok = True
            else:
                for w in range(nw):
                    scratch[w] = reach[(depth + 1) * nw + w]
                for c in range(ncolors - 1):
                    for w in range(nw):
                        scratch[nw + w] = 0
                    for a in range(nn):
                        if not ((scratch[a >> 6] >> (a & 63)) & 1):
                            continue
                        for b in range(nn):
                            if not ((reach[(depth + 1) * nw + (b >> 6)] >> (b & 63)) & 1):
                                continue
                            t = add[a * nn + b]
                            scratch[nw + (t >> 6)] |= (<u64>1) << (t & 63)
                    for w in range(nw):
                        scratch[w] = scratch[nw + w]
                for t in range(nn):
                    if ((scratch[t >> 6] >> (t & 63)) & 1) and leq[x * nn + t]:
                        ok = True
                        break
            if not ok:
                return depth + 1  # refuted; ys[0..depth] holds the tuple
        if depth + 1 < r_max:
            t = _bounded_rec(nn, add, leq, down, x, ncolors, r_max,
                             depth + 1, i, nw, reach, scratch, ys)
            if t > 0:
                return t
    return 0


def bounded_scan(n, add_seq, leq_seq, ncolors, r_max, node_cap):
    cdef int nn = n
    cdef array.array add_a = _as_ints(add_seq)
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] add = add_a
    cdef int[::1] leq = leq_a
    cdef int nw = (nn + 63) >> 6
    cdef array.array down_a = _down_words(nn, leq, nw)
    cdef u64[::1] down = down_a
    cdef double total = 0, count = 1
    cdef int r, x, got
    for r in range(1, r_max + 1):
        count = count * (nn - 1 + r - 1) / r
        total += count
        if total > node_cap:
            return ("cap",)
    cdef array.array reach_a = array.clone(_U64_TMPL, (r_max + 2) * nw, True)
    cdef u64[::1] reach = reach_a
    cdef array.array scratch_a = array.clone(_U64_TMPL, 2 * nw, True)
    cdef u64[::1] scratch = scratch_a
    cdef array.array ys_a = array.clone(_INT_TMPL, 2 * nn + 2 * r_max + 2, True)
    cdef int[::1] ys = ys_a
    cdef int w
    for x in range(nn):
        for w in range(nw):
            reach[w] = 0
        reach[0] = 1  # the zero element
        got = _bounded_rec(nn, add, leq, down, x, ncolors, r_max, 0, 0,
                           nw, reach, scratch, ys)
        if got > 0:
            return ("refuted", x, tuple(ys[i] for i in range(got)))
    return ("ok",)


def axiom_o5(n, add_seq, leq_seq):
    cdef int nn = n
    cdef array.array add_a = _as_ints(add_seq)
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] add = add_a
    cdef int[::1] leq = leq_a
    cdef int nw = (nn + 63) >> 6
    cdef array.array down_a = _down_words(nn, leq, nw)
    cdef array.array up_a = _up_words(nn, leq, nw)
    cdef u64[::1] down = down_a
    cdef u64[::1] up = up_a
    # cmask[z] = bits over c of { c : x'+c <= z <= x+c }
    cdef array.array cm_a = array.clone(_U64_TMPL, nn * nw, True)
    cdef u64[::1] cm = cm_a
    cdef array.array badz_a = array.clone(_U64_TMPL, nw, True)
    cdef u64[::1] badz = badz_a
    cdef int xp, x, yp, y, z, c, a, b, w
    cdef bint empty, anyz
    for xp in range(nn):
        for x in range(nn):
            if not leq[xp * nn + x]:
                continue
            for z in range(nn * nw):
                cm[z] = 0
            for c in range(nn):
                a = add[xp * nn + c]
                b = add[x * nn + c]
                for z in range(nn):
                    if leq[a * nn + z] and leq[z * nn + b]:
                        cm[z * nw + (c >> 6)] |= (<u64>1) << (c & 63)
            for yp in range(nn):
                anyz = False
                for w in range(nw):
                    badz[w] = 0
                for z in range(nn):
                    empty = True
                    for w in range(nw):
                        if cm[z * nw + w] & up[yp * nw + w]:
                            empty = False
                            break
                    if empty:
                        badz[z >> 6] |= (<u64>1) << (z & 63)
                        anyz = True
                if not anyz:
                    continue
                for y in range(nn):
                    if not leq[yp * nn + y]:
                        continue
                    a = add[x * nn + y]
                    for z in range(nn):
                        if leq[a * nn + z] and ((badz[z >> 6] >> (z & 63)) & 1):
                            return (xp, x, yp, y, z)
    return None


def axiom_o6(n, add_seq, leq_seq):
    cdef int nn = n
    cdef array.array add_a = _as_ints(add_seq)
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] add = add_a
    cdef int[::1] leq = leq_a
    cdef int nw = (nn + 63) >> 6
    cdef array.array down_a = _down_words(nn, leq, nw)
    cdef u64[::1] down = down_a
    cdef array.array cov_a = array.clone(_U64_TMPL, nw, True)
    cdef u64[::1] cov = cov_a
    cdef int x, y, z, v, wv, w, xp
    cdef bint full
    cdef u64 bad
    best = None
    for x in range(nn):
        for y in range(nn):
            for z in range(nn):
                if not leq[x * nn + add[y * nn + z]]:
                    continue
                for w in range(nw):
                    cov[w] = 0
                full = False
                for v in range(nn):
                    if full:
                        break
                    if not (leq[v * nn + x] and leq[v * nn + y]):
                        continue
                    for wv in range(nn):
                        if not (leq[wv * nn + x] and leq[wv * nn + z]):
                            continue
                        for w in range(nw):
                            cov[w] |= down[add[v * nn + wv] * nw + w]
                    full = True
                    for w in range(nw):
                        if down[x * nw + w] & ~cov[w]:
                            full = False
                            break
                xp = -1
                for w in range(nw):
                    bad = down[x * nw + w] & ~cov[w]
                    if bad:
                        xp = (w << 6) + _lowbit(bad)
                        break
                if xp >= 0:
                    cand = (xp, x, y, z)
                    if best is None or cand < best:
                        best = cand
    return best


cdef inline int _lowbit(u64 m) nogil:
    cdef int i = 0
    while not (m & 1):
        m >>= 1
        i += 1
    return i


def axiom_wc(n, add_seq, leq_seq):
    cdef int nn = n
    cdef array.array add_a = _as_ints(add_seq)
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] add = add_a
    cdef int[::1] leq = leq_a
    cdef int x, y, z
    for x in range(nn):
        for y in range(nn):
            if leq[x * nn + y]:
                continue
            for z in range(nn):
                if leq[add[x * nn + z] * nn + add[y * nn + z]]:
                    return (x, y, z)
    return None


def riesz_decomp(n, add_seq, leq_seq):
    cdef int nn = n
    cdef array.array add_a = _as_ints(add_seq)
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] add = add_a
    cdef int[::1] leq = leq_a
    cdef int x, y, z, e, f
    cdef bint ok
    for x in range(nn):
        for y in range(nn):
            for z in range(nn):
                if not leq[x * nn + add[y * nn + z]]:
                    continue
                ok = False
                for e in range(nn):
                    if not leq[e * nn + y]:
                        continue
                    for f in range(nn):
                        if leq[f * nn + z] and add[e * nn + f] == x:
                            ok = True
                            break
                    if ok:
                        break
                if not ok:
                    return (x, y, z)
    return None


def riesz_interp(n, leq_seq):
    cdef int nn = n
    cdef array.array leq_a = _as_ints(leq_seq)
    cdef int[::1] leq = leq_a
    cdef int nw = (nn + 63) >> 6
    cdef array.array down_a = _down_words(nn, leq, nw)
    cdef array.array up_a = _up_words(nn, leq, nw)
    cdef u64[::1] down = down_a
    cdef u64[::1] up = up_a
    cdef int x0, x1, y0, y1, w
    cdef bint hit
    for x0 in range(nn):
        for x1 in range(nn):
            for y0 in range(nn):
                if not (leq[x0 * nn + y0] and leq[x1 * nn + y0]):
                    continue
                for y1 in range(nn):
                    if not (leq[x0 * nn + y1] and leq[x1 * nn + y1]):
                        continue
                    hit = False
                    for w in range(nw):
                        if up[x0 * nw + w] & up[x1 * nw + w] \
                                & down[y0 * nw + w] & down[y1 * nw + w]:
                            hit = True
                            break
                    if not hit:
                        return (x0, x1, y0, y1)
    return None
