"""Pure-Python row-reduction kernels over bit-sliced Z2/Z4 words.

A word is a pair ``(lo, hi)`` of non-negative integers used as bitmasks:
coordinate ``j`` holds the value ``lo_j + 2*hi_j``.  Binary coordinates are
the bits outside ``ymask`` and never carry a ``hi`` bit; quaternary
coordinates are the bits inside ``ymask``.  With this encoding the group law
of Z2^a x Z4^b is a handful of bitwise operations, independent of length.

Pivot records returned by :func:`echelon` are ``(col, kind, lo, hi)`` tuples
where ``kind`` is ``KIND_X`` (binary column, entry 1), ``KIND_UNIT``
(quaternary column, entry 1) or ``KIND_TWO`` (quaternary column, entry 2).

The compiled module ``_ckernel`` exposes the same functions with identical
results; this module is the fallback and the reference.
"""

KIND_X = 0
KIND_UNIT = 1
KIND_TWO = 2

BACKEND = "python"


def add(alo, ahi, blo, bhi, ymask):
    return alo ^ blo, ahi ^ bhi ^ (alo & blo & ymask)


def scale(lo, hi, k, ymask):
    k &= 3
    if k == 0:
        return 0, 0
    if k == 1:
        return lo, hi
    if k == 2:
        return 0, lo & ymask
    return lo, hi ^ (lo & ymask)


def entry(lo, hi, col):
    return ((lo >> col) & 1) | (((hi >> col) & 1) << 1)


def _sub_multiple(lo, hi, k, plo, phi, ymask):
    # w - k*p == w + (4 - k)*p
    slo, shi = scale(plo, phi, -k, ymask)
    return lo ^ slo, hi ^ shi ^ (lo & slo & ymask)


def echelon(rows, ymask, cols, unit_only=False):
    """Reduce ``rows`` column by column in the order given by ``cols``.

    In the default (Howell) mode every pivot whose entry has additive order 2
    pushes its double back into the pool, so that the rows after any pivot
    span exactly the codewords vanishing on the columns already processed.
    ``unit_only`` accepts only unit pivots on quaternary columns and appends
    nothing; binary columns are skipped in that mode.

    Pivot rows are kept fully reduced: each later pivot clears (or, for a
    2-pivot, reduces to {0, 1}) its column in the earlier pivot rows.

    Returns ``(pivots, rest)`` where ``rest`` holds the non-zero rows that
    never became pivots.
    """
    pool = [(lo, hi) for lo, hi in rows if lo or hi]
    pivots = []
    for c in cols:
        bit = 1 << c
        idx = -1
        kind = KIND_X
        if ymask & bit:
            for i, (lo, _) in enumerate(pool):
                if lo & bit:
                    idx, kind = i, KIND_UNIT
                    break
            if idx < 0 and not unit_only:
                for i, (_, hi) in enumerate(pool):
                    if hi & bit:
                        idx, kind = i, KIND_TWO
                        break
        elif not unit_only:
            for i, (lo, _) in enumerate(pool):
                if lo & bit:
                    idx = i
                    break
        if idx < 0:
            continue

        plo, phi = pool.pop(idx)
        if kind == KIND_UNIT and phi & bit:
            plo, phi = plo, phi ^ (plo & ymask)

        new_pool = []
        for lo, hi in pool:
            e = entry(lo, hi, c)
            if e:
                lo, hi = _sub_multiple(lo, hi, e >> 1 if kind == KIND_TWO else e,
                                       plo, phi, ymask)
            if lo or hi:
                new_pool.append((lo, hi))
        pool = new_pool

        for i, (pc, pk, qlo, qhi) in enumerate(pivots):
            e = entry(qlo, qhi, c)
            k = e >> 1 if kind == KIND_TWO else e
            if k:
                qlo, qhi = _sub_multiple(qlo, qhi, k, plo, phi, ymask)
                pivots[i] = (pc, pk, qlo, qhi)

        pivots.append((c, kind, plo, phi))
        if kind != KIND_UNIT and not unit_only:
            dhi = plo & ymask
            if dhi:
                pool.append((0, dhi))
    return pivots, pool


def reduce_word(pivots, lo, hi, ymask):
    """Reduce a word against pivot records; returns the residual word.

    With pivots from a Howell-mode :func:`echelon` the residual is zero
    exactly when the word lies in the span.
    """
    for c, kind, plo, phi in pivots:
        e = entry(lo, hi, c)
        if not e:
            continue
        k = e >> 1 if kind == KIND_TWO else e
        if k:
            lo, hi = _sub_multiple(lo, hi, k, plo, phi, ymask)
    return lo, hi


def binary_echelon(vecs, cols):
    """Gauss-Jordan elimination over Z2 on bitmask vectors.

    Returns ``[(col, vec), ...]`` in pivot order; every pivot column is
    cleared from all other returned vectors.
    """
    pool = [v for v in vecs if v]
    pivots = []
    for c in cols:
        bit = 1 << c
        for i, v in enumerate(pool):
            if v & bit:
                p = pool.pop(i)
                break
        else:
            continue
        pool = [w for w in (v ^ p if v & bit else v for v in pool) if w]
        pivots = [(pc, v ^ p if v & bit else v) for pc, v in pivots]
        pivots.append((c, p))
    return pivots


def span_words(basis, ymask):
    """All sums ``sum(k_i * row_i)`` with ``0 <= k_i < order_i``.

    ``basis`` is a sequence of ``(lo, hi, order)``.  When the basis comes
    from a standard form the returned list has no repeats.
    """
    words = [(0, 0)]
    for rlo, rhi, order in basis:
        layer = words
        out = list(words)
        for _ in range(order - 1):
            layer = [(lo ^ rlo, hi ^ rhi ^ (lo & rlo & ymask)) for lo, hi in layer]
            out.extend(layer)
        words = out
    return words
