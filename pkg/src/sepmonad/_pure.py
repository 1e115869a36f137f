"""Pure Python arithmetic kernels.

Matrices are row-major flat lists of Python ints.  These functions are the
reference implementations; ``sepmonad._speed`` provides drop-in compiled
versions for machine-word sized inputs.  Everything here is exact.
"""

from math import gcd


def mul_int(a, am, an, b, bn):
    """Integer matrix product of a (am x an) and b (an x bn)."""
    # Precompute the nonzero entries of each row of b once; the matrices in
    # this package are mostly block permutations, so skipping zeros wins big.
    bnz = []
    for k in range(an):
        base = k * bn
        bnz.append([(j, b[base + j]) for j in range(bn) if b[base + j]])
    out = [0] * (am * bn)
    for i in range(am):
        abase = i * an
        cbase = i * bn
        for k in range(an):
            v = a[abase + k]
            if v == 0:
                continue
            if v == 1:
                for j, w in bnz[k]:
                    out[cbase + j] += w
            else:
                for j, w in bnz[k]:
                    out[cbase + j] += v * w
    return out


def mul_mod(a, am, an, b, bn, p):
    """Matrix product mod p; inputs are assumed reduced to 0..p-1."""
    bnz = []
    for k in range(an):
        base = k * bn
        bnz.append([(j, b[base + j]) for j in range(bn) if b[base + j]])
    out = [0] * (am * bn)
    for i in range(am):
        abase = i * an
        cbase = i * bn
        for k in range(an):
            v = a[abase + k]
            if v == 0:
                continue
            for j, w in bnz[k]:
                out[cbase + j] += v * w
    for idx in range(am * bn):
        out[idx] %= p
    return out


def rrefj_int(m, rows, cols):
    """Reduced row echelon form over the integers, fraction-free.

    Returns (den, pivots, reduced) where reduced/den is the RREF of m, so
    every pivot entry of ``reduced`` equals ``den`` and den > 0.

    Phase one is Bareiss elimination: the division by the previous pivot
    is exact by Sylvester's determinant identity, for any row swaps and
    skipped (free) columns.  Phase two clears above the pivots without
    dividing, shrinking rows by their content to keep entries near the
    minor scale; the final per-row scale factors cancel when each row is
    normalized by its own pivot and brought to the common denominator.
    """
    a = list(m)
    pivots = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i * cols + c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rb, pb = r * cols, pr * cols
            for j in range(cols):
                a[rb + j], a[pb + j] = a[pb + j], a[rb + j]
        rbase = r * cols
        piv = a[rbase + c]
        for i in range(r + 1, rows):
            base = i * cols
            f = a[base + c]
            for j in range(c, cols):
                a[base + j] = (piv * a[base + j] - f * a[rbase + j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    k = len(pivots)
    for t in range(k - 1, 0, -1):
        c = pivots[t]
        tbase = t * cols
        piv = a[tbase + c]
        for i in range(t):
            base = i * cols
            f = a[base + c]
            if f == 0:
                continue
            start = pivots[i]
            for j in range(start, cols):
                a[base + j] = piv * a[base + j] - f * a[tbase + j]
            g = 0
            for j in range(start, cols):
                v = a[base + j]
                if v:
                    g = gcd(g, v)
                    if g == 1:
                        break
            if g > 1:
                for j in range(start, cols):
                    a[base + j] //= g
    den = 1
    scaled = []
    for t in range(k):
        base = t * cols
        d = a[base + pivots[t]]
        g = 0
        for j in range(pivots[t], cols):
            v = a[base + j]
            if v:
                g = gcd(g, v)
                if g == 1:
                    break
        if g > 1:
            for j in range(pivots[t], cols):
                a[base + j] //= g
            d //= g
        if d < 0:
            for j in range(pivots[t], cols):
                a[base + j] = -a[base + j]
            d = -d
        scaled.append(d)
        den = den // gcd(den, d) * d
    for t in range(k):
        f = den // scaled[t]
        if f != 1:
            base = t * cols
            for j in range(pivots[t], cols):
                a[base + j] *= f
    return den, pivots, a


def rref_mod(m, rows, cols, p):
    """Reduced row echelon form over GF(p).  Returns (pivots, reduced)."""
    a = [v % p for v in m]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i * cols + c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rb, pb = r * cols, pr * cols
            for j in range(cols):
                a[rb + j], a[pb + j] = a[pb + j], a[rb + j]
        rbase = r * cols
        inv = pow(a[rbase + c], p - 2, p)
        if inv != 1:
            for j in range(cols):
                a[rbase + j] = a[rbase + j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            base = i * cols
            f = a[base + c]
            if f:
                for j in range(cols):
                    a[base + j] = (a[base + j] - f * a[rbase + j]) % p
        pivots.append(c)
        r += 1
    return pivots, a
