# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Same contracts as ``sepmonad._pure``: row-major flat lists of Python ints.
Values are staged into C int64 with 128-bit intermediates.  Any input or
result outside the safe range raises OverflowError, and the dispatcher in
``sepmonad.backend`` reruns the call on the pure big-integer kernels, so
exactness is never at risk.

The 128-bit type is declared to Cython with a 64-bit base type, so any
binary operation mixing it with an int64 may get an inserted truncating
cast.  Every expression below therefore keeps both operands 128-bit
(bounds, moduli, and pivots are mirrored into i128 locals before use).
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64

cdef extern from *:
    """
    typedef __int128 sep_i128;
    """
    ctypedef long long i128 "sep_i128"

# Inputs to products are capped at 2^56 and accumulated in 128-bit ints over
# at most DIM_BOUND terms (2^12 * 2^112 < 2^127), so accumulators never wrap.
cdef i64 INPUT_BOUND = (<i64>1) << 56
cdef i64 VALUE_BOUND = (<i64>1) << 62
cdef Py_ssize_t DIM_BOUND = 4096


cdef i64 *_to_c(object vals, Py_ssize_t n, i64 bound) except NULL:
    cdef i64 *buf = <i64 *>malloc(n * sizeof(i64) if n else sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t idx
    cdef i64 v
    try:
        for idx in range(n):
            v = vals[idx]  # conversion raises OverflowError beyond int64
            if v > bound or v < -bound:
                raise OverflowError("entry exceeds compiled-backend bound")
            buf[idx] = v
    except BaseException:
        free(buf)
        raise
    return buf


def mul_int(a, Py_ssize_t am, Py_ssize_t an, b, Py_ssize_t bn):
    """Integer matrix product of a (am x an) and b (an x bn)."""
    if an > DIM_BOUND:
        raise OverflowError("inner dimension exceeds compiled-backend bound")
    cdef i64 *ca = _to_c(a, am * an, INPUT_BOUND)
    cdef i64 *cb = NULL
    cdef i128 *acc = NULL
    cdef Py_ssize_t i, j, k
    cdef i64 v
    cdef i128 t
    cdef i128 vbound = <i128>VALUE_BOUND
    try:
        cb = _to_c(b, an * bn, INPUT_BOUND)
        acc = <i128 *>malloc(bn * sizeof(i128) if bn else sizeof(i128))
        if acc == NULL:
            raise MemoryError()
        out = [0] * (am * bn)
        for i in range(am):
            for j in range(bn):
                acc[j] = 0
            for k in range(an):
                v = ca[i * an + k]
                if v != 0:
                    for j in range(bn):
                        acc[j] = acc[j] + (<i128>v) * (<i128>cb[k * bn + j])
            for j in range(bn):
                t = acc[j]
                if t > vbound or t < -vbound:
                    raise OverflowError("product exceeds compiled-backend bound")
                out[i * bn + j] = <i64>t
        return out
    finally:
        free(ca)
        if cb != NULL:
            free(cb)
        if acc != NULL:
            free(acc)


def mul_mod(a, Py_ssize_t am, Py_ssize_t an, b, Py_ssize_t bn, i64 p):
    """Matrix product mod p; inputs are assumed reduced to 0..p-1."""
    if an > DIM_BOUND:
        raise OverflowError("inner dimension exceeds compiled-backend bound")
    if p <= 1 or p > (<i64>1) << 31:
        raise OverflowError("modulus exceeds compiled-backend bound")
    cdef i64 *ca = _to_c(a, am * an, (<i64>1) << 31)
    cdef i64 *cb = NULL
    cdef i128 *acc = NULL
    cdef Py_ssize_t i, j, k
    cdef i64 v
    cdef i128 p128 = <i128>p
    try:
        cb = _to_c(b, an * bn, (<i64>1) << 31)
        acc = <i128 *>malloc(bn * sizeof(i128) if bn else sizeof(i128))
        if acc == NULL:
            raise MemoryError()
        out = [0] * (am * bn)
        for i in range(am):
            for j in range(bn):
                acc[j] = 0
            for k in range(an):
                v = ca[i * an + k]
                if v != 0:
                    for j in range(bn):
                        acc[j] = acc[j] + (<i128>v) * (<i128>cb[k * bn + j])
            for j in range(bn):
                out[i * bn + j] = <i64>(acc[j] % p128)
        return out
    finally:
        free(ca)
        if cb != NULL:
            free(cb)
        if acc != NULL:
            free(acc)


cdef i64 _gcd64(i64 x, i64 y):
    if x < 0:
        x = -x
    if y < 0:
        y = -y
    cdef i64 t
    while y != 0:
        t = x % y
        x = y
        y = t
    return x


def rrefj_int(m, Py_ssize_t rows, Py_ssize_t cols):
    """Reduced row echelon form over the integers, fraction-free.

    Returns (den, pivots, reduced); same contract and algorithm as the
    pure version: Bareiss forward elimination (exact divisions), then a
    division-free Jordan phase with content reduction, then per-row
    normalization to the common denominator den > 0.
    """
    cdef i64 *a = _to_c(m, rows * cols, VALUE_BOUND)
    cdef i64 piv, f, tmp, g, d, den, fac
    cdef i128 t, q, prev128
    cdef i128 vbound = <i128>VALUE_BOUND
    cdef Py_ssize_t r = 0, c, i, j, pr, rbase, base, k, ti, start
    pivots = []
    prev128 = 1
    try:
        for c in range(cols):
            if r == rows:
                break
            pr = -1
            for i in range(r, rows):
                if a[i * cols + c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                rbase = r * cols
                base = pr * cols
                for j in range(cols):
                    tmp = a[rbase + j]
                    a[rbase + j] = a[base + j]
                    a[base + j] = tmp
            rbase = r * cols
            piv = a[rbase + c]
            for i in range(r + 1, rows):
                base = i * cols
                f = a[base + c]
                for j in range(c, cols):
                    t = (<i128>piv) * (<i128>a[base + j]) - (<i128>f) * (<i128>a[rbase + j])
                    q = t / prev128
                    if q * prev128 != t:
                        raise ArithmeticError("inexact division in fraction-free elimination")
                    if q > vbound or q < -vbound:
                        raise OverflowError("entry exceeds compiled-backend bound")
                    a[base + j] = <i64>q
            prev128 = <i128>piv
            pivots.append(c)
            r += 1
        k = len(pivots)
        for ti in range(k - 1, 0, -1):
            c = pivots[ti]
            rbase = ti * cols
            piv = a[rbase + c]
            for i in range(ti):
                base = i * cols
                f = a[base + c]
                if f == 0:
                    continue
                start = pivots[i]
                for j in range(start, cols):
                    t = (<i128>piv) * (<i128>a[base + j]) - (<i128>f) * (<i128>a[rbase + j])
                    if t > vbound or t < -vbound:
                        raise OverflowError("entry exceeds compiled-backend bound")
                    a[base + j] = <i64>t
                g = 0
                for j in range(start, cols):
                    if a[base + j] != 0:
                        g = _gcd64(g, a[base + j])
                        if g == 1:
                            break
                if g > 1:
                    for j in range(start, cols):
                        a[base + j] = a[base + j] / g
        den = 1
        scaled = []
        for ti in range(k):
            base = ti * cols
            start = pivots[ti]
            d = a[base + start]
            g = 0
            for j in range(start, cols):
                if a[base + j] != 0:
                    g = _gcd64(g, a[base + j])
                    if g == 1:
                        break
            if g > 1:
                for j in range(start, cols):
                    a[base + j] = a[base + j] / g
                d = d / g
            if d < 0:
                for j in range(start, cols):
                    a[base + j] = -a[base + j]
                d = -d
            scaled.append(int(d))
            t = (<i128>(den / _gcd64(den, d))) * (<i128>d)
            if t > vbound:
                raise OverflowError("denominator exceeds compiled-backend bound")
            den = <i64>t
        for ti in range(k):
            fac = den / (<i64>scaled[ti])
            if fac != 1:
                base = ti * cols
                for j in range(pivots[ti], cols):
                    t = (<i128>a[base + j]) * (<i128>fac)
                    if t > vbound or t < -vbound:
                        raise OverflowError("entry exceeds compiled-backend bound")
                    a[base + j] = <i64>t
        out = [0] * (rows * cols)
        for i in range(rows * cols):
            out[i] = a[i]
        return int(den), pivots, out
    finally:
        free(a)


cdef i64 _modpow(i64 base, i64 e, i64 p):
    cdef i128 p128 = <i128>p
    cdef i128 acc = 1
    cdef i128 b = (<i128>base) % p128
    while e > 0:
        if e & 1:
            acc = (acc * b) % p128
        b = (b * b) % p128
        e >>= 1
    return <i64>acc


def rref_mod(m, Py_ssize_t rows, Py_ssize_t cols, i64 p):
    """Reduced row echelon form over GF(p).  Returns (pivots, reduced)."""
    if p <= 1 or p > (<i64>1) << 31:
        raise OverflowError("modulus exceeds compiled-backend bound")
    cdef i64 *a = _to_c(m, rows * cols, (<i64>1) << 31)
    cdef i64 inv, f, tmp
    cdef i128 t
    cdef i128 p128 = <i128>p
    cdef Py_ssize_t r = 0, c, i, j, pr, rbase, base
    pivots = []
    try:
        for c in range(cols):
            if r == rows:
                break
            pr = -1
            for i in range(r, rows):
                if a[i * cols + c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                rbase = r * cols
                base = pr * cols
                for j in range(cols):
                    tmp = a[rbase + j]
                    a[rbase + j] = a[base + j]
                    a[base + j] = tmp
            rbase = r * cols
            inv = _modpow(a[rbase + c], p - 2, p)
            if inv != 1:
                for j in range(cols):
                    t = (<i128>a[rbase + j]) * (<i128>inv)
                    a[rbase + j] = <i64>(t % p128)
            for i in range(rows):
                if i == r:
                    continue
                base = i * cols
                f = a[base + c]
                if f != 0:
                    for j in range(cols):
                        t = (<i128>a[base + j]) - (<i128>f) * (<i128>a[rbase + j])
                        a[base + j] = <i64>(((t % p128) + p128) % p128)
            pivots.append(c)
            r += 1
        out = [0] * (rows * cols)
        for i in range(rows * cols):
            out[i] = a[i]
        return pivots, out
    finally:
        free(a)
