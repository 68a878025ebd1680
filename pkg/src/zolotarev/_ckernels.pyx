# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot loops.

Same names, signatures and results as ``_pykernels``. Residue products
go through an unsigned 128-bit intermediate, so moduli up to 2**40 (and
well beyond) never overflow.
"""

from array import array

from libc.stdint cimport int64_t, uint64_t, int8_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

BACKEND = "cython"


cdef inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) nogil:
    return <uint64_t>((<u128>a * b) % m)


cdef inline uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) nogil:
    cdef uint64_t r = 1 % m
    b %= m
    while e:
        if e & 1:
            r = mulmod(r, b, m)
        b = mulmod(b, b, m)
        e >>= 1
    return r


cdef object _as_q(object seq):
    if isinstance(seq, array) and seq.typecode == "q":
        return seq
    return array("q", seq)


cdef object _new_q(Py_ssize_t m):
    return array("q", bytes(8 * m))


def cycle_sign(images):
    cdef const int64_t[::1] img = _as_q(images)
    cdef Py_ssize_t m = img.shape[0]
    cdef Py_ssize_t start, j, cycles = 0
    if m == 0:
        return 1
    cdef unsigned char *seen = <unsigned char *>malloc(m)
    if seen == NULL:
        raise MemoryError()
    try:
        with nogil:
            for start in range(m):
                seen[start] = 0
            for start in range(m):
                if seen[start]:
                    continue
                cycles += 1
                j = start
                while not seen[j]:
                    seen[j] = 1
                    j = img[j]
    finally:
        free(seen)
    return -1 if (m - cycles) & 1 else 1


def inversion_count(values):
    cdef const int64_t[::1] src = _as_q(values)
    cdef Py_ssize_t m = src.shape[0]
    cdef Py_ssize_t width, lo, mid, hi, i, j, k
    cdef unsigned long long count = 0
    if m < 2:
        return 0
    cdef int64_t *buf = <int64_t *>malloc(m * sizeof(int64_t))
    cdef int64_t *tmp = <int64_t *>malloc(m * sizeof(int64_t))
    cdef int64_t *swap
    if buf == NULL or tmp == NULL:
        free(buf)
        free(tmp)
        raise MemoryError()
    try:
        with nogil:
            for i in range(m):
                buf[i] = src[i]
            width = 1
            while width < m:
                lo = 0
                while lo < m:
                    mid = lo + width
                    if mid > m:
                        mid = m
                    hi = lo + 2 * width
                    if hi > m:
                        hi = m
                    i = lo
                    j = mid
                    k = lo
                    while i < mid and j < hi:
                        if buf[j] < buf[i]:
                            tmp[k] = buf[j]
                            count += mid - i
                            j += 1
                        else:
                            tmp[k] = buf[i]
                            i += 1
                        k += 1
                    while i < mid:
                        tmp[k] = buf[i]
                        i += 1
                        k += 1
                    while j < hi:
                        tmp[k] = buf[j]
                        j += 1
                        k += 1
                    lo += 2 * width
                swap = buf
                buf = tmp
                tmp = swap
                width *= 2
    finally:
        free(buf)
        free(tmp)
    return count


def is_permutation(images):
    cdef const int64_t[::1] img = _as_q(images)
    cdef Py_ssize_t m = img.shape[0]
    cdef Py_ssize_t t
    cdef int64_t v
    cdef bint ok = True
    if m == 0:
        return True
    cdef unsigned char *seen = <unsigned char *>malloc(m)
    if seen == NULL:
        raise MemoryError()
    try:
        with nogil:
            for t in range(m):
                seen[t] = 0
            for t in range(m):
                v = img[t]
                if v < 0 or v >= m or seen[v]:
                    ok = False
                    break
                seen[v] = 1
    finally:
        free(seen)
    return ok


def compose_images(outer, inner):
    cdef const int64_t[::1] a = _as_q(outer)
    cdef const int64_t[::1] b = _as_q(inner)
    cdef Py_ssize_t m = b.shape[0]
    cdef Py_ssize_t t
    res = _new_q(m)
    cdef int64_t[::1] out = res
    with nogil:
        for t in range(m):
            out[t] = a[b[t]]
    return res


def inverse_images(images):
    cdef const int64_t[::1] a = _as_q(images)
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t t
    res = _new_q(m)
    cdef int64_t[::1] out = res
    with nogil:
        for t in range(m):
            out[a[t]] = t
    return res


def affine_images(long long n, long long a):
    cdef long long r = a % n
    if r < 0:
        r += n
    cdef uint64_t un = n
    cdef uint64_t ua = r
    cdef uint64_t x = 0
    cdef Py_ssize_t t
    res = _new_q(n)
    cdef int64_t[::1] out = res
    with nogil:
        for t in range(n):
            out[t] = <int64_t>x
            x += ua
            if x >= un:
                x -= un
    return res


def pow_images(values, unsigned long long e, unsigned long long m):
    cdef const int64_t[::1] v = _as_q(values)
    cdef Py_ssize_t size = v.shape[0]
    cdef Py_ssize_t t
    cdef int64_t x
    cdef int64_t sm = <int64_t>m
    res = _new_q(size)
    cdef int64_t[::1] out = res
    with nogil:
        for t in range(size):
            x = v[t] % sm
            if x < 0:
                x += sm
            out[t] = <int64_t>powmod(<uint64_t>x, e, m)
    return res


def power_orbit_positions(unsigned long long m, unsigned long long p,
                          long long g, Py_ssize_t count):
    cdef long long r = g % <long long>m
    if r < 0:
        r += <long long>m
    cdef uint64_t ug = r
    cdef uint64_t x = 1 % m
    cdef Py_ssize_t i
    res = _new_q(count)
    cdef int64_t[::1] out = res
    with nogil:
        for i in range(count):
            x = mulmod(x, ug, m)
            out[i] = <int64_t>(x - 1 - x // p)
    return res


def legendre_table(unsigned long long p):
    res = array("b", [-1]) * p
    cdef int8_t[::1] table = res
    cdef uint64_t i
    cdef uint64_t half = (p - 1) // 2
    with nogil:
        table[0] = 0
        for i in range(1, half + 1):
            table[mulmod(i, i, p)] = 1
    return res


def legendre_sums(unsigned long long p):
    cdef int8_t[::1] table = legendre_table(p)
    cdef uint64_t half = (p - 1) // 2
    cdef uint64_t i
    cdef long long char_sum = 0
    cdef long long weighted = 0
    with nogil:
        for i in range(1, half + 1):
            char_sum += table[i]
        for i in range(1, p):
            weighted += <long long>i * table[i]
    return char_sum, weighted


def half_factorial_mod(unsigned long long p):
    cdef uint64_t acc = 1 % p
    cdef uint64_t i
    cdef uint64_t half = (p - 1) // 2
    with nogil:
        for i in range(2, half + 1):
            acc = mulmod(acc, i, p)
    return acc


def sum_squares_product_mod(unsigned long long p):
    cdef uint64_t half = (p - 1) // 2
    cdef uint64_t i, j, sj, s
    cdef uint64_t acc = 1 % p
    cdef uint64_t *sq = <uint64_t *>malloc((half + 1) * sizeof(uint64_t))
    if sq == NULL:
        raise MemoryError()
    try:
        with nogil:
            for i in range(half + 1):
                sq[i] = mulmod(i, i, p)
            for j in range(2, half + 1):
                sj = sq[j]
                for i in range(1, j):
                    s = sq[i] + sj
                    if s >= p:
                        s -= p
                    acc = mulmod(acc, s, p)
    finally:
        free(sq)
    return acc


def vandermonde_product_mod(unsigned long long p):
    cdef uint64_t acc = 1 % p
    cdef uint64_t d
    with nogil:
        for d in range(1, p - 1):
            acc = mulmod(acc, powmod(d, p - 1 - d, p), p)
    return acc


def power_orbit(unsigned long long m, long long g, Py_ssize_t count):
    cdef long long r = g % <long long>m
    if r < 0:
        r += <long long>m
    cdef uint64_t ug = r
    cdef uint64_t x = 1 % m
    cdef Py_ssize_t i
    res = _new_q(count)
    cdef int64_t[::1] out = res
    with nogil:
        for i in range(count):
            x = mulmod(x, ug, m)
            out[i] = <int64_t>x
    return res
