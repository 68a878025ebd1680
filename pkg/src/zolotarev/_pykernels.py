"""Pure-Python implementations of the hot loops.

Every function here has a twin with the same name and signature in the
compiled ``_ckernels`` extension. Arrays are ``array('q')`` so both
backends share one buffer layout.
"""

from array import array

BACKEND = "python"


def cycle_sign(images):
    """Sign of the permutation ``t -> images[t]`` via its cycle count."""
    m = len(images)
    seen = bytearray(m)
    cycles = 0
    for start in range(m):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = 1
            j = images[j]
    return -1 if (m - cycles) & 1 else 1


def inversion_count(values):
    """Number of pairs ``s < t`` with ``values[s] > values[t]`` (merge count)."""
    buf = list(values)
    m = len(buf)
    tmp = [0] * m
    count = 0
    width = 1
    while width < m:
        for lo in range(0, m - width, 2 * width):
            mid = lo + width
            hi = min(lo + 2 * width, m)
            i, j, k = lo, mid, lo
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
            buf[lo:hi] = tmp[lo:hi]
        width *= 2
    return count


def is_permutation(images):
    m = len(images)
    seen = bytearray(m)
    for v in images:
        if v < 0 or v >= m or seen[v]:
            return False
        seen[v] = 1
    return True


def compose_images(outer, inner):
    return array("q", [outer[t] for t in inner])


def inverse_images(images):
    out = array("q", bytes(8 * len(images)))
    for t, v in enumerate(images):
        out[v] = t
    return out


def affine_images(n, a):
    """Images of ``t -> a*t mod n`` for ``t`` in ``0..n-1``."""
    a %= n
    return array("q", [a * t % n for t in range(n)])


def pow_images(values, e, m):
    return array("q", [pow(v, e, m) for v in values])


def power_orbit_positions(m, p, g, count):
    """Positions of ``g**1 .. g**count (mod m)`` in the ascending units mod ``m``.

    ``m`` is a power of the prime ``p``; the unit ``v`` sits at index
    ``v - 1 - v // p`` in the ascending list of residues coprime to ``p``.
    """
    out = array("q", bytes(8 * count))
    x = 1
    g %= m
    for i in range(count):
        x = x * g % m
        out[i] = x - 1 - x // p
    return out


def legendre_table(p):
    """``table[a] = (a/p)`` for ``a`` in ``0..p-1``, built by marking squares."""
    table = array("b", [-1]) * p
    table[0] = 0
    for i in range(1, (p - 1) // 2 + 1):
        table[i * i % p] = 1
    return table


def legendre_sums(p):
    """Return ``(sum_{i<=(p-1)/2} (i/p), sum_{i<=p-1} i*(i/p))``."""
    table = legendre_table(p)
    half = (p - 1) // 2
    char_sum = sum(table[1:half + 1])
    weighted = sum(i * table[i] for i in range(1, p))
    return char_sum, weighted


def half_factorial_mod(p):
    acc = 1 % p
    for i in range(2, (p - 1) // 2 + 1):
        acc = acc * i % p
    return acc


def sum_squares_product_mod(p):
    """``prod_{1<=i<j<=(p-1)/2} (i^2 + j^2) mod p`` by the double loop."""
    half = (p - 1) // 2
    sq = [i * i % p for i in range(half + 1)]
    acc = 1 % p
    for j in range(2, half + 1):
        sj = sq[j]
        for i in range(1, j):
            acc = acc * (sq[i] + sj) % p
    return acc


def vandermonde_product_mod(p):
    """``prod_{1<=i<j<=p-1} (j - i) mod p`` as ``prod_d d**(p-1-d)``."""
    acc = 1 % p
    for d in range(1, p - 1):
        acc = acc * pow(d, p - 1 - d, p) % p
    return acc


def power_orbit(m, g, count):
    """``g**1, ..., g**count (mod m)``."""
    out = array("q", bytes(8 * count))
    x = 1 % m
    g %= m
    for i in range(count):
        x = x * g % m
        out[i] = x
    return out
