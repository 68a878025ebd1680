"""Modular arithmetic, primality, Jacobi symbols and primitive roots.

Moduli are capped at 2**40. Python integers never overflow, and the
compiled kernels route products through 128-bit intermediates, so the cap
is a contract on inputs rather than a numerical limit of this module.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import _kernels
from .errors import DomainError, NotInvertibleError

MAX_MODULUS = 1 << 40

# Bases 2..37 are deterministic below 318665857834031151167461 (covers 64 bits);
# adding 41 extends that to 3.3e24. Past that the test is probabilistic.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BOUND_37 = 318665857834031151167461
_TRIAL_LIMIT = 1 << 20


def check_modulus(n):
    if not 2 <= n < MAX_MODULUS:
        raise DomainError(f"modulus must satisfy 2 <= n < 2**40, got {n}")


@dataclass(frozen=True)
class PrimePower:
    """The odd prime power ``p**r`` together with its totient."""

    p: int
    r: int = 1

    def __post_init__(self):
        if self.r < 1:
            raise DomainError(f"exponent r must be positive, got {self.r}")
        if self.p < 3 or not is_prime(self.p):
            raise DomainError(f"p must be an odd prime, got {self.p}")
        if self.p ** self.r >= MAX_MODULUS:
            raise DomainError(f"{self.p}**{self.r} exceeds the 2**40 modulus cap")

    @property
    def modulus(self):
        return self.p ** self.r

    @property
    def n(self):
        """phi(p**r) = p**(r-1) * (p-1)."""
        return self.p ** (self.r - 1) * (self.p - 1)


def mod_reduce(a, n):
    """Least nonnegative residue of ``a`` modulo ``n``."""
    check_modulus(n)
    return a % n


def mod_inv(a, n):
    check_modulus(n)
    if gcd(a, n) != 1:
        raise NotInvertibleError(f"{a} is not invertible modulo {n}")
    return pow(a, -1, n)


def mod_pow(a, e, n):
    check_modulus(n)
    if e < 0:
        raise DomainError(f"exponent must be nonnegative, got {e}")
    return pow(a, e, n)


def jacobi(a, n):
    """Jacobi symbol ``(a/n)`` for odd ``n >= 1``.

    Uses reciprocity and the supplements for 2 and -1; ``(a/1) = 1`` and the
    result is 0 exactly when ``gcd(a, n) > 1``.
    """
    if n < 1 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    result = 1
    if a < 0:
        a = -a
        if n % 4 == 3:
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a, p):
    return jacobi(a, p)


def is_prime(n):
    if n < 2:
        return False
    for q in _MR_WITNESSES + (41,):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    witnesses = _MR_WITNESSES if n < _MR_BOUND_37 else _MR_WITNESSES + (41,)
    for w in witnesses:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo, hi):
    """Ascending primes ``q`` with ``lo <= q <= hi`` (sieve of Eratosthenes)."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, int(hi ** 0.5) + 1):
        if sieve[q]:
            sieve[q * q::q] = bytes(len(range(q * q, hi + 1, q)))
    return [q for q in range(max(lo, 2), hi + 1) if sieve[q]]


def factorize(n):
    """Prime factorization ``{q: e}`` by trial division up to 2**20.

    Any cofactor left after trial division must be prime (checked), so the
    result is exact for every ``n < 2**40``.
    """
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    factors = {}
    q = 2
    while q * q <= n and q <= _TRIAL_LIMIT:
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        if not is_prime(n):
            raise DomainError(f"cofactor {n} is beyond trial-division range")
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n):
    result = n
    for q in factorize(n):
        result -= result // q
    return result


@lru_cache(maxsize=4096)
def _order_test_exponents(p, r):
    phi = p ** (r - 1) * (p - 1)
    return phi, tuple(phi // q for q in factorize(phi))


def is_primitive_root(g, pp):
    """True iff ``g`` has multiplicative order phi(p**r) modulo ``p**r``."""
    m = pp.modulus
    if g % pp.p == 0:
        raise DomainError(f"{g} is divisible by {pp.p}; not a unit mod {m}")
    _, exponents = _order_test_exponents(pp.p, pp.r)
    g %= m
    return all(pow(g, e, m) != 1 for e in exponents)


def enumerate_primitive_roots(pp, limit=None):
    """Ascending primitive roots of ``p**r``; stop after ``limit`` if given."""
    m = pp.modulus
    roots = []
    for g in range(1, m):
        if g % pp.p and is_primitive_root(g, pp):
            roots.append(g)
            if limit is not None and len(roots) >= limit:
                break
    return roots


def half_factorial_mod_p(p):
    """``((p-1)/2)! mod p`` by direct product."""
    if p < 3 or not is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    return _kernels.half_factorial_mod(p)


def as_sign(residue, n):
    """Interpret a residue congruent to +1 or -1 modulo ``n`` as that sign."""
    residue %= n
    if residue == 1 % n:
        return 1
    if residue == n - 1:
        return -1
    raise DomainError(f"{residue} is not congruent to +1 or -1 modulo {n}")


def require_odd_prime(p):
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
