"""Permutations and residue sequences built from (p, k, r, g) parameters.

The quadratic-residue sequences share one index convention: ``A0`` is the
ascending list of quadratic residues mod ``p`` and ``A1..A4`` are

    A1: i**2, A2: (2i)**2, A3: (2i-1)**2, A4: i * (i/p)     (i = 1..(p-1)/2)

reduced mod ``p``. ``sigma_ij(i, j, p)`` is the permutation carrying ``A_j``
onto ``A_i``.
"""

from array import array
from dataclasses import dataclass
from math import gcd

from . import _kernels
from .arith import (
    MAX_MODULUS,
    PrimePower,
    is_primitive_root,
    jacobi,
    require_odd_prime,
)
from .errors import DomainError, NotBijectiveError
from .permutation import Permutation, from_sequences

SEQUENCE_LABELS = ("A0", "A1", "A2", "A3", "A4")


@dataclass(frozen=True)
class ResidueSequence:
    entries: tuple
    modulus: int
    label: str = ""

    def __post_init__(self):
        if len(set(self.entries)) != len(self.entries):
            raise DomainError(f"{self.label or 'sequence'} has repeated entries")
        if any(not 0 <= e < self.modulus for e in self.entries):
            raise DomainError(f"{self.label or 'sequence'} has entries outside [0, {self.modulus})")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]


def mul_perm(n, a):
    """Multiplication by ``a`` on ``Z/nZ``: ``t -> a*t mod n``."""
    if not 1 <= n < MAX_MODULUS:
        raise DomainError(f"modulus must satisfy 1 <= n < 2**40, got {n}")
    if gcd(a, n) != 1:
        raise DomainError(f"multiplier {a} is not a unit modulo {n}")
    return Permutation(_kernels.affine_images(n, a), check=False)


def power_perm(p, k):
    """``i -> i**k mod p`` on ``1..p-1``, as positions over the ascending list.

    Requires ``gcd(k, p-1) == 1``, which is exactly when the power map is a
    bijection of the units mod ``p``.
    """
    require_odd_prime(p)
    if k < 1:
        raise DomainError(f"exponent k must be positive, got {k}")
    if gcd(k, p - 1) != 1:
        raise NotBijectiveError(f"x**{k} is not a bijection mod {p}: gcd({k}, {p - 1}) > 1")
    values = _kernels.pow_images(array("q", range(1, p)), k, p)
    images = array("q", [v - 1 for v in values])
    if not _kernels.is_permutation(images):
        raise NotBijectiveError(f"x**{k} is not a bijection mod {p}")
    return Permutation(images, check=False)


def cube_perm_with_zero(p):
    """``k -> k**3 mod p`` on all of ``Z/pZ`` (0 fixed), for ``p = 2 mod 3``."""
    require_odd_prime(p)
    if p % 3 != 2:
        raise DomainError(f"cubing permutes Z/{p}Z only when p = 2 (mod 3)")
    return Permutation(_kernels.pow_images(array("q", range(p)), 3, p))


def quadratic_residues(p):
    require_odd_prime(p)
    return sorted({i * i % p for i in range(1, (p - 1) // 2 + 1)})


def sequence_A(i, p):
    require_odd_prime(p)
    half = (p - 1) // 2
    if i == 0:
        entries = quadratic_residues(p)
    elif i == 1:
        entries = [t * t % p for t in range(1, half + 1)]
    elif i == 2:
        entries = [(2 * t) ** 2 % p for t in range(1, half + 1)]
    elif i == 3:
        entries = [(2 * t - 1) ** 2 % p for t in range(1, half + 1)]
    elif i == 4:
        entries = [t * jacobi(t, p) % p for t in range(1, half + 1)]
    else:
        raise DomainError(f"sequence index must be in 0..4, got {i}")
    return ResidueSequence(tuple(entries), p, SEQUENCE_LABELS[i])


def sigma_ij(i, j, p):
    """The permutation ``s`` with ``A_i[t] == A_j[s(t)]``.

    Its sign equals the sign of
    ``prod_{s<t} (A_i[t] - A_i[s]) / prod_{s<t} (A_j[t] - A_j[s])``.
    Raises ``SetMismatchError`` when ``A_i`` is not a rearrangement of
    ``A_j`` (``A4`` against the others when ``p = 1 mod 4``).
    """
    return from_sequences(sequence_A(j, p).entries, sequence_A(i, p).entries)


def fold_R(k, p):
    """The ``r`` in ``0..(p-1)/2`` with ``k = r`` or ``k = -r`` (mod p)."""
    r = k % p
    return min(r, p - r)


def folded_squares(p):
    require_odd_prime(p)
    return array("q", [fold_R(i * i, p) for i in range(1, (p - 1) // 2 + 1)])


def count_Np(p):
    """Inversions of ``fold_R(1), fold_R(4), ..., fold_R(((p-1)/2)**2)``."""
    return _kernels.inversion_count(folded_squares(p))


def tau_p_perm(p):
    """``k -> k*`` on ``1..(p-1)/2`` where ``k * k* = +-1 (mod p)``."""
    require_odd_prime(p)
    half = (p - 1) // 2
    images = array("q", bytes(8 * half))
    for k in range(1, half + 1):
        inv = pow(k, -1, p)
        images[k - 1] = (inv if inv <= half else p - inv) - 1
    return Permutation(images)


def reduced_residues(pp):
    m = pp.modulus
    return ResidueSequence(tuple(b for b in range(1, m) if b % pp.p), m, f"U({m})")


def sigma_g_perm(pp, g):
    """``b_i -> g**i mod p**r`` over the ascending units ``b_1 < ... < b_n``.

    Position ``i-1`` maps to the position of ``g**i`` in that list.
    """
    if not isinstance(pp, PrimePower):
        raise DomainError("sigma_g_perm needs a PrimePower")
    if g % pp.p == 0 or not is_primitive_root(g, pp):
        raise DomainError(f"{g} is not a primitive root of {pp.modulus}")
    return Permutation(
        _kernels.power_orbit_positions(pp.modulus, pp.p, g, pp.n), check=False
    )


def kohl_perm(p, g):
    """``b -> g**b mod p`` on ``Z/pZ`` with 0 fixed; ``g`` a primitive root of ``p``."""
    require_odd_prime(p)
    pp = PrimePower(p)
    if g % p == 0 or not is_primitive_root(g, pp):
        raise DomainError(f"{g} is not a primitive root of {p}")
    return Permutation(array("q", [0]) + _kernels.power_orbit(p, g, p - 1))
