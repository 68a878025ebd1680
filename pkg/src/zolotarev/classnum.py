"""Class numbers h(-p) for primes p = 3 (mod 4), and related product congruences."""

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .arith import as_sign, jacobi, require_odd_prime
from .errors import DomainError, InconsistencyError


@dataclass(frozen=True)
class ClassNumberResult:
    """h(-p) together with the two character sums it was derived from.

    ``eval_character_sum`` is ``sum_{i <= (p-1)/2} (i/p)`` and
    ``eval_weighted_sum`` is ``sum_{i <= p-1} i * (i/p)``. For ``p > 3``
    they satisfy ``h = eval_character_sum / (2 - (2/p))`` and
    ``-p * h = eval_weighted_sum``.
    """

    p: int
    h: int
    eval_character_sum: int
    eval_weighted_sum: int


def _require_3_mod_4(p, what):
    require_odd_prime(p)
    if p % 4 != 3:
        raise DomainError(f"{what} needs p = 3 (mod 4), got p = {p}")


@lru_cache(maxsize=8192)
def class_number_neg_p(p):
    """Class number of Q(sqrt(-p)) from both of Dirichlet's character sums.

    ``p = 3`` returns ``h = 1``: the unit group of Q(sqrt(-3)) has order 6
    and neither sum normalises to an integer there.
    """
    _require_3_mod_4(p, "class_number_neg_p")
    char_sum, weighted = _kernels.legendre_sums(p)
    if p == 3:
        return ClassNumberResult(3, 1, char_sum, weighted)
    denom = 2 - jacobi(2, p)
    if char_sum % denom:
        raise InconsistencyError(f"character sum {char_sum} not divisible by {denom} at p = {p}")
    if weighted % p:
        raise InconsistencyError(f"weighted sum {weighted} not divisible by {p}")
    h = char_sum // denom
    if -weighted // p != h:
        raise InconsistencyError(
            f"Dirichlet evaluations disagree at p = {p}: {h} vs {-weighted // p}"
        )
    if h < 1:
        raise InconsistencyError(f"nonpositive class number {h} at p = {p}")
    return ClassNumberResult(p, h, char_sum, weighted)


def h_neg_p(p):
    return class_number_neg_p(p).h


def mordell_check(p):
    """Both sides of ``((p-1)/2)! = (-1)**((h+1)/2) (mod p)`` as signs."""
    _require_3_mod_4(p, "mordell_check")
    if p == 3:
        raise DomainError("Mordell's congruence requires p > 3")
    factorial_side = as_sign(_kernels.half_factorial_mod(p), p)
    h = class_number_neg_p(p).h
    return factorial_side, (-1) ** ((h + 1) // 2)


def sum_of_squares_product_sign(p):
    """``prod_{1<=i<j<=(p-1)/2} (i**2 + j**2) mod p``, which is +-1."""
    _require_3_mod_4(p, "sum_of_squares_product_sign")
    return as_sign(_kernels.sum_squares_product_mod(p), p)


def vandermonde_full_product_sign(p):
    """``prod_{1<=i<j<=p-1} (j - i) mod p`` as a residue.

    Named for the comparison it feeds: the value is ``+-((p-1)/2)!``, not
    a bare sign.
    """
    _require_3_mod_4(p, "vandermonde_full_product_sign")
    return _kernels.vandermonde_product_mod(p)
