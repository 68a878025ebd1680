"""Exception hierarchy shared by every module."""


class ZolotarevError(Exception):
    """Base class for errors raised by this package."""


class DomainError(ZolotarevError, ValueError):
    """An argument falls outside the domain of the operation."""


class NotInvertibleError(DomainError):
    """A residue has no inverse modulo the given modulus."""


class NotBijectiveError(DomainError):
    """A residue map that should be a permutation is not bijective."""


class LengthMismatchError(ZolotarevError, ValueError):
    """Two sequences or permutations have different sizes."""


class SetMismatchError(ZolotarevError, ValueError):
    """Two sequences of equal length do not hold the same elements."""


class InconsistencyError(ZolotarevError, ArithmeticError):
    """Two independent evaluations of the same quantity disagree.

    This signals an arithmetic bug and is never expected in practice.
    """


class UnsupportedCaseError(DomainError):
    """A theorem id / parameter combination the verifier cannot handle."""
