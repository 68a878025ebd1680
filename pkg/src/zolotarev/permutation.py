"""Permutations of ``{0, ..., m-1}`` in one-line form, with exact signs."""

from array import array

from . import _kernels
from .errors import DomainError, LengthMismatchError, SetMismatchError


class Permutation:
    """A bijection of ``{0, ..., m-1}``; ``perm[t]`` is the image of ``t``.

    Positions are 0-based internally; ``one_line()`` and ``cycles()`` render
    1-based for reports.
    """

    __slots__ = ("_images",)

    def __init__(self, images, check=True):
        if not (isinstance(images, array) and images.typecode == "q"):
            images = array("q", images)
        if check and not _kernels.is_permutation(images):
            raise DomainError("images are not a bijection of 0..m-1")
        self._images = images

    @classmethod
    def identity(cls, m):
        return cls(array("q", range(m)), check=False)

    @property
    def images(self):
        return self._images

    def __len__(self):
        return len(self._images)

    def __getitem__(self, t):
        return self._images[t]

    def __iter__(self):
        return iter(self._images)

    def __call__(self, t):
        return self._images[t]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self):
        return hash(self._images.tobytes())

    def __repr__(self):
        if len(self) <= 20:
            return f"Permutation({list(self._images)})"
        return f"Permutation(<size {len(self)}>)"

    def __reduce__(self):
        return (Permutation, (self._images, False))

    def sign(self):
        return _kernels.cycle_sign(self._images)

    def inversions(self):
        return _kernels.inversion_count(self._images)

    def compose(self, other):
        """``(self o other)(t) = self(other(t))``."""
        if len(self) != len(other):
            raise LengthMismatchError(
                f"cannot compose permutations of sizes {len(self)} and {len(other)}"
            )
        return Permutation(_kernels.compose_images(self._images, other._images), check=False)

    def inverse(self):
        return Permutation(_kernels.inverse_images(self._images), check=False)

    def apply(self, seq):
        """Return ``[seq[self(t)] for t]``."""
        return [seq[v] for v in self._images]

    def is_identity(self):
        return all(v == t for t, v in enumerate(self._images))

    def one_line(self):
        return [v + 1 for v in self._images]

    def cycles(self):
        """Nontrivial cycles, 1-based, each starting at its smallest element."""
        seen = bytearray(len(self))
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = 1
                cyc.append(j + 1)
                j = self._images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


def from_sequences(a, b):
    """The permutation ``s`` with ``b[t] == a[s(t)]`` for every ``t``."""
    if len(a) != len(b):
        raise LengthMismatchError(f"sequences have lengths {len(a)} and {len(b)}")
    position = {}
    for idx, value in enumerate(a):
        if value in position:
            raise DomainError(f"entry {value} repeats in the first sequence")
        position[value] = idx
    try:
        images = array("q", [position[v] for v in b])
    except KeyError as exc:
        raise SetMismatchError(f"entry {exc.args[0]} of the second sequence is missing from the first") from None
    if not _kernels.is_permutation(images):
        raise SetMismatchError("the second sequence repeats an entry")
    return Permutation(images, check=False)


def sign(perm):
    return perm.sign()


def inversions(perm):
    return perm.inversions()


def compose(outer, inner):
    return outer.compose(inner)


def inverse(perm):
    return perm.inverse()
