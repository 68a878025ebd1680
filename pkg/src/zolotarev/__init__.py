"""Signs of permutations of residue systems and the theorems that predict them."""

__version__ = "0.1.0"
