"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
twin. Setting ``ZOLOTAREV_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("ZOLOTAREV_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND

cycle_sign = _impl.cycle_sign
inversion_count = _impl.inversion_count
is_permutation = _impl.is_permutation
compose_images = _impl.compose_images
inverse_images = _impl.inverse_images
affine_images = _impl.affine_images
pow_images = _impl.pow_images
power_orbit = _impl.power_orbit
power_orbit_positions = _impl.power_orbit_positions
legendre_table = _impl.legendre_table
legendre_sums = _impl.legendre_sums
half_factorial_mod = _impl.half_factorial_mod
sum_squares_product_mod = _impl.sum_squares_product_mod
vandermonde_product_mod = _impl.vandermonde_product_mod

__all__ = [
    "BACKEND",
    "cycle_sign",
    "inversion_count",
    "is_permutation",
    "compose_images",
    "inverse_images",
    "affine_images",
    "pow_images",
    "power_orbit",
    "power_orbit_positions",
    "legendre_table",
    "legendre_sums",
    "half_factorial_mod",
    "sum_squares_product_mod",
    "vandermonde_product_mod",
]
