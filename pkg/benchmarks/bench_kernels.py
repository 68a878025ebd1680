"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit
from array import array

from zolotarev import _pykernels

try:
    from zolotarev import _ckernels
except ImportError:
    _ckernels = None


def _cases():
    rnd = random.Random(7)
    perm = list(range(200_000))
    rnd.shuffle(perm)
    perm = array("q", perm)
    values = array("q", range(1, 100_003))
    return [
        ("cycle_sign m=2e5", "cycle_sign", (perm,)),
        ("inversion_count m=2e5", "inversion_count", (perm,)),
        ("affine_images n=2e5", "affine_images", (200_003, 12345)),
        ("pow_images p=100003 k=5", "pow_images", (values, 5, 100_003)),
        ("power_orbit_positions 7^6", "power_orbit_positions", (7**6, 7, 3, 6 * 7**5)),
        ("legendre_sums p=99991", "legendre_sums", (99_991,)),
        ("half_factorial_mod p=99991", "half_factorial_mod", (99_991,)),
        ("vandermonde_product_mod p=19991", "vandermonde_product_mod", (19_991,)),
        ("sum_squares_product_mod p=1999", "sum_squares_product_mod", (1_999,)),
    ]


def _best(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'kernel':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, name, fargs in _cases():
        py = _best(getattr(_pykernels, name), fargs, args.repeat)
        if _ckernels is None:
            print(f"{label:34} {py:10.4f} {'-':>10} {'-':>8}")
            continue
        cy = _best(getattr(_ckernels, name), fargs, args.repeat)
        print(f"{label:34} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
