import random
from array import array
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from conftest import BACKENDS
from oracles import (
    inversions_quadratic,
    legendre_by_squares,
    product_mod,
    sign_by_transpositions,
)
from zolotarev import _kernels

SMALL_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 101, 103, 107]


def test_selected_backend_is_compiled_when_built():
    names = [m.BACKEND for m in BACKENDS]
    if "cython" in names:
        assert _kernels.BACKEND in ("cython", "python")
    else:
        assert _kernels.BACKEND == "python"


@pytest.mark.parametrize("kernels", BACKENDS, ids=lambda m: m.BACKEND)
@given(perm=st.permutations(list(range(12))))
def test_cycle_sign_matches_transposition_count(kernels, perm):
    assert kernels.cycle_sign(perm) == sign_by_transpositions(perm)


@pytest.mark.parametrize("kernels", BACKENDS, ids=lambda m: m.BACKEND)
@given(values=st.lists(st.integers(-50, 50), max_size=60))
def test_inversion_count_matches_quadratic(kernels, values):
    assert kernels.inversion_count(values) == inversions_quadratic(values)


def test_empty_and_singleton(kernels):
    assert kernels.cycle_sign([]) == 1
    assert kernels.cycle_sign([0]) == 1
    assert kernels.inversion_count([]) == 0
    assert kernels.inversion_count([7]) == 0
    assert kernels.is_permutation([])


@pytest.mark.parametrize(
    "images, expected",
    [([0, 1, 2], True), ([1, 0], True), ([0, 0], False), ([0, 2], False), ([-1, 0], False)],
)
def test_is_permutation(kernels, images, expected):
    assert kernels.is_permutation(images) is expected


def test_compose_and_inverse(kernels):
    rng = random.Random(5)
    for m in (1, 2, 7, 50):
        a = list(range(m))
        b = list(range(m))
        rng.shuffle(a)
        rng.shuffle(b)
        assert list(kernels.compose_images(a, b)) == [a[t] for t in b]
        inv = kernels.inverse_images(a)
        assert [inv[a[t]] for t in range(m)] == list(range(m))


@pytest.mark.parametrize("n, a", [(1, 0), (4, 3), (5, 2), (12, -5), (97, 1000)])
def test_affine_images(kernels, n, a):
    assert list(kernels.affine_images(n, a)) == [a * t % n for t in range(n)]


def test_pow_images_large_modulus(kernels):
    m = (1 << 40) - 87  # prime below 2**40
    values = [2, m - 1, 123456789012, -5]
    assert list(kernels.pow_images(values, m - 2, m)) == [pow(v, m - 2, m) for v in values]


def test_power_orbits(kernels):
    for m, p, g in [(7, 7, 3), (9, 3, 2), (125, 5, -2), (2401, 7, 3)]:
        phi = m // p * (p - 1)
        vals = [pow(g, i, m) for i in range(1, phi + 1)]
        assert list(kernels.power_orbit(m, g, phi)) == vals
        units = [b for b in range(1, m) if b % p]
        pos = {b: i for i, b in enumerate(units)}
        assert list(kernels.power_orbit_positions(m, p, g, phi)) == [pos[v] for v in vals]


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_legendre_table_and_sums(kernels, p):
    table = kernels.legendre_table(p)
    assert list(table) == [legendre_by_squares(a, p) for a in range(p)]
    half = (p - 1) // 2
    char_sum, weighted = kernels.legendre_sums(p)
    assert char_sum == sum(legendre_by_squares(i, p) for i in range(1, half + 1))
    assert weighted == sum(i * legendre_by_squares(i, p) for i in range(1, p))


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_products_mod_p(kernels, p):
    half = (p - 1) // 2
    assert kernels.half_factorial_mod(p) == factorial(half) % p
    pairs = [(i, j) for i in range(1, half + 1) for j in range(i + 1, half + 1)]
    assert kernels.sum_squares_product_mod(p) == product_mod([i * i + j * j for i, j in pairs], p)
    diffs = [j - i for i in range(1, p) for j in range(i + 1, p)]
    assert kernels.vandermonde_product_mod(p) == product_mod(diffs, p)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")
@settings(max_examples=50)
@given(st.lists(st.integers(0, 10**6), min_size=0, max_size=400), st.integers(3, 5000))
def test_backends_agree(values, n):
    py, c = BACKENDS
    perm = sorted(range(len(values)), key=lambda t: (values[t], t))
    assert py.cycle_sign(perm) == c.cycle_sign(perm)
    assert py.inversion_count(values) == c.inversion_count(values)
    assert py.affine_images(n, 7) == c.affine_images(n, 7)
    assert py.pow_images(array("q", values), 65537, n) == c.pow_images(array("q", values), 65537, n)
