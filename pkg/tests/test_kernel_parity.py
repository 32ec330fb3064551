"""The compiled and pure scalar kernels must agree bit for bit."""

import random

import pytest

from slh2 import _kernel_py
from slh2._rat import Q

try:
    from slh2 import _kernel_cy
except ImportError:
    _kernel_cy = None

needs_ext = pytest.mark.skipif(
    _kernel_cy is None, reason="compiled kernel not built"
)


def _rand_poly(rng):
    return {
        (rng.randint(0, 3), rng.randint(0, 2)): Q(rng.randint(-6, 6), rng.randint(1, 5))
        for _ in range(rng.randint(1, 4))
    }


def _rand_rad(rng):
    out = {}
    for _ in range(rng.randint(0, 3)):
        out[rng.choice([1, 2, 3, 5, 6, 10])] = _rand_poly(rng)
    return out


@needs_ext
def test_poly_ops_agree():
    rng = random.Random(1)
    for _ in range(300):
        a, b = _rand_poly(rng), _rand_poly(rng)
        q = Q(rng.randint(-3, 3), rng.randint(1, 4))
        assert _kernel_cy.poly_add(a, b) == _kernel_py.poly_add(a, b)
        assert _kernel_cy.poly_sub(a, b) == _kernel_py.poly_sub(a, b)
        assert _kernel_cy.poly_mul(a, b) == _kernel_py.poly_mul(a, b)
        assert _kernel_cy.poly_neg(a) == _kernel_py.poly_neg(a)
        assert _kernel_cy.poly_scale(a, q) == _kernel_py.poly_scale(a, q)


@needs_ext
def test_rad_ops_agree():
    rng = random.Random(2)
    for _ in range(300):
        a, b = _rand_rad(rng), _rand_rad(rng)
        q = Q(rng.randint(-3, 3), rng.randint(1, 4))
        assert _kernel_cy.rad_add(a, b) == _kernel_py.rad_add(a, b)
        assert _kernel_cy.rad_sub(a, b) == _kernel_py.rad_sub(a, b)
        assert _kernel_cy.rad_mul(a, b) == _kernel_py.rad_mul(a, b)
        assert _kernel_cy.rad_neg(a) == _kernel_py.rad_neg(a)
        assert _kernel_cy.rad_scale(a, q) == _kernel_py.rad_scale(a, q)


@needs_ext
def test_sqrt_split_agrees():
    for n in range(1200):
        assert _kernel_cy.sqrt_split(n) == _kernel_py.sqrt_split(n)
    for n in (2**40, 3 * 2**40, 10**12 + 7):
        assert _kernel_cy.sqrt_split(n) == _kernel_py.sqrt_split(n)
    with pytest.raises(ValueError):
        _kernel_cy.sqrt_split(-1)


@needs_ext
def test_inputs_never_mutated():
    rng = random.Random(3)
    for kern in (_kernel_cy, _kernel_py):
        a, b = _rand_rad(rng), _rand_rad(rng)
        snap_a = {r: dict(p) for r, p in a.items()}
        snap_b = {r: dict(p) for r, p in b.items()}
        kern.rad_add(a, b)
        kern.rad_mul(a, b)
        kern.rad_sub(a, b)
        assert a == snap_a and b == snap_b
