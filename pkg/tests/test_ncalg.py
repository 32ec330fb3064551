import random
from itertools import product
from math import comb

import pytest

from slh2 import pbwcheck
from slh2.exprio import parse
from slh2.ncalg import (
    GL,
    SL,
    NCPoly,
    count_normal_words,
    gen,
    normal_form,
    quantum_determinant,
)
from slh2.scalar import H, rational


def test_nf_xv():
    assert normal_form([("xv", 1)], GL) == parse("v*x - h*v^2", GL)


def test_nf_already_normal():
    assert normal_form([("x", 1)], GL) == gen("x", GL)


def test_sl_determinant_is_one():
    assert normal_form(
        [("xy", 1), ("uv", -1), ("xv", -H)], SL
    ) == NCPoly.one(SL)
    assert quantum_determinant(SL) == NCPoly.one(SL)


def test_gl_determinant_normal_form():
    # D = xy - uv - h xv normal-orders to xy - vu + h vy
    d = quantum_determinant(GL)
    assert d == parse("x*y - v*u + h*v*y", GL)


def test_determinant_classical_limit():
    d = quantum_determinant(GL).specialize(h_value=0)
    assert d == parse("x*y - v*u", GL).specialize(h_value=0)


def test_mul_examples():
    assert gen("x", GL) * gen("v", GL) == normal_form([("xv", 1)], GL)
    p = parse("1 + 2*v*u - h*x", GL)
    assert NCPoly.one(GL) * p == p
    d = quantum_determinant(GL)
    for name in "vxyu":
        g = gen(name, GL)
        assert (d * g - g * d).is_zero()


def test_ring_mismatch_raises():
    with pytest.raises(ValueError):
        gen("x", GL) * gen("v", SL)
    with pytest.raises(ValueError):
        gen("x", GL) + gen("v", SL)


def test_count_normal_words():
    assert count_normal_words(0) == 1
    assert count_normal_words(1) == 4
    assert count_normal_words(3) == 20
    for n in range(7):
        assert count_normal_words(n, GL) == comb(n + 3, 3)


def test_sl_normal_words_never_mix_x_and_y():
    for n in range(1, 5):
        for w in product(range(4), repeat=n):
            p = normal_form([(w, 1)], SL)
            for (a, b, c, d) in p.terms():
                assert b == 0 or c == 0


def test_termination_measure():
    rep = pbwcheck.termination_check(maxlen=4, samples=300, maxsample_len=6)
    assert rep.ok, rep.first_failure()


def test_confluence_exhaustive_len4():
    rep = pbwcheck.confluence_check(maxlen=4)
    assert rep.ok, rep.first_failure()


def test_engine_matches_naive_random_len6():
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(1, 6)
        w = tuple(rng.randrange(4) for _ in range(n))
        for ring in (GL, SL):
            assert (
                normal_form([(w, 1)], ring).terms()
                == pbwcheck.naive_normal_form(w, ring)
            ), (w, ring)


def test_with_ring_gl_to_sl():
    d = quantum_determinant(GL)
    assert d.with_ring(SL) == NCPoly.one(SL)
    p = parse("x*y", GL)
    assert p.with_ring(SL) == parse("x*y", SL)


def test_power_and_scale():
    x = gen("x", GL)
    assert x ** 3 == x * x * x
    assert x.scaled(rational(2)) == x + x
    assert (x - x).is_zero()


def test_coefficient_lookup():
    p = parse("3*v*x - h*v^2", GL)
    assert p.coefficient("vx") == rational(3)
    assert p.coefficient("vv") == -H
    assert p.coefficient("u").is_zero()
    with pytest.raises(ValueError):
        p.coefficient("xv")  # not a normal word


def test_json_roundtrip():
    p = parse("x*y - u*v - h*x*v + sqrt(2)*u", GL)
    assert NCPoly.from_json(p.to_json()) == p
    q = parse("x^2 + h*x*v", SL)
    assert NCPoly.from_json(q.to_json()) == q


def test_json_word_order_canonical():
    p = parse("u + v + x^2", GL)
    words = [t["word"] for t in p.to_json()["terms"]]
    assert words == ["v", "u", "xx"]  # sorted by (weight, lex)
