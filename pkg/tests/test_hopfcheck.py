from itertools import product

import pytest

from slh2 import hopfcheck as hc
from slh2.exprio import parse
from slh2.ncalg import (
    GL,
    SL,
    GL_RULES,
    SL_RULES,
    NCPoly,
    gen,
    normal_form,
    quantum_determinant,
)
from slh2.scalar import H, ONE, ZERO


def test_coproduct_on_generators():
    x, u, v, y = (gen(n, GL) for n in "xuvy")
    assert hc.coproduct(x) == hc.TensorPoly.of(x, x) + hc.TensorPoly.of(u, v)
    assert hc.coproduct(u) == hc.TensorPoly.of(x, u) + hc.TensorPoly.of(u, y)
    assert hc.coproduct(v) == hc.TensorPoly.of(v, x) + hc.TensorPoly.of(y, v)
    assert hc.coproduct(y) == hc.TensorPoly.of(v, u) + hc.TensorPoly.of(y, y)


def test_coproduct_of_unit():
    one = NCPoly.one(SL)
    assert hc.coproduct(one) == hc.TensorPoly.of(one, one)


def test_coproduct_is_algebra_map():
    for ring in (GL, SL):
        for g1, g2 in product("vxyu", repeat=2):
            p, q = gen(g1, ring), gen(g2, ring)
            assert hc.coproduct(p * q) == hc.coproduct(p) * hc.coproduct(q)


def test_coproduct_respects_relations():
    # Delta and eps of both sides of every rewrite rule agree
    for ring, rules in ((GL, GL_RULES), (SL, SL_RULES)):
        for pair, repl in rules.items():
            lhs = normal_form([(pair, ONE)], ring)
            rhs = normal_form(list(repl), ring)
            assert hc.coproduct(lhs) == hc.coproduct(rhs)
            assert hc.counit(lhs) == hc.counit(rhs)


def _free_coproduct(word, ring):
    # letter-by-letter extension with no normalization of the input word,
    # so this genuinely tests that Delta annihilates lhs - rhs
    out = hc.TensorPoly.of(NCPoly.one(ring), NCPoly.one(ring))
    for g in word:
        out = out * hc.coproduct(gen("vxyu"[g], ring))
    return out


def _free_counit(word, ring):
    eps = ONE
    for g in word:
        eps = eps * hc.counit(gen("vxyu"[g], ring))
    return eps


def test_delta_annihilates_relations_free_side():
    for ring, rules in ((GL, GL_RULES), (SL, SL_RULES)):
        for pair, repl in rules.items():
            dl = _free_coproduct(pair, ring)
            de = _free_counit(pair, ring)
            for word, coef in repl:
                dl = dl - _free_coproduct(word, ring).scaled(coef)
                de = de - coef * _free_counit(word, ring)
            assert dl.is_zero(), (ring, pair)
            assert de.is_zero(), (ring, pair)


def test_determinant_grouplike():
    d = quantum_determinant(GL)
    assert hc.coproduct(d) == hc.TensorPoly.of(d, d)
    assert hc.counit(d) == ONE
    dsl = quantum_determinant(SL)
    one = NCPoly.one(SL)
    assert hc.coproduct(dsl) - hc.TensorPoly.of(one, one) == hc.TensorPoly.zero(SL)


def test_counit_values():
    assert hc.counit(gen("x", SL)) == ONE
    assert hc.counit(gen("y", SL)) == ONE
    assert hc.counit(gen("u", SL)) == ZERO
    assert hc.counit(parse("u*v", GL)) == ZERO
    assert hc.counit(parse("x*y + 3*h*x", GL)) == ONE + H.scaled(3)


def test_coassociativity_on_generators():
    for ring in (GL, SL):
        for name in "vxyu":
            t = hc.coproduct(gen(name, ring))
            assert t.apply_coproduct(0) == t.apply_coproduct(1)


def test_counit_axiom():
    for ring in (GL, SL):
        for name in "vxyu":
            p = gen(name, ring)
            t = hc.coproduct(p)
            single = hc.TensorPoly.of(p)
            assert t.apply_counit(0) == single
            assert t.apply_counit(1) == single


def test_tensor_arithmetic():
    x, v = gen("x", GL), gen("v", GL)
    t = hc.TensorPoly.of(x, v)
    assert t + t == t.scaled(2)
    assert (t - t).is_zero()
    tt = t * t
    assert tt == hc.TensorPoly.of(x * x, v * v)
    with pytest.raises(ValueError):
        t * hc.TensorPoly.of(x, v, x)


@pytest.mark.parametrize("twoj", range(0, 4))
def test_corep_small(twoj):
    for ring in (SL, GL):
        rep = hc.check_corep(twoj, ring=ring)
        assert rep.ok, rep.first_failure()


def test_corep_counts_cases():
    rep = hc.check_corep(2)
    # one coproduct and one counit case per matrix entry
    assert len(rep.cases) == 2 * 9


def test_wigner_half_half():
    for twoj in (0, 2):
        rep = hc.wigner_check(1, 1, twoj)
        assert rep.ok, rep.first_failure()


def test_wigner_singlet_projection_gives_determinant():
    # the j = 0 component of (1/2) x (1/2) collapses to the unit: this is
    # the product law at j = 0, i.e. the determinant relation D = 1
    rep = hc.wigner_check(1, 1, 0)
    assert rep.ok
    product_cases = [c for c in rep.cases if c["params"]["law"] == "product"]
    assert any(c["params"]["twojp"] == 0 for c in product_cases)


def test_wigner_triangle_violation():
    with pytest.raises(ValueError):
        hc.wigner_check(1, 1, 1)


def test_wigner_classical_limit():
    # at h = 0 the product law becomes the classical one; spot check that
    # each passing identity specializes consistently at one spin pair
    from slh2.dfun import ORDERED1, dfunc
    from slh2.rep import cgc_classical, magnetics

    twoj1 = twoj2 = 1
    twoj = 2
    cgc = cgc_classical(twoj1, twoj2, twoj)
    for twomp in magnetics(twoj):
        for twom in magnetics(twoj):
            lhs = dfunc(twoj, twomp, twom, ORDERED1, SL).specialize(h_value=0)
            rhs = NCPoly.zero(SL)
            for k1 in magnetics(twoj1):
                for k2 in magnetics(twoj2):
                    ck = cgc.get(k1, k2, twomp)
                    if ck.is_zero():
                        continue
                    for m1 in magnetics(twoj1):
                        for m2 in magnetics(twoj2):
                            cm = cgc.get(m1, m2, twom)
                            if cm.is_zero():
                                continue
                            d1 = dfunc(twoj1, k1, m1, ORDERED1, SL)
                            d2 = dfunc(twoj2, k2, m2, ORDERED1, SL)
                            rhs = rhs + (d1 * d2).scaled(ck * cm)
            assert rhs.specialize(h_value=0) == lhs


@pytest.mark.parametrize("which", hc.RECURRENCES)
def test_recurrences_spin_one(which):
    rep = hc.recurrence_check(which, 2)
    assert rep.ok, rep.first_failure()


def test_recurrence_zero_coefficient_edge():
    # relation ii at k = j: lhs coefficient sqrt(j-k) = 0 and the rhs
    # references only out-of-band matrix elements, so both sides vanish
    lhs_terms, rhs_terms = hc.recurrence_terms("ii", 2, 2, 0, SL)
    lhs = hc._combine(lhs_terms, SL)
    rhs = hc._combine(rhs_terms, SL)
    assert lhs.is_zero() and rhs.is_zero()


def test_lowering_recurrences_hold_in_gl_too():
    # i-iv relate D^j to D^{j-1/2} times a generator, which is degree
    # homogeneous, so they hold without the determinant condition
    for which in ("i", "ii", "iii", "iv"):
        rep = hc.recurrence_check(which, 2, ring=GL)
        assert rep.ok, (which, rep.first_failure())


def test_raising_recurrences_need_determinant_one():
    # v-viii mix degrees 2j and 2j+2, so in GL they pick up determinant
    # factors and fail verbatim; this pins the SL-only reading
    rep = hc.recurrence_check("vi", 1, ring=GL)
    assert not rep.ok


def test_recurrence_rejects_spin_zero():
    with pytest.raises(ValueError):
        hc.recurrence_check("i", 0)


def test_recurrence_iv_shifted_coefficient_is_forced():
    # relation iv carries sqrt(j+n+1) on the D^j_{m,n+1} term; the
    # unshifted sqrt(j+n) variant provably fails at an interior point
    from slh2._rat import Q
    from slh2.scalar import H, sqrt_nat

    twoj, twon, twom = 2, 0, 0
    lhs_terms, rhs_terms = hc.recurrence_terms("iv", twoj, twon, twom, SL)
    good = hc._combine(lhs_terms, SL) - hc._combine(rhs_terms, SL)
    assert good.is_zero()
    coef, dspec, rightmul = lhs_terms[1]
    assert coef == sqrt_nat((twoj + twon + 2) // 2).scaled(Q(twon + 1)) * H
    bad_terms = [lhs_terms[0], (sqrt_nat((twoj + twon) // 2).scaled(Q(twon + 1)) * H, dspec, rightmul)]
    bad = hc._combine(bad_terms, SL) - hc._combine(rhs_terms, SL)
    assert not bad.is_zero()


def test_recurrence_v_relates_spin_half_to_one():
    rep = hc.recurrence_check("v", 1)
    assert rep.ok, rep.first_failure()


@pytest.mark.parametrize("twoj", range(0, 4))
def test_ortho_like(twoj):
    rep = hc.ortho_like_check(twoj)
    assert rep.ok, rep.first_failure()


def test_ortho_classical_limit_is_orthogonality():
    # at h = 0 ortho1 becomes sum_m (-1)^{k1-m} D_{k1,m} D_{k2,-m} = delta
    from slh2._rat import Q
    from slh2.dfun import ORDERED1, dfunc
    from slh2.rep import magnetics

    twoj = 2
    for twok1 in magnetics(twoj):
        for twok2 in magnetics(twoj):
            acc = NCPoly.zero(SL)
            for twom in magnetics(twoj):
                sign = -1 if ((twok1 - twom) // 2) % 2 else 1
                d1 = dfunc(twoj, twok1, twom, ORDERED1, SL).specialize(h_value=0)
                d2 = dfunc(twoj, twok2, -twom, ORDERED1, SL).specialize(h_value=0)
                acc = acc + (d1 * d2).scaled(
                    ONE.scaled(Q(sign))
                )
            want = (
                NCPoly.one(SL)
                if twok2 == -twok1
                else NCPoly.zero(SL)
            )
            assert acc.specialize(h_value=0) == want, (twok1, twok2)


@pytest.mark.parametrize("pair", [(1, 1), (1, 2), (2, 2)])
def test_rtt(pair):
    rep = hc.rtt_check(*pair)
    assert rep.ok, rep.first_failure()


def test_rtt_detects_a_wrong_intertwiner(monkeypatch):
    # negative control: substituting the twist F for R must break the
    # relation, so a vacuous pass in the checker would be caught here
    from slh2 import rep

    monkeypatch.setattr(hc, "r_matrix", rep.f_matrix)
    rep_report = hc.rtt_check(1, 1)
    assert not rep_report.ok and rep_report.failed == 15


def test_rtt_spans_defining_relations():
    rep = hc.rtt_frt_check()
    assert rep.ok, rep.first_failure()
    rank_case = [c for c in rep.cases if c["params"].get("direction") == "rank"]
    assert rank_case and rank_case[0]["pass"]


def test_report_json_shape():
    rep = hc.check_corep(1)
    obj = rep.to_json()
    assert set(obj) == {"suite", "cases", "passed", "failed"}
    assert obj["failed"] == 0
    assert all(c["pass"] for c in obj["cases"])
