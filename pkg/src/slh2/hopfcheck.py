"""Coproduct, counit and the executable corepresentation-law suites.

The coproduct is the matrix coalgebra on the generator matrix
[[x, u], [v, y]]:

    Delta(x) = x(x)x + u(x)v        Delta(u) = x(x)u + u(x)y
    Delta(v) = v(x)x + y(x)v        Delta(y) = v(x)u + y(x)y

extended as an algebra homomorphism, with counit eps(x) = eps(y) = 1,
eps(u) = eps(v) = 0.  Compatibility with the defining relations is itself
part of the test surface, not an assumption.

The suites verify, by exact symbolic expansion: the corepresentation law
for D^j, the twisted product law and its corollaries, the eight
recurrence relations, the orthogonality-like relations, and the RTT
relations (including that at spin (1/2, 1/2) the RTT system spans exactly
the six defining relations).
"""

from functools import lru_cache
from itertools import product

from ._rat import Q
from . import ncalg
from .dfun import ORDERED1, dfunc, dmatrix
from .exprio import render_text
from .ncalg import GL, SL, NCPoly, _word_mul_word
from .rep import f_inv_matrix, f_matrix, magnetics, mho, omega, prod_index, r_matrix, triangle_ok
from .report import Report
from .scalar import H, ONE, ZERO, RadScalar, sqrt_nat

# generator images under the coproduct: letter -> ((left, right), ...)
_DELTA_GEN = {
    ncalg.X: ((ncalg.X, ncalg.X), (ncalg.U, ncalg.V)),
    ncalg.U: ((ncalg.X, ncalg.U), (ncalg.U, ncalg.Y)),
    ncalg.V: ((ncalg.V, ncalg.X), (ncalg.Y, ncalg.V)),
    ncalg.Y: ((ncalg.V, ncalg.U), (ncalg.Y, ncalg.Y)),
}


class TensorPoly:
    """Element of a tensor power of the ring, slotwise normal ordered."""

    __slots__ = ("ring", "arity", "terms")

    def __init__(self, ring, arity, terms):
        self.ring = ring
        self.arity = arity
        self.terms = terms

    @staticmethod
    def zero(ring, arity=2):
        return TensorPoly(ring, arity, {})

    @staticmethod
    def of(*polys):
        """Outer product p1 (x) p2 (x) ... of NCPoly factors."""
        ring = polys[0].ring
        terms = {(): ONE}
        for p in polys:
            if p.ring != ring:
                raise ValueError("ring mismatch in tensor product")
            out = {}
            for words, c in terms.items():
                for w, cw in p.terms().items():
                    _accum(out, words + (w,), c * cw)
            terms = out
        return TensorPoly(ring, len(polys), terms)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accum(out, k, c)
        return TensorPoly(self.ring, self.arity, out)

    def __neg__(self):
        return TensorPoly(
            self.ring, self.arity, {k: -c for k, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, coef):
        coef = RadScalar.coerce(coef)
        if coef.is_zero():
            return TensorPoly.zero(self.ring, self.arity)
        return TensorPoly(
            self.ring, self.arity, {k: coef * c for k, c in self.terms.items()}
        )

    def __mul__(self, other):
        self._check(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                slot_polys = [
                    _word_mul_word(w1, w2, self.ring) for w1, w2 in zip(k1, k2)
                ]
                _spread(out, slot_polys, c1 * c2)
        return TensorPoly(self.ring, self.arity, out)

    def _check(self, other):
        if self.ring != other.ring or self.arity != other.arity:
            raise ValueError("tensor shape mismatch")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TensorPoly)
            and self.ring == other.ring
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def apply_coproduct(self, slot=0):
        """Replace one tensor slot by its coproduct (arity grows by one)."""
        out = {}
        for words, c in self.terms.items():
            for (w1, w2), cd in _word_coproduct(words[slot], self.ring).items():
                key = words[:slot] + (w1, w2) + words[slot + 1 :]
                _accum(out, key, c * cd)
        return TensorPoly(self.ring, self.arity + 1, out)

    def apply_counit(self, slot=0):
        """Contract one tensor slot with the counit (arity shrinks by one)."""
        out = {}
        for words, c in self.terms.items():
            if _word_counit(words[slot]):
                _accum(out, words[:slot] + words[slot + 1 :], c)
        return TensorPoly(self.ring, self.arity - 1, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for words, c in sorted(self.terms.items()):
            tag = " (x) ".join(ncalg.word_str(w) or "1" for w in words)
            bits.append(f"({c!r})*[{tag}]")
        return " + ".join(bits)


def _accum(out, key, c):
    s = out.get(key)
    s = c if s is None else s + c
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


def _spread(out, slot_polys, coef, prefix=()):
    """Accumulate coef * (x) slot_polys expanded into tensor words."""
    if not slot_polys:
        _accum(out, prefix, coef)
        return
    head, *rest = slot_polys
    for w, c in head.items():
        _spread(out, rest, coef * c, prefix + (w,))


_DELTA_MEMO = {GL: {}, SL: {}}


def _word_coproduct(exps, ring):
    memo = _DELTA_MEMO[ring]
    hit = memo.get(exps)
    if hit is not None:
        return hit
    terms = {((0, 0, 0, 0), (0, 0, 0, 0)): ONE}
    for g in ncalg.word_letters(exps):
        out = {}
        for (w1, w2), c in terms.items():
            for g1, g2 in _DELTA_GEN[g]:
                left = _word_mul_word(w1, _one_letter(g1), ring)
                right = _word_mul_word(w2, _one_letter(g2), ring)
                _spread(out, [left, right], c)
        terms = out
    memo[exps] = terms
    return terms


@lru_cache(maxsize=None)
def _one_letter(g):
    return tuple(1 if i == g else 0 for i in range(4))


def _word_counit(exps):
    a, b, c, d = exps
    return a == 0 and d == 0


def coproduct(p: NCPoly) -> TensorPoly:
    """Algebra-homomorphism extension of the generator coproduct."""
    out = {}
    for w, c in p.terms().items():
        for key, cd in _word_coproduct(w, p.ring).items():
            _accum(out, key, c * cd)
    return TensorPoly(p.ring, 2, out)


def counit(p: NCPoly) -> RadScalar:
    out = ZERO
    for w, c in p.terms().items():
        if _word_counit(w):
            out = out + c
    return out


# ---------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------


def _tensor_repr(t):
    return repr(t)


def check_corep(twoj, scheme=ORDERED1, ring=SL) -> Report:
    """Delta(D_ij) = sum_k D_ik (x) D_kj and eps(D_ij) = delta_ij."""
    rep = Report("corep")
    d = dmatrix(twoj, scheme, ring)
    mags = list(magnetics(twoj))
    for twomp in mags:
        for twom in mags:
            entry = d.entry(twomp, twom)
            lhs = coproduct(entry)
            rhs = TensorPoly.zero(ring, 2)
            for twok in mags:
                rhs = rhs + TensorPoly.of(d.entry(twomp, twok), d.entry(twok, twom))
            rep.record(
                {"twoj": twoj, "twomp": twomp, "twom": twom, "law": "coproduct"},
                lhs,
                rhs,
                _tensor_repr,
            )
            eps = counit(entry)
            want = ONE if twomp == twom else ZERO
            rep.record(
                {"twoj": twoj, "twomp": twomp, "twom": twom, "law": "counit"},
                eps,
                want,
            )
    return rep


@lru_cache(maxsize=None)
def _dprod(twoj1, twok1, twom1, twoj2, twok2, twom2, ring):
    return dfunc(twoj1, twok1, twom1, ORDERED1, ring) * dfunc(
        twoj2, twok2, twom2, ORDERED1, ring
    )


def _triangle(twoj1, twoj2):
    return range(abs(twoj1 - twoj2), twoj1 + twoj2 + 2, 2)


def wigner_check(twoj1, twoj2, twoj, ring=SL) -> Report:
    """The twisted product law for D^j plus its three corollaries."""
    rep = Report("wigner")
    if not triangle_ok(twoj1, twoj2, twoj):
        raise ValueError("spin triple violates the triangle condition")
    om = omega(twoj1, twoj2, twoj)
    m1s, m2s = list(magnetics(twoj1)), list(magnetics(twoj2))
    # A[k1, k2, m] = sum_{m1,m2} Omega^j_{m1,m2,m} D^{j1}_{k1,m1} D^{j2}_{k2,m2}
    acc = {}
    for twok1 in m1s:
        for twok2 in m2s:
            for twom in magnetics(twoj):
                val = NCPoly.zero(ring)
                for twom1 in m1s:
                    for twom2 in m2s:
                        c = om.get(twom1, twom2, twom)
                        if not c.is_zero():
                            val = val + _dprod(
                                twoj1, twok1, twom1, twoj2, twok2, twom2, ring
                            ).scaled(c)
                acc[(twok1, twok2, twom)] = val

    # product law: delta_{j,j'} D^j_{m'm} = sum mho^{j'} Omega^{j} D D
    for twojp in _triangle(twoj1, twoj2):
        mh = mho(twoj1, twoj2, twojp)
        for twomp in magnetics(twojp):
            for twom in magnetics(twoj):
                rhs = NCPoly.zero(ring)
                for twok1 in m1s:
                    for twok2 in m2s:
                        c = mh.get(twok1, twok2, twomp)
                        if not c.is_zero():
                            rhs = rhs + acc[(twok1, twok2, twom)].scaled(c)
                if twojp == twoj:
                    lhs = dfunc(twoj, twomp, twom, ORDERED1, ring)
                else:
                    lhs = NCPoly.zero(ring)
                rep.record(
                    {
                        "law": "product",
                        "twoj1": twoj1,
                        "twoj2": twoj2,
                        "twoj": twoj,
                        "twojp": twojp,
                        "twomp": twomp,
                        "twom": twom,
                    },
                    lhs,
                    rhs,
                    render_text,
                )

    # rel1: sum_{m'} Omega_{k1,k2,m'} D^j_{m'm} = A[k1,k2,m]
    for twok1 in m1s:
        for twok2 in m2s:
            for twom in magnetics(twoj):
                lhs = NCPoly.zero(ring)
                for twomp in magnetics(twoj):
                    c = om.get(twok1, twok2, twomp)
                    if not c.is_zero():
                        lhs = lhs + dfunc(twoj, twomp, twom, ORDERED1, ring).scaled(c)
                rep.record(
                    {
                        "law": "rel1",
                        "twoj1": twoj1,
                        "twoj2": twoj2,
                        "twoj": twoj,
                        "twok1": twok1,
                        "twok2": twok2,
                        "twom": twom,
                    },
                    lhs,
                    acc[(twok1, twok2, twom)],
                    render_text,
                )

    # rel2: sum_m mho_{m1,m2,m} D^j_{m'm} = sum_{k1,k2} mho_{k1,k2,m'} D D
    mh = mho(twoj1, twoj2, twoj)
    for twom1 in m1s:
        for twom2 in m2s:
            for twomp in magnetics(twoj):
                lhs = NCPoly.zero(ring)
                for twom in magnetics(twoj):
                    c = mh.get(twom1, twom2, twom)
                    if not c.is_zero():
                        lhs = lhs + dfunc(twoj, twomp, twom, ORDERED1, ring).scaled(c)
                rhs = NCPoly.zero(ring)
                for twok1 in m1s:
                    for twok2 in m2s:
                        c = mh.get(twok1, twok2, twomp)
                        if not c.is_zero():
                            rhs = rhs + _dprod(
                                twoj1, twok1, twom1, twoj2, twok2, twom2, ring
                            ).scaled(c)
                rep.record(
                    {
                        "law": "rel2",
                        "twoj1": twoj1,
                        "twoj2": twoj2,
                        "twoj": twoj,
                        "twom1": twom1,
                        "twom2": twom2,
                        "twomp": twomp,
                    },
                    lhs,
                    rhs,
                    render_text,
                )

    # rel3: D^{j1}_{k1m1} D^{j2}_{k2m2} = sum_{j,m,m'} mho^j Omega^j D^j_{m'm}
    for twok1 in m1s:
        for twom1 in m1s:
            for twok2 in m2s:
                for twom2 in m2s:
                    rhs = NCPoly.zero(ring)
                    for twojs in _triangle(twoj1, twoj2):
                        oms = omega(twoj1, twoj2, twojs)
                        mhs = mho(twoj1, twoj2, twojs)
                        for twom in magnetics(twojs):
                            cm = mhs.get(twom1, twom2, twom)
                            if cm.is_zero():
                                continue
                            for twomp in magnetics(twojs):
                                co = oms.get(twok1, twok2, twomp)
                                if not co.is_zero():
                                    rhs = rhs + dfunc(
                                        twojs, twomp, twom, ORDERED1, ring
                                    ).scaled(cm * co)
                    rep.record(
                        {
                            "law": "rel3",
                            "twoj1": twoj1,
                            "twoj2": twoj2,
                            "twok1": twok1,
                            "twom1": twom1,
                            "twok2": twok2,
                            "twom2": twom2,
                        },
                        _dprod(twoj1, twok1, twom1, twoj2, twok2, twom2, ring),
                        rhs,
                        render_text,
                    )
    return rep


# ---------------------------------------------------------------------
# Recurrence relations
# ---------------------------------------------------------------------


def _sq(twoint):
    """sqrt of an integer given doubled; negative means the term is absent.

    A negative radicand only ever occurs one step outside the magnetic
    band, where the accompanying matrix element vanishes as well.
    """
    if twoint % 2:
        raise ValueError("half-integer radicand in a recurrence coefficient")
    if twoint < 0:
        return ZERO
    return sqrt_nat(twoint // 2)


def _dref(twoj, twomp, twom, ring):
    # matrix elements vanish outside the magnetic band
    if abs(twomp) > twoj or abs(twom) > twoj:
        return NCPoly.zero(ring)
    return dfunc(twoj, twomp, twom, ORDERED1, ring)


def _combine(side_terms, ring):
    out = NCPoly.zero(ring)
    for coef, dspec, rightmul in side_terms:
        if coef.is_zero():
            continue
        d = _dref(*dspec, ring)
        term = d if rightmul is None else d * rightmul
        out = out + term.scaled(coef)
    return out


def _gp(ring, name):
    return NCPoly.generator(name, ring)


def recurrence_terms(which, twoj, twok, twom, ring):
    """(lhs, rhs) term lists of one recurrence instance.

    Each term is (coefficient, (twoj, twom_row, twom_col), right_factor).
    twok plays the role of k in relations i/ii/v/vi and of n in the
    column relations iii/iv/vii/viii, where twom is the row index.
    """
    J, k, m = twoj, twok, twom
    x, u, v, y = (_gp(ring, n) for n in "xuvy")
    hm = lambda c: H.scaled(Q(c))
    if which == "i":
        lhs = [
            (_sq(J + k), (J, k, m), None),
            (-_sq(J - k + 2).scaled(Q(k - 1)) * H, (J, k - 2, m), None),
        ]
        rhs = [
            (_sq(J + m), (J - 1, k - 1, m - 1), x),
            (_sq(J - m), (J - 1, k - 1, m + 1), u - x.scaled(hm(m + 1))),
        ]
    elif which == "ii":
        lhs = [(_sq(J - k), (J, k, m), None)]
        rhs = [
            (_sq(J + m), (J - 1, k + 1, m - 1), v),
            (_sq(J - m), (J - 1, k + 1, m + 1), y - v.scaled(hm(m + 1))),
        ]
    elif which == "iii":
        lhs = [(_sq(J + k), (J, m, k), None)]
        rhs = [
            (_sq(J + m), (J - 1, m - 1, k - 1), x + v.scaled(hm(m - 1))),
            (_sq(J - m), (J - 1, m + 1, k - 1), v),
        ]
    elif which == "iv":
        # shifting n -> n+1 in the underlying product-law instance shifts
        # the radicand too: the coefficient is sqrt(j+n+1), not sqrt(j+n)
        lhs = [
            (_sq(J - k), (J, m, k), None),
            (_sq(J + k + 2).scaled(Q(k + 1)) * H, (J, m, k + 2), None),
        ]
        rhs = [
            (_sq(J + m), (J - 1, m - 1, k + 1), u + y.scaled(hm(m - 1))),
            (_sq(J - m), (J - 1, m + 1, k + 1), y),
        ]
    elif which == "v":
        lhs = [
            (_sq(J - k + 2), (J, k, m), None),
            (_sq(J + k).scaled(Q(k - 1)) * H, (J, k - 2, m), None),
        ]
        rhs = [
            (_sq(J - m + 2), (J + 1, k - 1, m - 1), x),
            (-_sq(J + m + 2), (J + 1, k - 1, m + 1), u - x.scaled(hm(m + 1))),
        ]
    elif which == "vi":
        lhs = [(_sq(J + k + 2), (J, k, m), None)]
        rhs = [
            (-_sq(J - m + 2), (J + 1, k + 1, m - 1), v),
            (_sq(J + m + 2), (J + 1, k + 1, m + 1), y - v.scaled(hm(m + 1))),
        ]
    elif which == "vii":
        lhs = [(_sq(J - k + 2), (J, m, k), None)]
        rhs = [
            (_sq(J - m + 2), (J + 1, m - 1, k - 1), x + v.scaled(hm(m - 1))),
            (-_sq(J + m + 2), (J + 1, m + 1, k - 1), v),
        ]
    elif which == "viii":
        lhs = [
            (_sq(J + k + 2), (J, m, k), None),
            (-_sq(J - k).scaled(Q(k + 1)) * H, (J, m, k + 2), None),
        ]
        rhs = [
            (-_sq(J - m + 2), (J + 1, m - 1, k + 1), u + y.scaled(hm(m - 1))),
            (_sq(J + m + 2), (J + 1, m + 1, k + 1), y),
        ]
    else:
        raise ValueError(f"unknown recurrence {which!r}")
    return lhs, rhs


RECURRENCES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")


def recurrence_check(which, twoj, ring=SL) -> Report:
    """Verify one of the eight recurrence relations at spin twoj/2.

    The running index covers one step beyond the magnetic band on both
    sides, so the boundary instances (where a vanishing square root or a
    vanishing out-of-band matrix element kills one side) are exercised
    too.  The relations v-viii relating D^j to D^{j+1/2} use D = 1 and are
    SL statements; i-iv hold in GL as well.
    """
    rep = Report("recurrence")
    if twoj < 1:
        raise ValueError("recurrences relate spins j and j -+ 1/2; need 2j >= 1")
    for twok in range(-twoj - 2, twoj + 4, 2):
        for twom in magnetics(twoj):
            lhs_terms, rhs_terms = recurrence_terms(which, twoj, twok, twom, ring)
            rep.record(
                {"which": which, "twoj": twoj, "twok": twok, "twom": twom},
                _combine(lhs_terms, ring),
                _combine(rhs_terms, ring),
                render_text,
            )
    return rep


# ---------------------------------------------------------------------
# Orthogonality-like relations
# ---------------------------------------------------------------------


def ortho_like_check(twoj, ring=SL) -> Report:
    rep = Report("ortho")
    fmat = f_matrix(twoj, twoj)
    finv = f_inv_matrix(twoj, twoj)
    mags = list(magnetics(twoj))

    def fm(row1, row2, col1, col2):
        return fmat.rows[prod_index(twoj, twoj, row1, row2)][
            prod_index(twoj, twoj, col1, col2)
        ]

    def fi(row1, row2, col1, col2):
        return finv.rows[prod_index(twoj, twoj, row1, row2)][
            prod_index(twoj, twoj, col1, col2)
        ]

    for twok1 in mags:
        for twok2 in mags:
            lhs = NCPoly.zero(ring)
            for twom1 in mags:
                for twom2 in mags:
                    c = fm(twom1, twom2, twom1, -twom1)
                    if c.is_zero():
                        continue
                    sign = -1 if ((twok1 - twom1) // 2) % 2 else 1
                    lhs = lhs + _dprod(
                        twoj, twok1, twom1, twoj, twok2, twom2, ring
                    ).scaled(c.scaled(Q(sign)))
            rhs = NCPoly.scalar(fm(twok1, twok2, twok1, -twok1), ring)
            rep.record(
                {"law": "ortho1", "twoj": twoj, "twok1": twok1, "twok2": twok2},
                lhs,
                rhs,
                render_text,
            )

    for twom1 in mags:
        for twom2 in mags:
            lhs = NCPoly.zero(ring)
            for twok1 in mags:
                for twok2 in mags:
                    c = fi(twok1, -twok1, twok1, twok2)
                    if c.is_zero():
                        continue
                    sign = -1 if ((twom1 - twok1) // 2) % 2 else 1
                    lhs = lhs + _dprod(
                        twoj, twok1, twom1, twoj, twok2, twom2, ring
                    ).scaled(c.scaled(Q(sign)))
            rhs = NCPoly.scalar(fi(twom1, -twom1, twom1, twom2), ring)
            rep.record(
                {"law": "ortho2", "twoj": twoj, "twom1": twom1, "twom2": twom2},
                lhs,
                rhs,
                render_text,
            )
    return rep


# ---------------------------------------------------------------------
# RTT relations
# ---------------------------------------------------------------------


def rtt_check(twoj1, twoj2, ring=SL) -> Report:
    """sum R D D = sum D D R entrywise on the product of two spins."""
    rep = Report("rtt")
    rmat = r_matrix(twoj1, twoj2)
    m1s, m2s = list(magnetics(twoj1)), list(magnetics(twoj2))

    def rentry(rm1, rm2, cs1, cs2):
        return rmat.rows[prod_index(twoj1, twoj2, rm1, rm2)][
            prod_index(twoj1, twoj2, cs1, cs2)
        ]

    for twom1 in m1s:
        for twom2 in m2s:
            for twok1 in m1s:
                for twok2 in m2s:
                    lhs = NCPoly.zero(ring)
                    rhs = NCPoly.zero(ring)
                    for twos1 in m1s:
                        for twos2 in m2s:
                            c = rentry(twom1, twom2, twos1, twos2)
                            if not c.is_zero():
                                lhs = lhs + _dprod(
                                    twoj1, twos1, twok1, twoj2, twos2, twok2, ring
                                ).scaled(c)
                            c = rentry(twos1, twos2, twok1, twok2)
                            if not c.is_zero():
                                rhs = rhs + (
                                    dfunc(twoj2, twom2, twos2, ORDERED1, ring)
                                    * dfunc(twoj1, twom1, twos1, ORDERED1, ring)
                                ).scaled(c)
                    rep.record(
                        {
                            "twoj1": twoj1,
                            "twoj2": twoj2,
                            "twom1": twom1,
                            "twom2": twom2,
                            "twok1": twok1,
                            "twok2": twok2,
                        },
                        lhs,
                        rhs,
                        render_text,
                    )
    return rep


# ---------------------------------------------------------------------
# RTT at spin (1/2, 1/2) spans exactly the defining relations
# ---------------------------------------------------------------------

_FREE_WORDS2 = tuple(product(range(4), repeat=2))
_GEN_AT = {(1, 1): ncalg.X, (1, -1): ncalg.U, (-1, 1): ncalg.V, (-1, -1): ncalg.Y}


def _free_rtt_elements():
    """LHS - RHS of the (1/2,1/2) RTT identities in the free algebra.

    Vectors over the 16 length-two free words with polynomial coefficients
    in h; no rewriting is applied.
    """
    rmat = r_matrix(1, 1)
    mags = (1, -1)

    def rentry(rm1, rm2, cs1, cs2):
        return rmat.rows[prod_index(1, 1, rm1, rm2)][prod_index(1, 1, cs1, cs2)]

    vecs = []
    for m1 in mags:
        for m2 in mags:
            for k1 in mags:
                for k2 in mags:
                    vec = {}
                    for s1 in mags:
                        for s2 in mags:
                            c = rentry(m1, m2, s1, s2)
                            if not c.is_zero():
                                word = (_GEN_AT[(s1, k1)], _GEN_AT[(s2, k2)])
                                _accum(vec, word, c)
                            c = rentry(s1, s2, k1, k2)
                            if not c.is_zero():
                                word = (_GEN_AT[(m2, s2)], _GEN_AT[(m1, s1)])
                                _accum(vec, word, -c)
                    if vec:
                        vecs.append(vec)
    return vecs


def _free_defining_relations():
    """The six rewrite rules as free-algebra elements (pair - replacement)."""
    vecs = []
    for pair, repl in ncalg.GL_RULES.items():
        vec = {pair: ONE}
        for word, coef in repl:
            _accum(vec, word, -coef)
        vecs.append(vec)
    return vecs


def _echelon(vecs):
    """Fraction-free row reduction over the polynomial coefficient ring."""
    basis = []  # list of (pivot_word, vec)
    for vec in vecs:
        vec = dict(vec)
        for pivot, bvec in basis:
            c = vec.get(pivot)
            if c is None:
                continue
            p = bvec[pivot]
            out = {}
            for w, cv in vec.items():
                _accum(out, w, p * cv)
            for w, cv in bvec.items():
                _accum(out, w, -(c * cv))
            vec = out
        if vec:
            pivot = sorted(vec)[0]
            basis.append((pivot, vec))
    return basis


def _in_span(vec, basis):
    vec = dict(vec)
    for pivot, bvec in basis:
        c = vec.get(pivot)
        if c is None:
            continue
        p = bvec[pivot]
        out = {}
        for w, cv in vec.items():
            _accum(out, w, p * cv)
        for w, cv in bvec.items():
            _accum(out, w, -(c * cv))
        vec = out
    return not vec


def rtt_frt_check() -> Report:
    """At spin (1/2,1/2) the RTT system spans exactly the defining relations.

    Both containments are checked by fraction-free elimination over Q[h],
    in the free algebra, i.e. without assuming the rewrite system.
    """
    rep = Report("rtt-frt")
    rtt_vecs = _free_rtt_elements()
    rel_vecs = _free_defining_relations()
    rtt_basis = _echelon(rtt_vecs)
    rel_basis = _echelon(rel_vecs)
    for i, vec in enumerate(rel_vecs):
        rep.add({"direction": "relation in rtt span", "index": i}, _in_span(vec, rtt_basis))
    for i, vec in enumerate(rtt_vecs):
        rep.add({"direction": "rtt in relation span", "index": i}, _in_span(vec, rel_basis))
    rep.add(
        {"direction": "rank", "rtt": len(rtt_basis), "relations": len(rel_basis)},
        len(rtt_basis) == len(rel_basis) == 6,
    )
    return rep
