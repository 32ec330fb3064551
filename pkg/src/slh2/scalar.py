"""Exact scalars: rationals extended by sqrt(n) and the parameters h, g.

A RadScalar is a finite sum

    sum_r  p_r(h, g) * sqrt(r)

with r squarefree positive and p_r a polynomial in the deformation
parameters with rational coefficients.  Distinct square roots are
linearly independent over Q(h, g), so equality is structural equality
of the reduced form and no approximation ever happens.

This class is the coefficient field-like ring of the whole package: it
carries every CGC normalization, every sqrt((j+m)!...) factor and every
power of h appearing in the algebra relations.
"""

from . import kernel as K
from ._rat import Q, qparse, qstr


class RadScalar:
    """Immutable exact scalar; hashable; supports + - * and integer powers."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms):
        # terms: {squarefree_radicand: {(hpow, gpow): rational}}, already
        # reduced; use the constructors below rather than raw dicts.
        self._t = terms
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rational(q) -> "RadScalar":
        q = Q(q)
        if not q:
            return ZERO
        return RadScalar({1: {(0, 0): q}})

    @staticmethod
    def from_int(n: int) -> "RadScalar":
        return RadScalar.from_rational(Q(n))

    @staticmethod
    def coerce(x) -> "RadScalar":
        if isinstance(x, RadScalar):
            return x
        return RadScalar.from_rational(Q(x))

    # -- predicates and views ----------------------------------------

    def is_zero(self) -> bool:
        return not self._t

    def is_rational(self) -> bool:
        """True when the value is a plain rational number."""
        if not self._t:
            return True
        if set(self._t) != {1}:
            return False
        return set(self._t[1]) == {(0, 0)}

    def rational_value(self):
        """The value as a rational; raises if radicals or h, g survive."""
        if not self._t:
            return Q(0)
        if not self.is_rational():
            raise ValueError(f"not a rational scalar: {self!r}")
        return self._t[1][(0, 0)]

    def terms(self):
        """Iterate (radicand, hpow, gpow, coefficient) in canonical order."""
        for r in sorted(self._t):
            poly = self._t[r]
            for hg in sorted(poly):
                yield r, hg[0], hg[1], poly[hg]

    def raw(self):
        return self._t

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if type(other) is not RadScalar:
            other = RadScalar.coerce(other)
        return RadScalar(K.rad_add(self._t, other._t))

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not RadScalar:
            other = RadScalar.coerce(other)
        return RadScalar(K.rad_sub(self._t, other._t))

    def __rsub__(self, other):
        return RadScalar.coerce(other) - self

    def __neg__(self):
        return RadScalar(K.rad_neg(self._t))

    def __mul__(self, other):
        if type(other) is not RadScalar:
            other = RadScalar.coerce(other)
        return RadScalar(K.rad_mul(self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0 or n != int(n):
            raise ValueError("RadScalar powers must be non-negative integers")
        out = ONE
        base = self
        n = int(n)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scaled(self, q) -> "RadScalar":
        return RadScalar(K.rad_scale(self._t, Q(q)))

    def __eq__(self, other):
        if isinstance(other, RadScalar):
            return self._t == other._t
        if isinstance(other, (int,)) or type(other).__name__ in ("Fraction", "mpq"):
            return self._t == RadScalar.coerce(other)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                tuple(
                    (r, hg, q)
                    for r in sorted(self._t)
                    for hg, q in sorted(self._t[r].items())
                )
            )
        return self._hash

    def __bool__(self):
        return bool(self._t)

    # -- substitution -------------------------------------------------

    def specialize(self, h_value=None, g_value=None) -> "RadScalar":
        """Substitute numeric rationals for h and/or g; None keeps symbolic.

        Radicands are untouched (the roots are numeric already).
        """
        if h_value is None and g_value is None:
            return self
        hq = None if h_value is None else Q(h_value)
        gq = None if g_value is None else Q(g_value)
        out = {}
        for r, poly in self._t.items():
            acc = {}
            for (i, j), q in poly.items():
                if hq is not None:
                    q = q * hq**i
                    i = 0
                if gq is not None:
                    q = q * gq**j
                    j = 0
                key = (i, j)
                s = acc.get(key)
                s = q if s is None else s + q
                if s:
                    acc[key] = s
                elif key in acc:
                    del acc[key]
            if acc:
                out[r] = acc
        return RadScalar(out)

    # -- encodings ----------------------------------------------------

    def to_json(self):
        terms = []
        for r in sorted(self._t):
            poly = [
                {"h": hg[0], "g": hg[1], "q": qstr(q)}
                for hg, q in sorted(self._t[r].items())
            ]
            terms.append({"rad": r, "poly": poly})
        return {"terms": terms}

    @staticmethod
    def from_json(obj) -> "RadScalar":
        out = ZERO
        for term in obj["terms"]:
            rad = sqrt_nat(term["rad"])
            for mono in term["poly"]:
                piece = RadScalar.from_rational(qparse(mono["q"]))
                piece = piece * H ** mono["h"] * G ** mono["g"]
                out = out + piece * rad
        return out

    def __repr__(self):
        if not self._t:
            return "0"
        parts = []
        for r, i, j, q in self.terms():
            neg = q < 0
            qa = -q if neg else q
            factors = []
            if qa != 1 or (r == 1 and i == 0 and j == 0):
                factors.append(str(qa) if qa.denominator == 1 else qstr(qa))
            if r != 1:
                factors.append(f"sqrt({r})")
            if i:
                factors.append("h" if i == 1 else f"h^{i}")
            if j:
                factors.append("g" if j == 1 else f"g^{j}")
            body = "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)


def sqrt_nat(n: int) -> RadScalar:
    """Exact square root of a natural number, square part extracted."""
    s, r = K.sqrt_split(n)
    if s == 0:
        return ZERO
    return RadScalar({r: {(0, 0): Q(s)}})


ZERO = RadScalar({})
ONE = RadScalar({1: {(0, 0): Q(1)}})
H = RadScalar({1: {(1, 0): Q(1)}})
G = RadScalar({1: {(0, 1): Q(1)}})


def rational(p, q=1) -> RadScalar:
    return RadScalar.from_rational(Q(p, q))
