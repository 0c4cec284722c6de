"""Truncated univariate series over an exact coefficient ring.

One generic type serves every series shape in the package: series in the
boundary-length variable z with truncated-bivariate-polynomial
coefficients, series in a parametrization variable x or y with
rational-function coefficients, and the internal tau grading below.

A Series knows its variable tag, its order bound ``cap`` and a FieldSpec
(or ring exemplar pair) for its coefficients; coeffs always has length
cap + 1.  Operations return the largest cap that is still exact, so order
information degrades explicitly rather than silently.

The tau grading: substituting tb -> tau, tw -> rho*tau turns a bivariate
polynomial of total degree d into a tau-series of order d whose
coefficients are polynomials in rho of degree bounded by the tau power.
Total degree becomes plain valuation, and leading coefficients live in the
field of rational functions of rho, so quantities that are exactly
divisible in the bivariate ring can be divided as series (valuation
shift plus field division) and converted back.  The conversion back
verifies the degree bound, which is exactly the condition for the series
to be the image of a genuine polynomial in the two weights.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonInvertibleError, StructureError
from .exactalg import BIVARS, MPoly
from .ratfunc import FieldSpec, Poly, RatFunc, ratfunc_field

RHO_FIELD = ratfunc_field("rho")
TAU = "tau"


def _elem_inv(field, x):
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise NonInvertibleError("coefficient not invertible: 0")
        return Fraction(1) / Fraction(x)
    if hasattr(x, "inverse"):
        return x.inverse()
    return x.inv()  # MPoly


def _elem_div(field, a, b):
    if isinstance(b, (int, Fraction)) and isinstance(a, (int, Fraction)):
        return Fraction(a) / Fraction(b)
    return a * _elem_inv(field, b)


class Series:
    __slots__ = ("var", "cap", "coeffs", "field")

    def __init__(self, var, cap, coeffs, field):
        if cap < 0:
            raise StructureError("series cap must be >= 0")
        coeffs = list(coeffs)
        if len(coeffs) < cap + 1:
            coeffs = coeffs + [field.zero] * (cap + 1 - len(coeffs))
        elif len(coeffs) > cap + 1:
            raise StructureError("more coefficients than cap allows")
        self.var = var
        self.cap = cap
        self.coeffs = tuple(coeffs)
        self.field = field

    @classmethod
    def zero(cls, var, cap, field):
        return cls(var, cap, [], field)

    @classmethod
    def one(cls, var, cap, field):
        return cls(var, cap, [field.one], field)

    @classmethod
    def const(cls, var, cap, value, field):
        return cls(var, cap, [value], field)

    @classmethod
    def gen(cls, var, cap, field):
        return cls(var, cap, [field.zero, field.one], field)

    def ring_zero(self):
        return Series.zero(self.var, self.cap, self.field)

    def ring_one(self):
        return Series.one(self.var, self.cap, self.field)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k <= self.cap else self.field.zero

    def is_zero(self):
        z = self.field.zero
        return all(c == z for c in self.coeffs)

    def valuation(self):
        z = self.field.zero
        for k, c in enumerate(self.coeffs):
            if c != z:
                return k
        return None

    def truncate(self, cap):
        if cap > self.cap:
            raise StructureError(f"cannot extend series cap {self.cap} to {cap}")
        return Series(self.var, cap, self.coeffs[: cap + 1], self.field)

    def _check(self, other):
        if self.var != other.var:
            raise StructureError(f"series variable mismatch {self.var}/{other.var}")

    def _coerce(self, other, cap):
        if isinstance(other, Series):
            self._check(other)
            return other if other.cap == cap else other.truncate(cap)
        if isinstance(other, int):
            return Series.const(self.var, cap, self.field.one * other, self.field)
        return None

    def __add__(self, other):
        cap = min(self.cap, other.cap) if isinstance(other, Series) else self.cap
        a = self if self.cap == cap else self.truncate(cap)
        other = a._coerce(other, cap)
        if other is None:
            return NotImplemented
        return Series(a.var, cap, [x + y for x, y in zip(a.coeffs, other.coeffs)], a.field)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.var, self.cap, [-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        if isinstance(other, Series):
            return self + (-other)
        return self + (-(self.ring_one() * other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            self._check(other)
            cap = min(self.cap, other.cap)
            a = self if self.cap == cap else self.truncate(cap)
            b = other if other.cap == cap else other.truncate(cap)
            z = a.field.zero
            out = [z] * (cap + 1)
            for i, ca in enumerate(a.coeffs):
                if ca == z:
                    continue
                for j in range(cap + 1 - i):
                    cb = b.coeffs[j]
                    if cb == z:
                        continue
                    out[i + j] = out[i + j] + ca * cb
            return Series(a.var, cap, out, a.field)
        # scalar from the coefficient domain
        return Series(self.var, self.cap, [c * other for c in self.coeffs], self.field)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = self.ring_one()
        for _ in range(n):
            result = result * self
        return result

    def inv(self):
        """Inverse series; needs an invertible order-0 coefficient."""
        c0 = self.coeffs[0]
        if c0 == self.field.zero:
            raise NonInvertibleError("series has zero constant term")
        inv_c0 = _elem_inv(self.field, c0)
        z = self.field.zero
        out = [inv_c0] + [z] * self.cap
        for k in range(1, self.cap + 1):
            acc = z
            for j in range(1, k + 1):
                cj = self.coeffs[j]
                if cj != z:
                    acc = acc + cj * out[k - j]
            out[k] = -(acc * inv_c0)
        return Series(self.var, self.cap, out, self.field)

    def divide(self, other: "Series") -> "Series":
        """Exact series quotient q with other * q = self.

        Requires valuation(other) <= valuation(self); the result cap shrinks
        by valuation(other).  Coefficient divisions happen in the field.
        """
        self._check(other)
        vb = other.valuation()
        if vb is None:
            raise NonInvertibleError("division by the zero series")
        va = self.valuation()
        if va is not None and va < vb:
            raise NonInvertibleError(
                f"quotient is not a series: valuations {va} < {vb}"
            )
        cap = min(self.cap, other.cap) - vb
        if cap < 0:
            raise NonInvertibleError("divisor valuation exceeds series order")
        lead = other.coeffs[vb]
        z = self.field.zero
        q = [z] * (cap + 1)
        for k in range(cap + 1):
            acc = self.coeff(k + vb)
            for j in range(1, k + 1):
                bj = other.coeff(vb + j)
                if bj != z:
                    acc = acc - bj * q[k - j]
            q[k] = _elem_div(self.field, acc, lead)
        return Series(self.var, cap, q, self.field)

    def shift(self, k):
        """Multiply by var^k; negative k demands (and checks) divisibility."""
        if k >= 0:
            return Series(
                self.var, self.cap + k, (self.field.zero,) * k + self.coeffs, self.field
            )
        z = self.field.zero
        if any(c != z for c in self.coeffs[:-k]):
            raise NonInvertibleError(f"series not divisible by {self.var}^{-k}")
        return Series(self.var, self.cap + k, self.coeffs[-k:], self.field)

    def map_coeffs(self, fn, field=None, cap=None):
        cap = self.cap if cap is None else cap
        return Series(self.var, cap, [fn(c) for c in self.coeffs[: cap + 1]], field or self.field)

    def agrees_with(self, other, order=None):
        """Coefficient-wise equality up to min(caps) or the given order."""
        self._check(other)
        order = min(self.cap, other.cap) if order is None else order
        if order > min(self.cap, other.cap):
            raise StructureError("agreement order exceeds available caps")
        return all(self.coeff(k) == other.coeff(k) for k in range(order + 1))

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.var == other.var and self.cap == other.cap and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.cap, self.coeffs))

    def __repr__(self):
        bits = [f"({c})*{self.var}^{k}" for k, c in enumerate(self.coeffs) if c != self.field.zero]
        body = " + ".join(bits) if bits else "0"
        return f"{body} + O({self.var}^{self.cap + 1})"


# -------------------------------------------------------------- tau grading

def _rho_poly(coeff_by_rho_power: dict) -> RatFunc:
    deg = max(coeff_by_rho_power) if coeff_by_rho_power else -1
    coeffs = [Fraction(coeff_by_rho_power.get(k, 0)) for k in range(deg + 1)]
    return RatFunc.from_poly(Poly("rho", coeffs))


def bipoly_to_tau(p: MPoly) -> Series:
    """Image of tb^a tw^b -> rho^b tau^(a+b); cap becomes the tau order."""
    if p.vars != BIVARS:
        raise StructureError("tau grading applies to bivariate weight polynomials")
    if p.cap is None:
        raise StructureError("tau grading needs a capped polynomial")
    slots = [dict() for _ in range(p.cap + 1)]
    for (a, b), c in p.terms.items():
        slots[a + b][b] = c
    return Series(TAU, p.cap, [_rho_poly(s) for s in slots], RHO_FIELD)


def tau_to_bipoly(s: Series, cap=None) -> MPoly:
    """Inverse of bipoly_to_tau; checks each coefficient is a polynomial in
    rho of degree at most its tau power."""
    if s.var != TAU:
        raise StructureError("expected a tau-graded series")
    cap = s.cap if cap is None else cap
    if cap > s.cap:
        raise StructureError("requested cap exceeds series order")
    terms = {}
    for k in range(cap + 1):
        c = s.coeffs[k]
        if c.is_zero():
            continue
        if not c.is_polynomial():
            raise NonInvertibleError(
                f"tau^{k} coefficient is not polynomial in rho: {c!r}"
            )
        if c.num.degree() > k:
            raise NonInvertibleError(
                f"tau^{k} coefficient has rho-degree {c.num.degree()} > {k}"
            )
        den = c.den.coeffs[0]
        for b, coef in enumerate(c.num.coeffs):
            if coef != 0:
                terms[(k - b, b)] = Fraction(coef) / Fraction(den)
    return MPoly(BIVARS, terms, cap)


def graded_div(num: MPoly, den: MPoly) -> MPoly:
    """Exact bivariate quotient computed in the tau grading.

    num and den must share a cap; den's valuation shifts out, and the
    result (of cap reduced by that valuation) must convert back to a
    genuine bivariate polynomial, else NonInvertibleError is raised.
    """
    q = bipoly_to_tau(num).divide(bipoly_to_tau(den))
    return tau_to_bipoly(q)
