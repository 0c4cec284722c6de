"""Univariate polynomials and rational functions over a field, stackable.

Poly is a dense coefficient tuple over a coefficient field described by a
FieldSpec (zero and one exemplars plus a name).  The base field is the
rationals; since a RatFunc is itself a field element, fields can be nested,
e.g. rational functions in one parameter whose coefficients are rational
functions in another.  That tower is how two-parameter identities are
verified exactly.

RatFunc is kept fully canonical: numerator and denominator are reduced by
their monic gcd and the denominator is monic, so two arithmetic routes to
the same value produce structurally equal objects and == is reliable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import NonInvertibleError, StructureError


def _primitive_ints(coeffs):
    """Clear denominators and content: rational coeff list -> primitive ints."""
    lcm = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            d = c.denominator
            lcm = lcm * d // _int_gcd(lcm, d)
    ints = [int(c * lcm) for c in coeffs]
    g = 0
    for v in ints:
        g = _int_gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _int_pseudo_rem(u, v):
    """Pseudo-remainder of primitive int coefficient lists (little-endian)."""
    r = list(u)
    lv = v[-1]
    dv = len(v) - 1
    while len(r) - 1 >= dv and r:
        lr = r[-1]
        shift = len(r) - 1 - dv
        r = [lv * c for c in r]
        for j, b in enumerate(v):
            r[shift + j] -= lr * b
        while r and r[-1] == 0:
            r.pop()
    return r


def _qq_poly_gcd_coeffs(a, b):
    """Monic gcd coefficients over the rationals via primitive integer PRS."""
    u = _primitive_ints(a)
    v = _primitive_ints(b)
    if len(u) < len(v):
        u, v = v, u
    while v:
        r = _int_pseudo_rem(u, v)
        if r:
            g = 0
            for c in r:
                g = _int_gcd(g, c)
            if g > 1:
                r = [c // g for c in r]
        u, v = v, r
    lead = Fraction(u[-1])
    return [Fraction(c) / lead for c in u]


class FieldSpec:
    __slots__ = ("zero", "one", "name")

    def __init__(self, zero, one, name):
        self.zero = zero
        self.one = one
        self.name = name

    def __repr__(self):
        return f"FieldSpec({self.name})"


QQ = FieldSpec(Fraction(0), Fraction(1), "QQ")


def _inv_elem(field, x):
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise NonInvertibleError("division by zero in coefficient field")
        return Fraction(1) / Fraction(x)
    return x.inverse()


class Poly:
    """Dense univariate polynomial; coeffs has no trailing zeros, () is zero."""

    __slots__ = ("var", "coeffs", "field")

    def __init__(self, var, coeffs, field=QQ):
        self.var = var
        self.field = field
        cs = list(coeffs)
        while cs and cs[-1] == field.zero:
            cs.pop()
        if field is QQ:
            cs = [
                int(c) if isinstance(c, Fraction) and c.denominator == 1 else c
                for c in cs
            ]
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, var, field=QQ):
        return cls(var, (), field)

    @classmethod
    def one(cls, var, field=QQ):
        return cls(var, (field.one,), field)

    @classmethod
    def const(cls, var, value, field=QQ):
        return cls(var, (value,), field)

    @classmethod
    def gen(cls, var, field=QQ):
        return cls(var, (field.zero, field.one), field)

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def _check(self, other):
        if self.var != other.var:
            raise StructureError(f"variable mismatch {self.var}/{other.var}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.var, self.field.one * other, self.field)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.var, [self.coeff(k) + other.coeff(k) for k in range(n)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.var, [-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.var, self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == self.field.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.var, out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Poly.one(self.var, self.field)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c):
        return Poly(self.var, [a * c for a in self.coeffs], self.field)

    def shift(self, k):
        """Multiply by var^k."""
        if not self.coeffs:
            return self
        return Poly(self.var, (self.field.zero,) * k + self.coeffs, self.field)

    def divmod(self, other):
        self._check(other)
        if other.is_zero():
            raise NonInvertibleError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(self.var, self.field), self
        inv_lead = _inv_elem(self.field, other.lead())
        quo = [self.field.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree()] * inv_lead
            quo[k] = c
            if c != self.field.zero:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Poly(self.var, quo, self.field), Poly(self.var, rem, self.field)

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(_inv_elem(self.field, self.lead()))

    def gcd(self, other):
        """Monic gcd; integer primitive remainder sequences over the
        rationals, plain Euclid over nested coefficient fields."""
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        if self.field is QQ:
            return Poly(self.var, _qq_poly_gcd_coeffs(self.coeffs, other.coeffs), QQ)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1].monic()
        return a.monic()

    def eval(self, x):
        """Horner evaluation at any ring element x (must absorb field coeffs)."""
        if not self.coeffs:
            return x * 0
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, Poly) else other
        if not isinstance(other, Poly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for k, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            if k == 0:
                bits.append(f"{c}")
            else:
                v = self.var if k == 1 else f"{self.var}^{k}"
                bits.append(v if c == self.field.one else f"({c})*{v}")
        return " + ".join(bits)


class RatFunc:
    """Reduced fraction of Polys with monic denominator (canonical form)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, reduce=True):
        if den.is_zero():
            raise NonInvertibleError("zero denominator")
        if reduce:
            if num.is_zero():
                den = Poly.one(num.var, num.field)
            else:
                if num.degree() > 0 and den.degree() > 0:
                    g = num.gcd(den)
                    if g.degree() > 0:
                        num = num.divmod(g)[0]
                        den = den.divmod(g)[0]
                if den.lead() != den.field.one:
                    lead_inv = _inv_elem(num.field, den.lead())
                    num = num.scale(lead_inv)
                    den = den.scale(lead_inv)
        self.num = num
        self.den = den

    # -------------------------------------------------------------- builders

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p, Poly.one(p.var, p.field), reduce=False)

    @classmethod
    def zero(cls, var, field=QQ):
        return cls.from_poly(Poly.zero(var, field))

    @classmethod
    def one(cls, var, field=QQ):
        return cls.from_poly(Poly.one(var, field))

    @classmethod
    def const(cls, var, value, field=QQ):
        if field is QQ:
            value = Fraction(value)
        return cls.from_poly(Poly.const(var, value, field))

    @classmethod
    def gen(cls, var, field=QQ):
        return cls.from_poly(Poly.gen(var, field))

    @property
    def var(self):
        return self.num.var

    @property
    def field(self):
        return self.num.field

    def ring_zero(self):
        return RatFunc.zero(self.var, self.field)

    def ring_one(self):
        return RatFunc.one(self.var, self.field)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree() == 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var:
                raise StructureError(f"variable mismatch {self.var}/{other.var}")
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.var, self.field.one * other, self.field)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a_num, a_den, b_num, b_den = self.num, self.den, other.num, other.den
        # cross-cancel first so intermediate degrees stay small
        if a_num.degree() > 0 and b_den.degree() > 0:
            g = a_num.gcd(b_den)
            if g.degree() > 0:
                a_num = a_num.divmod(g)[0]
                b_den = b_den.divmod(g)[0]
        if b_num.degree() > 0 and a_den.degree() > 0:
            g = b_num.gcd(a_den)
            if g.degree() > 0:
                b_num = b_num.divmod(g)[0]
                a_den = a_den.divmod(g)[0]
        return RatFunc(a_num * b_num, a_den * b_den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise NonInvertibleError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self):
        if self.is_zero():
            raise NonInvertibleError("zero has no inverse")
        return RatFunc(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = RatFunc.one(self.var, self.field)
        for _ in range(n):
            result = result * self
        return result

    def eval(self, x):
        """Evaluate at a field element x (e.g. another RatFunc): num(x)/den(x)."""
        den = self.den.eval(x)
        num = self.num.eval(x)
        if isinstance(den, (int, Fraction)):
            if den == 0:
                raise NonInvertibleError("evaluation hits a pole")
            if isinstance(num, (int, Fraction)):
                return Fraction(num) / Fraction(den)
            return num * (Fraction(1) / Fraction(den))
        return num / den

    def subst_reciprocal(self):
        """The rational function z -> self(1/z), with z = self.var."""
        z = RatFunc.gen(self.var, self.field)
        p = self.num.degree()
        q = self.den.degree()
        num_rev = Poly(self.var, tuple(reversed(self.num.coeffs)), self.field)
        den_rev = Poly(self.var, tuple(reversed(self.den.coeffs)), self.field)
        out = RatFunc(num_rev, den_rev)
        return out * z ** (q - p) if q >= p else out / z ** (p - q)

    def __eq__(self, other):
        try:
            other = self._coerce(other) if not isinstance(other, RatFunc) else other
        except StructureError:
            return NotImplemented
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def ratfunc_field(var, base=QQ) -> FieldSpec:
    """The field of rational functions in var over base, as a FieldSpec."""
    return FieldSpec(
        RatFunc.zero(var, base),
        RatFunc.one(var, base),
        f"{base.name}({var})",
    )
