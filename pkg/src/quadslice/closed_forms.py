"""Parametrized closed-form solutions of the slice recursions.

Both weight families admit product formulas once the two vertex weights are
parametrized rationally:

* family "xgamma": series variable x, parameter gamma; solves the
  bicolored pair.
* family "yalpha": series variable y, parameter alpha; solves the context
  pair and the merged sequence.  The parametrizations agree under
  alpha = 1/gamma^2, y = gamma * x.

Values are truncated series in the parametrization variable over the field
of rational functions of the remaining parameter; the parameter must live
in a field because the odd-index formulas carry inverse powers of gamma.
Every displayed formula is a prefactor times a ratio of factors
(1 - c * v^k), and all of them are built by one shared table so a
transcription slip cannot hit a single branch silently.

Verification routines substitute the closed forms back into the recursion
systems (zero residual to a requested order, identically in the
parameter), check the two parametrizations against each other, match the
closed forms against the fixed-point solver through composition, and prove
the purely rational identities of the constructive derivation in the
nested field of rational functions in y and alpha.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CheckReport, StructureError, VerificationError
from .exactalg import MPoly
from .ratfunc import RatFunc, ratfunc_field
from .series import Series
from .slice_solver import solve_bw, solve_limit, solve_pq, solve_y

GAMMA_FIELD = ratfunc_field("gamma")
ALPHA_FIELD = ratfunc_field("alpha")


class ParamPoint:
    """family "xgamma" or "yalpha" with a series order cap."""

    __slots__ = ("family", "cap", "var", "field", "param")

    def __init__(self, family, cap):
        if family not in ("xgamma", "yalpha"):
            raise StructureError(f"unknown family {family!r}")
        if cap < 1:
            raise StructureError("need cap >= 1")
        self.family = family
        self.cap = cap
        self.var = "x" if family == "xgamma" else "y"
        self.field = GAMMA_FIELD if family == "xgamma" else ALPHA_FIELD
        self.param = RatFunc.gen("gamma" if family == "xgamma" else "alpha")

    # building blocks ------------------------------------------------------

    def gen(self):
        return Series.gen(self.var, self.cap, self.field)

    def one(self):
        return Series.one(self.var, self.cap, self.field)

    def factor(self, c, k):
        """The series 1 - c * v^k (c a rational function of the parameter)."""
        coeffs = [self.field.zero] * (self.cap + 1)
        coeffs[0] = self.field.one
        if k <= self.cap:
            coeffs[k] = coeffs[k] - c
        return Series(self.var, self.cap, coeffs, self.field)

    def poly(self, coeffs_by_power):
        """Series with the given {power: RatFunc-or-int} coefficients."""
        coeffs = [self.field.zero] * (self.cap + 1)
        for k, c in coeffs_by_power.items():
            if k <= self.cap:
                coeffs[k] = self.field.one * c
        return Series(self.var, self.cap, coeffs, self.field)

    def ratio(self, prefactor, num_factors, den_factors):
        out = prefactor
        for c, k in num_factors:
            out = out * self.factor(c, k)
        for c, k in den_factors:
            out = out * self.factor(c, k).inv()
        return out


def _denominator(p: ParamPoint) -> Series:
    g = p.param
    if p.family == "xgamma":
        # x + x^3 + gamma - 6 x^2 gamma + x^4 gamma + x gamma^2 + x^3 gamma^2
        return p.poly({0: g, 1: 1 + g * g, 2: -6 * g, 3: 1 + g * g, 4: g})
    # 1 + y + alpha y - 6 alpha y^2 + alpha y^3 + alpha^2 y^3 + alpha^2 y^4
    return p.poly({0: 1, 1: 1 + g, 2: -6 * g, 3: g + g * g, 4: g * g})


def eval_tt(p: ParamPoint):
    """The two vertex weights as series at the parametrization point."""
    g = p.param
    den = _denominator(p)
    c0 = den.coeffs[0]
    if c0 == p.field.zero:
        raise StructureError("denominator constant term vanished (transcription error)")
    inv2 = (den * den).inv()
    v = p.gen()
    if p.family == "xgamma":
        t_b = v * p.factor(1 / g, 1) ** 3 * (g ** 3) * p.factor(g, 3) * inv2
        t_w = v * p.factor(1 / g, 3) * g * p.factor(g, 1) ** 3 * inv2
    else:
        t_b = v * p.factor(g, 1) ** 3 * p.factor(g, 3) * inv2
        t_w = v * g * p.factor(1, 1) ** 3 * p.factor(g * g, 3) * inv2
    return t_b, t_w


def eval_limits(p: ParamPoint):
    """Large-height limit pair: (B, W) for xgamma, (P, Q) for yalpha."""
    g = p.param
    inv = _denominator(p).inv()
    v = p.gen()
    if p.family == "xgamma":
        first = v * (g ** 2) * p.factor(1 / g, 1) ** 2 * inv
        second = v * p.factor(g, 1) ** 2 * inv
    else:
        first = v * p.factor(g, 1) ** 2 * inv
        second = v * g * p.factor(1, 1) ** 2 * inv
    return first, second


def eval_y_limit(p: ParamPoint) -> Series:
    """Q - P in closed form: (alpha - 1) y (1 - alpha y^2) / denominator."""
    if p.family != "yalpha":
        raise StructureError("merged limit lives in the yalpha family")
    g = p.param
    return p.gen() * (g - 1) * p.factor(g, 2) * _denominator(p).inv()


def eval_bw_closed(i, p: ParamPoint):
    """Closed forms of the bicolored weights at height i >= 0."""
    if p.family != "xgamma":
        raise StructureError("bicolored closed forms live in the xgamma family")
    g = p.param
    B, W = eval_limits(p)
    if i % 2 == 0:
        m = i  # even index 2m with 2m = i
        b_i = p.ratio(B, [(1, m), (g, m + 3)], [(g, m + 1), (1, m + 2)])
        w_i = p.ratio(W, [(1, m), (1 / g, m + 3)], [(1 / g, m + 1), (1, m + 2)])
    else:
        m = i
        b_i = p.ratio(B, [(1 / g, m), (1, m + 3)], [(1, m + 1), (1 / g, m + 2)])
        w_i = p.ratio(W, [(g, m), (1, m + 3)], [(1, m + 1), (g, m + 2)])
    return b_i, w_i


def eval_pqy_closed(i, p: ParamPoint):
    """Closed forms (P_i, Q_i, Y_{2i}, Y_{2i+1}) at height i >= 0.

    Y_{2i} coincides with P_i by construction; Y_{2i+1} is checked against
    Q_{i+1} - P_{i+1} before returning.
    """
    if p.family != "yalpha":
        raise StructureError("context closed forms live in the yalpha family")
    g = p.param
    P, Q = eval_limits(p)
    Yl = eval_y_limit(p)
    p_i = p.ratio(P, [(1, i), (g, i + 3)], [(1, i + 1), (g, i + 2)])
    q_i = p.ratio(Q, [(1, i), (g * g, i + 3)], [(g, i + 1), (g, i + 2)])
    y_even = p_i
    y_odd = p.ratio(Yl, [(1, i + 1), (g, i + 3)], [(1, i + 2), (g, i + 2)])
    p_next = p.ratio(P, [(1, i + 1), (g, i + 4)], [(1, i + 2), (g, i + 3)])
    q_next = p.ratio(Q, [(1, i + 1), (g * g, i + 4)], [(g, i + 2), (g, i + 3)])
    if y_odd != q_next - p_next:
        raise VerificationError(f"Y_{2 * i + 1} disagrees with Q_{i + 1} - P_{i + 1}")
    return p_i, q_i, y_even, y_odd


# -------------------------------------------------------------- verification

def verify_recursion(system, i_range=range(1, 7), M=8) -> CheckReport:
    """Residuals of the recursion systems under the closed forms.

    system in {"bw", "pq", "y"}; each residual must vanish identically in
    the parameter up to order M in the series variable.
    """
    if M < 2:
        raise StructureError("need order >= 2")
    report = CheckReport(f"closed-form recursion residuals: {system} to order {M}")
    if system == "bw":
        p = ParamPoint("xgamma", M)
        t_b, t_w = eval_tt(p)
        vals = {i: eval_bw_closed(i, p) for i in range(min(i_range) - 1, max(i_range) + 2)}
        for i in i_range:
            B_i, W_i = vals[i]
            r1 = B_i - t_b - B_i * (vals[i - 1][1] + B_i + vals[i + 1][1])
            r2 = W_i - t_w - W_i * (vals[i - 1][0] + W_i + vals[i + 1][0])
            if not r1.is_zero() or not r2.is_zero():
                raise VerificationError(f"bicolored residual nonzero at height {i}")
            report.add(f"height {i}: both residuals vanish")
        return report
    if system == "pq":
        p = ParamPoint("yalpha", M)
        t_b, t_w = eval_tt(p)
        vals = {i: eval_pqy_closed(i, p)[:2] for i in range(min(i_range) - 1, max(i_range) + 2)}
        for i in i_range:
            P_i, Q_i = vals[i]
            Qn = vals[i + 1][1]
            r1 = P_i - t_b - P_i * (vals[i - 1][0] + Q_i + Qn)
            r2 = Q_i - t_w - Q_i * (vals[i - 1][0] + Q_i) - P_i * Qn
            if not r1.is_zero() or not r2.is_zero():
                raise VerificationError(f"context residual nonzero at height {i}")
            report.add(f"height {i}: both residuals vanish")
        return report
    if system == "y":
        p = ParamPoint("yalpha", M)
        t_b, t_w = eval_tt(p)
        hi = max(i_range)
        y = {}
        for m in range(0, hi + 2):
            _, _, y_even, y_odd = eval_pqy_closed(m, p)
            y[2 * m] = y_even
            y[2 * m + 1] = y_odd
        for i in i_range:
            r_even = y[2 * i] - t_b - y[2 * i] * (
                y[2 * i - 2] + y[2 * i - 1] + y[2 * i] + y[2 * i + 1] + y[2 * i + 2]
            )
            r_odd = y[2 * i - 1] - (t_w - t_b) - y[2 * i - 1] * (
                y[2 * i - 2] + y[2 * i - 1] + y[2 * i]
            )
            if not r_even.is_zero() or not r_odd.is_zero():
                raise VerificationError(f"merged residual nonzero at pair {i}")
            report.add(f"pair {i}: both residuals vanish")
        return report
    raise StructureError(f"unknown system {system!r}")


def _subst_to_x(series: Series, M) -> Series:
    """Substitute alpha = 1/gamma^2, y = gamma x into a yalpha series."""
    gamma = RatFunc.gen("gamma")
    sub = 1 / (gamma * gamma)
    out = []
    scale = RatFunc.one("gamma")
    for k in range(M + 1):
        c = series.coeffs[k]
        out.append(c.eval(sub) * scale if not c.is_zero() else GAMMA_FIELD.zero)
        scale = scale * gamma
    return Series("x", M, out, GAMMA_FIELD)


def param_equivalence(M=6) -> CheckReport:
    """The two parametrizations agree under alpha = 1/gamma^2, y = gamma x."""
    report = CheckReport(f"parametrization equivalence to order {M}")
    px = ParamPoint("xgamma", M)
    py = ParamPoint("yalpha", M)
    tx = eval_tt(px)
    ty = eval_tt(py)
    for name, a, b in (("tb", tx[0], ty[0]), ("tw", tx[1], ty[1])):
        if a != _subst_to_x(b, M):
            raise VerificationError(f"substituted {name} disagrees between families")
        report.add(f"{name} matches after substitution")
    BW = eval_limits(px)
    PQ = eval_limits(py)
    for name, a, b in (("P=B", BW[0], PQ[0]), ("Q=W", BW[1], PQ[1])):
        if a != _subst_to_x(b, M):
            raise VerificationError(f"substituted limit {name} failed")
        report.add(f"limit {name} after substitution")
    return report


def compose_bipoly(poly: MPoly, t_b: Series, t_w: Series) -> Series:
    """Evaluate a bivariate weight polynomial on two valuation-1 series."""
    if t_b.valuation() is None or t_b.valuation() < 1 or t_w.valuation() < 1:
        raise StructureError("composition needs valuation >= 1 substituends")
    max_a = max((e[0] for e in poly.terms), default=0)
    max_b = max((e[1] for e in poly.terms), default=0)
    pb = [t_b.ring_one()]
    for _ in range(max_a):
        pb.append(pb[-1] * t_b)
    pw = [t_w.ring_one()]
    for _ in range(max_b):
        pw.append(pw[-1] * t_w)
    out = t_b.ring_zero()
    for (a, b), c in poly.terms.items():
        out = out + pb[a] * pw[b] * (t_b.field.one * c)
    return out


def series_match(N=5) -> CheckReport:
    """Fixed-point solver outputs, composed with the parametrized weights,
    equal the closed forms to order N (both families, heights 1..4)."""
    if N < 3:
        raise StructureError("need order >= 3")
    report = CheckReport(f"solver vs closed forms to order {N}")
    px = ParamPoint("xgamma", N)
    t_b, t_w = eval_tt(px)
    bw = solve_bw(N)
    for i in range(1, 5):
        ci = eval_bw_closed(i, px)
        if compose_bipoly(bw.first[i], t_b, t_w) != ci[0]:
            raise VerificationError(f"bicolored first weight mismatch at height {i}")
        if compose_bipoly(bw.second[i], t_b, t_w) != ci[1]:
            raise VerificationError(f"bicolored second weight mismatch at height {i}")
        report.add(f"bicolored height {i} matches")
    py = ParamPoint("yalpha", N)
    t_b, t_w = eval_tt(py)
    pq = solve_pq(N)
    yfam = solve_y(N)
    for i in range(1, 5):
        p_i, q_i, y_even, y_odd = eval_pqy_closed(i, py)
        if compose_bipoly(pq.first[i], t_b, t_w) != p_i:
            raise VerificationError(f"context first weight mismatch at height {i}")
        if compose_bipoly(pq.second[i], t_b, t_w) != q_i:
            raise VerificationError(f"context second weight mismatch at height {i}")
        if compose_bipoly(yfam.first[2 * i], t_b, t_w) != y_even:
            raise VerificationError(f"merged even weight mismatch at {2 * i}")
        if compose_bipoly(yfam.first[2 * i + 1], t_b, t_w) != y_odd:
            raise VerificationError(f"merged odd weight mismatch at {2 * i + 1}")
        report.add(f"context/merged height {i} matches")
    # the limits absorb every height beyond the order
    B, W = eval_limits(px)
    xt_b, xt_w = eval_tt(px)
    lim = solve_limit(N)
    if compose_bipoly(lim.first, xt_b, xt_w) != B or compose_bipoly(lim.second, xt_b, xt_w) != W:
        raise VerificationError("limit composition mismatch")
    report.add("limit pair matches")
    return report


def large_height_collapse(M=5, i_from=None) -> CheckReport:
    """For i > M every height-dependent factor is 1 + O(v^{M+1}), so the
    closed forms collapse to the limit pair exactly at cap M."""
    i = (M + 1) if i_from is None else i_from
    report = CheckReport(f"large-height collapse at order {M}, height {i}")
    px = ParamPoint("xgamma", M)
    B, W = eval_limits(px)
    bi, wi = eval_bw_closed(i, px)
    if bi != B or wi != W:
        raise VerificationError("bicolored closed form did not collapse to the limit")
    report.add("bicolored collapse")
    py = ParamPoint("yalpha", M)
    P, Q = eval_limits(py)
    pi, qi, _, _ = eval_pqy_closed(i, py)
    if pi != P or qi != Q:
        raise VerificationError("context closed form did not collapse to the limit")
    report.add("context collapse")
    return report


# ------------------------------------------------- rational identities tower

def _tower():
    """Constants of the nested field: rational functions in alpha over
    rational functions in y."""
    FY = ratfunc_field("y")
    a = RatFunc.gen("alpha", FY)
    y = RatFunc.const("alpha", RatFunc.gen("y"), FY)
    one = RatFunc.one("alpha", FY)
    return FY, a, y, one


def section6_algebra() -> CheckReport:
    """The rational-function identities behind the constructive derivation.

    Everything is verified exactly in the nested field: the displayed
    (y, alpha) forms of Y, Y_1, A_0, A_1; the hard-piece weight
    w = A_0 A_1 (Y_1/Y)^2 P = -1/(y + 1/y + 2); d = (Y_1 - Y)/Y_1 and its
    two displayed forms; the defining relation alpha = (d + y)/(y^2 (1 + d y));
    the characteristic equation; and the recovery chain expressing Q in
    terms of P and then pinning P.
    """
    report = CheckReport("rational identities of the constructive route")
    _, a, y, one = _tower()
    D = one + y + a * y - 6 * a * y ** 2 + a * y ** 3 + a ** 2 * y ** 3 + a ** 2 * y ** 4
    P = y * (one - a * y) ** 2 / D
    Q = a * y * (one - y) ** 2 / D
    Y = Q - P
    if Y != (a - 1) * y * (one - a * y ** 2) / D:
        raise VerificationError("merged limit display failed")
    report.add("Y display")
    t_b = P * (one - P - 2 * Q)
    t_w = Q * (one - Q - 2 * P)
    tts = eval_tt(ParamPoint("yalpha", 8))
    # cross-check the closed t display against the series evaluation route
    if _tower_to_series(t_b, 8) != tts[0] or _tower_to_series(t_w, 8) != tts[1]:
        raise VerificationError("vertex weight parametrization display failed")
    report.add("vertex weights match their displays")
    Y1 = Y * (one - P - 2 * Q) / (one - 2 * Q)
    if Y1 != (a - 1) * y * (one - a * y ** 3) / ((one + y) * D):
        raise VerificationError("first merged coefficient display failed")
    report.add("Y_1 display")
    A0 = P * (one - P - Q) / t_b
    A1 = -P / t_b
    if A0 != (one - a * y ** 2) ** 2 / ((one - a * y) * (one - a * y ** 3)):
        raise VerificationError("A_0 display failed")
    if A1 != -D / ((one - a * y) * (one - a * y ** 3)):
        raise VerificationError("A_1 display failed")
    report.add("A_0 and A_1 displays")
    w = A0 * A1 * (Y1 / Y) ** 2 * P
    if w != -one / (y + 1 / y + 2):
        raise VerificationError("hard-piece weight identity failed")
    if w != -P * (one - Q - P) / (one - 2 * Q) ** 2:
        raise VerificationError("hard-piece weight in P, Q failed")
    report.add("w identity both forms")
    if (one - 2 * Q) ** 2 - (2 + y + 1 / y) * P * (one - P - Q) != 0 * one:
        raise VerificationError("characteristic equation failed")
    report.add("characteristic equation")
    d = (Y1 - Y) / Y1
    if d != -y * (one - a * y) / (one - a * y ** 3):
        raise VerificationError("d display failed")
    if d != -P / (one - P - 2 * Q):
        raise VerificationError("d in P, Q failed")
    if (d + y) / (y ** 2 * (one + d * y)) != a:
        raise VerificationError("alpha recovery failed")
    report.add("d displays and alpha recovery")
    q_rec = -P * (one + y) * (one - a * y ** 2) / (2 * y * (one - a * y)) + Fraction(1, 2) * one
    if q_rec != Q:
        raise VerificationError("Q recovery from P failed")
    if -y * (one - a * y) ** 2 + P * D != 0 * one:
        raise VerificationError("P determination failed")
    report.add("recovery chain pins P and Q")
    return report


def _tower_to_series(val: RatFunc, M, slack=12) -> Series:
    """Expand a nested-field value as a y-series over rational functions of
    alpha.  Coefficient denominators in y are cleared first, leaving a
    ratio of genuinely bivariate polynomials to expand and series-divide;
    the clearing can add valuation, hence the internal slack."""
    from .ratfunc import Poly

    M, target = M + slack, M

    def clear(apoly):
        # common multiple of the y-denominators of all alpha-coefficients
        common = Poly.one("y")
        for c in apoly.coeffs:
            if not (c == 0) and c.den.degree() > 0:
                g = common.gcd(c.den)
                common = common * c.den.divmod(g)[0]
        cm = RatFunc.from_poly(common)
        cleared = [c * cm for c in apoly.coeffs]
        return cleared, common

    def biv_to_series(cleared) -> Series:
        out = [ALPHA_FIELD.zero] * (M + 1)
        agen = RatFunc.gen("alpha")
        for apow, c in enumerate(cleared):
            if c == 0:
                continue
            for ypow, cy in enumerate(c.num.coeffs):
                if ypow <= M and cy != 0:
                    out[ypow] = out[ypow] + agen ** apow * Fraction(cy)
        return Series("y", M, out, ALPHA_FIELD)

    def ypoly_to_series(p) -> Series:
        coeffs = [ALPHA_FIELD.one * Fraction(c) for c in p.coeffs[: M + 1]]
        return Series("y", M, coeffs, ALPHA_FIELD)

    num_cleared, num_den = clear(val.num)
    den_cleared, den_den = clear(val.den)
    numerator = biv_to_series(num_cleared) * ypoly_to_series(den_den)
    denominator = biv_to_series(den_cleared) * ypoly_to_series(num_den)
    quotient = numerator.divide(denominator)
    if quotient.cap < target:
        raise StructureError("tower expansion lost too much order; raise the slack")
    return quotient.truncate(target)
