"""Continued fractions in the boundary-length variable and their coefficient
extraction through Hankel determinants.

Two fraction shapes appear:

* Stieltjes: 1 / (1 - z c_1 / (1 - z c_2 / ...)); the rung coefficients
  come back from the series coefficients as ratios of consecutive Hankel
  determinants h_i^(0) = det(F_{n+m}), h_i^(1) = det(F_{n+m+1}).
* two-term rungs: 1 / (1 - z Y_1 - z Y_2 / (1 - z Y_3 - z Y_4 / ...)).
  Here the plain series underdetermines the rungs; extraction additionally
  needs Y_1 and a companion series whose rungs are the transformed weights
  tilde(Y)_{2i-1} = 1/Y_{2i-1}, tilde(Y)_{2i} = Y_{2i}/(Y_{2i-1} Y_{2i+1}).
  The two series splice into a two-sided ladder j_n (j_0 = 1, j_n = Y_1 *
  J_{n-1} for n >= 1, j_{-n} = companion coefficient n), and the rungs are
  bi-ratios of the Hankel-type determinants H_i^(0) = det(j_{n+m-i-1}),
  H_i^(1) = det(j_{n+m-i}) over 1 <= n, m <= i, with H_0^(0) = H_0^(1) = 1.

For the concrete weight series of the local-maxima ensemble the companion
coefficients are not polynomials in the two vertex weights (they carry
inverse powers of Q - P), so the bivariate pipeline works in the tau
grading throughout and additionally rescales the ladder by tau^(-n).
That geometric rescaling multiplies each extracted rung by tau^(-1) and
leaves the bi-ratios otherwise unchanged, and it makes every ladder entry
a genuine power series: entry n of the ladder has valuation exactly |n|
before rescaling.  The final shift by tau restores the rung values.

For finite fractions the whole object is a rational function of z and the
companion is forced: tilde(J)(z) = -(Y_1/z) J(1/z) with Y_1 read off the
large-z limit.  That reflection is verified here exactly, and conjecturally
transplanted to the infinite case to build the companion series.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import CheckReport, StructureError, VerificationError
from .exactalg import (
    MPoly,
    _ring_one_of,
    _ring_zero_of,
    bipoly_one,
    det_division_free,
    tb,
)
from .ratfunc import QQ, FieldSpec, RatFunc
from .series import Series, bipoly_to_tau, graded_div, tau_to_bipoly
from .slice_solver import a0_a1_times_tb, f_n, solve_limit, y1_series
from .lattice_paths import z_const


class FractionSpec:
    """kind in {"stieltjes", "newtype"}; coeffs are the rung values c_1..c_K
    (Stieltjes) or Y_1..Y_K (two-term rungs).  finite=True means the
    fraction terminates exactly after the supplied coefficients; a finite
    two-term fraction has an odd number of them."""

    __slots__ = ("kind", "coeffs", "finite")

    def __init__(self, kind, coeffs, finite=False):
        if kind not in ("stieltjes", "newtype"):
            raise StructureError(f"unknown fraction kind {kind!r}")
        coeffs = list(coeffs)
        if not coeffs:
            raise StructureError("need at least one rung coefficient")
        if finite and kind == "newtype" and len(coeffs) % 2 == 0:
            raise StructureError("a finite two-term fraction has 2*alpha - 1 coefficients")
        self.kind = kind
        self.coeffs = coeffs
        self.finite = finite


def _ring_field(exemplar) -> FieldSpec:
    return FieldSpec(_ring_zero_of(exemplar), _ring_one_of(exemplar), "ring")


def expand(spec: FractionSpec, L) -> Series:
    """Evaluate the nested fraction bottom-up, truncated at order L in z."""
    field = _ring_field(spec.coeffs[0])
    one = Series.one("z", L, field)
    z = Series.gen("z", L, field)
    if spec.kind == "stieltjes":
        if not spec.finite and len(spec.coeffs) < L:
            raise StructureError(f"need at least {L} rungs for order {L}")
        depth = len(spec.coeffs) if spec.finite else L
        t = one
        for i in range(depth, 0, -1):
            t = (one - z * (t * spec.coeffs[i - 1])).inv()
        return t
    # two-term rungs: order L sees the descent weight of rung L
    if not spec.finite and len(spec.coeffs) < 2 * L:
        raise StructureError(f"need coefficients up to index {2 * L} for order {L}")
    rungs = (len(spec.coeffs) + 1) // 2
    depth = rungs if spec.finite else min(rungs, L)
    t = one
    for i in range(depth, 0, -1):
        body = one - z * spec.coeffs[2 * i - 2]
        if 2 * i - 1 < len(spec.coeffs):
            body = body - z * (t * spec.coeffs[2 * i - 1])
        t = body.inv()
    return t


# ----------------------------------------------------------------- division

def _div(a, b):
    """Exact division for ladder/Hankel values of any supported type."""
    if isinstance(a, Series):
        return a.divide(b)
    if isinstance(a, MPoly) or isinstance(b, MPoly):
        return graded_div(a, b)
    return a / b


# ------------------------------------------------------- Stieltjes extraction

def stieltjes_extract(F: Series, i_max):
    """Recover rungs c_1..c_{2 i_max} from a Stieltjes series.

    Returns {("b", 2i): value, ("w", 2i-1): value} following the slice
    naming: even rungs are the black-rooted weights, odd rungs white.
    Requires F known to order 2*i_max with F_0 = 1.
    """
    if F.cap < 2 * i_max:
        raise StructureError("series order too small for the requested rungs")
    if F.coeffs[0] != _ring_one_of(F.coeffs[0]):
        raise StructureError("Stieltjes series must start at 1")

    def h(i, shift):
        if i < 0:
            return _ring_one_of(F.coeffs[0])
        rows = [[F.coeffs[n + m + shift] for m in range(i + 1)] for n in range(i + 1)]
        return det_division_free(rows)

    out = {}
    h0 = {i: h(i, 0) for i in range(-1, i_max + 1)}
    h1 = {i: h(i, 1) for i in range(-1, i_max)}
    for i in range(1, i_max + 1):
        out[("w", 2 * i - 1)] = _div(h1[i - 1] * h0[i - 2], h1[i - 2] * h0[i - 1])
        out[("b", 2 * i)] = _div(h0[i] * h1[i - 2], h0[i - 1] * h1[i - 1])
    return out


# --------------------------------------------------------- two-sided ladder

class JnLadder:
    """Two-sided coefficient ladder j_n with the first rung value y1."""

    __slots__ = ("j", "y1")

    def __init__(self, j, y1):
        self.j = dict(j)
        self.y1 = y1

    def __getitem__(self, n):
        if n not in self.j:
            raise StructureError(f"ladder entry {n} not populated")
        return self.j[n]

    def range(self):
        return min(self.j), max(self.j)


def build_jn(J: Series, y1, Jt: Series) -> JnLadder:
    """Splice the main and companion series into the two-sided ladder."""
    one = _ring_one_of(y1)
    if J.coeffs[0] != one or Jt.coeffs[0] != one:
        raise StructureError("both series must have constant term 1")
    j = {0: one}
    for n in range(1, J.cap + 2):
        j[n] = y1 * J.coeffs[n - 1]
    for n in range(1, Jt.cap + 1):
        j[-n] = Jt.coeffs[n]
    return JnLadder(j, y1)


def hankel_type_dets(ladder: JnLadder, i, shift):
    """H_i^(shift) = det(j_{n+m-i-1+shift}) over 1 <= n, m <= i; H_0 = 1."""
    if i == 0:
        return _ring_one_of(ladder.y1)
    rows = [
        [ladder[n + m - i - 1 + shift] for m in range(1, i + 1)]
        for n in range(1, i + 1)
    ]
    return det_division_free(rows)


def newtype_extract(ladder: JnLadder, i_max):
    """Recover Y_1..Y_{2 i_max} from the ladder via the bi-ratio formulas."""
    H0 = {i: hankel_type_dets(ladder, i, 0) for i in range(i_max + 1)}
    H1 = {i: hankel_type_dets(ladder, i, 1) for i in range(i_max + 2)}
    Y = {}
    for i in range(1, i_max + 1):
        Y[2 * i - 1] = _div(H1[i] * H0[i - 1], H1[i - 1] * H0[i])
        Y[2 * i] = _div(H0[i - 1] * H1[i + 1], H0[i] * H1[i])
    return [Y[k] for k in range(1, 2 * i_max + 1)]


def tilde_coeffs(Y):
    """Transformed rung weights for the companion fraction.

    Input Y_1..Y_K with K odd; output same length.  Works over any field
    elements (exact inverses must exist)."""
    K = len(Y)
    if K % 2 == 0:
        raise StructureError("expected an odd number of rung weights")
    one = _ring_one_of(Y[0])
    out = []
    for idx in range(1, K + 1):
        if idx % 2 == 1:
            out.append(_div(one, Y[idx - 1]))
        else:
            out.append(_div(Y[idx - 1], Y[idx - 2] * Y[idx]))
    return out


# ------------------------------------------------- bivariate graded pipeline

def graded_ladder(order, n_hi, n_lo) -> JnLadder:
    """Ladder for the local-maxima ensemble in the rescaled tau grading.

    Entry n (0 <= n <= n_hi) is tau^(-n) * (Y_1 * J_{n-1}); entry -n
    (1 <= n <= n_lo) is tau^n * (conjectured companion coefficient n).
    Entry n of the raw ladder has valuation exactly |n|, so every rescaled
    entry is an honest tau-series; each is built at the internal cap that
    makes it exact to the requested order.
    """
    j = {}
    for n in range(0, n_hi + 1):
        cap = order + n
        val = y1_series(cap) * f_n(n - 1, cap) if n >= 1 else bipoly_one(order)
        j[n] = bipoly_to_tau(val).shift(-n)
    for n in range(1, n_lo + 1):
        j[-n] = conjectured_tilde_j_graded(n, order)
    return JnLadder(j, bipoly_to_tau(y1_series(order)))


def conjectured_tilde_j_graded(n, order) -> Series:
    """Companion coefficient n in the rescaled grading, exact to ``order``.

    tau^n * Y_1 (A_0 Z_n + A_1 (Q-P)^2 Z_{n-1}) / (Q-P)^(2n+1), with A_0
    and A_1 multiplied through by tb so numerator and denominator are
    polynomial; Z_k is the constant-weight path series coefficient.  The
    result has valuation 0 and constant coefficient 1 at n = 0.
    """
    if n == 0:
        return Series.one("tau", order, bipoly_to_tau(bipoly_one(order)).field)
    cap = order + 2 * n + 2  # the division by a valuation-(2n+2) series
    lim = solve_limit(cap)
    P, Q = lim.first, lim.second
    ta0, ta1 = a0_a1_times_tb(lim)
    Y = Q - P
    num = y1_series(cap) * (
        ta0 * z_const(n, P, Q, "context") + ta1 * Y * Y * z_const(n - 1, P, Q, "context")
    )
    den = tb(cap) * Y ** (2 * n + 1)
    out = bipoly_to_tau(num).shift(n).divide(bipoly_to_tau(den))
    return out.truncate(order)


def conjectured_tilde_j_rescaled_route(n, order) -> Series:
    """Same companion value via (Y_1/Y)(A_0 Zt_n + A_1 Zt_{n-1}) with
    Zt_k = Z_k / (Q-P)^(2k); an independent arrangement of the divisions."""
    if n == 0:
        return Series.one("tau", order, bipoly_to_tau(bipoly_one(order)).field)
    cap = order + 2 * n + 2
    lim = solve_limit(cap)
    P, Q = lim.first, lim.second
    Y = Q - P
    ta0, ta1 = a0_a1_times_tb(lim)
    t_tau = bipoly_to_tau(tb(cap))

    def zt(k):
        # tau^k * Zt_k: valuation-0 series
        return bipoly_to_tau(z_const(k, P, Q, "context")).shift(k).divide(
            bipoly_to_tau(Y ** (2 * k))
        )

    a0 = bipoly_to_tau(ta0).divide(t_tau)
    a1 = bipoly_to_tau(ta1).divide(t_tau)
    yy = bipoly_to_tau(y1_series(cap)).divide(bipoly_to_tau(Y))
    out = yy * (a0 * zt(n) + a1 * zt(n - 1).shift(1))
    return out.truncate(order)


def newtype_rungs_from_solver_inputs(N, i_max):
    """Full graded extraction: conjectured companion and solver main series
    give back the merged weight sequence Y_1..Y_{2 i_max} as bivariate
    polynomials of cap N + 1."""
    ladder = graded_ladder(N, i_max + 1, i_max - 1)
    rungs = newtype_extract(ladder, i_max)
    return [tau_to_bipoly(val.shift(1)) for val in rungs]


def stieltjes_rungs_from_solver(out_cap, i_max):
    """Extract the bicolored slice weights from the boundary series alone.

    Builds the series from f_n at an internal cap large enough that every
    Hankel-determinant quotient is exact to ``out_cap``, then returns
    {("b", 2i): ..., ("w", 2i-1): ...} with every value of cap >= out_cap.
    The denominator valuation is probed on a first pass.
    """
    field = _ring_field(bipoly_one(1))

    def extract_at(cap):
        F = Series("z", 2 * i_max, [f_n(n, cap) for n in range(2 * i_max + 1)], field)
        return stieltjes_extract(F, i_max)

    probe = extract_at(out_cap + 2)
    deficit = max(out_cap - min(v.cap for v in probe.values()), 0)
    if deficit == 0:
        return probe
    return extract_at(out_cap + 2 + deficit)


# ------------------------------------------------------- finite reflection

def _random_nonzero_rationals(count, rng, bound=7):
    vals = []
    while len(vals) < count:
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        if num != 0:
            vals.append(Fraction(num, den))
    return vals


def finite_fraction_ratfunc(coeffs):
    """A finite two-term fraction as an exact rational function of z."""
    z = RatFunc.gen("z")
    one = RatFunc.one("z")
    rungs = (len(coeffs) + 1) // 2
    t = one
    for i in range(rungs, 0, -1):
        body = one - z * coeffs[2 * i - 2]
        if 2 * i - 1 < len(coeffs):
            body = body - z * coeffs[2 * i - 1] * t
        t = body.inverse()
    return t


def finite_reflection_check(alpha, seed) -> CheckReport:
    """Verify the reflection law of finite two-term fractions.

    With independent rung values Y_1..Y_{2 alpha - 1}: the fraction J(z) is
    a rational function with numerator degree alpha - 1 and denominator
    degree alpha; the companion built from the transformed weights equals
    -(Y_1/z) J(1/z); and Y_1 = -1 / lim z J(z) as z grows (ratio of leading
    coefficients)."""
    rng = random.Random(seed)
    Y = _random_nonzero_rationals(2 * alpha - 1, rng)
    report = CheckReport(f"finite reflection alpha={alpha} seed={seed}")
    J = finite_fraction_ratfunc(Y)
    if J.num.degree() != alpha - 1 or J.den.degree() != alpha:
        raise VerificationError(
            f"degree check failed: {J.num.degree()}/{J.den.degree()} vs {alpha - 1}/{alpha}"
        )
    report.add(f"degrees {alpha - 1}/{alpha} as expected")
    Jt = finite_fraction_ratfunc(tilde_coeffs(Y))
    z = RatFunc.gen("z")
    # lim z J(z): z J has equal num/den degree alpha; den is monic
    zJ = z * J
    limit = Fraction(zJ.num.lead()) / Fraction(zJ.den.lead())
    y1 = Fraction(-1) / limit
    if y1 != Y[0]:
        raise VerificationError(f"large-z limit gives Y_1 = {y1}, expected {Y[0]}")
    report.add("Y_1 recovered from the large-z limit")
    reflected = -(RatFunc.const("z", Y[0]) / z) * J.subst_reciprocal()
    if reflected != Jt:
        raise VerificationError("reflection identity failed")
    report.add("companion equals -(Y_1/z) J(1/z)")
    return report


def underdetermination_witness(seed) -> CheckReport:
    """Two distinct companion choices give distinct rungs but identical
    re-expanded main series (one seeded rational instance)."""
    rng = random.Random(seed)
    i_max = 3
    Y = _random_nonzero_rationals(2 * i_max + 3, rng)
    alpha = (len(Y) + 1) // 2
    order = i_max + 1
    J = expand(FractionSpec("newtype", Y, finite=True), order)
    Jt_true = expand(FractionSpec("newtype", tilde_coeffs(Y), finite=True), order)
    report = CheckReport(f"underdetermination witness seed={seed}")
    rungs = {"true": newtype_extract(build_jn(J, Y[0], Jt_true), i_max)}
    # an arbitrary different companion with the same constant term; redraw
    # (deterministically) while it makes a Hankel-type determinant vanish
    for _ in range(50):
        fake = [Fraction(1)] + _random_nonzero_rationals(order, rng)
        Jt_fake = Series("z", order, [Fraction(c) for c in fake], QQ)
        if Jt_fake == Jt_true.truncate(order):
            continue
        try:
            rungs["fake"] = newtype_extract(build_jn(J, Y[0], Jt_fake), i_max)
            break
        except ZeroDivisionError:
            continue
    else:
        raise VerificationError("no usable fake companion found for this seed")
    if rungs["true"] == rungs["fake"]:
        raise VerificationError("both companions produced identical rungs")
    report.add("extracted rung sequences differ")
    if rungs["true"] != [Fraction(v) for v in Y[: 2 * i_max]]:
        raise VerificationError("true companion failed to recover the original rungs")
    report.add("true companion recovers the original rungs")
    for tag in ("true", "fake"):
        re_J = expand(FractionSpec("newtype", rungs[tag], finite=False), i_max)
        if any(re_J.coeffs[k] != J.coeffs[k] for k in range(i_max + 1)):
            raise VerificationError(f"{tag} rungs re-expand to a different main series")
    report.add("both rung sets re-expand to the same main series")
    _ = alpha
    return report
