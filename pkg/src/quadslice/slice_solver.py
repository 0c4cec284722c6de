"""Fixed-point solver for the three slice weight recursion systems.

Each system determines a family of truncated bivariate series indexed by a
height i >= 1 (index 0 is identically zero):

* bicolored pair:   B_i = tb + B_i (W_{i-1} + B_i + W_{i+1})
                    W_i = tw + W_i (B_{i-1} + W_i + B_{i+1})
* context pair:     P_i = tb + P_i (P_{i-1} + Q_i + Q_{i+1})
                    Q_i = tw + Q_i (P_{i-1} + Q_i) + P_i Q_{i+1}
* merged sequence:  Y_{2i}   = tb        + Y_{2i}   (Y_{2i-2} + Y_{2i-1} + Y_{2i} + Y_{2i+1} + Y_{2i+2})
                    Y_{2i-1} = (tw - tb) + Y_{2i-1} (Y_{2i-2} + Y_{2i-1} + Y_{2i})
  which is the context system rewritten through Y_{2i-1} = Q_i - P_i,
  Y_{2i} = P_i (cross-checked against the context solution).

Because every slice weight has zero constant term, a simultaneous-update
sweep starting from zero determines all coefficients of total degree <= s
after s sweeps, so at cap N the iteration is stationary after at most
N + 1 sweeps.  Heights are clamped at i_max = N + 2: a slice counted at
height i but not at i - 1 carries at least i weighted vertices, so at cap
N all heights above N + 1 agree and the clamp is exact.  Stabilization is
asserted after solving and any failure aborts.

The i -> infinity limits satisfy the closed pair B = tb + B(B + 2W),
W = tw + W(W + 2B) shared by both ensembles.  This module also assembles
the fixed-boundary-length series f_n and j_n from the path generating
functions, evaluates the level-d conserved quantities, and computes the
first merged coefficient by its two independent closed-form routes.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import StructureError, VerificationError
from .exactalg import MPoly, bipoly_one, bipoly_zero, tb, tw
from .lattice_paths import PathSpec, WeightTable, symbol_table, z_bicolored, z_const, z_context
from .series import graded_div


class SliceFamily:
    """Solved weight family: kind in {"bw", "pq", "y"}, values by height."""

    __slots__ = ("kind", "cap", "i_max", "first", "second")

    def __init__(self, kind, cap, i_max, first, second=None):
        self.kind = kind
        self.cap = cap
        self.i_max = i_max
        self.first = list(first)
        self.second = list(second) if second is not None else None

    def weight_table(self) -> WeightTable:
        if self.kind == "bw":
            return WeightTable("bicolored", self.first, self.second)
        if self.kind == "pq":
            return WeightTable("context", self.first, self.second)
        return WeightTable("elongated", self.first)


class LimitPair:
    """Common large-height limit (first = B = P, second = W = Q)."""

    __slots__ = ("first", "second", "cap")

    def __init__(self, first, second, cap):
        self.first = first
        self.second = second
        self.cap = cap


def _iterate(update, init, max_sweeps):
    values = init
    for _ in range(max_sweeps):
        new = update(values)
        if new == values:
            return values
        values = new
    raise VerificationError("fixed point iteration failed to become stationary")


@lru_cache(maxsize=None)
def solve_bw(N) -> SliceFamily:
    if N < 1:
        raise StructureError("cap must be >= 1")
    i_max = N + 2
    zero = bipoly_zero(N)
    t_b, t_w = tb(N), tw(N)

    def update(vals):
        B, W = vals
        nB, nW = [zero], [zero]
        for i in range(1, i_max + 1):
            Bp = B[i + 1] if i + 1 <= i_max else B[i_max]
            Wp = W[i + 1] if i + 1 <= i_max else W[i_max]
            nB.append(t_b + B[i] * (W[i - 1] + B[i] + Wp))
            nW.append(t_w + W[i] * (B[i - 1] + W[i] + Bp))
        return (nB, nW)

    B, W = _iterate(update, ([zero] * (i_max + 1), [zero] * (i_max + 1)), N + 3)
    if B[i_max] != B[i_max - 1] or W[i_max] != W[i_max - 1]:
        raise VerificationError("bicolored family failed to stabilize at the clamp")
    return SliceFamily("bw", N, i_max, B, W)


@lru_cache(maxsize=None)
def solve_pq(N) -> SliceFamily:
    if N < 1:
        raise StructureError("cap must be >= 1")
    i_max = N + 2
    zero = bipoly_zero(N)
    t_b, t_w = tb(N), tw(N)

    def update(vals):
        P, Q = vals
        nP, nQ = [zero], [zero]
        for i in range(1, i_max + 1):
            Qp = Q[i + 1] if i + 1 <= i_max else Q[i_max]
            nP.append(t_b + P[i] * (P[i - 1] + Q[i] + Qp))
            nQ.append(t_w + Q[i] * (P[i - 1] + Q[i]) + P[i] * Qp)
        return (nP, nQ)

    P, Q = _iterate(update, ([zero] * (i_max + 1), [zero] * (i_max + 1)), N + 3)
    if P[i_max] != P[i_max - 1] or Q[i_max] != Q[i_max - 1]:
        raise VerificationError("context family failed to stabilize at the clamp")
    return SliceFamily("pq", N, i_max, P, Q)


@lru_cache(maxsize=None)
def solve_y(N) -> SliceFamily:
    """Merged sequence solver, cross-checked against the context solution."""
    if N < 1:
        raise StructureError("cap must be >= 1")
    j_max = 2 * (N + 2) + 2
    zero = bipoly_zero(N)
    t_b, t_w = tb(N), tw(N)

    def get(Y, j):
        while j > j_max:
            j -= 2  # parity-respecting clamp
        return Y[j]

    def update(Y):
        nY = [zero]
        for j in range(1, j_max + 1):
            if j % 2 == 0:
                nY.append(
                    t_b + Y[j] * (Y[j - 2] + Y[j - 1] + Y[j] + get(Y, j + 1) + get(Y, j + 2))
                )
            else:
                prev = Y[j - 1] if j >= 2 else zero
                nY.append((t_w - t_b) + Y[j] * (prev + Y[j] + get(Y, j + 1)))
        return nY

    Y = _iterate(update, [zero] * (j_max + 1), N + 3)
    if Y[j_max] != Y[j_max - 2] or Y[j_max - 1] != Y[j_max - 3]:
        raise VerificationError("merged family failed to stabilize at the clamp")
    pq = solve_pq(N)
    for i in range(1, pq.i_max + 1):
        if 2 * i <= j_max and Y[2 * i] != pq.first[i]:
            raise VerificationError(f"Y_{2 * i} disagrees with context weight P_{i}")
        if 2 * i - 1 <= j_max and Y[2 * i - 1] != pq.second[i] - pq.first[i]:
            raise VerificationError(f"Y_{2 * i - 1} disagrees with Q_{i} - P_{i}")
    return SliceFamily("y", N, j_max, Y)


@lru_cache(maxsize=None)
def solve_limit(N) -> LimitPair:
    zero = bipoly_zero(N)
    t_b, t_w = tb(N), tw(N)

    def update(vals):
        B, W = vals
        return (t_b + B * (B + 2 * W), t_w + W * (W + 2 * B))

    B, W = _iterate(update, (zero, zero), N + 3)
    return LimitPair(B, W, N)


# ------------------------------------------------- boundary-length series

def f_n(n, N) -> MPoly:
    """Fixed-boundary-length series of the bicolored ensemble.

    Both boundary series start at 1: the continued fractions equal 1 at the
    origin, so the index-0 entry is 1 for either weighting."""
    if n == 0:
        return bipoly_one(N)
    return z_bicolored(PathSpec(n, 0), solve_bw(N).weight_table())


def j_n(n, N) -> MPoly:
    """Fixed-boundary-length series of the local-maxima ensemble (j_0 = 1)."""
    if n == 0:
        return bipoly_one(N)
    return z_context(PathSpec(n, 0), solve_pq(N).weight_table())


def a0_a1_times_tb(lim: LimitPair):
    """tb * A0 = P (1 - P - Q) and tb * A1 = -P for the limit pair."""
    P, Q = lim.first, lim.second
    one = bipoly_one(lim.cap)
    return P * (one - P - Q), -P


def f_n_closed(n, N, route="direct") -> MPoly:
    """Boundary series from the constant-weight limit pair.

    route="direct":    A0 Z(2n; P, Q) + A1 Z(2n+2; P, Q)
    route="invariant": Z(2n; B, W) - (1/tb) Z2v(2n+2; B, W) B
    where Z2v forces the final two steps to descend.  The divisions by tb
    are exact and executed in the tau grading; the result cap is N - 1.
    """
    lim = solve_limit(N)
    P, Q = lim.first, lim.second
    if route == "direct":
        ta0, ta1 = a0_a1_times_tb(lim)
        num = ta0 * z_const(n, P, Q, "context") + ta1 * z_const(n + 1, P, Q, "context")
        return graded_div(num, tb(N))
    if route == "invariant":
        z_plain = z_const(n, P, Q, "bicolored")
        z_desc = z_const(n + 1, P, Q, "bicolored", k=2)
        return z_plain.with_cap(N - 1) - graded_div(z_desc * P, tb(N))
    raise StructureError(f"unknown route {route!r}")


# ------------------------------------------------------ conserved quantities

def conserved_f(n, d, N) -> MPoly:
    """Level-d invariant of the bicolored system; equals f_n for every d.

    Value: Z(2n at level d) - (1/tb) Z2v(2n+2 at level d) B_d, with the
    exact tb division done in the tau grading.  Result cap is N - 1.
    """
    fam = solve_bw(N)
    table = fam.weight_table()
    main = z_bicolored(PathSpec(n, d), table)
    if d == 0:
        return main.with_cap(N - 1)
    corr = z_bicolored(PathSpec(n + 1, d, k=2), table) * fam.first[d]
    return main.with_cap(N - 1) - graded_div(corr, tb(N))


def conserved_j(n, d, N) -> MPoly:
    """Level-d invariant of the context system; equals j_n for every d."""
    fam = solve_pq(N)
    table = fam.weight_table()
    main = z_context(PathSpec(n, d), table)
    if d == 0:
        return main.with_cap(N - 1)
    corr = z_context(PathSpec(n + 1, d, k=2), table) * fam.first[d]
    return main.with_cap(N - 1) - graded_div(corr, tb(N))


@lru_cache(maxsize=None)
def y1_series(N) -> MPoly:
    """First merged coefficient at full cap N via the division-free route
    (Q - P)(1 - P - 2Q) / (1 - 2Q); cross-checked against the solver."""
    lim = solve_limit(N)
    P, Q = lim.first, lim.second
    one = bipoly_one(N)
    val = (Q - P) * (one - P - 2 * Q) * (one - 2 * Q).inv()
    if val != solve_y(N).first[1]:
        raise VerificationError("closed-form Y_1 disagrees with the solver")
    return val


def y1_two_routes(N):
    """First merged coefficient by its two independent closed-form routes.

    Route 1: (Q - P)(1 - P - 2Q) / (1 - 2Q) as a plain series inverse.
    Route 2: the conserved-quantity route (tw - tb) / (1 - Q_1) with
    Q_1 = Q - Q P^2 / tb, equivalently the single fraction
    tb (tw - tb) / (tb (1 - Q) + Q P^2) via exact graded division.
    Both must also agree with the solver's first merged coefficient.
    Returned at cap N - 1 (the graded division costs one order).
    """
    if N < 2:
        raise StructureError("need cap >= 2")
    lim = solve_limit(N)
    P, Q = lim.first, lim.second
    one = bipoly_one(N)
    route1 = ((Q - P) * (one - P - 2 * Q) * (one - 2 * Q).inv()).with_cap(N - 1)

    q1 = Q.with_cap(N - 1) - graded_div(Q * P * P, tb(N))
    route2 = ((tw(N - 1) - tb(N - 1)) * (bipoly_one(N - 1) - q1).inv())
    closed = graded_div(tb(N) * (tw(N) - tb(N)), tb(N) * (one - Q) + Q * P * P)
    if route2 != closed:
        raise VerificationError("conserved-quantity route for Y_1 disagrees with its closed fraction")
    if route1 != route2:
        raise VerificationError("the two closed-form routes for Y_1 disagree")
    y1 = solve_y(N).first[1].with_cap(N - 1)
    if route1 != y1:
        raise VerificationError("closed-form Y_1 disagrees with the solver")
    return route1, route2


def agree(a: MPoly, b: MPoly) -> bool:
    """Equality after truncating both to the smaller cap."""
    cap = min(a.cap, b.cap)
    return a.with_cap(cap) == b.with_cap(cap)


def conserved_symbolic_display_check(d_range=range(0, 5)):
    """The first two invariants as identities in opaque weight symbols.

    With the level written as d and i = d + 1, the path sums reduce to:
      first weighting, n=1:  Z = W_i,  correction = B_{i+1} W_i B_{i-1}
      first weighting, n=2:  Z = W_i^2 + B_{i+1} W_i,
                             correction = (W_i + B_{i+1} + W_{i+2}) B_{i+1} W_i B_{i-1}
    and the hatted analogs with P, Q.  Both sides are compared as
    many-variable polynomials (index 0 symbols are zero).
    """
    from .errors import CheckReport

    report = CheckReport("symbolic invariant displays")
    hmax = max(d_range) + 4
    table_bw, _ = symbol_table("bicolored", hmax)
    table_pq, _ = symbol_table("context", hmax)
    zero_b = table_bw.a(1).ring_zero()
    zero_p = table_pq.a(1).ring_zero()

    def B(i):
        return table_bw.a(i) if i >= 1 else zero_b

    def W(i):
        return table_bw.b(i)

    def P(i):
        return table_pq.a(i) if i >= 1 else zero_p

    def Q(i):
        return table_pq.b(i)

    for d in d_range:
        i = d + 1
        if z_bicolored(PathSpec(1, d), table_bw) != W(i):
            raise VerificationError(f"first-weighting n=1 main term failed at level {d}")
        corr = z_bicolored(PathSpec(2, d, k=2), table_bw) * B(d)
        if corr != B(i + 1) * W(i) * B(i - 1):
            raise VerificationError(f"first-weighting n=1 correction failed at level {d}")
        if z_bicolored(PathSpec(2, d), table_bw) != W(i) * W(i) + B(i + 1) * W(i):
            raise VerificationError(f"first-weighting n=2 main term failed at level {d}")
        corr = z_bicolored(PathSpec(3, d, k=2), table_bw) * B(d)
        want = (W(i) + B(i + 1) + W(i + 2)) * B(i + 1) * W(i) * B(i - 1)
        if corr != want:
            raise VerificationError(f"first-weighting n=2 correction failed at level {d}")

        if z_context(PathSpec(1, d), table_pq) != Q(i):
            raise VerificationError(f"second-weighting n=1 main term failed at level {d}")
        corr = z_context(PathSpec(2, d, k=2), table_pq) * P(d)
        if corr != Q(i + 1) * P(i) * P(i - 1):
            raise VerificationError(f"second-weighting n=1 correction failed at level {d}")
        if z_context(PathSpec(2, d), table_pq) != Q(i) * Q(i) + Q(i + 1) * P(i):
            raise VerificationError(f"second-weighting n=2 main term failed at level {d}")
        corr = z_context(PathSpec(3, d, k=2), table_pq) * P(d)
        want = ((Q(i) + Q(i + 1)) * Q(i + 1) + Q(i + 2) * P(i + 1)) * P(i) * P(i - 1)
        if corr != want:
            raise VerificationError(f"second-weighting n=2 correction failed at level {d}")
        report.add(f"level {d}: all four displays hold")
    return report
