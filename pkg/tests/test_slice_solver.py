"""Fixed-point slice solvers: frozen low-order values, stabilization,
the fundamental boundary-series equality, and conserved quantities."""

import pytest

from quadslice.errors import StructureError
from quadslice.exactalg import bipoly, bipoly_one, tb, tw
from quadslice.slice_solver import (
    agree,
    conserved_f,
    conserved_j,
    conserved_symbolic_display_check,
    f_n,
    f_n_closed,
    j_n,
    solve_bw,
    solve_limit,
    solve_pq,
    solve_y,
    y1_series,
    y1_two_routes,
)


def test_first_sweeps_frozen():
    # two manual sweeps of the bicolored system determine these exactly
    assert solve_bw(1).first[1] == tb(1)
    assert solve_bw(2).second[1] == bipoly({(0, 1): 1, (0, 2): 1, (1, 1): 1}, 2)
    assert solve_pq(1).second[1] == tw(1)
    assert solve_y(2).first[1].with_cap(1) == tw(1) - tb(1)
    assert solve_limit(1).first == tb(1)
    assert solve_limit(2).second == bipoly({(0, 1): 1, (0, 2): 1, (1, 1): 2}, 2)


def test_zero_constant_terms():
    fam = solve_bw(3)
    for i in range(1, fam.i_max + 1):
        assert fam.first[i].constant_term() == 0
        assert fam.second[i].constant_term() == 0


def test_index_zero_entries_vanish():
    for fam in (solve_bw(3), solve_pq(3)):
        assert fam.first[0].is_zero() and fam.second[0].is_zero()
    assert solve_y(3).first[0].is_zero()


def test_stabilization_and_swap_symmetry():
    N = 5
    bw = solve_bw(N)
    assert bw.first[bw.i_max] == bw.first[bw.i_max - 1]
    assert bw.second[bw.i_max] == bw.second[bw.i_max - 1]
    for i in range(0, bw.i_max + 1):
        assert bw.first[i] == bw.second[i].swap()
    lim = solve_limit(N)
    assert bw.first[bw.i_max] == lim.first
    pq = solve_pq(N)
    assert pq.first[pq.i_max] == lim.first and pq.second[pq.i_max] == lim.second


def test_merged_matches_context():
    # the solver itself cross-checks Y_{2i} = P_i and Y_{2i-1} = Q_i - P_i
    fam = solve_y(4)
    pq = solve_pq(4)
    assert fam.first[2] == pq.first[1]
    assert fam.first[3] == pq.second[2] - pq.first[2]


def test_limit_closed_system():
    N = 5
    lim = solve_limit(N)
    B, W = lim.first, lim.second
    assert B == tb(N) + B * (B + 2 * W)
    assert W == tw(N) + W * (W + 2 * B)


def test_fundamental_equality():
    for n in range(0, 5):
        assert f_n(n, 6) == j_n(n, 6), n


def test_boundary_series_basics():
    assert f_n(0, 4) == bipoly_one(4)
    assert j_n(0, 4) == bipoly_one(4)
    assert f_n(1, 2) == bipoly({(0, 1): 1, (0, 2): 1, (1, 1): 1}, 2)
    for n in range(1, 4):
        assert f_n(n, 5).constant_term() == 0


def test_closed_route_equals_solver():
    for n in range(0, 5):
        direct = f_n_closed(n, 7, "direct")
        invariant = f_n_closed(n, 7, "invariant")
        assert direct == invariant, n
        assert agree(direct, f_n(n, 6)), n
    assert f_n_closed(0, 5) == bipoly_one(4)
    with pytest.raises(StructureError):
        f_n_closed(1, 5, "nonsense")


def test_conserved_quantities_level_independent():
    for n in range(1, 4):
        base_f = f_n(n, 6).with_cap(5)
        base_j = j_n(n, 6).with_cap(5)
        for d in range(0, 5):
            assert conserved_f(n, d, 6) == base_f, (n, d)
            assert conserved_j(n, d, 6) == base_j, (n, d)


def test_conserved_symbolic_displays():
    report = conserved_symbolic_display_check(range(0, 5))
    assert report.passed and len(report.lines) == 5


def test_y1_routes():
    r1, r2 = y1_two_routes(6)
    assert r1 == r2
    assert r1.with_cap(1) == tw(1) - tb(1)
    assert y1_series(6).with_cap(5) == r1


def test_sweep_count_determines_degree():
    """Sweep k of the zero-started iteration pins every coefficient of
    total degree <= k; at most cap + 1 sweeps are needed."""
    from quadslice.exactalg import bipoly_zero

    N = 5
    i_max = N + 2
    zero = bipoly_zero(N)
    t_b, t_w = tb(N), tw(N)

    def sweep(vals):
        B, W = vals
        nB, nW = [zero], [zero]
        for i in range(1, i_max + 1):
            Bp = B[i + 1] if i + 1 <= i_max else B[i_max]
            Wp = W[i + 1] if i + 1 <= i_max else W[i_max]
            nB.append(t_b + B[i] * (W[i - 1] + B[i] + Wp))
            nW.append(t_w + W[i] * (B[i - 1] + W[i] + Bp))
        return nB, nW

    vals = ([zero] * (i_max + 1), [zero] * (i_max + 1))
    solved = solve_bw(N)
    for k in range(1, N + 2):
        vals = sweep(vals)
        for i in range(0, i_max + 1):
            assert vals[0][i].with_cap(k).with_cap(N) == solved.first[i].with_cap(k).with_cap(N), (k, i)
    assert list(vals[0]) == solved.first and list(vals[1]) == solved.second
