"""Weighted lattice path generating functions against a brute-force oracle."""

import itertools

import pytest

from quadslice.errors import StructureError
from quadslice.lattice_paths import (
    PathSpec,
    WeightTable,
    symbol_table,
    z_bicolored,
    z_const,
    z_context,
    z_elongated,
)
from quadslice.slice_solver import solve_limit


def brute_paths(n, d, k, weight_of_descent, one):
    """Oracle: enumerate every +-1 step word of length 2n explicitly."""
    total = None
    for steps in itertools.product((+1, -1), repeat=2 * n):
        if k and any(s != -1 for s in steps[2 * n - k :]):
            continue
        h = d
        ok = True
        weights = []
        last = 0
        for s in steps:
            if s == -1:
                if h - 1 < d:
                    ok = False
                    break
                weights.append((h, last))
                h -= 1
            else:
                h += 1
            last = s
        if not ok or h != d:
            continue
        prod = one
        for h_from, last_dir in weights:
            prod = prod * weight_of_descent(h_from, last_dir)
        total = prod if total is None else total + prod
    return total if total is not None else one * 0


def brute_elongated(n, table, one):
    """Oracle for the flat-step variant: words over U, D, L (L of length 2)."""
    total = one * 0
    n2 = 2 * n

    def rec(pos, h, acc):
        nonlocal total
        if pos == n2:
            if h == 0:
                total = total + acc
            return
        if pos + 1 <= n2:
            rec(pos + 1, h + 1, acc)
            if h > 0:
                rec(pos + 1, h - 1, acc * table.a(2 * h))
        if pos + 2 <= n2:
            rec(pos + 2, h, acc * table.a(2 * h + 1))

    rec(0, 0, one)
    return total


@pytest.fixture(scope="module")
def symbolic_bw():
    return symbol_table("bicolored", 9)


@pytest.fixture(scope="module")
def symbolic_pq():
    return symbol_table("context", 9)


def test_bicolored_small_examples(symbolic_bw):
    table, names = symbolic_bw
    one = table.a(1).ring_one()
    assert z_bicolored(PathSpec(0, 0), table) == one
    W1 = table.b(1)
    assert z_bicolored(PathSpec(1, 0), table) == W1
    B2 = table.a(2)
    assert z_bicolored(PathSpec(2, 0), table) == W1 * W1 + B2 * W1


def test_context_small_examples(symbolic_pq):
    table, _ = symbolic_pq
    Q1, Q2, P1 = table.b(1), table.b(2), table.a(1)
    assert z_context(PathSpec(1, 0), table) == Q1
    assert z_context(PathSpec(2, 0), table) == Q1 * Q1 + Q2 * P1
    assert z_context(PathSpec(2, 0, k=2), table) == Q2 * P1


def test_elongated_small_example():
    table, _ = symbol_table("elongated", 4)
    one = table.a(1).ring_one()
    assert z_elongated(PathSpec(0, 0), table) == one
    assert z_elongated(PathSpec(1, 0), table) == table.a(1) + table.a(2)
    with pytest.raises(StructureError):
        z_elongated(PathSpec(1, 1), table)


def test_bicolored_matches_bruteforce(symbolic_bw):
    table, _ = symbolic_bw
    one = table.a(1).ring_one()
    for n in range(0, 4):
        for d in range(0, 3):
            for k in (0, 2):
                if k > 2 * n:
                    continue
                def w(h, last):
                    return table.a(h) if (h - d) % 2 == 0 else table.b(h)
                want = brute_paths(n, d, k, w, one)
                assert z_bicolored(PathSpec(n, d, k), table) == want, (n, d, k)


def test_context_matches_bruteforce(symbolic_pq):
    table, _ = symbolic_pq
    one = table.a(1).ring_one()
    for n in range(0, 4):
        for d in range(0, 3):
            def w(h, last):
                return table.b(h) if last >= 0 else table.a(h)
            want = brute_paths(n, d, 0, w, one)
            assert z_context(PathSpec(n, d), table) == want, (n, d)


def test_elongated_matches_bruteforce():
    table, _ = symbol_table("elongated", 10)
    one = table.a(1).ring_one()
    for n in range(0, 5):
        want = brute_elongated(n, table, one)
        assert z_elongated(PathSpec(n, 0), table) == want, n


def test_elongated_equals_context_after_substitution(symbolic_pq):
    """Flat steps at height i-1 absorb ascent-descent spikes: substituting
    level weight Q_i - P_i and descent weight P_i equates the variants."""
    table_pq, _ = symbolic_pq
    h = 8
    y_seq = [None]
    for i in range(1, h + 1):
        y_seq.append(table_pq.b(i) - table_pq.a(i))  # level at height i-1
        y_seq.append(table_pq.a(i))                  # descent from height i
    elong = WeightTable("elongated", y_seq[: 2 * h])
    for n in range(0, 7):
        assert z_elongated(PathSpec(n, 0), elong) == z_context(PathSpec(n, 0), table_pq), n


def test_height_shift_covariance(symbolic_bw):
    table, names = symbolic_bw
    for d in range(1, 5):
        # at base height 0 a descent from even j uses the first sequence, so
        # fill it with whichever original sequence has the parity of j + d
        first = [None] + [
            table.a(j + d) if (j + d) % 2 == d % 2 else table.b(j + d)
            for j in range(1, 6)
        ]
        second = [None] + [
            table.b(j + d) if (j + d) % 2 != d % 2 else table.a(j + d)
            for j in range(1, 6)
        ]
        shifted = WeightTable("bicolored", first, second)
        for n in range(0, 5):
            assert z_bicolored(PathSpec(n, d), table) == z_bicolored(
                PathSpec(n, 0), shifted
            ), (n, d)


def test_restriction_identity_constant_weights():
    lim = solve_limit(5)
    B, W = lim.first, lim.second
    for n in range(0, 6):
        lhs = z_const(n + 1, B, W, "bicolored", k=2)
        rhs = z_const(n + 1, B, W, "bicolored") - z_const(n, B, W, "bicolored") * W
        assert lhs == rhs, n
        lhs = z_const(n + 1, B, W, "context", k=2)
        rhs = z_const(n + 1, B, W, "context") - z_const(n, B, W, "context") * W
        assert lhs == rhs, n


def test_hatted_equals_plain_constant_weights():
    lim = solve_limit(4)
    P, Q = lim.first, lim.second
    assert z_const(1, P, Q, "bicolored") == Q
    assert z_const(2, P, Q, "bicolored") == Q * Q + P * Q
    for n in range(0, 7):
        assert z_const(n, P, Q, "context") == z_const(n, P, Q, "bicolored"), n


def test_zero_constant_term_outputs():
    lim = solve_limit(4)
    table = WeightTable("bicolored", [None] + [lim.first] * 5, [None] + [lim.second] * 5)
    for n in range(1, 4):
        assert z_bicolored(PathSpec(n, 0), table).constant_term() == 0


def test_strict_table_raises_beyond_range():
    lim = solve_limit(3)
    table = WeightTable("bicolored", [None, lim.first], [None, lim.second])
    with pytest.raises(StructureError):
        z_bicolored(PathSpec(2, 0), table)


def test_path_spec_validation():
    with pytest.raises(StructureError):
        PathSpec(2, 0, 5)
    with pytest.raises(StructureError):
        PathSpec(-1, 0)


def test_constant_weight_functional_equations():
    """The constant-weight path series solves Z = 1/(1 - zQ/(1 - zP Z)),
    equivalently Z = 1/(1 - z(Q-P) - zP Z), order by order."""
    from quadslice.contfrac import _ring_field
    from quadslice.series import Series

    N, L = 6, 5
    lim = solve_limit(N)
    P, Q = lim.first, lim.second
    field = _ring_field(P)
    Z = Series("z", L, [z_const(k, P, Q, "context") for k in range(L + 1)], field)
    z = Series.gen("z", L, field)
    one = Series.one("z", L, field)
    assert Z == (one - z * Q * (one - z * P * Z).inv()).inv()
    assert Z == (one - z * (Q - P) - z * P * Z).inv()
