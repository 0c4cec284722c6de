"""Kernel tests: truncated polynomial ring laws, division-free determinants
against a Leibniz oracle, and the canonical text form."""

import itertools
import random
from fractions import Fraction

import pytest

from quadslice.errors import NonInvertibleError, StructureError
from quadslice.exactalg import (
    bipoly,
    bipoly_from_text,
    bipoly_one,
    bipoly_to_text,
    bipoly_zero,
    det_division_free,
    tb,
    tw,
)


def leibniz_det(rows):
    """Independent determinant oracle: permutation expansion."""
    n = len(rows)
    total = None
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = rows[0][perm[0]]
        for i in range(1, n):
            prod = prod * rows[i][perm[i]]
        term = prod if sign == 1 else -prod
        total = term if total is None else total + term
    return total


def random_bipoly(rng, cap, max_coeff=5):
    terms = {}
    for a in range(cap + 1):
        for b in range(cap + 1 - a):
            if rng.random() < 0.4:
                terms[(a, b)] = Fraction(rng.randint(-max_coeff, max_coeff))
    return bipoly(terms, cap)


def test_add_examples():
    N = 3
    assert (1 + tb(N)) + (1 + tw(N)) == bipoly({(0, 0): 2, (1, 0): 1, (0, 1): 1}, N)
    p = random_bipoly(random.Random(1), N)
    assert p + bipoly_zero(N) == p
    top = tb(N) ** N + tw(N) ** N
    assert top == bipoly({(N, 0): 1, (0, N): 1}, N)


def test_mul_examples():
    N = 4
    assert (1 + tb(N)) * (1 + tw(N)) == bipoly(
        {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}, N
    )
    assert (tb(N) ** N) * tw(N) == bipoly_zero(N)
    geom = sum((tb(N) ** k for k in range(1, N + 1)), bipoly_one(N))
    assert (1 - tb(N)) * geom == bipoly_one(N)


def test_inv_examples():
    N = 3
    inv = (1 - tb(N)).inv()
    assert inv == sum((tb(N) ** k for k in range(1, N + 1)), bipoly_one(N))
    assert bipoly_one(N).inv() == bipoly_one(N)
    assert bipoly({(0, 0): 2}, N).inv() == bipoly({(0, 0): Fraction(1, 2)}, N)
    with pytest.raises(NonInvertibleError):
        tb(N).inv()


def test_cap_mismatch_is_structural():
    with pytest.raises(StructureError):
        tb(3) + tb(4)
    with pytest.raises(StructureError):
        tb(3) * tw(4)


def test_ring_laws_randomized():
    rng = random.Random(42)
    N = 6
    for _ in range(30):
        a, b, c = (random_bipoly(rng, N) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_inv_two_sided_on_random_units():
    rng = random.Random(7)
    N = 4
    one = bipoly_one(N)
    for _ in range(100):
        p = random_bipoly(rng, N) + 1 - random_bipoly(rng, N).constant_term()
        if p.constant_term() == 0:
            continue
        q = p.inv()
        assert p * q == one and q * p == one


def test_det_trivial_examples():
    a = tb(3)
    assert det_division_free([[a]]) == a
    j0, j1, j2 = (bipoly({(k, 0): 1}, 4) for k in range(3))
    assert det_division_free([[j0, j1], [j1, j2]]) == j0 * j2 - j1 * j1
    one, zero = Fraction(1), Fraction(0)
    eye3 = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert det_division_free(eye3) == one


def test_det_matches_leibniz_rationals():
    rng = random.Random(3)
    for size in range(1, 5):
        for _ in range(8):
            rows = [
                [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(size)]
                for _ in range(size)
            ]
            assert det_division_free(rows) == leibniz_det(rows)


def test_det_matches_leibniz_truncated_ring():
    rng = random.Random(11)
    for size in (2, 3):
        rows = [[random_bipoly(rng, 4, 3) for _ in range(size)] for _ in range(size)]
        assert det_division_free(rows) == leibniz_det(rows)


def test_det_rejects_non_square():
    with pytest.raises(StructureError):
        det_division_free([[Fraction(1), Fraction(2)]])


def test_swap_symmetry_helper():
    p = bipoly({(2, 1): 3, (0, 2): -1}, 4)
    assert p.swap() == bipoly({(1, 2): 3, (2, 0): -1}, 4)
    assert p.swap().swap() == p


def test_canonical_text_round_trip():
    p = bipoly({(0, 1): Fraction(1), (2, 0): Fraction(-3, 2), (1, 1): 4}, 4)
    text = bipoly_to_text(p)
    assert text.splitlines() == ["0 1 1/1", "1 1 4/1", "2 0 -3/2"]
    assert bipoly_from_text(text, 4) == p


def test_canonical_text_golden():
    from quadslice.slice_solver import f_n

    assert bipoly_to_text(f_n(1, 2)) == "0 1 1/1\n0 2 1/1\n1 1 1/1"
