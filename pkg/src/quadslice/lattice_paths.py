"""Generating functions of weighted non-negative lattice paths.

Paths live at or above a base height d, start and end at d, and come in
four weighting variants:

* bicolored: a descent from height i is weighted by one of two sequences
  according to the parity of i relative to d (first sequence when i has
  the parity of d, second otherwise);
* context: a descent from height i is weighted by the second sequence
  when it follows an ascent and by the first when it follows another
  descent;
* elongated: elementary +-1 steps plus flat steps of horizontal length 2;
  a flat step at height h takes weight index 2h+1, a descent from height
  i takes weight index 2i (base height 0 only);
* constant: either of the first two with height-independent weights.

An optional restriction forces the last k steps to descend.  Weights may
be any ring elements (truncated bivariate polynomials from the slice
solver, or opaque symbols for identity checking), and the computation is
dynamic programming over (position, height, last step direction).
"""

from __future__ import annotations

from .errors import StructureError
from .exactalg import MPoly, _ring_one_of, _ring_zero_of


class PathSpec:
    """Half-length n, base height d, and number of forced final descents k."""

    __slots__ = ("n", "d", "k")

    def __init__(self, n, d=0, k=0):
        if n < 0 or d < 0 or k < 0 or k > 2 * n:
            raise StructureError(f"bad path spec n={n} d={d} k={k}")
        self.n = n
        self.d = d
        self.k = k


class WeightTable:
    """Height-indexed weights with an optional tail value.

    ``first`` and ``second`` are lists indexed by height (index 0 unused,
    by convention zero).  For elongated tables only ``first`` is used and
    it is indexed by the doubled scheme described in the module docstring.
    A table with tail=None is strict: heights beyond the stored range are
    an error rather than silently clamped.
    """

    __slots__ = ("kind", "first", "second", "tail_first", "tail_second")

    def __init__(self, kind, first, second=None, tail_first=None, tail_second=None):
        if kind not in ("bicolored", "context", "elongated"):
            raise StructureError(f"unknown weight table kind {kind!r}")
        self.kind = kind
        self.first = list(first)
        self.second = list(second) if second is not None else None
        self.tail_first = tail_first
        self.tail_second = tail_second

    def _lookup(self, seq, tail, idx):
        if idx < len(seq):
            return seq[idx]
        if tail is None:
            raise StructureError(f"weight index {idx} beyond stored range (strict table)")
        return tail

    def a(self, idx):
        return self._lookup(self.first, self.tail_first, idx)

    def b(self, idx):
        return self._lookup(self.second, self.tail_second, idx)

    def an_element(self):
        for seq in (self.first, self.second or []):
            for v in seq[1:]:
                return v
        raise StructureError("empty weight table")


def _run_dp(n2, d, k, hmax, descent_weight, exemplar):
    """Sum over +-1 paths of length n2 from d to d staying >= d.

    descent_weight(height, last_dir) gives the weight of a descent from
    ``height``; a step at horizontal position t may only be non-descending
    when t + 1 <= n2 - k.  Returns a ring element.
    """
    one = _ring_one_of(exemplar)
    zero = _ring_zero_of(one)
    # state: (height, last_dir) -> accumulated weight; last_dir 0 at the start
    states = {(d, 0): one}
    for t in range(n2):
        nxt = {}
        for (h, last), val in states.items():
            if h - d > n2 - t:  # cannot return to the base height in time
                continue
            if t + 1 <= n2 - k and h + 1 <= hmax:
                key = (h + 1, +1)
                nxt[key] = nxt.get(key, zero) + val
            if h > d:
                key = (h - 1, -1)
                nxt[key] = nxt.get(key, zero) + val * descent_weight(h, last)
        states = nxt
    total = zero
    for (h, _last), val in states.items():
        if h == d:
            total = total + val
    return total


def z_bicolored(spec: PathSpec, table: WeightTable):
    """Paths weighted by height parity: descent from i gets the first
    sequence when i = d (mod 2), the second otherwise."""
    if table.kind != "bicolored":
        raise StructureError("bicolored table required")
    if spec.n == 0:
        return _ring_one_of(table.an_element())
    d = spec.d

    def w(h, _last):
        return table.a(h) if (h - d) % 2 == 0 else table.b(h)

    return _run_dp(2 * spec.n, d, spec.k, d + spec.n, w, table.an_element())


def z_context(spec: PathSpec, table: WeightTable):
    """Paths weighted by context: descent from i gets the second sequence
    after an ascent and the first after a descent."""
    if table.kind != "context":
        raise StructureError("context table required")
    if spec.n == 0:
        return _ring_one_of(table.an_element())

    def w(h, last):
        return table.b(h) if last >= 0 else table.a(h)

    return _run_dp(2 * spec.n, spec.d, spec.k, spec.d + spec.n, w, table.an_element())


def z_elongated(spec: PathSpec, table: WeightTable):
    """Paths with +-1 steps and flat double steps, base height 0 only."""
    if table.kind != "elongated":
        raise StructureError("elongated table required")
    if spec.d != 0:
        raise StructureError("elongated paths are defined at base height 0")
    n2, k = 2 * spec.n, spec.k
    if spec.n == 0:
        return _ring_one_of(table.an_element())
    one = _ring_one_of(table.an_element())
    zero = _ring_zero_of(one)
    hmax = spec.n
    # position t -> {height: value}; flat steps advance t by 2
    layers = [dict() for _ in range(n2 + 1)]
    layers[0][0] = one
    for t in range(n2):
        cur = layers[t]
        if not cur:
            continue
        for h, val in cur.items():
            if h > n2 - t:
                continue
            if t + 1 <= n2 - k and h + 1 <= hmax:
                layers[t + 1][h + 1] = layers[t + 1].get(h + 1, zero) + val
            if h > 0:
                layers[t + 1][h - 1] = layers[t + 1].get(h - 1, zero) + val * table.a(2 * h)
            if t + 2 <= n2 - k:
                layers[t + 2][h] = layers[t + 2].get(h, zero) + val * table.a(2 * h + 1)
    return layers[n2].get(0, zero)


def z_const(n, first, second, kind="bicolored", k=0):
    """Constant-weight specialization at base height 0.

    For the bicolored kind a descent from even height gets ``first`` and
    from odd height ``second``; for the context kind ``first`` applies
    after a descent and ``second`` after an ascent.
    """
    hmax = n + 1
    table = WeightTable(
        kind if kind != "elongated" else "context",
        [None] + [first] * hmax,
        [None] + [second] * hmax,
    )
    spec = PathSpec(n, 0, k)
    if kind == "bicolored":
        return z_bicolored(spec, table)
    if kind == "context":
        return z_context(spec, table)
    raise StructureError(f"unsupported constant kind {kind!r}")


# ------------------------------------------------------- symbolic utilities

def symbol_table(kind, max_height, cap=None):
    """Weight table whose entries are opaque indeterminates.

    Returns (table, vars): for bicolored the symbols are B1..B_h, W1..W_h;
    for context P1..P_h, Q1..Q_h; for elongated Y1..Y_{2h}.  All symbols
    share one variable list so the outputs combine freely.
    """
    if kind == "elongated":
        names = tuple(f"Y{j}" for j in range(1, 2 * max_height + 1))
        gens = [None] + [MPoly.gen(names, nm, cap) for nm in names]
        return WeightTable(kind, gens), names
    pre_a, pre_b = ("B", "W") if kind == "bicolored" else ("P", "Q")
    names = tuple(
        f"{p}{i}" for i in range(1, max_height + 1) for p in (pre_a, pre_b)
    )
    a = [None] + [MPoly.gen(names, f"{pre_a}{i}", cap) for i in range(1, max_height + 1)]
    b = [None] + [MPoly.gen(names, f"{pre_b}{i}", cap) for i in range(1, max_height + 1)]
    return WeightTable(kind, a, b), names
