"""Pseudo-Riemannian geometry of the rank-3 one-form module.

A metric is a symmetric invertible 3x3 matrix of exact scalars, read as the
bilinear pairing ``g(e_i ⊗ e_j) = g[i][j]`` extended right-linearly.  A
connection assigns each basis one-form a rank-2 tensor and extends to the
whole module by the right Leibniz rule.

``compatibility_map(g, conn)`` is the bilinear map measuring how far the
connection is from being metric: on a basis pair it symmetrizes
``conn(e_i) ⊗ e_j`` over (i, j), swaps the middle legs, and pairs the first
two legs with the metric.  A connection is unitary (metric-compatible) when
this equals the entrywise differential of the metric — identically zero
here, since the entries are scalars.

``levi_civita(g)`` solves for the unique symmetric correction L to the
canonical torsion-free connection such that the corrected connection is
unitary: the 18 unknown symmetric coefficients satisfy an 18x18 exact linear
system whose right side is ``metric_differential(g) - compatibility_map(g,
base_connection())``.  ``koszul_correction`` is the closed form for the
canonical metric's coefficient table; it reproduces the solver exactly at
g = I (and only there — the table scales with g while the true correction
does not).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .algebra import AlgElem
from .calculus import (
    BASIS_DIFFERENTIALS,
    OneForm,
    TensorElem,
    TwoForm,
    d0,
    derive,
    sym_project,
    tensor_product,
    wedge,
)
from .linsolve import solve_exact
from .scalars import GScalar, ONE, ZERO, rational


class MetricError(ValueError):
    """The metric input violates shape, exactness, symmetry or invertibility."""


_INDICES = (1, 2, 3)
_SYM_PAIRS = ((1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))


@dataclass(frozen=True)
class Metric:
    """Symmetric invertible bilinear pairing on the one-form module."""

    rows: tuple[tuple[GScalar, GScalar, GScalar], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise MetricError("metric must be a 3x3 array")
        for i in range(3):
            for j in range(i + 1, 3):
                if self.rows[i][j] != self.rows[j][i]:
                    raise MetricError("metric not symmetric")
        if not self.det():
            raise MetricError("metric not invertible (determinant is zero)")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[GScalar | int]]) -> "Metric":
        return Metric(tuple(tuple(GScalar.of(x) for x in row) for row in rows))

    @staticmethod
    def identity() -> "Metric":
        return Metric.diagonal(1, 1, 1)

    @staticmethod
    def diagonal(a: GScalar | int, b: GScalar | int, c: GScalar | int) -> "Metric":
        z = ZERO
        return Metric.from_rows(((a, z, z), (z, b, z), (z, z, c)))

    def entry(self, i: int, j: int) -> GScalar:
        return self.rows[i - 1][j - 1]

    def det(self) -> GScalar:
        r = self.rows
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    def apply(self, t: TensorElem) -> AlgElem:
        """Pair a rank-2 tensor: sum of g(e_a ⊗ e_b) times the coefficient."""
        if t.rank != 2:
            raise ValueError("the metric pairs rank-2 tensors")
        acc = AlgElem.zero(3)
        for (a, b), c in t.entries:
            acc = acc + c.scale(self.entry(a, b))
        return acc

    def scale(self, s: GScalar | int) -> "Metric":
        s = GScalar.of(s)
        return Metric.from_rows(
            tuple(tuple(s * x for x in row) for row in self.rows))


def load_metric(source: "str | Path | Sequence[Sequence[object]]") -> Metric:
    """Build a metric from a JSON file path or an already-decoded 3x3 array.

    Entries are expression strings in the scalar grammar or plain ints;
    floats are rejected (the engine is exact).
    """
    from .exprs import ParseError, parse_scalar  # deferred: exprs imports calculus

    if isinstance(source, (str, Path)):
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise MetricError(f"cannot read metric file: {exc}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MetricError(f"metric file is not valid JSON: {exc}") from exc
    else:
        data = source
    if not isinstance(data, list) or len(data) != 3 or any(
            not isinstance(row, list) or len(row) != 3 for row in data):
        raise MetricError("metric must be a 3x3 array")
    rows = []
    for row in data:
        out_row = []
        for cell in row:
            if isinstance(cell, bool):
                raise MetricError(f"metric entry is not a scalar: {cell!r}")
            if isinstance(cell, int):
                out_row.append(GScalar.of(cell))
            elif isinstance(cell, float):
                raise MetricError(
                    f"metric entry {cell!r} is a float; use an exact string like \"1/2\"")
            elif isinstance(cell, str):
                try:
                    out_row.append(parse_scalar(cell))
                except ParseError as exc:
                    raise MetricError(f"bad metric entry {cell!r}: {exc}") from exc
            else:
                raise MetricError(f"metric entry is not a scalar: {cell!r}")
        rows.append(tuple(out_row))
    return Metric(tuple(rows))


# ---------------------------------------------------------------------------
# connections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Connection:
    """A right connection, determined by its rank-2 values on e1, e2, e3."""

    vals: tuple[TensorElem, TensorElem, TensorElem]

    def __post_init__(self) -> None:
        if any(v.rank != 2 for v in self.vals):
            raise ValueError("connection values must be rank-2 tensors")

    def value(self, i: int) -> TensorElem:
        return self.vals[i - 1]

    def apply(self, omega: OneForm) -> TensorElem:
        """Right Leibniz extension: conn(e_i a) = conn(e_i) a + e_i ⊗ d0(a)."""
        acc = TensorElem.zero(2)
        for i in _INDICES:
            a = omega.component(i)
            if a.is_zero():
                continue
            acc = acc + self.vals[i - 1] * a
            for j in _INDICES:
                da = derive(j, a)
                if not da.is_zero():
                    acc = acc + TensorElem.from_entries(2, {(i, j): da})
        return acc

    def shifted(self, correction: "SymTensorMap") -> "Connection":
        return Connection(tuple(v + c for v, c in zip(self.vals, correction.vals)))


def base_connection() -> Connection:
    """The canonical torsion-free connection: e1 -> e3⊗e2, e2 -> e1⊗e3,
    e3 -> e2⊗e1."""
    return Connection((TensorElem.basis(3, 2),
                       TensorElem.basis(1, 3),
                       TensorElem.basis(2, 1)))


def torsion(conn: Connection) -> tuple[TwoForm, TwoForm, TwoForm]:
    """Torsion on the basis: wedge the connection value and add d(e_i)."""
    return tuple(wedge(conn.vals[i - 1]) + BASIS_DIFFERENTIALS[i - 1]
                 for i in _INDICES)


@dataclass(frozen=True)
class SymTensorMap:
    """A symmetric-rank-2-tensor value on each basis one-form."""

    vals: tuple[TensorElem, TensorElem, TensorElem]

    def __post_init__(self) -> None:
        for v in self.vals:
            if v.rank != 2:
                raise ValueError("values must be rank-2 tensors")
            if not sym_project(v).equals(v):
                raise ValueError("values must be symmetric tensors")

    def value(self, i: int) -> TensorElem:
        return self.vals[i - 1]


@dataclass(frozen=True)
class BilinMap:
    """A one-form value on each basis pair, extended right-linearly."""

    vals: tuple[tuple[OneForm, OneForm, OneForm], ...]

    def value(self, i: int, j: int) -> OneForm:
        return self.vals[i - 1][j - 1]

    def apply(self, t: TensorElem) -> OneForm:
        if t.rank != 2:
            raise ValueError("bilinear maps take rank-2 tensors")
        acc = OneForm.zero()
        for (a, b), c in t.entries:
            acc = acc + self.value(a, b) * c
        return acc

    def __sub__(self, other: "BilinMap") -> "BilinMap":
        return BilinMap(tuple(
            tuple(x - y for x, y in zip(row_a, row_b))
            for row_a, row_b in zip(self.vals, other.vals)))

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.vals for v in row)


def _pair_first_two_legs(g: Metric, t: TensorElem) -> OneForm:
    """(g ⊗ id) on a rank-3 tensor: pair legs 1, 2 and keep leg 3."""
    comps = [AlgElem.zero(3) for _ in _INDICES]
    for (a, b, c), coeff in t.entries:
        comps[c - 1] = comps[c - 1] + coeff.scale(g.entry(a, b))
    return OneForm(tuple(comps))


def _pairing_of_values(g: Metric, vals: Sequence[TensorElem]) -> BilinMap:
    """Common core of the compatibility map/operator: on (e_i, e_j) take
    vals[i] ⊗ e_j + vals[j] ⊗ e_i, swap legs 2 and 3, pair the first two."""
    rows = []
    for i in _INDICES:
        row = []
        for j in _INDICES:
            t = tensor_product(vals[i - 1], OneForm.basis(j)) \
                + tensor_product(vals[j - 1], OneForm.basis(i))
            row.append(_pair_first_two_legs(g, t.flip_legs(1, 2)))
        rows.append(tuple(row))
    return BilinMap(tuple(rows))


def compatibility_map(g: Metric, conn: Connection) -> BilinMap:
    """How the connection differentiates the metric on basis pairs."""
    return _pairing_of_values(g, conn.vals)


def metric_differential(g: Metric) -> BilinMap:
    """Entrywise differential of the pairing; identically zero for scalar
    entries, but computed literally so the unitarity equation reads
    compatibility = metric differential."""
    rows = []
    for i in _INDICES:
        row = []
        for j in _INDICES:
            row.append(d0(AlgElem.scalar(g.entry(i, j), 3)))
        rows.append(tuple(row))
    return BilinMap(tuple(rows))


def compatibility_operator(g: Metric, correction: SymTensorMap) -> BilinMap:
    """The linear operator inverted by the Levi-Civita solve; by construction
    it equals compatibility_map(g, base.shifted(L)) - compatibility_map(g, base)."""
    return _pairing_of_values(g, correction.vals)


def unitarity_residual(g: Metric, conn: Connection) -> tuple[tuple[OneForm, ...], ...]:
    """compatibility_map minus metric_differential on every basis pair."""
    diff = compatibility_map(g, conn) - metric_differential(g)
    return diff.vals


# ---------------------------------------------------------------------------
# the Levi-Civita solve
# ---------------------------------------------------------------------------

_UNKNOWNS: tuple[tuple[int, tuple[int, int]], ...] = tuple(
    (j, pair) for j in _INDICES for pair in _SYM_PAIRS)
_EQUATIONS: tuple[tuple[int, int, int], ...] = tuple(
    (j, k, m) for (j, k) in _SYM_PAIRS for m in _INDICES)


def _unknown_index(j: int, a: int, m: int) -> int:
    pair = (a, m) if a <= m else (m, a)
    return _UNKNOWNS.index((j, pair))


def levi_civita(g: Metric) -> Connection:
    """The unique torsion-free unitary connection for the metric.

    The base connection is torsion-free, and adding a symmetric correction
    keeps it so; unitarity then pins the correction via an exact 18x18 solve.
    """
    base = base_connection()
    target = metric_differential(g) - compatibility_map(g, base)

    size = len(_UNKNOWNS)
    matrix = [[ZERO] * size for _ in range(size)]
    rhs = []
    for row, (j, k, m) in enumerate(_EQUATIONS):
        # component m of the operator at (e_j, e_k):
        #   sum_a g(a,k) L^j(a,m) + sum_a g(a,j) L^k(a,m)
        for a in _INDICES:
            col = _unknown_index(j, a, m)
            matrix[row][col] = matrix[row][col] + g.entry(a, k)
            col = _unknown_index(k, a, m)
            matrix[row][col] = matrix[row][col] + g.entry(a, j)
        rhs.append(target.value(j, k).component(m))

    solution = solve_exact(matrix, rhs)

    values = []
    for j in _INDICES:
        entries: dict[tuple[int, int], AlgElem] = {}
        for a, m in ((a, m) for a in _INDICES for m in _INDICES):
            entries[(a, m)] = solution[_unknown_index(j, a, m)]
        values.append(TensorElem.from_entries(2, entries))
    correction = SymTensorMap(tuple(values))
    return base.shifted(correction)


def christoffel(conn: Connection) -> dict[tuple[int, int, int], AlgElem]:
    """All 27 coefficients: conn(e_i) = sum e_j ⊗ e_k * gamma[(i, j, k)]."""
    return {(i, j, k): conn.vals[i - 1].entry(j, k)
            for i in _INDICES for j in _INDICES for k in _INDICES}


# ---------------------------------------------------------------------------
# closed form for the canonical metric
# ---------------------------------------------------------------------------

def compatibility_coefficients(g: Metric) -> dict[tuple[int, int, int], GScalar]:
    """Read the scalar table t[(m, i, j)] with
    compatibility_map(g, base)(e_i, e_j) = -sum_m e_m * t[(m, i, j)]."""
    pairing = compatibility_map(g, base_connection())
    table: dict[tuple[int, int, int], GScalar] = {}
    for i in _INDICES:
        for j in _INDICES:
            value = pairing.value(i, j)
            for m in _INDICES:
                c = value.component(m).as_scalar()
                if c is None:
                    raise ValueError(
                        "compatibility coefficients are not scalar for this input")
                table[(m, i, j)] = -c
    return table


def koszul_correction(
    g: Metric,
    table: Mapping[tuple[int, int, int], GScalar] | None = None,
) -> SymTensorMap:
    """Closed-form symmetric correction from the coefficient table:
    L^j(i, m) = (t[(m,i,j)] + t[(i,j,m)] - t[(j,i,m)]) / 2.

    Agrees with the 18x18 solve at the identity metric; for other metrics
    the table scales with g while the true correction does not, so this is
    only the canonical-metric shortcut.
    """
    if table is None:
        table = compatibility_coefficients(g)
    half = rational(1, 2)
    values = []
    for j in _INDICES:
        entries: dict[tuple[int, int], AlgElem] = {}
        for i in _INDICES:
            for m in _INDICES:
                c = (table[(m, i, j)] + table[(i, j, m)] - table[(j, i, m)]) * half
                entries[(i, m)] = AlgElem.scalar(c, 3)
        values.append(TensorElem.from_entries(2, entries))
    return SymTensorMap(tuple(values))
