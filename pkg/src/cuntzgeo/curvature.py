"""Curvature of a connection: curvature tensor, Ricci contraction, scalar.

The curvature of a connection is computed leg by leg.  On a rank-2 basis
tensor ``e_i ⊗ e_j`` (coefficients ride along on the right):

* differentiate the first leg and antisymmetrize the last two positions:
  ``(id - sym)_{23}(conn(e_i) ⊗ e_j)``;
* differentiate the second leg through the lifted basis differential:
  ``e_i ⊗ antisym_lift(d(e_j))``.

Applying this to the connection values themselves gives the curvature
three-tensor on each basis one-form.  The curvature operator tacks the dual
basis index on and swaps the middle one-form legs; contracting the dual
index against the third leg yields the Ricci tensor, and pairing Ricci with
the metric dual gives the scalar curvature.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgElem
from .calculus import (
    BASIS_DIFFERENTIALS,
    OneForm,
    TensorElem,
    antisym_lift,
    sym_project_legs,
    tensor_product,
)
from .geometry import Connection, Metric, levi_civita

_INDICES = (1, 2, 3)

ThetaMap = dict[tuple[int, int, int, int], AlgElem]


def curvature_step(conn: Connection, t: TensorElem) -> TensorElem:
    """The rank-2 -> rank-3 map whose value on the connection is the curvature."""
    if t.rank != 2:
        raise ValueError("curvature_step expects a rank-2 tensor")
    lifted = tuple(antisym_lift(w) for w in BASIS_DIFFERENTIALS)
    acc = TensorElem.zero(3)
    for (i, j), c in t.entries:
        first = tensor_product(conn.value(i), OneForm.basis(j))
        first = first - sym_project_legs(first, 1, 2)
        second = tensor_product(TensorElem.basis(i), lifted[j - 1])
        acc = acc + (first + second) * c
    return acc


def curvature(conn: Connection) -> tuple[TensorElem, TensorElem, TensorElem]:
    """Curvature three-tensor on each basis one-form."""
    return tuple(curvature_step(conn, conn.value(i)) for i in _INDICES)


def curvature_operator(
    curv: tuple[TensorElem, TensorElem, TensorElem],
) -> ThetaMap:
    """Attach the dual index and swap the middle legs:
    entry (a, c, b, k) collects the (a, b, c) coefficient of curv[k]."""
    out: ThetaMap = {}
    for k in _INDICES:
        for (a, b, c), coeff in curv[k - 1].entries:
            key = (a, c, b, k)
            total = out.get(key, AlgElem.zero(3)) + coeff
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
    return out


def ricci(theta: ThetaMap) -> TensorElem:
    """Contract the dual index against the third one-form leg.

    Moving e_k^* past e_c and evaluating kills every entry with c != k and
    leaves the first two legs.
    """
    acc: dict[tuple[int, int], AlgElem] = {}
    for (a, b, c, k), coeff in theta.items():
        if c != k:
            continue
        acc[(a, b)] = acc.get((a, b), AlgElem.zero(3)) + coeff
    return TensorElem.from_entries(2, acc)


@dataclass(frozen=True)
class DualVector:
    """Element of the dual module: coefficients against the dual basis."""

    c: tuple[AlgElem, AlgElem, AlgElem]

    def component(self, i: int) -> AlgElem:
        return self.c[i - 1]


def metric_dual(g: Metric, i: int) -> DualVector:
    """The metric image of a basis one-form in the dual module."""
    return DualVector(tuple(
        AlgElem.scalar(g.entry(i, c), 3) for c in _INDICES))


def dual_pairing(phi: DualVector, omega: OneForm) -> AlgElem:
    """Evaluate a dual vector on a one-form."""
    acc = AlgElem.zero(3)
    for k in _INDICES:
        acc = acc + phi.component(k) * omega.component(k)
    return acc


def scalar_curvature(g: Metric, ric: TensorElem) -> AlgElem:
    """Pair the first Ricci leg through the metric dual and evaluate on the
    second."""
    if ric.rank != 2:
        raise ValueError("scalar_curvature expects a rank-2 tensor")
    acc = AlgElem.zero(3)
    for (a, b), c in ric.entries:
        acc = acc + dual_pairing(metric_dual(g, a), OneForm.basis(b)) * c
    return acc


@dataclass(frozen=True)
class CurvatureReport:
    """Everything the curvature pipeline produces for one metric."""

    metric: Metric
    connection: Connection
    curv: tuple[TensorElem, TensorElem, TensorElem]
    theta: ThetaMap
    ric: TensorElem
    scalar: AlgElem


def curvature_report(g: Metric, conn: Connection | None = None) -> CurvatureReport:
    if conn is None:
        conn = levi_civita(g)
    curv = curvature(conn)
    theta = curvature_operator(curv)
    ric = ricci(theta)
    scal = scalar_curvature(g, ric)
    return CurvatureReport(g, conn, curv, theta, ric, scal)
