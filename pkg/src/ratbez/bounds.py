"""Upper bounds for the derivative magnitude of a rational Bezier curve.

Two bounds are provided:

* the conjectured bound n * W * max_i |p_{i+1} - p_i|, where W is the
  largest adjacent weight ratio taken in both directions (it fails for
  some curves; see the experiments module), and
* a sound supremum bound read off the explicit derivative form: after
  jointly degree-elevating its numerator points and weight coefficients
  e times, max_i |n * N_i| / W_i bounds sup |r'(t)| for every e, and the
  bound is non-increasing as e grows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import elevate_chain, max_norm_ratio
from .curve import RationalBezierCurve, require_valid
from .derivative import DerivativeForm

_ALLOWED_P = (1.0, 2.0, float("inf"))


def _check_p(p) -> float:
    p = float(p)
    if p not in _ALLOWED_P:
        raise ValueError(f"norm order must be 1, 2, or inf, got {p}")
    return p


def _rowwise_norm(rows: np.ndarray, p: float) -> np.ndarray:
    if p == 1.0:
        return np.abs(rows).sum(axis=1)
    if np.isinf(p):
        return np.abs(rows).max(axis=1)
    return np.sqrt((rows * rows).sum(axis=1))


@dataclass(frozen=True)
class BoundReport:
    """A computed derivative bound and how it was obtained.

    `method` is "conjecture" or "elevation"; `elevation_steps` and
    `argmax_index` are filled for the elevation bound, `weight_ratio`
    for the conjectured one.
    """

    value: float
    method: str
    norm_order: float
    elevation_steps: int | None = None
    argmax_index: int | None = None
    weight_ratio: float | None = None


def weight_ratio(curve: RationalBezierCurve) -> float:
    """Largest adjacent weight ratio max_i max(w_i/w_{i+1}, w_{i+1}/w_i)."""
    require_valid(curve)
    if curve.degree < 1:
        raise ValueError("weight ratio needs at least two control points")
    w = curve.weights
    forward = w[1:] / w[:-1]
    return float(max(forward.max(), (1.0 / forward).max()))


def conjecture_bound(curve: RationalBezierCurve, p=2) -> BoundReport:
    """Conjectured bound n * W * max_i |p_{i+1} - p_i|_p on sup |r'(t)|_p."""
    p = _check_p(p)
    require_valid(curve)
    if curve.degree < 1:
        raise ValueError("bound needs at least two control points")
    ratio = weight_ratio(curve)
    legs = np.diff(curve.points, axis=0)
    longest = float(_rowwise_norm(legs, p).max())
    return BoundReport(
        value=curve.degree * ratio * longest,
        method="conjecture",
        norm_order=p,
        weight_ratio=ratio,
    )


def elevation_bound(form: DerivativeForm, e: int = 0, p=2) -> BoundReport:
    """Sound bound max_i |n * N_i|_p / W_i after e joint elevation steps.

    The numerator points and weight coefficients of the explicit
    derivative form are elevated together, so the quotient they define
    is unchanged while the coefficient-wise ratio tightens toward
    sup |r'(t)|_p.
    """
    p = _check_p(p)
    if e < 0:
        raise ValueError("elevation step count must be nonnegative")
    stacked = elevate_chain(form.homogeneous(), e)
    value, idx = max_norm_ratio(stacked[:, :-1], stacked[:, -1], p)
    return BoundReport(
        value=value,
        method="elevation",
        norm_order=p,
        elevation_steps=e,
        argmax_index=idx,
    )


def bound_profile(form: DerivativeForm, e_list, p=2) -> list[tuple[int, float]]:
    """Elevation bound at each step count in ascending `e_list`.

    Elevation proceeds incrementally between entries, so a long profile
    costs one chain of max(e_list) steps.
    """
    p = _check_p(p)
    steps = [int(e) for e in e_list]
    if not steps:
        return []
    if any(e < 0 for e in steps):
        raise ValueError("elevation step counts must be nonnegative")
    if any(b <= a for a, b in zip(steps, steps[1:])):
        raise ValueError("elevation step counts must be strictly increasing")
    out: list[tuple[int, float]] = []
    stacked = elevate_chain(form.homogeneous(), steps[0])
    value, _ = max_norm_ratio(stacked[:, :-1], stacked[:, -1], p)
    out.append((steps[0], value))
    for prev, e in zip(steps, steps[1:]):
        stacked = elevate_chain(stacked, e - prev)
        value, _ = max_norm_ratio(stacked[:, :-1], stacked[:, -1], p)
        out.append((e, value))
    return out
