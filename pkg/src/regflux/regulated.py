"""Piecewise-constant-along-curves representation of a two-variable field.

A field v(t,x) on a rectangle [0,T] x [x1,x2] is represented, up to a
tolerance eps, by

* finitely many disjoint time bands [a_i, b_i] covering all of [0,T] except
  a set of measure <= eps, and
* inside each band, ordered Lipschitz interface curves
  gamma_{i,1}(t) < ... < gamma_{i,N(i)}(t) with piecewise-constant speeds,
  separating constant values alpha_{i,0}, ..., alpha_{i,N(i)}.

The value on a curve itself is the right-hand constant (right-continuity in
x); time gaps between bands evaluate to the distinguished "uncovered"
marker (None).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

import numpy as np

from .errors import AssumptionError, InputError
from .fluxes import CompositeFlux, TwoArgFlux
from .grid import PiecewiseLinearCurve


@dataclass
class Band:
    a: float
    b: float
    curves: List[PiecewiseLinearCurve]
    alphas: np.ndarray  # len(curves) + 1 constants

    def __post_init__(self):
        self.alphas = np.asarray(self.alphas, dtype=float)
        if self.alphas.size != len(self.curves) + 1:
            raise InputError("band needs one more constant than curves")
        if not self.b >= self.a:
            raise InputError(f"empty band [{self.a}, {self.b}]")

    def curve_positions(self, t: float) -> np.ndarray:
        return np.array([float(c(t)) for c in self.curves])

    def value(self, t: float, x) -> np.ndarray:
        """Step-function value at time t; on-curve points take the right
        constant."""
        pos = self.curve_positions(t)
        x = np.asarray(x, dtype=float)
        k = np.searchsorted(pos, x, side="right")  # pos[k-1] <= x < pos[k]
        out = self.alphas[k]
        return out if out.shape else float(out)

    def value_sided(self, t: float, x, side: str) -> np.ndarray:
        pos = self.curve_positions(t)
        x = np.asarray(x, dtype=float)
        if side == "left":
            k = np.searchsorted(pos, x, side="left")   # left limit
        else:
            k = np.searchsorted(pos, x, side="right")
        out = self.alphas[k]
        return out if out.shape else float(out)


@dataclass
class RegulatedField:
    t_end: float
    x_span: tuple
    bands: List[Band]
    tolerance: float
    approximate: bool = False  # True for grid-based extractions

    def __post_init__(self):
        self.bands = sorted(self.bands, key=lambda b: b.a)

    # -- lookups ------------------------------------------------------------

    def band_at(self, t: float) -> Optional[Band]:
        for band in self.bands:
            if band.a <= t <= band.b:
                return band
        return None

    def value(self, t: float, x):
        """Field value, or None when t falls in a gap between bands."""
        if not (0.0 <= t <= self.t_end):
            raise InputError(f"t={t} outside [0, {self.t_end}]")
        x_arr = np.asarray(x, dtype=float)
        if np.any(x_arr < self.x_span[0] - 1e-12) or np.any(x_arr > self.x_span[1] + 1e-12):
            raise InputError("x outside the field's rectangle")
        band = self.band_at(t)
        if band is None:
            return None
        return band.value(t, x)

    def value_sided(self, t: float, x, side: str):
        band = self.band_at(t)
        if band is None:
            band = self.nearest_band(t)
        return band.value_sided(t, x, side)

    def nearest_band(self, t: float) -> Band:
        """Band whose endpoint is closest in time (constant-in-t extension
        used when composing over uncovered gaps)."""
        best, dist = None, np.inf
        for band in self.bands:
            d = 0.0 if band.a <= t <= band.b else min(abs(t - band.a), abs(t - band.b))
            if d < dist:
                best, dist = band, d
        if best is None:
            raise InputError("field has no bands")
        return best

    def uncovered_measure(self) -> float:
        return self.t_end - sum(b.b - b.a for b in self.bands)

    def alpha_values(self) -> np.ndarray:
        return np.unique(np.concatenate([b.alphas for b in self.bands]))

    def alpha_range(self):
        vals = self.alpha_values()
        return float(vals.min()), float(vals.max())

    # -- coefficient-field protocol (for CompositeFlux) ----------------------

    def value_as_coefficient(self, t, x):
        band = self.band_at(t) or self.nearest_band(t)
        return band.value(min(max(t, band.a), band.b), x)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "t_end": self.t_end,
            "x_span": list(self.x_span),
            "tolerance": self.tolerance,
            "approximate": self.approximate,
            "bands": [
                {
                    "a": b.a,
                    "b": b.b,
                    "curves": [np.column_stack([c.times, c.positions]).tolist()
                               for c in b.curves],
                    "alphas": b.alphas.tolist(),
                }
                for b in self.bands
            ],
        }

    @staticmethod
    def from_dict(doc: dict) -> "RegulatedField":
        bands = [
            Band(
                a=float(raw["a"]),
                b=float(raw["b"]),
                curves=[PiecewiseLinearCurve(np.asarray(samples)[:, 0],
                                             np.asarray(samples)[:, 1])
                        for samples in raw["curves"]],
                alphas=np.asarray(raw["alphas"], dtype=float),
            )
            for raw in doc["bands"]
        ]
        return RegulatedField(t_end=float(doc["t_end"]),
                              x_span=tuple(doc["x_span"]), bands=bands,
                              tolerance=float(doc["tolerance"]),
                              approximate=bool(doc.get("approximate", False)))


# ---------------------------------------------------------------------------
# validation


@dataclass
class OrderingViolation:
    band_index: int
    time: float
    curve_index: int
    margin: float  # gamma_{k+1}(t) - gamma_k(t), negative or zero when violated


@dataclass
class FieldValidation:
    bands_disjoint: bool
    uncovered_measure: float
    uncovered_within_budget: bool
    ordering_violations: List[OrderingViolation]
    curve_lipschitz: List[List[float]]

    @property
    def passed(self) -> bool:
        return (self.bands_disjoint and self.uncovered_within_budget
                and not self.ordering_violations)


def validate_field(fld: RegulatedField, n_time_samples: int = 64) -> FieldValidation:
    """Check band disjointness, the covered-time budget, strict curve
    ordering, and record per-curve Lipschitz constants.

    Violations are reported, never raised.
    """
    bands = fld.bands
    disjoint = all(bands[i].b <= bands[i + 1].a + 1e-12 for i in range(len(bands) - 1))
    uncovered = fld.uncovered_measure()
    violations: List[OrderingViolation] = []
    lip: List[List[float]] = []
    for bi, band in enumerate(bands):
        lip.append([c.lipschitz() for c in band.curves])
        if len(band.curves) < 2:
            continue
        knots = np.unique(np.concatenate(
            [[band.a, band.b]] + [c.times[(c.times >= band.a) & (c.times <= band.b)]
                                  for c in band.curves]))
        ts = np.union1d(knots, np.linspace(band.a, band.b, n_time_samples))
        for t in ts:
            pos = band.curve_positions(float(t))
            gaps = np.diff(pos)
            bad = np.where(gaps <= 0)[0]
            for k in bad:
                violations.append(OrderingViolation(bi, float(t), int(k),
                                                    float(gaps[k])))
    return FieldValidation(
        bands_disjoint=disjoint,
        uncovered_measure=uncovered,
        uncovered_within_budget=uncovered <= fld.tolerance + 1e-12,
        ordering_violations=violations,
        curve_lipschitz=lip,
    )


@dataclass
class SupDistanceReport:
    band_sups: List[float]
    uncovered_measure: float
    excluded_collar: float

    @property
    def overall_sup(self) -> float:
        return max(self.band_sups) if self.band_sups else 0.0


def sup_distance(fld: RegulatedField, reference: Callable[[float, np.ndarray], np.ndarray],
                 n_time: int = 200, n_x: int = 200) -> SupDistanceReport:
    """Per-band sup of |field - reference| over a sample lattice.

    Samples within one x-step of an interface curve are excluded: the
    comparison is an essential sup in x, and the jump location itself must
    not register spurious error at finite sampling.
    """
    if n_time < 1 or n_x < 2:
        raise InputError("empty sample grid")
    xs = np.linspace(fld.x_span[0], fld.x_span[1], n_x)
    collar = xs[1] - xs[0]
    t_lattice = np.linspace(0.0, fld.t_end, n_time)
    band_sups = []
    for band in fld.bands:
        ts = t_lattice[(t_lattice >= band.a) & (t_lattice <= band.b)]
        if ts.size == 0:
            ts = np.array([0.5 * (band.a + band.b)])
        worst = 0.0
        for t in ts:
            pos = band.curve_positions(float(t))
            keep = np.ones_like(xs, dtype=bool)
            for p in pos:
                keep &= np.abs(xs - p) > collar
            if not np.any(keep):
                continue
            approx = band.value(float(t), xs[keep])
            exact = np.asarray(reference(float(t), xs[keep]), dtype=float)
            worst = max(worst, float(np.max(np.abs(approx - exact))))
        band_sups.append(worst)
    return SupDistanceReport(band_sups=band_sups,
                             uncovered_measure=fld.uncovered_measure(),
                             excluded_collar=collar)


def compose(F: TwoArgFlux, fld: RegulatedField) -> CompositeFlux:
    """Composite flux F(v(t,x), omega) driven by a regulated coefficient.

    Raises when F violates the pinned endpoints on any of the field's
    constants.  Evaluation in uncovered time gaps extends the nearest band
    constant-in-t; gap values cannot affect vanishing-viscosity limits
    beyond the eps budget, so any bounded choice is admissible.
    """
    alphas = fld.alpha_values()
    h1 = float(F.fn(alphas[0], 1.0))
    for a in alphas:
        if abs(float(F.fn(a, 0.0))) > 1e-12:
            raise AssumptionError(f"F({a}, 0) != 0 on a field constant")
        if abs(float(F.fn(a, 1.0)) - h1) > 1e-12:
            raise AssumptionError("F(alpha, 1) varies over the field constants")

    class _RegCoefficient:
        def __init__(self, fld):
            self.fld = fld

        def value(self, t, x):
            return self.fld.value_as_coefficient(t, x)

        def value_sided(self, t, x, side):
            return self.fld.value_sided(t, x, side)

        def alpha_range(self):
            return self.fld.alpha_range()

    return CompositeFlux(F, _RegCoefficient(fld))
