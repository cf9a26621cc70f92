"""Uniform 1-D cell grids and piecewise-linear curves.

Everything downstream (viscous solvers, hyperbolic solvers, sweeps) shares
these two primitives.  Grids are cell-centered: cell j covers
[x_min + j*dx, x_min + (j+1)*dx] with center x_j = x_min + (j + 1/2)*dx.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, InputError


@dataclass(frozen=True)
class Grid1D:
    x_min: float
    x_max: float
    n_cells: int

    def __post_init__(self):
        if self.n_cells < 8:
            raise ConfigError(f"n_cells must be >= 8, got {self.n_cells}")
        if not self.x_max > self.x_min:
            raise ConfigError(f"empty grid: [{self.x_min}, {self.x_max}]")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    def centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx

    def interfaces(self) -> np.ndarray:
        """The n_cells+1 cell-interface positions."""
        return self.x_min + np.arange(self.n_cells + 1) * self.dx

    def cell_index(self, x: float) -> int:
        """Index of the cell containing x (clamped to the grid)."""
        j = int(np.floor((x - self.x_min) / self.dx))
        return min(max(j, 0), self.n_cells - 1)

    def padded(self, pad: float) -> "Grid1D":
        """Extend the grid by at least `pad` on both sides, keeping dx and
        keeping the original cell centers as a contiguous sub-block."""
        k = int(np.ceil(pad / self.dx))
        return Grid1D(self.x_min - k * self.dx, self.x_max + k * self.dx,
                      self.n_cells + 2 * k)

    def window_slice(self, window: "Grid1D") -> slice:
        """Slice selecting this grid's cells that form `window` (grids must
        share dx and be aligned)."""
        off = (window.x_min - self.x_min) / self.dx
        k = int(round(off))
        if abs(off - k) > 1e-9 or k < 0 or k + window.n_cells > self.n_cells:
            raise InputError("window grid is not an aligned sub-grid")
        return slice(k, k + window.n_cells)


@dataclass
class PiecewiseLinearCurve:
    """A Lipschitz curve t -> x stored as samples, interpolated linearly.

    The slope sequence of the interpolant is a step function, which is what
    regulated-decomposition interfaces require.
    """

    times: np.ndarray
    positions: np.ndarray

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.positions = np.asarray(self.positions, dtype=float)
        if self.times.ndim != 1 or self.times.shape != self.positions.shape:
            raise InputError("curve samples must be 1-D arrays of equal length")
        if self.times.size < 1:
            raise InputError("curve needs at least one sample")
        if self.times.size > 1 and not np.all(np.diff(self.times) > 0):
            raise InputError("curve sample times must be strictly increasing")

    @property
    def t_start(self) -> float:
        return float(self.times[0])

    @property
    def t_end(self) -> float:
        return float(self.times[-1])

    def __call__(self, t):
        return np.interp(t, self.times, self.positions)

    def slope(self, t):
        """Right-continuous slope step function (left slope at the last knot)."""
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        if self.times.size == 1:
            out = np.zeros_like(t_arr)
        else:
            seg = np.clip(np.searchsorted(self.times, t_arr, side="right") - 1,
                          0, self.times.size - 2)
            dt = np.diff(self.times)
            dxs = np.diff(self.positions)
            out = dxs[seg] / dt[seg]
        return out if np.ndim(t) else float(out[0])

    def slope_values(self) -> np.ndarray:
        if self.times.size == 1:
            return np.zeros(1)
        return np.diff(self.positions) / np.diff(self.times)

    def lipschitz(self) -> float:
        return float(np.max(np.abs(self.slope_values())))

    def restricted(self, a: float, b: float) -> "PiecewiseLinearCurve":
        """Restriction to [a, b] (clipped to the curve's own span)."""
        a = max(a, self.t_start)
        b = min(b, self.t_end)
        inside = (self.times > a) & (self.times < b)
        ts = np.concatenate([[a], self.times[inside], [b]])
        return PiecewiseLinearCurve(ts, self(ts))

    @staticmethod
    def constant(x0: float, t0: float = 0.0, t1: float = 1.0) -> "PiecewiseLinearCurve":
        return PiecewiseLinearCurve(np.array([t0, t1]), np.array([x0, x0]))


@dataclass
class StepFunction1D:
    """Right-continuous step function of one variable (used for curve speeds)."""

    breakpoints: np.ndarray   # k breakpoints
    values: np.ndarray        # k+1 values; values[i] on [b_{i-1}, b_i)

    def __post_init__(self):
        self.breakpoints = np.asarray(self.breakpoints, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.values.size != self.breakpoints.size + 1:
            raise InputError("need one more value than breakpoints")

    def __call__(self, t):
        idx = np.searchsorted(self.breakpoints, np.asarray(t, dtype=float),
                              side="right")
        out = self.values[idx]
        return out if np.ndim(t) else float(out)
