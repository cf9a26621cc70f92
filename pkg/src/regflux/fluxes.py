"""Flux fields f(t, x, omega) with assumption metadata.

A flux field evaluates the (possibly discontinuous in t and x) flux and
carries the structural metadata the solvers and checkers rely on:

* ``lip_omega`` -- a Lipschitz constant L of omega -> f(t,x,omega), uniform
  in (t,x);
* ``lip_bound_l1`` -- an integral bound L1 on |f(t,x,0)|;
* flags for the structural assumptions: boundedness/Lipschitz regularity
  (F1), pinned endpoint values f(.,.,0)=0 and f(.,.,1)=h(t) (F2), and the
  composite form f = F(v(t,x), omega) with a regulated coefficient (F3).

Discontinuous fields additionally expose one-sided evaluation
(``value_sided``) so conservative schemes can sample the coefficient on a
chosen side of each cell interface.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import AssumptionError, InputError
from .grid import PiecewiseLinearCurve, StepFunction1D

_DIFF_STEP = 1e-5  # centered-difference step for omega derivatives

# Normalized C-infinity bump exp(-1/(1-s^2)) on (-1,1); raw mass computed by
# adaptive quadrature once, frozen here.
_BUMP_RAW_MASS = 0.4439938161680793


def bump_kernel(s):
    """Unit-mass mollification kernel, support [-1, 1]."""
    s = np.asarray(s, dtype=float)
    out = np.zeros_like(s)
    inside = np.abs(s) < 1.0
    out[inside] = np.exp(-1.0 / (1.0 - s[inside] ** 2)) / _BUMP_RAW_MASS
    return out


class FluxField:
    """Base flux abstraction.  Subclasses implement ``value``."""

    lip_omega: float = 0.0
    lip_bound_l1: float = 0.0
    satisfies_f1: bool = True
    satisfies_f2: bool = False
    satisfies_f3: bool = False
    state_range: tuple = (0.0, 1.0)

    def value(self, t, x, omega):
        raise NotImplementedError

    def value_sided(self, t, x, omega, side):
        """Evaluate with the (t,x)-coefficient taken from one side in x."""
        return self.value(t, x, omega)

    def omega_derivative(self, t, x, omega):
        h = _DIFF_STEP
        return (self.value(t, x, np.asarray(omega) + h)
                - self.value(t, x, np.asarray(omega) - h)) / (2.0 * h)

    def speed_bound(self, t, x, lo, hi):
        """Upper bound for |f_omega(t, x+-, w)| over w in [lo, hi].

        The default is the global Lipschitz constant; concrete families
        override with sharp local bounds (local Lax-Friedrichs uses this).
        """
        shape = np.broadcast(np.asarray(x), np.asarray(lo)).shape
        return np.full(shape, self.lip_omega)


def _as_callable_pair(fn, dfn, d2fn):
    if dfn is None:
        def dfn(w, _f=fn, _h=_DIFF_STEP):
            return (_f(np.asarray(w) + _h) - _f(np.asarray(w) - _h)) / (2 * _h)
    if d2fn is None:
        def d2fn(w, _f=fn, _h=1e-4):
            w = np.asarray(w)
            return (_f(w + _h) - 2.0 * _f(w) + _f(w - _h)) / _h ** 2
    return dfn, d2fn


class SmoothFlux(FluxField):
    """(t,x)-independent flux omega -> g(omega)."""

    def __init__(self, fn, dfn=None, d2fn=None, name="custom",
                 lip_omega=None, state_range=(0.0, 1.0), crit_points=()):
        self.fn = fn
        self.dfn, self.d2fn = _as_callable_pair(fn, dfn, d2fn)
        self.name = name
        self.state_range = state_range
        self.crit_points = tuple(crit_points)
        if lip_omega is None:
            ws = np.linspace(state_range[0], state_range[1], 513)
            lip_omega = float(np.max(np.abs(self.dfn(ws))))
        self.lip_omega = float(lip_omega)
        self.lip_bound_l1 = 0.0
        g0 = float(fn(0.0))
        self.satisfies_f2 = abs(g0) < 1e-14
        self.satisfies_f3 = True  # F(alpha, w) = g(w), constant coefficient

    def value(self, t, x, omega):
        out = self.fn(np.asarray(omega, dtype=float))
        shape = np.broadcast(np.asarray(x), np.asarray(omega)).shape
        return np.broadcast_to(out, shape).copy() if shape else float(out)

    def omega_derivative(self, t, x, omega):
        out = self.dfn(np.asarray(omega, dtype=float))
        shape = np.broadcast(np.asarray(x), np.asarray(omega)).shape
        return np.broadcast_to(out, shape).copy() if shape else float(out)

    def speed_bound(self, t, x, lo, hi):
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        cand = np.maximum(np.abs(self.dfn(lo)), np.abs(self.dfn(hi)))
        for c in self.crit_points:  # interior extrema of f_omega
            inside = (lo < c) & (c < hi)
            cand = np.where(inside, np.maximum(cand, abs(float(self.dfn(c)))), cand)
        shape = np.broadcast(np.asarray(x), lo).shape
        return np.broadcast_to(cand, shape).copy()


class InterfaceFlux(FluxField):
    """Two one-state fluxes glued across a Lipschitz interface x = gamma(t).

    The value on the interface itself is taken from the left flux (the
    measure-zero convention is fixed for determinism).
    """

    def __init__(self, f_left: SmoothFlux, f_right: SmoothFlux,
                 gamma: PiecewiseLinearCurve):
        fl0, fr0 = float(f_left.fn(0.0)), float(f_right.fn(0.0))
        fl1, fr1 = float(f_left.fn(1.0)), float(f_right.fn(1.0))
        if abs(fl0) > 1e-14 or abs(fr0) > 1e-14 or abs(fl1 - fr1) > 1e-14:
            raise AssumptionError(
                "interface fluxes must satisfy f_l(0)=f_r(0)=0, f_l(1)=f_r(1)")
        self.f_left = f_left
        self.f_right = f_right
        self.gamma = gamma
        if gamma.times.size > 1:
            # slopes of the piecewise-linear interpolant form exactly a step
            # function with breaks at the interior knots
            self.gamma_dot = StepFunction1D(gamma.times[1:-1], gamma.slope_values())
        else:
            self.gamma_dot = StepFunction1D(np.array([]), np.zeros(1))
        self.lip_omega = max(f_left.lip_omega, f_right.lip_omega)
        self.lip_bound_l1 = 0.0
        self.satisfies_f2 = True
        self.satisfies_f3 = False
        self.state_range = f_left.state_range

    def _mask_left(self, t, x, side):
        g = float(self.gamma(t))
        x = np.asarray(x, dtype=float)
        return x <= g if side != "right" else x < g

    def value(self, t, x, omega):
        left = self._mask_left(t, x, "value")
        vl = self.f_left.fn(np.asarray(omega, dtype=float))
        vr = self.f_right.fn(np.asarray(omega, dtype=float))
        out = np.where(left, vl, vr)
        return out if out.shape else float(out)

    def value_sided(self, t, x, omega, side):
        left = self._mask_left(t, x, side)
        vl = self.f_left.fn(np.asarray(omega, dtype=float))
        vr = self.f_right.fn(np.asarray(omega, dtype=float))
        out = np.where(left, vl, vr)
        return out if out.shape else float(out)

    def omega_derivative(self, t, x, omega):
        left = self._mask_left(t, x, "value")
        dl = self.f_left.dfn(np.asarray(omega, dtype=float))
        dr = self.f_right.dfn(np.asarray(omega, dtype=float))
        out = np.where(left, dl, dr)
        return out if out.shape else float(out)

    def speed_bound(self, t, x, lo, hi):
        return np.maximum(self.f_left.speed_bound(t, x, lo, hi),
                          self.f_right.speed_bound(t, x, lo, hi))


class TwoArgFlux:
    """Smooth F(alpha, omega) with derivative accessors in omega.

    Families used with regulated coefficients must satisfy F(alpha,0)=0 and
    F(alpha,1)=h1 independent of alpha.
    """

    def __init__(self, fn, d_omega=None, d2_omega=None, name="custom",
                 h1=None, lip_omega_of_alpha=None, speed_bound_fn=None):
        self.fn = fn
        if d_omega is None:
            def d_omega(a, w, _f=fn, _h=_DIFF_STEP):
                return (_f(a, np.asarray(w) + _h) - _f(a, np.asarray(w) - _h)) / (2 * _h)
        if d2_omega is None:
            def d2_omega(a, w, _f=fn, _h=1e-4):
                w = np.asarray(w)
                return (_f(a, w + _h) - 2.0 * _f(a, w) + _f(a, w - _h)) / _h ** 2
        self.d_omega = d_omega
        self.d2_omega = d2_omega
        self.name = name
        self.h1 = h1
        self._lip = lip_omega_of_alpha
        self._speed_bound = speed_bound_fn

    def lip_omega(self, alpha_lo, alpha_hi):
        if self._lip is not None:
            return max(self._lip(alpha_lo), self._lip(alpha_hi))
        ws = np.linspace(0.0, 1.0, 257)
        return float(max(np.max(np.abs(self.d_omega(alpha_lo, ws))),
                         np.max(np.abs(self.d_omega(alpha_hi, ws)))))

    def speed_bound(self, alpha, lo, hi):
        if self._speed_bound is not None:
            return self._speed_bound(alpha, lo, hi)
        return np.maximum(np.abs(self.d_omega(alpha, lo)),
                          np.abs(self.d_omega(alpha, hi)))


class CompositeFlux(FluxField):
    """f(t,x,omega) = F(v(t,x), omega) for a coefficient field v.

    ``coefficient`` must expose ``value(t, x)`` (vectorized in x) and may
    expose ``value_sided(t, x, side)`` and ``alpha_range()``.
    """

    def __init__(self, F: TwoArgFlux, coefficient, alpha_range=None):
        self.F = F
        self.coefficient = coefficient
        if alpha_range is None:
            if hasattr(coefficient, "alpha_range"):
                alpha_range = coefficient.alpha_range()
            else:
                raise InputError("alpha_range required for opaque coefficients")
        self.alpha_lo, self.alpha_hi = float(alpha_range[0]), float(alpha_range[1])
        for a in (self.alpha_lo, self.alpha_hi):
            if abs(float(F.fn(a, 0.0))) > 1e-12:
                raise AssumptionError(f"F({a}, 0) != 0")
        h1a = float(F.fn(self.alpha_lo, 1.0))
        h1b = float(F.fn(self.alpha_hi, 1.0))
        if abs(h1a - h1b) > 1e-12:
            raise AssumptionError("F(alpha, 1) must not depend on alpha")
        self.h1 = h1a
        self.lip_omega = F.lip_omega(self.alpha_lo, self.alpha_hi)
        self.lip_bound_l1 = 0.0
        self.satisfies_f2 = True
        self.satisfies_f3 = True

    def _coef(self, t, x, side=None):
        if side is not None and hasattr(self.coefficient, "value_sided"):
            return self.coefficient.value_sided(t, x, side)
        return self.coefficient.value(t, x)

    def value(self, t, x, omega):
        a = self._coef(t, x)
        out = self.F.fn(np.asarray(a, dtype=float), np.asarray(omega, dtype=float))
        return out if np.ndim(out) else float(out)

    def value_sided(self, t, x, omega, side):
        a = self._coef(t, x, side)
        out = self.F.fn(np.asarray(a, dtype=float), np.asarray(omega, dtype=float))
        return out if np.ndim(out) else float(out)

    def omega_derivative(self, t, x, omega):
        a = self._coef(t, x)
        out = self.F.d_omega(np.asarray(a, dtype=float), np.asarray(omega, dtype=float))
        return out if np.ndim(out) else float(out)

    def speed_bound(self, t, x, lo, hi):
        bounds = []
        for side in ("left", "right"):
            a = self._coef(t, x, side)
            bounds.append(self.F.speed_bound(np.asarray(a, dtype=float), lo, hi))
        return np.maximum(*bounds)


class CallableCoefficient:
    """Adapter turning a closed-form v(t,x) into a coefficient field."""

    def __init__(self, fn, alpha_range):
        self.fn = fn
        self._range = (float(alpha_range[0]), float(alpha_range[1]))

    def value(self, t, x):
        return self.fn(t, np.asarray(x, dtype=float))

    def alpha_range(self):
        return self._range


class MollifiedFlux(FluxField):
    """Space-time mollification of a base flux with the bump kernel.

    f_delta(t,x,w) = iint rho_delta(t-s) rho_delta(x-y) f(s,y,w) dy ds,
    computed with a 64-panel composite trapezoid rule per axis.  The kernel
    weights are renormalized to unit mass so constants are reproduced
    exactly and the Lipschitz constant in omega is preserved.
    """

    _PANELS = 64

    def __init__(self, base: FluxField, delta: float):
        if not delta > 0:
            raise InputError(f"smoothing radius must be positive, got {delta}")
        self.base = base
        self.delta = float(delta)
        n = self._PANELS
        xi = np.linspace(-1.0, 1.0, n + 1)
        w = np.full(n + 1, 2.0 / n)
        w[0] *= 0.5
        w[-1] *= 0.5
        w = w * bump_kernel(xi)
        self._nodes = xi
        self._weights = w / np.sum(w)
        self.lip_omega = base.lip_omega
        self.lip_bound_l1 = base.lip_bound_l1
        self.satisfies_f2 = base.satisfies_f2
        self.satisfies_f3 = base.satisfies_f3
        self.state_range = base.state_range

    def value(self, t, x, omega):
        t = float(t)
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        oms = np.atleast_1d(np.asarray(omega, dtype=float))
        if xs.size == 1 and oms.size > 1:
            xs = np.broadcast_to(xs, oms.shape)
        elif oms.size == 1 and xs.size > 1:
            oms = np.broadcast_to(oms, xs.shape)
        out = np.zeros(np.broadcast(xs, oms).shape)
        for i, xi in enumerate(self._nodes):
            s = t - self.delta * xi
            ys = xs[..., None] - self.delta * self._nodes  # (..., nodes)
            vals = self.base.value(s, ys, oms[..., None])
            out += self._weights[i] * np.sum(vals * self._weights, axis=-1)
        return out if np.ndim(x) or np.ndim(omega) else float(out.reshape(-1)[0])


class GalileanShiftedFlux(FluxField):
    """Moving-frame flux of an interface problem.

    For an interface flux with curve gamma, the change of variables
    x -> x - gamma(t) freezes the interface at x=0 and turns the flux into
    f_{l/r}(omega) - gamma_dot(t) * omega.
    """

    def __init__(self, base: InterfaceFlux):
        self.base = base
        self.gamma_dot = base.gamma_dot
        gd_max = float(np.max(np.abs(self.gamma_dot.values)))
        self.lip_omega = base.lip_omega + gd_max
        self.lip_bound_l1 = 0.0
        self.satisfies_f2 = True  # f(t,x,1) = h(t) - gamma_dot(t), x-free
        self.satisfies_f3 = False
        self.state_range = base.state_range

    def _sided(self, t, x, omega, side):
        x = np.asarray(x, dtype=float)
        left = x <= 0.0 if side != "right" else x < 0.0
        om = np.asarray(omega, dtype=float)
        drift = float(self.gamma_dot(float(t))) * om
        out = np.where(left, self.base.f_left.fn(om), self.base.f_right.fn(om)) - drift
        return out if out.shape else float(out)

    def value(self, t, x, omega):
        return self._sided(t, x, omega, "value")

    def value_sided(self, t, x, omega, side):
        return self._sided(t, x, omega, side)

    def omega_derivative(self, t, x, omega):
        x = np.asarray(x, dtype=float)
        om = np.asarray(omega, dtype=float)
        left = x <= 0.0
        out = np.where(left, self.base.f_left.dfn(om), self.base.f_right.dfn(om)) \
            - float(self.gamma_dot(float(t)))
        return out if out.shape else float(out)

    def speed_bound(self, t, x, lo, hi):
        return self.base.speed_bound(t, x, lo, hi) \
            + abs(float(self.gamma_dot(float(t))))


# ---------------------------------------------------------------------------
# operations

def eval_flux(flux: FluxField, t, x, omega):
    """Evaluate f(t,x,omega), validating finiteness of the inputs."""
    for name, v in (("t", t), ("x", x), ("omega", omega)):
        if not np.all(np.isfinite(v)):
            raise InputError(f"non-finite {name} passed to flux evaluation")
    return flux.value(t, x, omega)


def mollify(flux: FluxField, delta: float) -> MollifiedFlux:
    return MollifiedFlux(flux, delta)


def galilean_shift(flux: InterfaceFlux) -> GalileanShiftedFlux:
    if not isinstance(flux, InterfaceFlux):
        raise InputError("galilean_shift expects an InterfaceFlux")
    return GalileanShiftedFlux(flux)


@dataclass
class SamplingPlan:
    """Lattice of (t, x, omega) samples for empirical assumption checks."""

    t_samples: np.ndarray
    x_samples: np.ndarray
    omega_samples: np.ndarray

    def __post_init__(self):
        self.t_samples = np.atleast_1d(np.asarray(self.t_samples, dtype=float))
        self.x_samples = np.atleast_1d(np.asarray(self.x_samples, dtype=float))
        self.omega_samples = np.atleast_1d(np.asarray(self.omega_samples, dtype=float))
        if min(self.t_samples.size, self.x_samples.size,
               self.omega_samples.size) == 0:
            raise InputError("sampling plan must be non-empty")

    @staticmethod
    def uniform(t_span, x_span, nt=9, nx=33, n_omega=65, omega_span=(0.0, 1.0)):
        return SamplingPlan(np.linspace(*t_span, nt), np.linspace(*x_span, nx),
                            np.linspace(*omega_span, n_omega))


@dataclass
class AssumptionReport:
    lipschitz_hat: float
    declared_lipschitz: float
    max_abs_f_at_zero: float
    max_x_variation_at_one: float
    f1_pass: bool
    f2_pass: bool

    def all_pass(self):
        return self.f1_pass and (self.f2_pass or True)


def verify_assumptions(flux: FluxField, plan: SamplingPlan,
                       lip_tol: float = 1e-6, f2_tol: float = 1e-12) -> AssumptionReport:
    """Empirical checks of (F1)(ii) and (F2) over a sampling lattice.

    The Lipschitz estimate uses centered differences with step 1e-5; the
    bounded second derivative in (F1)(ii) keeps that accurate to ~1e-10.
    """
    h = _DIFF_STEP
    lip_hat = 0.0
    f0_max = 0.0
    f1_lo, f1_hi = np.inf, -np.inf
    for t in plan.t_samples:
        x = plan.x_samples
        for w in plan.omega_samples:
            quot = np.abs(flux.value(t, x, w + h) - flux.value(t, x, w - h)) / (2 * h)
            lip_hat = max(lip_hat, float(np.max(quot)))
        f0_max = max(f0_max, float(np.max(np.abs(flux.value(t, x, 0.0)))))
        at_one = np.atleast_1d(flux.value(t, x, 1.0))
        f1_lo = min(f1_lo, float(np.min(at_one)))
        f1_hi = max(f1_hi, float(np.max(at_one)))
    xvar = 0.0
    for t in plan.t_samples:
        at_one = np.atleast_1d(flux.value(t, plan.x_samples, 1.0))
        xvar = max(xvar, float(np.max(at_one) - np.min(at_one)))
    return AssumptionReport(
        lipschitz_hat=lip_hat,
        declared_lipschitz=flux.lip_omega,
        max_abs_f_at_zero=f0_max,
        max_x_variation_at_one=xvar,
        f1_pass=lip_hat <= flux.lip_omega + lip_tol,
        f2_pass=(f0_max <= f2_tol and xvar <= f2_tol),
    )


# ---------------------------------------------------------------------------
# catalog

def _burgers(w):
    return 0.5 * w * w


def _concave_quadratic(w):
    return w * (1.0 - w)


def _cubic(w):
    return w ** 3


def smooth_flux(name: str, state_range=None) -> SmoothFlux:
    """Closed-form one-state fluxes addressable from scenario configs."""
    if name == "burgers":
        sr = state_range or (0.0, 1.0)
        L = max(abs(sr[0]), abs(sr[1]))
        return SmoothFlux(_burgers, dfn=lambda w: np.asarray(w, dtype=float),
                          d2fn=lambda w: np.ones_like(np.asarray(w, dtype=float)),
                          name="burgers", lip_omega=L, state_range=sr,
                          crit_points=(0.0,))
    if name == "concave_quadratic":
        sr = state_range or (0.0, 1.0)
        L = max(abs(1 - 2 * sr[0]), abs(1 - 2 * sr[1]))
        return SmoothFlux(_concave_quadratic,
                          dfn=lambda w: 1.0 - 2.0 * np.asarray(w, dtype=float),
                          d2fn=lambda w: -2.0 * np.ones_like(np.asarray(w, dtype=float)),
                          name="concave_quadratic", lip_omega=L, state_range=sr,
                          crit_points=(0.5,))
    if name == "scaled_concave_2":
        sr = state_range or (0.0, 1.0)
        return SmoothFlux(lambda w: 2.0 * _concave_quadratic(np.asarray(w, dtype=float)),
                          dfn=lambda w: 2.0 - 4.0 * np.asarray(w, dtype=float),
                          name="scaled_concave_2", lip_omega=2.0, state_range=sr,
                          crit_points=(0.5,))
    if name == "cubic":
        sr = state_range or (-1.0, 1.0)
        L = 3.0 * max(abs(sr[0]), abs(sr[1])) ** 2
        return SmoothFlux(_cubic, dfn=lambda w: 3.0 * np.asarray(w, dtype=float) ** 2,
                          d2fn=lambda w: 6.0 * np.asarray(w, dtype=float),
                          name="cubic", lip_omega=L, state_range=sr)
    if name == "cubic_normalized":
        sr = state_range or (0.0, 1.0)
        return SmoothFlux(lambda w: np.asarray(w, dtype=float) ** 3 / 3.0,
                          dfn=lambda w: np.asarray(w, dtype=float) ** 2,
                          name="cubic_normalized", lip_omega=1.0, state_range=sr)
    if name == "linear":
        sr = state_range or (0.0, 1.0)
        return SmoothFlux(lambda w: np.asarray(w, dtype=float),
                          dfn=lambda w: np.ones_like(np.asarray(w, dtype=float)),
                          name="linear", lip_omega=1.0, state_range=sr)
    if name == "zero":
        sr = state_range or (0.0, 1.0)
        return SmoothFlux(lambda w: np.zeros_like(np.asarray(w, dtype=float)),
                          dfn=lambda w: np.zeros_like(np.asarray(w, dtype=float)),
                          name="zero", lip_omega=0.0, state_range=sr)
    raise InputError(f"unknown smooth flux '{name}'")


def two_arg_flux(name: str) -> TwoArgFlux:
    """Closed-form F(alpha, omega) families for composite fluxes."""
    if name == "scaled_concave":
        # F(alpha, w) = alpha * w * (1 - w)
        return TwoArgFlux(
            fn=lambda a, w: np.asarray(a, dtype=float) * np.asarray(w, dtype=float)
            * (1.0 - np.asarray(w, dtype=float)),
            d_omega=lambda a, w: np.asarray(a, dtype=float)
            * (1.0 - 2.0 * np.asarray(w, dtype=float)),
            d2_omega=lambda a, w: -2.0 * np.asarray(a, dtype=float)
            * np.ones_like(np.asarray(w, dtype=float)),
            name="scaled_concave", h1=0.0,
            lip_omega_of_alpha=lambda a: abs(a),
            speed_bound_fn=lambda a, lo, hi: np.abs(a) * np.maximum(
                np.abs(1.0 - 2.0 * np.asarray(lo, dtype=float)),
                np.abs(1.0 - 2.0 * np.asarray(hi, dtype=float))),
        )
    if name == "shifted_concave":
        # F(alpha, w) = (1 + alpha) * w * (1 - w)
        return TwoArgFlux(
            fn=lambda a, w: (1.0 + np.asarray(a, dtype=float))
            * np.asarray(w, dtype=float) * (1.0 - np.asarray(w, dtype=float)),
            d_omega=lambda a, w: (1.0 + np.asarray(a, dtype=float))
            * (1.0 - 2.0 * np.asarray(w, dtype=float)),
            d2_omega=lambda a, w: -2.0 * (1.0 + np.asarray(a, dtype=float))
            * np.ones_like(np.asarray(w, dtype=float)),
            name="shifted_concave", h1=0.0,
            lip_omega_of_alpha=lambda a: abs(1.0 + a),
            speed_bound_fn=lambda a, lo, hi: np.abs(1.0 + np.asarray(a, dtype=float))
            * np.maximum(np.abs(1.0 - 2.0 * np.asarray(lo, dtype=float)),
                         np.abs(1.0 - 2.0 * np.asarray(hi, dtype=float))),
        )
    if name == "alpha_endpoint":
        # F(alpha, w) = alpha * w: violates the pinned endpoint at w=1.
        return TwoArgFlux(
            fn=lambda a, w: np.asarray(a, dtype=float) * np.asarray(w, dtype=float),
            d_omega=lambda a, w: np.asarray(a, dtype=float)
            * np.ones_like(np.asarray(w, dtype=float)),
            name="alpha_endpoint", h1=None,
            lip_omega_of_alpha=lambda a: abs(a),
        )
    raise InputError(f"unknown two-argument flux '{name}'")
