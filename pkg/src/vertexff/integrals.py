"""Double contour integrals over circles and their closed forms.

All four integrands share the shape

    (z1, z2)-monomials / (z1 - z2) * binomial factors in omega,

integrated with d z1 d z2 / (2 i pi)^2 over concentric circles whose radii
follow a fixed ordering relative to |omega|. The quadrature oracle is a
plain double trapezoid rule, spectrally accurate for these analytic
integrands.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import OrderingError, PoleError
from .specialfn import gamma_prod


@dataclass(frozen=True)
class ContourSpec:
    """Circle radii in units of |omega| and the trapezoid resolution."""

    outer_radius: float
    inner_radius: float
    points_per_circle: int = 512

    def __post_init__(self):
        if not (self.outer_radius > self.inner_radius > 0):
            raise OrderingError("need outer_radius > inner_radius > 0")
        if self.points_per_circle < 64:
            raise ValueError("points_per_circle must be >= 64")

    def doubled(self) -> "ContourSpec":
        return ContourSpec(self.outer_radius, self.inner_radius, 2 * self.points_per_circle)


# default circles for each ordering
SPEC_OUTSIDE_INSIDE = ContourSpec(2.0, 0.5)        # |zeta| > |omega| > |tau|
SPEC_BOTH_INSIDE = ContourSpec(0.5, 0.25)          # |omega| > |zeta| > |tau|
SPEC_BOTH_OUTSIDE = ContourSpec(2.0, math.sqrt(2))  # |tau| > |zeta| > |omega|


def _circle(radius: float, n: int):
    theta = 2.0 * np.pi * np.arange(n) / n
    return radius * np.exp(1j * theta)


def _double_trapezoid(f, r_outer: float, r_inner: float, n: int) -> complex:
    """sum over both circles of z_o z_i f(z_o, z_i) / n^2 (dz = i z dtheta)."""
    zo = _circle(r_outer, n)[:, None]
    zi = _circle(r_inner, n)[None, :]
    return complex(np.sum(zo * zi * f(zo, zi)) / (n * n))


def I1_closed(h: int, t: int, nu: complex, omega: complex) -> complex:
    """sin(pi nu) omega^{h-t} / (pi (t-h+nu)) * Gamma(h-nu, t+nu | h, t)."""
    nu = complex(nu)
    den = t - h + nu
    if abs(den) < 1e-14:
        raise PoleError(f"t - h + nu vanishes at h={h}, t={t}")
    return cmath.sin(math.pi * nu) * complex(omega) ** (h - t) / (math.pi * den) * gamma_prod(
        (h - nu, t + nu), (h, t)
    )


def I2_closed(h: int, p: int, nu: complex, omega: complex) -> complex:
    """sin(pi nu) omega^{1-h-p} / (pi (h+p-1)) * Gamma(h+nu, p-nu | h, p)."""
    nu = complex(nu)
    return cmath.sin(math.pi * nu) * complex(omega) ** (1 - h - p) / (math.pi * (h + p - 1)) * gamma_prod(
        (h + nu, p - nu), (h, p)
    )


def I1_quadrature(h: int, t: int, nu: complex, omega: complex, spec: ContourSpec = SPEC_OUTSIDE_INSIDE) -> complex:
    """Ordering |zeta| > |omega| > |tau|: zeta on the outer circle."""
    if not (spec.outer_radius > 1.0 > spec.inner_radius):
        raise OrderingError("I1 needs outer > |omega| > inner")
    om = complex(omega)
    a = abs(om)

    def f(z, tau):
        return tau ** (-t) * z ** (h - 1) / (z - tau) * (1 - om / z) ** nu / (1 - tau / om) ** nu

    return _double_trapezoid(f, spec.outer_radius * a, spec.inner_radius * a, spec.points_per_circle)


def I2_quadrature(h: int, p: int, nu: complex, omega: complex, spec: ContourSpec = SPEC_BOTH_INSIDE) -> complex:
    """Ordering |omega| > |zeta| > |tau|."""
    if not (1.0 > spec.outer_radius):
        raise OrderingError("I2 needs |omega| > outer > inner")
    om = complex(omega)
    a = abs(om)

    def f(z, tau):
        return tau ** (-p) * z ** (-h) / (z - tau) * (1 - tau / om) ** nu / (1 - z / om) ** nu

    return _double_trapezoid(f, spec.outer_radius * a, spec.inner_radius * a, spec.points_per_circle)


def I1_tilde_quadrature(p: int, k: int, nu: complex, omega: complex, spec: ContourSpec = SPEC_OUTSIDE_INSIDE) -> complex:
    """Ordering |zeta| > |omega| > |tau| with the binomials inverted."""
    if not (spec.outer_radius > 1.0 > spec.inner_radius):
        raise OrderingError("tilde I1 needs outer > |omega| > inner")
    om = complex(omega)
    a = abs(om)

    def f(z, tau):
        return tau ** (-k) * z ** (p - 1) / (z - tau) * (1 - tau / om) ** nu / (1 - om / z) ** nu

    return _double_trapezoid(f, spec.outer_radius * a, spec.inner_radius * a, spec.points_per_circle)


def I2_tilde_quadrature(p: int, h: int, nu: complex, omega: complex, spec: ContourSpec = SPEC_BOTH_OUTSIDE) -> complex:
    """Ordering |tau| > |zeta| > |omega|: tau on the outer circle."""
    if not (spec.inner_radius > 1.0):
        raise OrderingError("tilde I2 needs outer > inner > |omega|")
    om = complex(omega)
    a = abs(om)

    def f(tau, z):
        return tau ** (p - 1) * z ** (h - 1) / (tau - z) * (1 - om / z) ** nu / (1 - om / tau) ** nu

    return _double_trapezoid(f, spec.outer_radius * a, spec.inner_radius * a, spec.points_per_circle)


def tilde_relations(kind: int, indices, nu: complex, omega: complex) -> complex:
    """Tilde integrals from the untilded closed forms.

    kind=1, indices=(p, k):  I1(nu) evaluated at -nu.
    kind=2, indices=(p, h):  omega^{2(p+h-1)} I2_{hp}(-nu).
    """
    a, b = indices
    if kind == 1:
        return I1_closed(a, b, -complex(nu), omega)
    if kind == 2:
        return complex(omega) ** (2 * (a + b - 1)) * I2_closed(b, a, -complex(nu), omega)
    raise ValueError("kind must be 1 or 2")


def I2_tilde_closed(p: int, h: int, nu: complex, omega: complex) -> complex:
    return tilde_relations(2, (p, h), nu, omega)
