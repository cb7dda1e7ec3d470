"""Gamma ratios and the Barnes G function.

Products of Gamma (or Barnes G) values are written in the compact ratio
notation ``Gamma(a1, ..., an | b1, ..., bm)`` meaning
``prod Gamma(a_i) / prod Gamma(b_j)``. All accumulation happens in the log
domain.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.special import gamma, loggamma

from .errors import PoleError

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_POLE_TOL = 1e-12


@dataclass(frozen=True)
class RatioSpec:
    numerators: tuple = field(default_factory=tuple)
    denominators: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(complex(z) for z in self.numerators))
        object.__setattr__(self, "denominators", tuple(complex(z) for z in self.denominators))


def is_nonpositive_integer(z: complex, tol: float = _POLE_TOL) -> bool:
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    n = round(z.real)
    return n <= 0 and abs(z.real - n) <= tol


def log_gamma(z: complex) -> complex:
    """Analytic log-Gamma (the branch continuous off the negative axis)."""
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at {z}")
    return complex(loggamma(complex(z)))


def log_gamma_ratio(spec: RatioSpec) -> complex:
    acc = 0j
    for z in spec.numerators:
        acc += log_gamma(z)
    for z in spec.denominators:
        acc -= log_gamma(z)
    return acc


def gamma_ratio(spec: RatioSpec) -> complex:
    """Evaluate ``prod Gamma(numerators) / prod Gamma(denominators)``.

    Real moderate arguments use direct Gamma values, which keeps the result
    within a few ulp; anything else goes through log-Gamma.
    """
    args = spec.numerators + spec.denominators
    if all(z.imag == 0 and abs(z.real) < 100 for z in args):
        for z in args:
            if is_nonpositive_integer(z):
                raise PoleError(f"Gamma has a pole at {z}")
        val = 1.0
        for z in spec.numerators:
            val *= float(gamma(z.real))
        for z in spec.denominators:
            val /= float(gamma(z.real))
        if math.isfinite(val) and val != 0.0:
            return complex(val)
    return cmath.exp(log_gamma_ratio(spec))


def gamma_prod(numerators: Sequence[complex], denominators: Sequence[complex] = ()) -> complex:
    """Shorthand for ``gamma_ratio(RatioSpec(numerators, denominators))``."""
    return gamma_ratio(RatioSpec(tuple(numerators), tuple(denominators)))


# --- Barnes G ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _gauss_legendre(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _segment_integral(f, a: complex, b: complex, n: int) -> complex:
    x, w = _gauss_legendre(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return complex(half * np.sum(w * f(mid + half * x)))


def _adaptive_gl(f, a: complex, b: complex, tol: float = 1e-15, depth: int = 0) -> complex:
    coarse = _segment_integral(f, a, b, 20)
    fine = _segment_integral(f, a, b, 40)
    if abs(fine - coarse) <= tol * max(1.0, abs(fine)) or depth > 30:
        return fine
    m = 0.5 * (a + b)
    return _adaptive_gl(f, a, m, tol, depth + 1) + _adaptive_gl(f, m, b, tol, depth + 1)


def _lngamma_one_plus(s):
    return loggamma(1.0 + s)


def integral_log_gamma(z: complex) -> complex:
    """Integral of ln Gamma(s) along the straight path from 0 to z.

    The logarithmic singularity at the origin is removed by writing
    ln Gamma(s) = ln Gamma(1+s) - ln s and integrating ln s exactly.
    """
    z = complex(z)
    if z == 0:
        return 0j
    smooth = _adaptive_gl(_lngamma_one_plus, 0j, z)
    return smooth - (z * cmath.log(z) - z)


def _log_g_one_plus(z: complex) -> complex:
    # integral representation with the z ln z pieces cancelled analytically
    smooth = _adaptive_gl(_lngamma_one_plus, 0j, z) if z != 0 else 0j
    return z * _LOG_SQRT_2PI + z * complex(loggamma(1.0 + z)) + 0.5 * z * (1.0 - z) - z - smooth


def _principal(w: complex) -> complex:
    im = math.remainder(w.imag, 2.0 * math.pi)
    if im == -math.pi:
        im = math.pi
    return complex(w.real, im)


def _log_barnes_g_continuous(z: complex) -> complex:
    """log G(z) built from the integral representation near Re z = 1 plus
    the functional equation; the imaginary part is not reduced."""
    z = complex(z)
    n = math.floor(z.real - 0.5)  # bring Re(z - n) into [0.5, 1.5)
    w = z - n
    acc = _log_g_one_plus(w - 1.0)
    if n > 0:
        for k in range(n):
            acc += complex(loggamma(w + k))
    else:
        for k in range(1, -n + 1):
            acc -= complex(loggamma(w - k))
    return acc


def log_barnes_g(z: complex) -> complex:
    """Principal-branch log of the Barnes G function.

    At the zeros z = 0, -1, -2, ... the value ``complex(-inf, 0)`` is returned.
    """
    z = complex(z)
    if is_nonpositive_integer(z):
        return complex(-math.inf, 0.0)
    return _principal(_log_barnes_g_continuous(z))


def barnes_g(z: complex) -> complex:
    z = complex(z)
    if is_nonpositive_integer(z):
        return 0j
    return cmath.exp(_log_barnes_g_continuous(z))


def barnes_ratio(numerators: Sequence[complex], denominators: Sequence[complex] = ()) -> complex:
    """``prod G(numerators) / prod G(denominators)``.

    A zero in a numerator gives 0; a zero in a denominator raises PoleError.
    """
    for z in denominators:
        if is_nonpositive_integer(z):
            raise PoleError(f"Barnes G vanishes at {z} in a denominator")
    for z in numerators:
        if is_nonpositive_integer(z):
            return 0j
    acc = 0j
    for z in numerators:
        acc += _log_barnes_g_continuous(z)
    for z in denominators:
        acc -= _log_barnes_g_continuous(z)
    return cmath.exp(acc)


def barnes_reduction(z: complex, ell: int) -> complex:
    """``G(1+z, 1-z-ell | 1-z, 1+z+ell)`` evaluated from log G values."""
    z = complex(z)
    ell = int(ell)
    if ell == 0:
        return 1.0 + 0j
    if ell < 0 and abs(cmath.sin(math.pi * z)) < 1e-14:
        raise PoleError(f"reduction undefined at integer z={z} for ell={ell}")
    return barnes_ratio((1 + z, 1 - z - ell), (1 - z, 1 + z + ell))


def barnes_reduction_reference(z: complex, ell: int) -> complex:
    """Closed value ``(sin(pi z)/pi)^ell * (-1)^(ell(ell+1)/2)``."""
    ell = int(ell)
    sign = -1 if (ell * (ell + 1) // 2) % 2 else 1
    return sign * (cmath.sin(math.pi * complex(z)) / math.pi) ** ell
