import cmath
import itertools
import math

import mpmath as mp
import pytest

from vertexff.errors import PoleError
from vertexff.specialfn import (
    RatioSpec,
    barnes_g,
    barnes_ratio,
    barnes_reduction,
    barnes_reduction_reference,
    gamma_prod,
    gamma_ratio,
    integral_log_gamma,
    log_barnes_g,
    log_gamma,
)

GRID = [complex(a, b) for a in (-1.7, -0.4, 0.17, 0.5, 0.83, 1.5, 2.6, 4.1) for b in (0.0, 0.3, -1.1, 2.2)]


@pytest.mark.parametrize("z", GRID)
def test_barnes_g_against_mpmath(z):
    ref = complex(mp.barnesg(mp.mpc(z.real, z.imag)))
    assert abs(barnes_g(z) - ref) <= 1e-11 * max(1.0, abs(ref))


def test_log_barnes_g_anchors():
    assert abs(log_barnes_g(1)) < 1e-14
    assert abs(log_barnes_g(2)) < 1e-14
    assert abs(log_barnes_g(3)) < 1e-14
    assert abs(barnes_g(4) - 2) < 1e-13


def test_log_barnes_g_at_three_halves_matches_mpmath():
    assert abs(log_barnes_g(1.5) - complex(mp.log(mp.barnesg(1.5)))) < 1e-10


def test_integral_log_gamma_matches_mpmath_quadrature():
    for z in (0.4, 1.5, 2.3 + 0.7j):
        ref = complex(mp.quad(lambda s: mp.loggamma(1 + s), [0, mp.mpc(z.real, z.imag)]))
        # the integral of log Gamma(s) is that of log Gamma(1+s) minus that of log s
        logs = z * cmath.log(z) - z
        assert abs(integral_log_gamma(z) - (ref - logs)) < 1e-10


def test_barnes_functional_equation():
    for z in GRID:
        lhs = barnes_g(z + 1)
        rhs = cmath.exp(log_gamma(z)) * barnes_g(z)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_barnes_reduction_examples():
    s = math.sin(0.3 * math.pi) / math.pi
    assert abs(barnes_reduction(0.3, 1) - (-s)) < 1e-12
    assert abs(barnes_reduction(0.3, 1) + 0.2575181) < 1e-7
    assert abs(barnes_reduction(0.3, 0) - 1) < 1e-14
    assert abs(barnes_reduction(0.3, 2) + s * s) < 1e-12
    assert abs(barnes_reduction(0.3, 2) + 0.0663156) < 1e-7


def test_barnes_reduction_grid():
    for k, ell in itertools.product(range(1, 10), range(-3, 4)):
        z = k / 10
        assert abs(barnes_reduction(z, ell) - barnes_reduction_reference(z, ell)) < 1e-9


def test_barnes_reduction_pole():
    with pytest.raises(PoleError):
        barnes_reduction(2.0, -1)


def test_barnes_ratio_against_mpmath():
    num, den = (1.3 + 0.2j, 0.6), (2.1, 0.45 - 0.3j)
    ref = complex(mp.barnesg(mp.mpc(1.3, 0.2)) * mp.barnesg(0.6) / (mp.barnesg(2.1) * mp.barnesg(mp.mpc(0.45, -0.3))))
    assert abs(barnes_ratio(num, den) - ref) < 1e-11 * abs(ref)


def test_gamma_ratio_permutation_invariant():
    num, den = (0.3, 1.7 + 0.2j, 4.5), (2.2, -0.5 + 0.1j)
    ref = gamma_ratio(RatioSpec(num, den))
    for pn in itertools.permutations(num):
        for pd in itertools.permutations(den):
            assert abs(gamma_ratio(RatioSpec(pn, pd)) - ref) <= 1e-14 * abs(ref)


def test_gamma_prod_against_mpmath():
    val = gamma_prod((0.17, 3.5), (1.83, 2.25))
    ref = mp.gamma(0.17) * mp.gamma(3.5) / (mp.gamma(1.83) * mp.gamma(2.25))
    assert abs(val - complex(ref)) < 1e-14 * abs(complex(ref))


def test_gamma_poles():
    with pytest.raises(PoleError):
        log_gamma(-2)
    with pytest.raises(PoleError):
        gamma_prod((0.0,))
