import cmath
import itertools
import math

import pytest

from vertexff.errors import OrderingError, PoleError
from vertexff.integrals import (
    SPEC_BOTH_INSIDE,
    SPEC_BOTH_OUTSIDE,
    SPEC_OUTSIDE_INSIDE,
    ContourSpec,
    I1_closed,
    I1_quadrature,
    I1_tilde_quadrature,
    I2_closed,
    I2_quadrature,
    I2_tilde_closed,
    I2_tilde_quadrature,
    tilde_relations,
)

OM = 0.9 * cmath.exp(1j * math.pi / 5)
NUS = (0.17, 0.5, 0.83)


def test_I1_unit_at_h_t_one():
    for nu in NUS + (0.3 - 0.2j,):
        for om in (OM, 2.0, 0.4j):
            assert abs(I1_closed(1, 1, nu, om) - 1) < 1e-14


def test_I1_example():
    nu, om = 0.3, OM
    ref = math.sin(0.3 * math.pi) * om / (math.pi * -0.7) * math.gamma(1.7) * math.gamma(1.3)
    assert abs(I1_closed(2, 1, nu, om) - ref) < 1e-14


def test_I2_example():
    assert abs(I2_closed(1, 1, 0.3, 2.0) - 0.15) < 1e-15


def test_I1_pole():
    with pytest.raises(PoleError):
        I1_closed(2, 1, 1.0, OM)


@pytest.mark.parametrize("nu", NUS)
def test_closed_vs_quadrature(nu):
    for a, b in itertools.product(range(1, 4), range(1, 4)):
        assert abs(I1_closed(a, b, nu, OM) - I1_quadrature(a, b, nu, OM)) < 1e-8
        assert abs(I2_closed(a, b, nu, OM) - I2_quadrature(a, b, nu, OM)) < 1e-8
        assert abs(tilde_relations(1, (a, b), nu, OM) - I1_tilde_quadrature(a, b, nu, OM)) < 1e-8
        assert abs(I2_tilde_closed(a, b, nu, OM) - I2_tilde_quadrature(a, b, nu, OM)) < 1e-8


def test_tilde_examples():
    for nu in NUS:
        assert abs(I2_tilde_closed(1, 1, nu, OM) + nu * OM) < 1e-14
        assert abs(tilde_relations(1, (1, 1), nu, OM) - 1) < 1e-14
    with pytest.raises(ValueError):
        tilde_relations(3, (1, 1), 0.3, OM)


def test_quadrature_converged_under_doubling():
    for spec, fn in ((SPEC_OUTSIDE_INSIDE, I1_quadrature), (SPEC_BOTH_INSIDE, I2_quadrature),
                     (SPEC_BOTH_OUTSIDE, I2_tilde_quadrature)):
        a = fn(2, 3, 0.5, OM, spec)
        b = fn(2, 3, 0.5, OM, spec.doubled())
        assert abs(a - b) < 1e-10


def test_contour_ordering_errors():
    with pytest.raises(OrderingError):
        ContourSpec(0.5, 1.0)
    with pytest.raises(ValueError):
        ContourSpec(2.0, 0.5, 32)
    with pytest.raises(OrderingError):
        I1_quadrature(1, 1, 0.3, OM, SPEC_BOTH_INSIDE)
    with pytest.raises(OrderingError):
        I2_quadrature(1, 1, 0.3, OM, SPEC_OUTSIDE_INSIDE)
    with pytest.raises(OrderingError):
        I2_tilde_quadrature(1, 1, 0.3, OM, SPEC_OUTSIDE_INSIDE)
