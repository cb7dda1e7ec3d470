import cmath
import itertools
import math

import numpy as np
import pytest

from conftest import NUS, OMEGAS
from vertexff.closedform import (
    cauchy_inverse,
    dee,
    discrete_ff,
    normalization_C,
    normalization_C_extra,
    normalization_C_original,
    prop21_ff,
    thm22_ff,
    thm22_sign,
    tilde_I2_matrix,
    varpi,
    wick_route_vacuum_ff,
)
from vertexff.current import BasisCache, CurrentParams, VertexParams, me_bruteforce, me_vertex_bruteforce
from vertexff.errors import PoleError
from vertexff.fock import VACUUM, enumerate_basis, ph
from vertexff.specialfn import gamma_prod


def test_varpi_examples():
    assert varpi(ph([1], [1]), VACUUM, 0.3) == 1
    assert abs(varpi(ph([1], [1]), ph([1], [1]), 0.3) - (-0.7 / 0.3) * (1.3 / 0.3)) < 1e-13


def test_varpi_pole():
    with pytest.raises(PoleError):
        varpi(ph([1], [1]), ph([1], [1]), 0.0)


def test_dee_examples():
    om = 0.8 * cmath.exp(0.3j)
    assert dee(VACUUM, 0.3, om) == 1
    for nu in NUS:
        assert abs(dee(ph([1], [1]), nu, om) - nu * om) < 1e-14


def test_dee_direct_product():
    nu, om = 0.37, 0.9 * cmath.exp(0.2j)
    p, h = (1, 3), (2, 4, 5)
    s = math.sin(math.pi * nu) / math.pi
    ref = s ** len(h)
    for pa in p:
        ref *= om ** (pa - 1) * math.gamma(pa + nu) / math.gamma(pa)
    for hb in h:
        ref *= om ** hb * math.gamma(hb - nu) / math.gamma(hb)
    ref *= (p[0] - p[1]) * (h[0] - h[1]) * (h[0] - h[2]) * (h[1] - h[2])
    ref /= np.prod([pa + hb - 1 for pa in p for hb in h])
    assert abs(dee(ph(p, h), nu, om) - ref) < 1e-13 * abs(ref)


def test_discrete_ff_examples():
    for nu, om in itertools.product(NUS, OMEGAS):
        assert discrete_ff(VACUUM, VACUUM, nu, om) == 1
        assert abs(discrete_ff(ph([1], [1]), VACUUM, nu, om) + nu * om) < 1e-14
        assert abs(discrete_ff(VACUUM, ph([1], [1]), nu, om) - nu / om) < 1e-14


def test_prop21_charge_selection():
    assert prop21_ff(ph([1], []), VACUUM, 0.3, OMEGAS[0]) == 0
    assert prop21_ff(VACUUM, VACUUM, 0.3, OMEGAS[0]) == 1


def test_prop21_matches_oracle_small_grid():
    for nu, om in itertools.product(NUS, OMEGAS):
        cache = BasisCache(CurrentParams(nu, om))
        for c in (-1, 0, 1):
            basis = enumerate_basis(c, 5)
            for J, K in itertools.product(basis, basis):
                ref = cache.me(J, K)
                assert abs(prop21_ff(J, K, nu, om) - ref) <= 1e-10 * max(1, abs(ref))


def test_discrete_ff_duality():
    nu, om = 0.31, OMEGAS[1]
    basis = enumerate_basis(0, 6) + enumerate_basis(1, 5)
    for J1, J2 in itertools.product(basis, basis):
        if J1.charge != J2.charge:
            continue
        a = discrete_ff(J1, J2, nu, om)
        b = discrete_ff(J1.swapped(), J2.swapped(), -nu, om) * (-1) ** (J2.n_h + J1.n_h)
        assert abs(a - b) <= 1e-12 * max(1, abs(a))


def test_thm22_r0_is_prop21():
    vp = VertexParams(0.5, 0, OMEGAS[0])
    basis = enumerate_basis(0, 5)
    for J, K in itertools.product(basis, basis):
        assert thm22_ff(J, K, vp) == prop21_ff(J, K, 0.5, OMEGAS[0])


def test_thm22_charge_selection():
    assert thm22_ff(VACUUM, VACUUM, VertexParams(0.3, 1, OMEGAS[0])) == 0


def test_thm22_r1_example_against_oracle():
    for nu, om in itertools.product(NUS, OMEGAS):
        vp = VertexParams(nu, 1, om)
        lit = thm22_ff(ph([1], []), VACUUM, vp)
        ref = me_vertex_bruteforce(ph([1], []), VACUUM, vp)
        assert thm22_sign(1) == 1
        assert abs(lit * thm22_sign(1) - ref) < 1e-12 * max(1, abs(ref))


def test_thm22_unknown_convention():
    with pytest.raises(ValueError):
        thm22_ff(VACUUM, VACUUM, VertexParams(0.3, 0, 1.0), convention="other")


def test_normalization_C_examples():
    assert abs(normalization_C(0, 0.2, 0.3) - 1) < 1e-14
    with pytest.raises(PoleError):
        normalization_C(1, 0.0, 0.0)


def test_normalization_C_relation_to_original():
    # C_original = C_extra * C, with C_extra on the original side
    npl, nmi = 0.2, 0.3
    for lo, li in itertools.product(range(-2, 3), range(-2, 3)):
        orig = normalization_C_original(lo, li, npl, nmi)
        rhs = normalization_C_extra(lo, npl, nmi) * normalization_C(lo - li, npl, nmi)
        assert abs(orig - rhs) < 1e-12 * abs(orig)


def test_wick_route_examples():
    for nu, om in itertools.product(NUS, OMEGAS):
        assert wick_route_vacuum_ff(VACUUM, nu, om) == 1
        assert abs(wick_route_vacuum_ff(ph([1], [1]), nu, om) + nu * om) < 1e-14
        J = ph([1, 2], [1, 2])
        ref = me_bruteforce(J, VACUUM, CurrentParams(nu, om))
        assert abs(wick_route_vacuum_ff(J, nu, om) - ref) < 1e-10 * max(1, abs(ref))
        assert abs(prop21_ff(J, VACUUM, nu, om) - ref) < 1e-10 * max(1, abs(ref))


def test_wick_route_needs_balanced_set():
    with pytest.raises(ValueError):
        wick_route_vacuum_ff(ph([1], []), 0.3, 1.0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cauchy_inverse_small(n):
    P, H = list(range(1, n + 1)), list(range(2, n + 2))
    for nu, om in itertools.product(NUS, OMEGAS):
        N = tilde_I2_matrix(P, H, nu, om)
        Ni = cauchy_inverse(P, H, nu, om)
        assert np.max(np.abs(N @ Ni - np.eye(n))) <= 1e-10
        assert np.max(np.abs(Ni @ N - np.eye(n))) <= 1e-10


def test_cauchy_inverse_errors():
    with pytest.raises(PoleError):
        cauchy_inverse([1], [1], 1.0, 1.0)
    with pytest.raises(ValueError):
        cauchy_inverse([1, 1], [1, 2], 0.3, 1.0)
