import cmath
import itertools
import math
import warnings

import numpy as np
import pytest

from vertexff.errors import ConvergenceWarning, DomainError
from vertexff.fock import VACUUM, enumerate_basis, ph
from vertexff.restricted import (
    VertexChain,
    exchange_JplusJminus,
    exchange_matrices,
    exchange_matrix_elements,
    r_kernel,
    restricted_C,
    restricted_sum_closed,
    restricted_sum_closed_literal,
    restricted_sum_truncated,
    vertex_chain_insertion,
    vertex_product,
)


def test_chain_validation():
    with pytest.raises(ValueError):
        VertexChain((0.1, 0.2), (1.0, 0.5), ())
    with pytest.raises(DomainError):
        VertexChain((0.1,), (0.0,), ())
    ch = VertexChain((0.1, 0.2, 0.3), (1.0, 0.5, 0.25), (1, -1))
    assert ch.kappas == (-1, 2, -1)
    assert sum(ch.kappas) == 0


def test_r_kernel_examples():
    assert r_kernel(VACUUM, 0.3, 0.6, 0.5) == 1
    assert abs(r_kernel(ph([1], [1]), 0.3, 0.6, 1e-12)) < 1e-11


def test_r_kernel_single_pair():
    nu, eta, z = 0.3, 0.6, 0.5
    ref = -z * nu * eta
    assert abs(r_kernel(ph([1], [1]), nu, eta, z) - ref) < 1e-14


def test_vertex_product_examples():
    assert vertex_product(VertexChain((0.4,), (0.7,), ())) == 1
    ch = VertexChain((0.0, 0.0), (1.0, 0.5), (-1,))
    assert ch.kappas == (1, -1)
    assert abs(vertex_product(ch) - 2) < 1e-15


def test_vertex_product_rescaling():
    ch = VertexChain((0.17, 0.5, 0.83), (1.0, 0.5 * cmath.exp(0.3j), 0.2j), (1, 0))
    c = 2.7 * cmath.exp(-1.1j)
    scaled = VertexChain(ch.nus, tuple(c * z for z in ch.zs), ch.ells)
    assert abs(vertex_product(ch) - vertex_product(scaled)) < 1e-13 * abs(vertex_product(ch))


def test_vertex_product_ordering():
    with pytest.raises(DomainError):
        vertex_product(VertexChain((0.1, 0.2), (0.5, 1.0), (0,)))


def test_closed_all_trivial():
    ch = VertexChain((0.0, 0.0, 0.0), (1.0, 0.5, 0.25), (0, 0))
    assert abs(restricted_sum_closed(ch) - 1) < 1e-15


def test_truncated_all_trivial():
    ch = VertexChain((0.0, 0.0, 0.0), (1.0, 0.5, 0.25), (0, 0))
    assert restricted_sum_truncated(ch, 6) == 1


def test_truncated_ratio_guard():
    with pytest.raises(DomainError):
        restricted_sum_truncated(VertexChain((0.2, 0.3), (1.0, 0.9), (0,)), 4)


def test_r2_truncated_vs_closed():
    ch = VertexChain((0.31, 0.62), (1.0, 0.5), (0,))
    assert abs(restricted_sum_truncated(ch, 20) - restricted_sum_closed(ch)) < 1e-6 * abs(restricted_sum_closed(ch))


def test_truncated_warns_when_tail_is_large():
    ch = VertexChain((0.17, 0.5, 0.83), (1.0, 0.5, 0.25), (-1, 1))
    with pytest.warns(ConvergenceWarning):
        restricted_sum_truncated(ch, 6)


def test_bridge_constant():
    for ells in itertools.product((-1, 0, 1), repeat=2):
        ch = VertexChain((0.17, 0.5, 0.83), (1.0, 0.5, 0.25), ells)
        a = restricted_sum_closed(ch)
        assert abs(vertex_product(ch) * restricted_C(ch) - a) < 1e-12 * abs(a)


def test_literal_interior_factor_disagrees_at_r3():
    ch = VertexChain((0.17, 0.5, 0.83), (1.0, 0.5, 0.25), (0, 1))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConvergenceWarning)
        lhs = restricted_sum_truncated(ch, 14)
    assert abs(lhs - restricted_sum_closed(ch)) < 1e-4 * abs(lhs)
    assert abs(lhs - restricted_sum_closed_literal(ch)) > 1e-2 * abs(lhs)
    ch2 = VertexChain((0.17, 0.5), (1.0, 0.5), (1,))
    assert restricted_sum_closed_literal(ch2) == restricted_sum_closed(ch2)


def test_insertion_matches_vertex_product_small():
    ch = VertexChain((0.17, 0.5, 0.83), (1.0, 0.3, 0.09), (0, 0))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConvergenceWarning)
        got = vertex_chain_insertion(ch, 14)
    ref = vertex_product(ch)
    assert abs(got - ref) < 1e-6 * abs(ref)


def test_insertion_charge_conservation():
    # with l_1 = 2 the first vertex must lower the charge by two
    ch = VertexChain((0.2, 0.4, 0.1), (1.0, 0.1, 0.01), (2, 0))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConvergenceWarning)
        got = vertex_chain_insertion(ch, 12)
    assert abs(got - vertex_product(ch)) < 1e-6 * abs(vertex_product(ch))


def test_exchange_scalar_examples():
    assert exchange_JplusJminus(0.0, 1.0, 0.4, 0.5) == 1
    assert exchange_JplusJminus(0.3, 1.0, 0.0, 0.5) == 1
    assert abs(exchange_JplusJminus(0.3, 1.0, 0.4, 1e-12) - 1) < 1e-12
    with pytest.raises(DomainError):
        exchange_JplusJminus(0.3, 1.0, 0.4, 2.0)


def test_exchange_operator_identity():
    nu, om, mu, z = 0.37, 1.0, 0.61, 0.02 * cmath.exp(0.4j)
    scalar = exchange_JplusJminus(nu, om, mu, z)
    states = [J for c in (-1, 0, 1) for J in enumerate_basis(c, 5)]
    lhs, rhs = exchange_matrices(states, nu, om, mu, z, 12)
    assert np.max(np.abs(lhs - scalar * rhs)) < 1e-10


def test_exchange_pair_helper_agrees():
    nu, om, mu, z = 0.37, 1.0, 0.61, 0.1
    lhs, rhs = exchange_matrix_elements(ph([1], [1]), VACUUM, nu, om, mu, z, 12)
    assert abs(lhs - exchange_JplusJminus(nu, om, mu, z) * rhs) < 1e-10
