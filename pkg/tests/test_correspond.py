import cmath
import math

import pytest

from vertexff.correspond import (
    CriticalState,
    MacroParams,
    OperatorSpec,
    critical_ff,
    effective_me,
    ell_compose,
    ell_decompose,
    excitation_momentum,
    fundamental_representative,
    rpoint_asymptotics,
)
from vertexff.errors import MissingAmplitude, NotCritical
from vertexff.fock import ph

N, S = 40, 0
MACRO = MacroParams(L=200.0, p_F=0.9)


def _op(o=0, npl=0.3, nmi=-0.2, K=2):
    return OperatorSpec(o, {k: complex(0.5 + 0.1 * k, 0.05 * k) for k in range(-K, K + 1)}, npl, nmi)


def test_ground_state_decomposes_to_empty_sets():
    st = ell_decompose([], [], N, S)
    assert st.ell == 0 and st.left == ph() and st.right == ph()


def test_umklapp_particle_hole_has_ell_one():
    st = ell_decompose([N + S + 1], [1], N, S)
    assert st.ell == 1
    assert st.right == ph([1], []) and st.left == ph([], [1])


def test_fundamental_representative():
    st = fundamental_representative(2)
    assert st.right == ph([1, 2], []) and st.left == ph([], [1, 2])
    assert fundamental_representative(-1).ell == -1
    assert fundamental_representative(0).left == ph()


def test_compose_round_trip():
    raw = ([N + 1, N + 3, 0], [1, N, N - 1])
    st = ell_decompose(*raw, N, S)
    assert st.ell == 0
    assert ell_compose(st, N) == (sorted(raw[0]), sorted(raw[1]))
    st = ell_decompose([N + 2, N + 1], [3, 1], N, S)
    assert ell_compose(st, N) == ([N + 1, N + 2], [1, 3])


def test_not_critical():
    with pytest.raises(NotCritical):
        ell_decompose([N + 30], [1], N, S)
    with pytest.raises(NotCritical):
        ell_decompose([N + 1], [N // 2], N, S)


def test_mismatched_edges_rejected():
    with pytest.raises(ValueError):
        CriticalState(0, ph([], []), ph([1], []))


def test_excitation_momentum():
    unit = 2 * math.pi / MACRO.L
    assert excitation_momentum(fundamental_representative(0), MACRO) == 0
    # a single right particle-hole pair at the edge
    assert abs(excitation_momentum(CriticalState(0, ph(), ph([2], [1])), MACRO) - 2 * unit) < 1e-14
    assert abs(excitation_momentum(CriticalState(0, ph([1], [2]), ph()), MACRO) + 2 * unit) < 1e-14
    for ell in (-2, 1, 3):
        assert abs(excitation_momentum(fundamental_representative(ell), MACRO) - 2 * ell * MACRO.p_F) < 1e-13


def test_spin_selection_rule():
    op = _op(o=1)
    g = fundamental_representative(0)
    assert critical_ff(g, g, op, 1.0, MACRO) == 0
    assert effective_me(g, g, op, 1.0, MACRO) == 0
    assert critical_ff(g, CriticalState(1, ph(), ph()), op, 1.0, MACRO) != 0


def test_missing_amplitude():
    op = OperatorSpec(0, {0: 1.0}, 0.3, -0.2)
    with pytest.raises(MissingAmplitude):
        critical_ff(fundamental_representative(1), fundamental_representative(0), op, 0.0, MACRO)
    assert effective_me(fundamental_representative(1), fundamental_representative(0), op, 0.0, MACRO) == 0


def test_ground_to_ground():
    op = _op(npl=0.3, nmi=-0.2)
    g = fundamental_representative(0)
    expected = op.amplitude(0) * (2 * math.pi / MACRO.L) ** (0.3**2 / 2 + 0.2**2 / 2)
    assert abs(critical_ff(g, g, op, 2.5, MACRO) - expected) < 1e-14


def test_critical_matches_effective_up_to_sign():
    op = _op(npl=0.23, nmi=0.41, K=4)
    states = [
        CriticalState(0, ph(), ph()),
        CriticalState(0, ph([1], [2]), ph([3], [1])),
        fundamental_representative(1),
        CriticalState(0, ph([], [1, 3]), ph([1, 2], [])),
        fundamental_representative(-1),
    ]
    for out in states:
        for in_ in states:
            kappa = out.ell - in_.ell
            a = critical_ff(out, in_, op, 3.1, MACRO)
            b = effective_me(out, in_, op, 3.1, MACRO)
            assert abs(a - (-1) ** kappa * b) <= 1e-10 * max(abs(a), 1e-300)


def test_rpoint_zero_amplitudes():
    ops = [OperatorSpec(0, {0: 0.0, 1: 0.0, -1: 0.0}, 0.2, -0.1)] * 2
    assert rpoint_asymptotics(ops, [0.0, 10.0], MACRO, 1).total == 0


def test_rpoint_harmonic_phase():
    amps = {-1: 1.0, 0: 0.0, 1: 1.0}
    ops = [OperatorSpec(0, amps, 0.2, -0.1), OperatorSpec(0, amps, 0.2, -0.1)]
    macro = MacroParams(L=1e6, p_F=0.9)
    h1 = rpoint_asymptotics(ops, [0.0, 10.0], macro, 1).harmonics
    h2 = rpoint_asymptotics(ops, [0.0, 10.0 + math.pi / macro.p_F / 4], macro, 1).harmonics
    # the power-law factor is real, so the shift only rotates by the oscillating phase
    ratio = h2[(1, -1)] / h1[(1, -1)]
    assert abs(cmath.phase(ratio) + math.pi / 2) < 1e-5


def test_rpoint_total_spin():
    ops = [_op(o=1), _op(o=0)]
    with pytest.raises(ValueError):
        rpoint_asymptotics(ops, [0.0, 1.0], MACRO, 1)
