"""Critical excited states and their effective free boson description.

A critical state in spin sector s is stored through its two Fermi-edge
particle-hole sets: ``right`` near the boundary N+s and ``left`` near 1.
Its class is ell = n_p(right) - n_h(right) = n_h(left) - n_p(left).
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .closedform import discrete_ff, normalization_C, thm22_ff
from .current import VertexParams
from .errors import MissingAmplitude, NotCritical
from .fock import ParticleHoleSet, ph
from .restricted import VertexChain, vertex_product
from .xxz import scaling_dimension


@dataclass(frozen=True)
class CriticalState:
    s: int
    left: ParticleHoleSet
    right: ParticleHoleSet

    def __post_init__(self):
        if self.left.charge != -self.right.charge:
            raise ValueError(
                f"edge charges disagree: right gives ell={self.right.charge}, left gives ell={-self.left.charge}"
            )

    @property
    def ell(self) -> int:
        return self.right.charge


@dataclass(frozen=True)
class OperatorSpec:
    """Operator of spin ``o`` with amplitudes F_kappa and edge exponents.

    ``nu_plus`` is nu(q) - o and ``nu_minus`` is nu(-q).
    """

    o: int
    amplitudes: Mapping[int, complex]
    nu_plus: float
    nu_minus: float

    def amplitude(self, kappa: int) -> complex:
        try:
            return complex(self.amplitudes[kappa])
        except KeyError:
            raise MissingAmplitude(kappa) from None


@dataclass(frozen=True)
class MacroParams:
    L: float
    p_F: float
    alpha_plus: float = 1.0
    alpha_minus: float = 1.0

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError("L must be positive")

    def omega_plus(self, x: float) -> complex:
        return cmath.exp(2j * math.pi * self.alpha_plus * x / self.L)

    def omega_minus(self, x: float) -> complex:
        return cmath.exp(-2j * math.pi * self.alpha_minus * x / self.L)


def ell_decompose(
    particles: Iterable[int], holes: Iterable[int], N: int, s: int, window: Optional[int] = None
) -> CriticalState:
    """Split raw particle/hole integers into the two Fermi-edge sets.

    Particles N+s+p (right, p >= 1) or 1-p (left); holes 1+N+s-h (right) or h
    (left), with every small integer at most ``window``.
    """
    top = N + s
    if window is None:
        window = max(1, top // 4)
    if 2 * window > top:
        raise ValueError("window too wide: the two hole windows overlap")
    rp, lp, rh, lh = [], [], [], []
    for p in particles:
        if top < p <= top + window:
            rp.append(p - top)
        elif 1 - window <= p <= 0:
            lp.append(1 - p)
        else:
            raise NotCritical(f"particle {p} is not near a Fermi boundary")
    for h in holes:
        if not 1 <= h <= top:
            raise ValueError(f"hole {h} outside 1..N+s")
        if h <= window:
            lh.append(h)
        elif h >= top + 1 - window:
            rh.append(top + 1 - h)
        else:
            raise NotCritical(f"hole {h} is not near a Fermi boundary")
    return CriticalState(s, ph(sorted(lp), sorted(lh)), ph(sorted(rp), sorted(rh)))


def ell_compose(state: CriticalState, N: int) -> Tuple[List[int], List[int]]:
    """Inverse of ``ell_decompose``: raw sorted particle and hole integers."""
    top = N + state.s
    parts = [top + p for p in state.right.particles] + [1 - p for p in state.left.particles]
    holes = [top + 1 - h for h in state.right.holes] + list(state.left.holes)
    return sorted(parts), sorted(holes)


def fundamental_representative(ell: int, s: int = 0) -> CriticalState:
    k = range(1, abs(ell) + 1)
    if ell >= 0:
        return CriticalState(s, ph((), k), ph(k, ()))
    return CriticalState(s, ph(k, ()), ph((), k))


def excitation_momentum(state: CriticalState, macro: MacroParams) -> float:
    ell = state.ell
    right = sum(p - 1 for p in state.right.particles) + sum(state.right.holes)
    left = sum(p - 1 for p in state.left.particles) + sum(state.left.holes)
    unit = 2 * math.pi / macro.L
    return (
        2 * ell * macro.p_F
        + unit * (macro.alpha_plus * right - macro.alpha_minus * left)
        + unit * (macro.alpha_minus * ell * (ell + 1) / 2 - macro.alpha_plus * ell * (ell - 1) / 2)
    )


def _volume_factor(op: OperatorSpec, kappa: int, L: float) -> complex:
    expo = scaling_dimension(op.nu_plus + kappa) + scaling_dimension(op.nu_minus + kappa)
    return (2 * math.pi / L) ** expo


def critical_ff(
    out: CriticalState, in_: CriticalState, op: OperatorSpec, x: float, macro: MacroParams
) -> complex:
    """Leading large-L form factor of ``op`` at ``x`` between critical states,
    the bra ``out`` in sector s and the ket ``in_`` in sector s + o."""
    if in_.s - out.s != op.o:
        return 0j
    lo, li = out.ell, in_.ell
    kappa = lo - li
    amp = op.amplitude(kappa)
    wp, wm = macro.omega_plus(x), macro.omega_minus(x)
    val = cmath.exp(2j * macro.p_F * x * kappa)
    val *= normalization_C(kappa, op.nu_plus, op.nu_minus) * amp
    val *= _volume_factor(op, kappa, macro.L)
    val *= discrete_ff(out.right, in_.right, op.nu_plus, wp)
    val *= discrete_ff(out.left, in_.left, -op.nu_minus, wm)
    val *= wp ** (li * (li - 1) // 2 - lo * (lo - 1) // 2)
    val *= wm ** (li * (li + 1) // 2 - lo * (lo + 1) // 2)
    return val


def effective_me(
    out: CriticalState, in_: CriticalState, op: OperatorSpec, x: float, macro: MacroParams
) -> complex:
    """Matrix element of the effective vertex-operator image of ``op`` between
    the left (x) right tensor-product states attached to ``out`` and ``in_``.

    On the right factor the sector labels s and s + o are absorbed in the
    shift, leaving a charge-kappa vertex with parameter nu_plus.
    """
    if in_.s - out.s != op.o:
        return 0j
    kappa = out.ell - in_.ell
    if kappa not in op.amplitudes:
        return 0j
    wp, wm = macro.omega_plus(x), macro.omega_minus(x)
    left = thm22_ff(out.left, in_.left, VertexParams(-op.nu_minus, -kappa, wm), convention="oracle")
    right = thm22_ff(out.right, in_.right, VertexParams(op.nu_plus, kappa, wp), convention="oracle")
    return (
        op.amplitude(kappa)
        * _volume_factor(op, kappa, macro.L)
        * cmath.exp(2j * macro.p_F * kappa * x)
        * left
        * right
    )


@dataclass
class RPointResult:
    harmonics: Dict[Tuple[int, ...], complex] = field(default_factory=dict)

    @property
    def total(self) -> complex:
        return sum(self.harmonics.values(), 0j)


def _ells_from_kappas(kappas: Sequence[int]) -> Tuple[int, ...]:
    ells, acc = [], 0
    for k in kappas[:-1]:
        acc -= k
        ells.append(acc)
    return tuple(ells)


def edge_factors(ops: Sequence[OperatorSpec], xs: Sequence[float], kappas: Sequence[int], macro: MacroParams):
    """Right and left vertex-product factors for one harmonic."""
    right = VertexChain(
        tuple(op.nu_plus for op in ops), tuple(macro.omega_plus(x) for x in xs), _ells_from_kappas(kappas)
    )
    left = VertexChain(
        tuple(-op.nu_minus for op in ops),
        tuple(macro.omega_minus(x) for x in xs),
        _ells_from_kappas([-k for k in kappas]),
    )
    return vertex_product(right), vertex_product(left)


def rpoint_asymptotics(
    ops: Sequence[OperatorSpec],
    xs: Sequence[float],
    macro: MacroParams,
    kappa_cutoff: int,
    degree_cutoff: Optional[int] = None,
) -> RPointResult:
    """Leading large-distance value of <O_1(x_1) ... O_r(x_r)> split by harmonic.

    Each harmonic (kappa_1, ..., kappa_r) with sum zero contributes the product
    of amplitudes, oscillating phases, volume powers and the two edge vertex
    products. ``degree_cutoff`` is accepted for interface parity; the edge
    factors are closed form, so it is unused.
    """
    if sum(op.o for op in ops) != 0:
        raise ValueError("ground-to-ground expectation needs total spin zero")
    if len(ops) != len(xs):
        raise ValueError("one position per operator")
    if any(b < a for a, b in zip(xs, xs[1:])):
        raise ValueError("positions must be ordered")
    res = RPointResult()
    rng = range(-kappa_cutoff, kappa_cutoff + 1)
    for kappas in itertools.product(rng, repeat=len(ops)):
        if sum(kappas) != 0:
            continue
        if any(k not in op.amplitudes for k, op in zip(kappas, ops)):
            continue
        val = 1.0 + 0j
        for op, k, x in zip(ops, kappas, xs):
            val *= op.amplitude(k) * cmath.exp(2j * macro.p_F * k * x) * _volume_factor(op, k, macro.L)
        right, left = edge_factors(ops, xs, kappas, macro)
        res.harmonics[tuple(kappas)] = val * right * left
    return res
