"""Current operators J_k = sum_j psi_j psi*_{j+k} and their exponentials.

    Jcal_+(nu, omega) = -nu sum_{k>=1} omega^{-k}/k J_k
    Jcal_-(nu, omega) = +nu sum_{k>=1} omega^{k}/k J_{-k}

exp(Jcal_+) is applied to kets and exp(Jcal_-) to bras. In both cases every
term lowers the degree, so the exponential series terminates exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from .fock import (
    ChargedPHSet,
    FockVector,
    ParticleHoleSet,
    charged_vector,
    inner_product,
    psi_on_basis,
    psi_star_on_basis,
    shift_apply_oracle,
)


@dataclass(frozen=True)
class CurrentParams:
    nu: complex
    omega: complex

    def __post_init__(self):
        if self.omega == 0:
            raise ValueError("omega must be nonzero")


@dataclass(frozen=True)
class VertexParams:
    """Vertex operator V(nu, kappa | omega) = e^{Jcal_-(nu+kappa, omega)}
    e^{Jcal_+(nu+kappa, omega)} e^{kappa P}."""

    nu: complex
    kappa: int
    omega: complex

    def __post_init__(self):
        if self.omega == 0:
            raise ValueError("omega must be nonzero")


def _J_on_basis(k: int, J: ParticleHoleSet, out: Dict[ParticleHoleSet, complex], amp: complex):
    # Only j with psi*_{j+k} non-annihilating and psi_j refilling contribute;
    # the window below covers all of them.
    max_h = max(J.holes, default=0)
    max_mode = max(J.particles, default=0) - 1
    lo = -max_h - 1
    hi = max(max_mode, -1) + abs(k) + 1
    for j in range(lo - abs(k), hi + 1):
        r1 = psi_star_on_basis(j + k, J)
        if r1 is None:
            continue
        r2 = psi_on_basis(j, r1[1])
        if r2 is None:
            continue
        K = r2[1]
        out[K] = out.get(K, 0j) + amp * r1[0] * r2[0]


def _apply_J_terms(k: int, terms, scale: complex = 1.0) -> Dict[ParticleHoleSet, complex]:
    out: Dict[ParticleHoleSet, complex] = {}
    for J, a in terms:
        _J_on_basis(k, J, out, scale * a)
    return out


def apply_J(k: int, v: FockVector) -> FockVector:
    """Exact action of J_k (k != 0) on a vector."""
    if k == 0:
        raise ValueError("k must be nonzero")
    return FockVector(v.sector_charge, _apply_J_terms(k, v.items()))


def _exp_lowering(coeffs, v: FockVector) -> FockVector:
    """exp(sum_k coeffs(k) J_k) v for a family of degree-lowering J_k (k >= 1)."""
    total: Dict[ParticleHoleSet, complex] = dict(v.terms)
    term = v
    n = 0
    while not term.is_zero():
        n += 1
        dmax = term.max_degree()
        acc: Dict[ParticleHoleSet, complex] = {}
        items = term.items()
        for k in range(1, dmax + 1):
            c = coeffs(k)
            if c == 0:
                continue
            for K, a in _apply_J_terms(k, items, c / n).items():
                acc[K] = acc.get(K, 0j) + a
        term = FockVector(v.sector_charge, acc)
        for K, a in term.items():
            total[K] = total.get(K, 0j) + a
    return FockVector(v.sector_charge, total)


def apply_exp_Jplus(params: CurrentParams, v: FockVector) -> FockVector:
    """e^{Jcal_+(nu, omega)} v, exactly."""
    nu, om = complex(params.nu), complex(params.omega)
    if nu == 0:
        return v
    return _exp_lowering(lambda k: -nu * om ** (-k) / k, v)


def apply_exp_Jminus_to_bra(params: CurrentParams, bra: FockVector) -> FockVector:
    """<bra| e^{Jcal_-(nu, omega)}, returned as bra coefficients.

    With the real orthonormal basis, <J| J_{-k} has the coefficients of
    J_k |J>, so the bra action is again a degree-lowering exponential.
    """
    nu, om = complex(params.nu), complex(params.omega)
    if nu == 0:
        return bra
    return _exp_lowering(lambda k: nu * om ** k / k, bra)


def bra_times_J(k: int, bra: FockVector) -> FockVector:
    """<bra| J_k as bra coefficients (transpose of J_{-k})."""
    return apply_J(-k, bra)


def apply_exp_raising_truncated(coeffs, v: FockVector, max_degree: int) -> FockVector:
    """exp(sum_k coeffs(k) J_{-k}) v keeping components of degree <= max_degree.

    Every J_{-k} raises the degree, so the retained components are exact.
    """
    total = dict(v.terms)
    term = v
    n = 0
    while not term.is_zero():
        n += 1
        acc: Dict[ParticleHoleSet, complex] = {}
        items = term.items()
        dmin = min(K.degree for K, _ in items)
        for k in range(1, max_degree - dmin + 1):
            c = coeffs(k)
            if c == 0:
                continue
            for K, a in _apply_J_terms(-k, items, c / n).items():
                if K.degree <= max_degree:
                    acc[K] = acc.get(K, 0j) + a
        term = FockVector(v.sector_charge, acc)
        for K, a in term.items():
            total[K] = total.get(K, 0j) + a
    return FockVector(v.sector_charge, total)


def me_bruteforce(bra: ParticleHoleSet, ket: ParticleHoleSet, params: CurrentParams) -> complex:
    """<bra| e^{Jcal_-} e^{Jcal_+} |ket> from the exact finite expansions."""
    if bra.charge != ket.charge:
        return 0j
    left = apply_exp_Jminus_to_bra(params, FockVector.basis(bra))
    right = apply_exp_Jplus(params, FockVector.basis(ket))
    return inner_product(left, right)


def _as_charged(state) -> ChargedPHSet:
    return state if isinstance(state, ChargedPHSet) else ChargedPHSet(0, state)


def me_vertex_bruteforce(bra, ket, vp: VertexParams) -> complex:
    """<bra| V(nu, kappa | omega) |ket> using the Young-basis shift."""
    r = int(vp.kappa)
    sb, Jb = charged_vector(_as_charged(bra))
    sk, Jk = shift_apply_oracle(r, _as_charged(ket))
    if Jb.charge != Jk.ph.charge:
        return 0j
    params = CurrentParams(complex(vp.nu) + r, vp.omega)
    return sb * sk * me_bruteforce(Jb, Jk.ph, params)


class BasisCache:
    """Caches e^{Jcal_+}|K> and <J|e^{Jcal_-} for repeated matrix elements."""

    def __init__(self, params: CurrentParams):
        self.params = params
        self._kets: Dict[ParticleHoleSet, FockVector] = {}
        self._bras: Dict[ParticleHoleSet, FockVector] = {}

    def ket(self, K: ParticleHoleSet) -> FockVector:
        if K not in self._kets:
            self._kets[K] = apply_exp_Jplus(self.params, FockVector.basis(K))
        return self._kets[K]

    def bra(self, J: ParticleHoleSet) -> FockVector:
        if J not in self._bras:
            self._bras[J] = apply_exp_Jminus_to_bra(self.params, FockVector.basis(J))
        return self._bras[J]

    def me(self, J: ParticleHoleSet, K: ParticleHoleSet) -> complex:
        if J.charge != K.charge:
            return 0j
        return inner_product(self.bra(J), self.ket(K))
