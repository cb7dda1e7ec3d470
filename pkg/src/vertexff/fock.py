"""Charged free-fermion Fock space.

Basis kets are labelled by particle-hole sets ``J = (p; h)``:

    |J> = psi*_{-h_1} ... psi*_{-h_nh} psi_{p_np - 1} ... psi_{p_1 - 1} |0>

with psi_n |0> = 0 for n < 0 and psi*_n |0> = 0 for n >= 0. The bra <J| is
the mirrored word, so that <J|K> = delta_{JK}. Charge is n_p - n_h and the
degree sum(p) + sum(h) is used as the truncation functional.

Signs are tracked by keeping the creation word of every basis ket in a
canonical order (holes by increasing h, then particles by decreasing p) and
counting the transpositions needed to insert or remove a mode.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import SectorMismatch


@dataclass(frozen=True, order=True)
class ParticleHoleSet:
    particles: Tuple[int, ...] = ()
    holes: Tuple[int, ...] = ()

    def __post_init__(self):
        p = tuple(int(x) for x in self.particles)
        h = tuple(int(x) for x in self.holes)
        for seq in (p, h):
            if any(x < 1 for x in seq) or any(b <= a for a, b in zip(seq, seq[1:])):
                raise ValueError(f"entries must be strictly increasing integers >= 1: {seq}")
        object.__setattr__(self, "particles", p)
        object.__setattr__(self, "holes", h)

    @property
    def n_p(self) -> int:
        return len(self.particles)

    @property
    def n_h(self) -> int:
        return len(self.holes)

    @property
    def charge(self) -> int:
        return len(self.particles) - len(self.holes)

    @property
    def degree(self) -> int:
        return sum(self.particles) + sum(self.holes)

    def swapped(self) -> "ParticleHoleSet":
        return ParticleHoleSet(self.holes, self.particles)

    def sort_key(self):
        return (self.degree, self.particles, self.holes)

    def __repr__(self):
        return f"PH({list(self.particles)};{list(self.holes)})"


def ph(particles: Iterable[int] = (), holes: Iterable[int] = ()) -> ParticleHoleSet:
    return ParticleHoleSet(tuple(particles), tuple(holes))


VACUUM = ParticleHoleSet()


@dataclass(frozen=True)
class ChargedPHSet:
    """The mixed-basis ket |J; ell> built on the charged vacuum |ell>."""

    base_charge: int
    ph: ParticleHoleSet

    @property
    def charge(self) -> int:
        return self.base_charge + self.ph.charge


@dataclass(frozen=True)
class YoungCharge:
    """Young diagram in Frobenius coordinates together with a charge."""

    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]
    charge: int

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have equal length")
        ParticleHoleSet(self.alpha, self.beta)  # validates ordering
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))


# --- vectors ----------------------------------------------------------------

class FockVector:
    """Finite linear combination of basis kets (or bras) of one charge sector."""

    __slots__ = ("sector_charge", "_terms")

    def __init__(self, sector_charge: int, terms: Optional[Dict[ParticleHoleSet, complex]] = None):
        self.sector_charge = int(sector_charge)
        clean = {}
        for key, amp in (terms or {}).items():
            if amp != 0:
                if key.charge != self.sector_charge:
                    raise SectorMismatch(f"{key} does not belong to sector {sector_charge}")
                clean[key] = complex(amp)
        self._terms = clean

    @classmethod
    def basis(cls, J: ParticleHoleSet, amp: complex = 1.0) -> "FockVector":
        return cls(J.charge, {J: amp})

    @property
    def terms(self) -> Dict[ParticleHoleSet, complex]:
        return dict(self._terms)

    def items(self) -> List[Tuple[ParticleHoleSet, complex]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __getitem__(self, key: ParticleHoleSet) -> complex:
        return self._terms.get(key, 0j)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[ParticleHoleSet]:
        return iter(sorted(self._terms, key=ParticleHoleSet.sort_key))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "FockVector") -> "FockVector":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.sector_charge != self.sector_charge:
            raise SectorMismatch("cannot add vectors from different sectors")
        out = dict(self._terms)
        for k, a in other.items():
            out[k] = out.get(k, 0j) + a
        return FockVector(self.sector_charge, out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1.0)

    def scale(self, c: complex) -> "FockVector":
        return FockVector(self.sector_charge, {k: c * a for k, a in self._terms.items()})

    def max_abs(self) -> float:
        return max((abs(a) for a in self._terms.values()), default=0.0)

    def max_degree(self) -> int:
        return max((k.degree for k in self._terms), default=0)

    def __repr__(self):
        body = " + ".join(f"({a:.6g}){k!r}" for k, a in self.items())
        return f"FockVector[{self.sector_charge}]({body or '0'})"


def vacuum() -> FockVector:
    return FockVector.basis(VACUUM)


def inner_product(bra: FockVector, ket: FockVector) -> complex:
    """Bilinear pairing <bra|ket> with an orthonormal basis, no conjugation."""
    if bra.sector_charge != ket.sector_charge:
        if bra.is_zero() or ket.is_zero():
            return 0j
        raise SectorMismatch(f"bra sector {bra.sector_charge} != ket sector {ket.sector_charge}")
    small, large = (bra, ket) if len(bra) <= len(ket) else (ket, bra)
    acc = 0j
    for k, a in small.items():
        acc += a * large[k]
    return acc


# --- basis-level fermion action ----------------------------------------------

def _add_particle(J: ParticleHoleSet, p: int):
    if p in J.particles:
        return None
    pos = J.n_h + sum(1 for x in J.particles if x > p)
    parts = tuple(sorted(J.particles + (p,)))
    return (-1 if pos % 2 else 1), ParticleHoleSet(parts, J.holes)


def _remove_particle(J: ParticleHoleSet, p: int):
    if p not in J.particles:
        return None
    pos = J.n_h + sum(1 for x in J.particles if x > p)
    parts = tuple(x for x in J.particles if x != p)
    return (-1 if pos % 2 else 1), ParticleHoleSet(parts, J.holes)


def _add_hole(J: ParticleHoleSet, h: int):
    if h in J.holes:
        return None
    pos = sum(1 for x in J.holes if x < h)
    return (-1 if pos % 2 else 1), ParticleHoleSet(J.particles, tuple(sorted(J.holes + (h,))))


def _remove_hole(J: ParticleHoleSet, h: int):
    if h not in J.holes:
        return None
    pos = sum(1 for x in J.holes if x < h)
    return (-1 if pos % 2 else 1), ParticleHoleSet(J.particles, tuple(x for x in J.holes if x != h))


def psi_on_basis(j: int, J: ParticleHoleSet):
    """psi_j |J> as ``(sign, J')`` or ``None`` when annihilated."""
    return _add_particle(J, j + 1) if j >= 0 else _remove_hole(J, -j)


def psi_star_on_basis(j: int, J: ParticleHoleSet):
    """psi*_j |J> as ``(sign, J')`` or ``None`` when annihilated."""
    return _remove_particle(J, j + 1) if j >= 0 else _add_hole(J, -j)


def _apply_basis_op(op, j: int, v: FockVector, shift: int) -> FockVector:
    out: Dict[ParticleHoleSet, complex] = {}
    for J, a in v.items():
        res = op(j, J)
        if res is not None:
            s, K = res
            out[K] = out.get(K, 0j) + s * a
    return FockVector(v.sector_charge + shift, out)


def apply_psi(j: int, v: FockVector) -> FockVector:
    """psi_j v. The charge n_p - n_h of the output is one unit higher."""
    return _apply_basis_op(psi_on_basis, j, v, +1)


def apply_psi_star(j: int, v: FockVector) -> FockVector:
    """psi*_j v. The charge n_p - n_h of the output is one unit lower."""
    return _apply_basis_op(psi_star_on_basis, j, v, -1)


def apply_word(word: Sequence[Tuple[str, int]], v: FockVector) -> FockVector:
    """Apply an operator word written left to right, rightmost acting first.

    Letters are ``("psi", j)`` or ``("psi*", j)``.
    """
    for kind, j in reversed(list(word)):
        v = apply_psi(j, v) if kind == "psi" else apply_psi_star(j, v)
    return v


def bra_times_psi(j: int, bra: FockVector) -> FockVector:
    """Right action <bra| psi_j, returned as bra coefficients.

    The basis is real and orthonormal with psi_j^T = psi*_j, so the bra
    coefficients of <J| psi_j are those of psi*_j |J>.
    """
    return apply_psi_star(j, bra)


def bra_times_psi_star(j: int, bra: FockVector) -> FockVector:
    return apply_psi(j, bra)


# --- enumeration ------------------------------------------------------------

def _distinct_part_sets(max_sum: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []

    def rec(start: int, remaining: int, acc: Tuple[int, ...]):
        out.append(acc)
        for x in range(start, remaining + 1):
            rec(x + 1, remaining - x, acc + (x,))

    rec(1, max_sum, ())
    return out


def enumerate_basis(charge: int, max_degree: int) -> List[ParticleHoleSet]:
    """All particle-hole sets with n_p - n_h = charge and degree <= max_degree,
    sorted by (degree, particles, holes)."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    sets = _distinct_part_sets(max_degree)
    by_len: Dict[int, List[Tuple[int, ...]]] = {}
    for s in sets:
        by_len.setdefault(len(s), []).append(s)
    out = []
    for n_p, plist in by_len.items():
        n_h = n_p - charge
        for p in plist:
            sp = sum(p)
            for h in by_len.get(n_h, []):
                if sp + sum(h) <= max_degree:
                    out.append(ParticleHoleSet(p, h))
    out.sort(key=ParticleHoleSet.sort_key)
    return out


# --- charged and Young bases -------------------------------------------------

def charged_vacuum_word(ell: int) -> List[Tuple[str, int]]:
    if ell > 0:
        return [("psi", j) for j in range(ell - 1, -1, -1)]
    return [("psi*", j) for j in range(ell, 0)]


def charged_word(state: ChargedPHSet) -> List[Tuple[str, int]]:
    ell = state.base_charge
    J = state.ph
    word = [("psi*", ell - h) for h in J.holes]
    word += [("psi", p + ell - 1) for p in reversed(J.particles)]
    return word + charged_vacuum_word(ell)


def charged_vector(state: ChargedPHSet) -> Tuple[int, ParticleHoleSet]:
    """Express |J; ell> as ``sign * |J'>`` in the base-0 basis."""
    v = apply_word(charged_word(state), vacuum())
    (K, a), = v.items()
    return (1 if a.real > 0 else -1), K


def young_vector(y: YoungCharge) -> Tuple[int, ParticleHoleSet]:
    return charged_vector(ChargedPHSet(y.charge, ParticleHoleSet(y.alpha, y.beta)))


def _occupied(J: ParticleHoleSet, lo: int, hi: int) -> List[bool]:
    holes = {-h for h in J.holes}
    parts = {p - 1 for p in J.particles}
    return [(m in parts) if m >= 0 else (m not in holes) for m in range(lo, hi + 1)]


def ph_to_young(state: ChargedPHSet) -> YoungCharge:
    """Frobenius data of the charge sector containing |J; ell>."""
    _, J = charged_vector(state)
    c = J.charge
    lo = min([-h for h in J.holes] + [c, 0]) - 1
    hi = max([p - 1 for p in J.particles] + [c, 0]) + 1
    occ = _occupied(J, lo, hi)
    alpha, beta = [], []
    for m, o in zip(range(lo, hi + 1), occ):
        if m >= c and o:
            alpha.append(m - c + 1)
        elif m < c and not o:
            beta.append(c - m)
    return YoungCharge(tuple(sorted(alpha)), tuple(sorted(beta)), c)


def young_to_ph(y: YoungCharge) -> ChargedPHSet:
    _, J = young_vector(y)
    return ChargedPHSet(0, J)


def shift_apply_oracle(r: int, state: ChargedPHSet) -> Tuple[int, ChargedPHSet]:
    """e^{rP} acting on a mixed-basis ket, by definition on the Young basis
    |Y; ell> -> |Y; ell + r>. The result is expressed in the base-0 basis."""
    s0, J = charged_vector(state)
    y = ph_to_young(ChargedPHSet(0, J))
    s1, J1 = young_vector(y)
    assert J1 == J
    s2, K = young_vector(YoungCharge(y.alpha, y.beta, y.charge + r))
    return s0 * s1 * s2, ChargedPHSet(0, K)


def permutation_sign(seq: Sequence[int]) -> int:
    seq = list(seq)
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _lemma_nonneg(r: int, J: ParticleHoleSet) -> Tuple[int, ParticleHoleSet]:
    k, t = J.particles, J.holes
    q = sum(1 for x in t if x <= r)
    removed = {r + 1 - t[a] for a in range(q)}
    t_tilde = [x for x in range(1, r + 1) if x not in removed]
    new_k = tuple(t_tilde) + tuple(x + r for x in k)
    new_t = tuple(x - r for x in t[q:])
    seq = [r - t[a] + 1 for a in range(q - 1, -1, -1)] + list(reversed(t_tilde))
    exponent = q * (len(k) + len(t) - q) + r * (r + 1) // 2
    sign = (-1 if exponent % 2 else 1) * permutation_sign(seq)
    return sign, ParticleHoleSet(new_k, new_t)


def duality_image(J: ParticleHoleSet) -> Tuple[int, ParticleHoleSet]:
    """Image of |J> under psi_k -> psi*_{-1-k}, psi*_k -> psi_{-1-k}
    (an involution fixing |0>), as ``sign * |J'>`` with J' = J swapped."""
    word = [("psi", h - 1) for h in J.holes]
    word += [("psi*", -p) for p in reversed(J.particles)]
    (K, a), = apply_word(word, vacuum()).items()
    return (1 if a.real > 0 else -1), K


def shift_apply_lemma(r: int, state: ChargedPHSet) -> Tuple[int, ChargedPHSet]:
    """Fast-path shift using the closed set map and sign of the translation
    lemma. Negative r goes through the particle-hole duality."""
    s0, J = charged_vector(state)
    if r >= 0:
        s1, K = _lemma_nonneg(r, J)
        return s0 * s1, ChargedPHSet(0, K)
    sa, Jd = duality_image(J)
    sb, Kd = _lemma_nonneg(-r, Jd)
    sc, K = duality_image(Kd)
    return s0 * sa * sb * sc, ChargedPHSet(0, K)
