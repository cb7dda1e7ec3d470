"""Multi-point restricted sums and vacuum expectations of vertex products.

A chain is described by nus (nu_1..nu_r), points z_1..z_r with decreasing
moduli and intermediate charges ell_1..ell_{r-1} (ell_0 = ell_r = 0). The
vertex shifts are kappa_s = ell_{s-1} - ell_s.
"""
from __future__ import annotations

import cmath
import itertools
import math
import warnings
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .closedform import _dee_rational, _log_dee_gammas, _sign, log_varpi_matrix, thm22_sign
from .current import CurrentParams, apply_exp_Jminus_to_bra, apply_exp_Jplus, apply_exp_raising_truncated
from .errors import ConvergenceWarning, DomainError
from .fock import FockVector, ParticleHoleSet, enumerate_basis, inner_product
from .specialfn import barnes_ratio, log_gamma


@dataclass(frozen=True)
class VertexChain:
    nus: Tuple[complex, ...]
    zs: Tuple[complex, ...]
    ells: Tuple[int, ...]

    def __post_init__(self):
        nus = tuple(complex(x) for x in self.nus)
        zs = tuple(complex(x) for x in self.zs)
        ells = tuple(int(x) for x in self.ells)
        if len(nus) != len(zs) or len(ells) != max(len(nus) - 1, 0):
            raise ValueError("need r nus, r points and r-1 intermediate charges")
        if any(z == 0 for z in zs):
            raise DomainError("points must be nonzero")
        object.__setattr__(self, "nus", nus)
        object.__setattr__(self, "zs", zs)
        object.__setattr__(self, "ells", ells)

    @property
    def r(self) -> int:
        return len(self.nus)

    @property
    def full_ells(self) -> Tuple[int, ...]:
        return (0,) + self.ells + (0,)

    @property
    def kappas(self) -> Tuple[int, ...]:
        L = self.full_ells
        return tuple(L[s - 1] - L[s] for s in range(1, self.r + 1))


def _check_ordering(zs: Sequence[complex], strict: bool = True):
    for a, b in zip(zs, zs[1:]):
        if abs(b) > abs(a) or (strict and abs(b) == abs(a)):
            raise DomainError("points must have strictly decreasing moduli")


def r_kernel(J: ParticleHoleSet, nu: complex, eta: complex, z: complex) -> complex:
    """The weight R(J | nu, eta; z) of one intermediate slot."""
    nu, eta, z = complex(nu), complex(eta), complex(z)
    p, h = J.particles, J.holes
    pref = (-cmath.sin(math.pi * nu) * cmath.sin(math.pi * eta) / math.pi ** 2) ** len(h)
    rat = 1.0
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            rat *= (p[a] - p[b]) ** 2
    for a in range(len(h)):
        for b in range(a + 1, len(h)):
            rat *= (h[a] - h[b]) ** 2
    for pa in p:
        for hb in h:
            rat /= (pa + hb - 1) ** 2
    lg = 0j
    for pa in p:
        lg += log_gamma(pa - nu) + log_gamma(pa + eta) - 2 * log_gamma(pa)
    for ha in h:
        lg += log_gamma(ha + nu) + log_gamma(ha - eta) - 2 * log_gamma(ha)
    power = sum(p) + sum(x - 1 for x in h)
    return pref * rat * z ** power * cmath.exp(lg)


def _shell_sums(vec_chain, degrees: List[np.ndarray], max_degree: int):
    """Evaluate a chain contraction restricted to slots of degree <= d for
    d = max_degree - 2, max_degree - 1, max_degree."""
    out = []
    for d in (max_degree - 2, max_degree - 1, max_degree):
        masks = [deg <= d for deg in degrees]
        out.append(vec_chain(masks))
    return out


def _tail_check(partials, tol: float, what: str) -> complex:
    s2, s1, s0 = partials
    last = abs(s0 - s1)
    prev = abs(s1 - s2)
    ratio = last / prev if prev > 0 else 0.0
    tail = last * ratio / (1 - ratio) if ratio < 1 else math.inf
    if tail > tol * max(1.0, abs(s0)):
        warnings.warn(ConvergenceWarning(f"{what}: estimated tail {tail:.3e}", last_shell=last))
    return s0


def restricted_sum_truncated(
    chain: VertexChain, max_degree: int, varpi_sign: int = +1, tol: float = 1e-6
) -> complex:
    """Left-hand side of the restricted-sum identity, truncated per slot.

    ``varpi_sign`` selects the sign of nu_s in the coupling varpi(J^{(s-1)};
    J^{(s)} | +-nu_s); +1 is the choice that reproduces the closed form.
    """
    r = chain.r
    if r < 2:
        return 1.0 + 0j
    for a, b in zip(chain.zs, chain.zs[1:]):
        if abs(b / a) > 0.7:
            raise DomainError("ratios |z_{s+1}/z_s| must be <= 0.7")
    bases = [enumerate_basis(ell, max_degree) for ell in chain.ells]
    weights = []
    for s in range(1, r):
        nu_s, nu_next = chain.nus[s - 1], chain.nus[s]
        z = chain.zs[s] / chain.zs[s - 1]
        w = np.array([r_kernel(J, nu_s, nu_next, z) for J in bases[s - 1]])
        # states with vanishing weight drop out, including where varpi has a pole
        keep = np.flatnonzero(w)
        bases[s - 1] = [bases[s - 1][i] for i in keep]
        weights.append(w[keep])
    degrees = [np.array([J.degree for J in B], dtype=int) for B in bases]
    couplings = []
    for s in range(2, r):
        lv = log_varpi_matrix(bases[s - 2], bases[s - 1], varpi_sign * chain.nus[s - 1])
        couplings.append(np.exp(lv))

    def contract(masks):
        v = weights[0] * masks[0]
        for W, w, m in zip(couplings, weights[1:], masks[1:]):
            v = (v @ W) * w * m
        return complex(np.sum(v))

    return _tail_check(_shell_sums(contract, degrees, max_degree), tol, "restricted sum")


def _restricted_closed(chain: VertexChain, middle_sign: int) -> complex:
    r = chain.r
    nus, zs, L = chain.nus, chain.zs, chain.full_ells
    val = 1.0 + 0j
    for s in range(1, r):
        ell = L[s]
        val *= (zs[s] / zs[s - 1]) ** (ell * (ell + 1) // 2)
        val *= barnes_ratio((1 + ell - nus[s - 1], 1 + ell + nus[s]), (1 - nus[s - 1], 1 + nus[s]))
    for s in range(2, r):
        nu = nus[s - 1]
        val *= barnes_ratio(
            (1 + nu, 1 + L[s - 1] - L[s] + nu), (1 - L[s] + nu, 1 + L[s - 1] + middle_sign * nu)
        )
    val *= _pair_product(nus, chain.kappas, zs)
    return val


def restricted_sum_closed(chain: VertexChain) -> complex:
    """Closed-form value of the restricted sum.

    The interior Barnes factor has denominator G(1 - l_s + nu_s) G(1 + l_{s-1} + nu_s).
    """
    return _restricted_closed(chain, +1)


def restricted_sum_closed_literal(chain: VertexChain) -> complex:
    """Variant with G(1 + l_{s-1} - nu_s) in the interior denominator.

    Kept for comparison only: it disagrees with the truncated sum once r >= 3.
    """
    return _restricted_closed(chain, -1)


def _pair_product(nus, kappas, zs) -> complex:
    val = 1.0 + 0j
    r = len(nus)
    for a in range(r):
        for b in range(a + 1, r):
            val *= (1 - zs[b] / zs[a]) ** ((nus[a] + kappas[a]) * (nus[b] + kappas[b]))
    return val


def vertex_product(chain: VertexChain) -> complex:
    """<0| V(nu_1, kappa_1 | z_1) ... V(nu_r, kappa_r | z_r) |0> from the
    exchange relation.

    Equal moduli are accepted as the boundary value of the principal branch
    (1 - u has nonnegative real part for |u| = 1) as long as no two points
    coincide; increasing moduli raise DomainError.
    """
    if sum(chain.kappas) != 0:
        return 0j
    _check_ordering(chain.zs, strict=False)
    for a in range(chain.r):
        for b in range(a + 1, chain.r):
            if chain.zs[a] == chain.zs[b]:
                raise DomainError("coinciding points")
    return _pair_product(chain.nus, chain.kappas, chain.zs)


def restricted_C(chain: VertexChain) -> complex:
    """Constant C with vertex_product * C = restricted sum."""
    r = chain.r
    nus, zs, L = chain.nus, chain.zs, chain.full_ells
    k = chain.kappas
    val = 1.0 + 0j
    for s in range(1, r + 1):
        nu, ks, lprev, ls = nus[s - 1], k[s - 1], L[s - 1], L[s]
        val *= barnes_ratio((1 - nu - ks,), (1 - nu,))
        val *= (-cmath.sin(math.pi * nu) / math.pi) ** (-lprev)
        val *= zs[s - 1] ** (ks * (ks - 1) // 2 + ks * ls)
        val *= _sign(lprev * (lprev + 1) // 2 + ks * (ks + 1) // 2)
    for s in range(1, r):
        val *= (zs[s] / zs[s - 1]) ** L[s]
    return val


# --- insertion route ---------------------------------------------------------

def _vertex_side_factors(states, nu, r, omega, side: str) -> np.ndarray:
    """State-dependent factors of the vertex matrix element.

    For <J1| V(nu, r | omega) |J2> the closed form factorises as
    const * f_bra(J1) * f_ket(J2) * varpi(J1; J2 | nu).
    """
    out = np.empty(len(states), dtype=complex)
    so = cmath.sin(math.pi * nu) / math.pi
    for i, J in enumerate(states):
        if side == "bra":
            c = J.n_p - J.n_h
            sign = _sign(J.n_p) * _sign(c * (c + 1) // 2)
            power = sum(p - 1 for p in J.particles) + sum(J.holes)
            val = sign * so ** c * so ** J.n_h * omega ** power
            val *= cmath.exp(_log_dee_gammas(J, nu)) * _dee_rational(J)
        else:
            sign = _sign(J.n_h)
            power = sum(p - 1 for p in J.particles) + sum(J.holes)
            val = sign * (-so) ** J.n_h * omega ** (-power) * omega ** (-r * J.charge)
            val *= cmath.exp(_log_dee_gammas(J, -nu)) * _dee_rational(J)
        out[i] = val
    return out


def _vertex_const(nu, r, omega) -> complex:
    if r == 0:
        return 1.0 + 0j
    return _sign(r * (r + 1) // 2) * omega ** (-r * (r - 1) // 2) * barnes_ratio((1 - nu,), (1 - nu - r,)) * thm22_sign(r)


def vertex_matrix(bras, kets, nu, r, omega) -> np.ndarray:
    """Matrix of <J1| V(nu, r | omega) |J2> over two lists of states."""
    nu = complex(nu)
    omega = complex(omega)
    fb = _vertex_side_factors(bras, nu, r, omega, "bra")
    fk = _vertex_side_factors(kets, nu, r, omega, "ket")
    M = np.exp(log_varpi_matrix(bras, kets, nu)) * fb[:, None] * fk[None, :]
    M *= _vertex_const(nu, r, omega)
    cb = np.array([J.charge for J in bras])
    ck = np.array([J.charge for J in kets])
    M[cb[:, None] != ck[None, :] + r] = 0
    return M


def vertex_chain_insertion(
    chain: VertexChain, max_degree: int, tol: float = 1e-6, block_rows: int = 1024
) -> complex:
    """<0| V_1 ... V_r |0> by inserting truncated resolutions of the identity
    between consecutive vertex operators.

    Matrices are generated in row blocks so memory stays O(block_rows * N).
    """
    r = chain.r
    if sum(chain.kappas) != 0:
        return 0j
    _check_ordering(chain.zs)
    vac = [ParticleHoleSet()]
    bases = [vac] + [enumerate_basis(ell, max_degree) for ell in chain.ells] + [vac]
    k = chain.kappas
    cutoffs = (max_degree - 2, max_degree - 1, max_degree)
    vecs = [np.ones(1, dtype=complex) for _ in cutoffs]
    for s in range(1, r + 1):
        bras, kets = bases[s - 1], bases[s]
        if s > 1:
            deg = np.array([J.degree for J in bras])
            vecs = [v * (deg <= d) for v, d in zip(vecs, cutoffs)]
        nxt = [np.zeros(len(kets), dtype=complex) for _ in cutoffs]
        for a in range(0, len(bras), block_rows):
            M = vertex_matrix(bras[a:a + block_rows], kets, chain.nus[s - 1], k[s - 1], chain.zs[s - 1])
            for v, out in zip(vecs, nxt):
                out += v[a:a + block_rows] @ M
        vecs = nxt
    return _tail_check([complex(v[0]) for v in vecs], tol, "vertex insertion")


# --- exchange relation ---------------------------------------------------------

def exchange_JplusJminus(nu: complex, omega: complex, mu: complex, z: complex) -> complex:
    """Scalar (1 - z/omega)^{mu nu} with
    e^{Jcal_+(nu,omega)} e^{Jcal_-(mu,z)} = scalar * e^{Jcal_-(mu,z)} e^{Jcal_+(nu,omega)}."""
    if abs(complex(z) / complex(omega)) >= 1:
        raise DomainError("need |z/omega| < 1")
    return (1 - complex(z) / complex(omega)) ** (complex(mu) * complex(nu))


def exchange_matrix_elements(
    bra: ParticleHoleSet, ket: ParticleHoleSet, nu, omega, mu, z, max_degree: int
) -> Tuple[complex, complex]:
    """Both orderings of <bra| ... |ket>.

    Returns (<bra| e^{J+(nu,omega)} e^{J-(mu,z)} |ket>, <bra| e^{J-(mu,z)} e^{J+(nu,omega)} |ket>).
    The first needs an intermediate sum over states up to ``max_degree``;
    the second is finite.
    """
    nu, omega, mu, z = (complex(x) for x in (nu, omega, mu, z))
    # <bra| e^{J+} : bra coefficients are those of exp(-nu sum omega^{-k}/k J_{-k}) |bra>
    left = apply_exp_raising_truncated(lambda k: -nu * omega ** (-k) / k, FockVector.basis(bra), max_degree)
    right = apply_exp_raising_truncated(lambda k: mu * z ** k / k, FockVector.basis(ket), max_degree)
    lhs = inner_product(left, right) if bra.charge == ket.charge else 0j
    b2 = apply_exp_Jminus_to_bra(CurrentParams(mu, z), FockVector.basis(bra))
    k2 = apply_exp_Jplus(CurrentParams(nu, omega), FockVector.basis(ket))
    rhs = inner_product(b2, k2) if bra.charge == ket.charge else 0j
    return lhs, rhs


def exchange_matrices(
    states: Sequence[ParticleHoleSet], nu, omega, mu, z, max_degree: int
) -> Tuple[np.ndarray, np.ndarray]:
    """``exchange_matrix_elements`` for all pairs of ``states``, expanding each
    state once."""
    nu, omega, mu, z = (complex(x) for x in (nu, omega, mu, z))
    bras = [apply_exp_raising_truncated(lambda k: -nu * omega ** (-k) / k, FockVector.basis(J), max_degree)
            for J in states]
    kets = [apply_exp_raising_truncated(lambda k: mu * z ** k / k, FockVector.basis(J), max_degree)
            for J in states]
    bras2 = [apply_exp_Jminus_to_bra(CurrentParams(mu, z), FockVector.basis(J)) for J in states]
    kets2 = [apply_exp_Jplus(CurrentParams(nu, omega), FockVector.basis(J)) for J in states]
    n = len(states)
    lhs = np.zeros((n, n), complex)
    rhs = np.zeros((n, n), complex)
    for i, j in itertools.product(range(n), range(n)):
        if states[i].charge == states[j].charge:
            lhs[i, j] = inner_product(bras[i], kets[j])
            rhs[i, j] = inner_product(bras2[i], kets2[j])
    return lhs, rhs

