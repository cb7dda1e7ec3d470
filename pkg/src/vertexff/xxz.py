"""Lieb integral equations of the massless XXZ chain and derived data.

Conventions: Delta = cos(zeta), Fermi zone [-q, q], kernels
theta(l) = i ln(sinh(i zeta + l) / sinh(i zeta - l)) (real, odd) and
theta'(l) = sin(2 zeta) / (sinh(l)^2 + sin(zeta)^2). Unknowns are solved on a
Gauss-Legendre grid and extended off-grid with the Nystrom formula, which is
the integral equation itself read as an explicit expression.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from .errors import ConvergenceError, IdentityViolation, RangeError, SingularKernel

TWO_PI = 2.0 * math.pi


def theta(lam, zeta: float):
    """Bare two-body phase, continuous branch with theta(0) = 0."""
    lam = np.asarray(lam, dtype=float)
    return math.pi - 2.0 * np.arctan2(np.cosh(lam) * math.sin(zeta), np.sinh(lam) * math.cos(zeta))


def theta_prime(lam, zeta: float):
    lam = np.asarray(lam, dtype=float)
    return math.sin(2 * zeta) / (np.sinh(lam) ** 2 + math.sin(zeta) ** 2)


def bare_momentum(lam, zeta: float):
    """i ln(sinh(i zeta/2 + l) / sinh(i zeta/2 - l))."""
    return theta(lam, zeta / 2)


def bare_momentum_prime(lam, zeta: float):
    lam = np.asarray(lam, dtype=float)
    return math.sin(zeta) / (np.sinh(lam) ** 2 + math.sin(zeta / 2) ** 2)


@dataclass(frozen=True)
class XxzParams:
    zeta: float
    q: float
    grid_size: int = 64
    h: Optional[float] = None  # metadata only; q is the primary input

    def __post_init__(self):
        if not 0 < self.zeta < math.pi:
            raise ValueError("zeta must lie in (0, pi)")
        if min(self.zeta, math.pi - self.zeta) < 1e-3:
            raise ValueError("zeta must stay 1e-3 away from 0 and pi")
        if self.q <= 0:
            raise ValueError("q must be positive")
        if self.grid_size < 16:
            raise ValueError("grid_size must be >= 16")

    @property
    def delta(self) -> float:
        return math.cos(self.zeta)


@dataclass
class XxzSolution:
    params: XxzParams
    nodes: np.ndarray
    weights: np.ndarray
    Z_nodes: np.ndarray
    Z_q: float
    Z_minus_q: float
    phi_q_nodes: np.ndarray  # phi(mu_j, q)
    phi_mq_nodes: np.ndarray  # phi(mu_j, -q)
    p_nodes: np.ndarray
    p_q: float
    p_minus_q: float
    dp_nodes: np.ndarray
    dp_q: float
    dp_minus_q: float
    alpha_plus: float
    alpha_minus: float
    D: float
    residual: float
    epsilon: Optional[np.ndarray] = None  # dressed energy, never evaluated
    _lu: Tuple = field(default=None, repr=False)

    @property
    def q(self) -> float:
        return self.params.q

    @property
    def zeta(self) -> float:
        return self.params.zeta

    @property
    def p_F(self) -> float:
        return self.p_q

    def _kernel_row(self, lam):
        lam = np.atleast_1d(np.asarray(lam, dtype=float))
        return theta_prime(lam[:, None] - self.nodes[None, :], self.zeta) * self.weights[None, :] / TWO_PI

    def _check_range(self, lam):
        lam = np.atleast_1d(np.asarray(lam, dtype=float))
        if np.any(np.abs(lam) > self.q * (1 + 1e-12)):
            raise RangeError(f"evaluation point outside [-q, q] with q={self.q}")
        return lam

    def Z(self, lam):
        lam = self._check_range(lam)
        return 1.0 - self._kernel_row(lam) @ self.Z_nodes

    def phi_nodes(self, nu: float) -> np.ndarray:
        """phi(mu_j, nu) on the grid for an arbitrary real second argument."""
        rhs = theta(self.nodes - nu, self.zeta) / TWO_PI
        return _lu_solve(self._lu, rhs)

    def phi(self, lam, nu: float):
        lam = self._check_range(lam)
        if nu == self.q:
            f = self.phi_q_nodes
        elif nu == -self.q:
            f = self.phi_mq_nodes
        else:
            f = self.phi_nodes(nu)
        return theta(lam - nu, self.zeta) / TWO_PI - self._kernel_row(lam) @ f

    def p(self, lam):
        lam = self._check_range(lam)
        K = theta(lam[:, None] - self.nodes[None, :], self.zeta)
        return bare_momentum(lam, self.zeta) - K @ (self.weights * self.dp_nodes) / TWO_PI

    def xi(self, lam):
        return self.p(lam) / TWO_PI + self.D / 2


def _lu_factor(A):
    import scipy.linalg

    cond = np.linalg.cond(A)
    if not np.isfinite(cond) or cond > 1e12:
        raise SingularKernel(f"Nystrom matrix condition number {cond:.3e}")
    return scipy.linalg.lu_factor(A)


def _lu_solve(lu, rhs):
    import scipy.linalg

    return scipy.linalg.lu_solve(lu, rhs)


def _solve_once(params: XxzParams) -> XxzSolution:
    zeta, q, n = params.zeta, params.q, params.grid_size
    x, w = np.polynomial.legendre.leggauss(n)
    mu, w = q * x, q * w
    K = theta_prime(mu[:, None] - mu[None, :], zeta) * w[None, :] / TWO_PI
    A = np.eye(n) + K
    lu = _lu_factor(A)

    def extend(f, rhs_at, lam):
        row = theta_prime(lam - mu, zeta) * w / TWO_PI
        return rhs_at(lam) - row @ f

    Z = _lu_solve(lu, np.ones(n))
    phi_q = _lu_solve(lu, theta(mu - q, zeta) / TWO_PI)
    phi_mq = _lu_solve(lu, theta(mu + q, zeta) / TWO_PI)

    # Dressed momentum after one integration by parts: the unknowns are p on the
    # grid together with p(q) and p(-q).
    B = np.zeros((n + 2, n + 2))
    rhs = np.zeros(n + 2)
    pts = np.concatenate([mu, [q, -q]])
    B[:, :n] = theta_prime(pts[:, None] - mu[None, :], zeta) * w[None, :] / TWO_PI
    B[:, n] += theta(pts - q, zeta) / TWO_PI
    B[:, n + 1] -= theta(pts + q, zeta) / TWO_PI
    B[np.arange(n + 2), np.arange(n + 2)] += 1.0
    rhs[:] = bare_momentum(pts, zeta)
    if np.linalg.cond(B) > 1e12:
        raise SingularKernel("dressed momentum system is singular")
    pv = np.linalg.solve(B, rhs)
    p_nodes, p_q, p_mq = pv[:n], pv[n], pv[n + 1]

    # p' solves the differentiated equation, with the same kernel as Z.
    dp = _lu_solve(lu, bare_momentum_prime(mu, zeta))
    dp_q = extend(dp, lambda l: bare_momentum_prime(l, zeta), q)
    dp_mq = extend(dp, lambda l: bare_momentum_prime(l, zeta), -q)

    res = max(
        np.max(np.abs(A @ Z - 1)),
        np.max(np.abs(A @ phi_q - theta(mu - q, zeta) / TWO_PI)),
        np.max(np.abs(A @ phi_mq - theta(mu + q, zeta) / TWO_PI)),
        np.max(np.abs(B @ pv - rhs)),
        np.max(np.abs(A @ dp - bare_momentum_prime(mu, zeta))),
    )
    # xi' = p'/(2 pi), so alpha_pm = p'(+-q) / (2 pi xi'(+-q)) is 1 identically
    xi_prime_q, xi_prime_mq = dp_q / TWO_PI, dp_mq / TWO_PI
    alpha_p = dp_q / (TWO_PI * xi_prime_q)
    alpha_m = dp_mq / (TWO_PI * xi_prime_mq)
    return XxzSolution(
        params=params,
        nodes=mu,
        weights=w,
        Z_nodes=Z,
        Z_q=float(extend(Z, lambda l: 1.0, q)),
        Z_minus_q=float(extend(Z, lambda l: 1.0, -q)),
        phi_q_nodes=phi_q,
        phi_mq_nodes=phi_mq,
        p_nodes=p_nodes,
        p_q=float(p_q),
        p_minus_q=float(p_mq),
        dp_nodes=dp,
        dp_q=float(dp_q),
        dp_minus_q=float(dp_mq),
        alpha_plus=float(alpha_p),
        alpha_minus=float(alpha_m),
        D=float(p_q / math.pi),
        residual=float(res),
        _lu=lu,
    )


def solve_lieb(params: XxzParams, refine_tol: float = 1e-8) -> XxzSolution:
    """Solve for Z, phi(., +-q), p and p' on [-q, q].

    The solve is repeated on a doubled grid; if Z(q), phi(q, q) or p(q) move
    by more than ``refine_tol`` a ConvergenceError is raised.
    """
    sol = _solve_once(params)
    fine = _solve_once(XxzParams(params.zeta, params.q, 2 * params.grid_size, params.h))
    drift = max(
        abs(sol.Z_q - fine.Z_q),
        abs(sol.phi(sol.q, sol.q)[0] - fine.phi(fine.q, fine.q)[0]),
        abs(sol.p_q - fine.p_q),
    )
    if drift > refine_tol:
        raise ConvergenceError(f"endpoint values moved by {drift:.3e} under grid doubling")
    return sol


def shift_function(
    sol: XxzSolution, s: int, excitations: Sequence[Tuple[float, float]] = ()
) -> Callable:
    """Shift function F(lambda) = s (phi(lambda, q) - Z(lambda)/2) + sum of
    phi(lambda, mu_p) - phi(lambda, mu_h) over the excitation pairs."""
    pairs = [(float(a), float(b)) for a, b in excitations]
    cache: Dict[float, np.ndarray] = {}

    def nodes_for(nu):
        if nu not in cache:
            cache[nu] = sol.phi_nodes(nu)
        return cache[nu]

    def F(lam):
        lam_arr = sol._check_range(lam)
        row = sol._kernel_row(lam_arr)

        def phi_at(nu):
            return theta(lam_arr - nu, sol.zeta) / TWO_PI - row @ nodes_for(nu)

        out = s * (phi_at(sol.q) - sol.Z(lam_arr) / 2) if s else np.zeros_like(lam_arr)
        for mp, mh in pairs:
            out = out + phi_at(mp) - phi_at(mh)
        return out if np.ndim(lam) else float(out[0])

    return F


def _nu_s(sol: XxzSolution, lam: float, o_s: int, kappa: int) -> float:
    Z = sol.Z(lam)[0]
    return o_s * (Z / 2 - sol.phi(lam, sol.q)[0]) + kappa * (Z - 1)


def nu_identity_residuals(sol: XxzSolution, o_s: int, kappa: int) -> Tuple[float, float]:
    """Residuals of nu_s(q) + kappa - o_s = kappa Z - o_s/(2Z) and
    nu_s(-q) + kappa = kappa Z + o_s/(2Z), with Z = Z(q)."""
    nq = _nu_s(sol, sol.q, o_s, kappa)
    nmq = _nu_s(sol, -sol.q, o_s, kappa)
    Zq = sol.Z_q
    r_plus = abs(nq + kappa - o_s - (kappa * Zq - o_s / (2 * Zq)))
    r_minus = abs(nmq + kappa - (kappa * Zq + o_s / (2 * Zq)))
    return float(r_plus), float(r_minus)


def relative_nu(sol: XxzSolution, o_s: int, kappa: int, tol: float = 1e-8) -> Tuple[float, float]:
    """Relative shift function at the two Fermi boundaries.

    nu_s(l) = o_s (Z(l)/2 - phi(l, q)) + kappa (Z(l) - 1), kappa = ell_{s-1} - ell_s.
    Raises ``IdentityViolation`` if either boundary identity of
    ``nu_identity_residuals`` fails beyond ``tol``.
    """
    r_plus, r_minus = nu_identity_residuals(sol, o_s, kappa)
    if r_plus > tol:
        raise IdentityViolation(f"identity at q fails by {r_plus:.3e}", residual=r_plus)
    if r_minus > tol:
        raise IdentityViolation(f"identity at -q fails by {r_minus:.3e}", residual=r_minus)
    return float(_nu_s(sol, sol.q, o_s, kappa)), float(_nu_s(sol, -sol.q, o_s, kappa))


def relative_nu_literal_minus_residual(sol: XxzSolution, o_s: int, kappa: int) -> float:
    """Residual of nu_s(-q) + kappa = kappa Z - o_s/(2Z) (opposite sign of the
    o_s term). It equals |o_s|/Z, so this form only holds for o_s = 0."""
    nmq = _nu_s(sol, -sol.q, o_s, kappa)
    Zq = sol.Z_q
    return abs(nmq + kappa - (kappa * Zq - o_s / (2 * Zq)))


def scaling_dimension(nu: complex) -> complex:
    return nu * nu / 2


@dataclass
class LuttingerReport:
    vK: float
    v_over_K: float
    nu_at_q: float
    nu_at_minus_q: float
    residual: float
    K: float
    v: float


def luttinger_check(sol: XxzSolution, o_r: int, kappa: int, tol: float = 1e-8) -> LuttingerReport:
    """Linear-response decomposition of the relative shift function and the
    reflection check nu_r(q) = o_r - nu_r(-q).

    F_umkp has a particle at q and a hole at -q with s = 0; F_spn is the s = 1
    shift with no particle-hole pairs.
    """
    F_umkp = shift_function(sol, 0, [(sol.q, -sol.q)])
    F_spn = shift_function(sol, 1)
    vK = F_umkp(-sol.q)
    v_over_K = F_spn(-sol.q)
    nu_mq = kappa * vK - o_r * v_over_K
    nu_q = kappa * F_umkp(sol.q) - o_r * F_spn(sol.q)
    res = abs(nu_q - (o_r - nu_mq))
    prod = vK * v_over_K
    v = math.sqrt(prod) if prod > 0 else float("nan")
    K = vK / v if prod > 0 else float("nan")
    report = LuttingerReport(vK, v_over_K, nu_q, nu_mq, res, K, v)
    if res > tol:
        raise IdentityViolation(f"reflection fails by {res:.3e}", residual=res)
    return report
