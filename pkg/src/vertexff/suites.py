"""Property suites comparing closed forms against independent oracles.

Every suite takes a flat config mapping (see ``config.py``) and returns a list
of ``Case`` records. The CLI serialises them; the acceptance tests assert on
them.
"""
from __future__ import annotations

import cmath
import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping

import numpy as np

from . import config as C
from .closedform import cauchy_inverse, prop21_ff, thm22_ff, thm22_sign, tilde_I2_matrix, wick_route_vacuum_ff
from .correspond import (
    CriticalState,
    MacroParams,
    OperatorSpec,
    critical_ff,
    effective_me,
    rpoint_asymptotics,
)
from .current import BasisCache, CurrentParams, VertexParams, apply_J, apply_exp_Jminus_to_bra
from .errors import ConvergenceWarning
from .fock import (
    ChargedPHSet,
    FockVector,
    apply_psi,
    apply_psi_star,
    bra_times_psi,
    bra_times_psi_star,
    enumerate_basis,
    inner_product,
    vacuum,
    shift_apply_lemma,
    shift_apply_oracle,
)
from .integrals import (
    I1_closed,
    I1_quadrature,
    I1_tilde_quadrature,
    I2_closed,
    I2_quadrature,
    I2_tilde_closed,
    I2_tilde_quadrature,
    tilde_relations,
)
from .restricted import (
    VertexChain,
    restricted_C,
    restricted_sum_closed,
    restricted_sum_truncated,
    vertex_chain_insertion,
    vertex_product,
)
from .specialfn import barnes_g, barnes_reduction, barnes_reduction_reference, log_gamma
from .xxz import XxzParams, luttinger_check, nu_identity_residuals, relative_nu, solve_lieb


@dataclass
class Case:
    id: str
    inputs: Dict
    lhs: complex
    rhs: complex
    residual: float
    tol: float
    passed: bool
    group: str = ""

    def as_dict(self) -> Dict:
        def enc(z):
            z = complex(z)
            return [z.real, z.imag]

        return {
            "id": self.id,
            "group": self.group,
            "inputs": self.inputs,
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "residual": float(self.residual),
            "tol": float(self.tol),
            "pass": bool(self.passed),
        }


def _rel(lhs, rhs) -> float:
    return abs(complex(lhs) - complex(rhs)) / max(1.0, abs(complex(rhs)))


def _true_rel(lhs, rhs) -> float:
    return abs(complex(lhs) - complex(rhs)) / abs(complex(rhs))


def _case(cid, group, inputs, lhs, rhs, residual, tol) -> Case:
    return Case(cid, inputs, complex(lhs), complex(rhs), float(residual), float(tol), bool(residual <= tol), group)


def _grid(cfg):
    return C.get_floats(cfg, "nu"), C.get_complexes(cfg, "omega")


def _fmt_c(z: complex) -> str:
    return f"{z.real:.6g}{z.imag:+.6g}j"


# --- discrete form factors ----------------------------------------------------

def suite_prop21(cfg: Mapping[str, str]) -> List[Case]:
    nus, omegas = _grid(cfg)
    D, W = C.get_int(cfg, "max_degree"), C.get_int(cfg, "charge_window")
    tol = C.get_float(cfg, "tol_prop21")
    cases = []
    for nu, om in itertools.product(nus, omegas):
        cache = BasisCache(CurrentParams(nu, om))
        for c in range(-W, W + 1):
            basis = enumerate_basis(c, D)
            for bra in basis:
                for ket in basis:
                    lhs = prop21_ff(bra, ket, nu, om)
                    rhs = cache.me(bra, ket)
                    cases.append(
                        _case(
                            f"{bra!r}|{ket!r}|nu={nu}|omega={_fmt_c(om)}",
                            "prop21",
                            {"bra": repr(bra), "ket": repr(ket), "nu": nu, "omega": _fmt_c(om)},
                            lhs,
                            rhs,
                            _rel(lhs, rhs),
                            tol,
                        )
                    )
    return cases


def suite_thm22(cfg: Mapping[str, str]) -> List[Case]:
    """Closed vertex matrix element (with s(r) applied) against the oracle, plus
    one case per (r, grid point) asserting the phase ratio is constant."""
    nus, omegas = _grid(cfg)
    D, W = C.get_int(cfg, "max_degree"), C.get_int(cfg, "charge_window")
    tol = C.get_float(cfg, "tol_thm22")
    cases = []
    for nu, om in itertools.product(nus, omegas):
        for r in range(-2, 3):
            cache = BasisCache(CurrentParams(nu + r, om))
            ratios = []
            for c in range(-W, W + 1):
                if abs(c + r) > W:
                    continue
                kets = enumerate_basis(c, D)
                bras = enumerate_basis(c + r, D)
                for ket in kets:
                    sk, K = shift_apply_oracle(r, ChargedPHSet(0, ket))
                    for bra in bras:
                        lit = thm22_ff(bra, ket, VertexParams(nu, r, om), convention="literal")
                        oracle = sk * cache.me(bra, K.ph)
                        if abs(oracle) > 1e-14:
                            ratios.append(lit / oracle)
                        lhs = lit * thm22_sign(r)
                        cases.append(
                            _case(
                                f"{bra!r}|{ket!r}|r={r}|nu={nu}|omega={_fmt_c(om)}",
                                "thm22",
                                {"bra": repr(bra), "ket": repr(ket), "r": r, "nu": nu, "omega": _fmt_c(om)},
                                lhs,
                                oracle,
                                _rel(lhs, oracle),
                                tol,
                            )
                        )
            ratios = np.array(ratios)
            spread = float(np.max(np.abs(ratios - ratios[0]))) if len(ratios) else 0.0
            cases.append(
                _case(
                    f"phase-ratio|r={r}|nu={nu}|omega={_fmt_c(om)}",
                    "thm22-phase",
                    {"r": r, "nu": nu, "omega": _fmt_c(om), "n": len(ratios)},
                    ratios[0] if len(ratios) else 1.0,
                    thm22_sign(r),
                    max(spread, abs(ratios[0] - thm22_sign(r)) if len(ratios) else 0.0),
                    tol,
                )
            )
    return cases


def suite_lemma23(cfg: Mapping[str, str]) -> List[Case]:
    """Set map of the fast shift against the Young-basis definition; the sign
    ratio must depend on r only."""
    D, W = C.get_int(cfg, "shift_degree"), C.get_int(cfg, "charge_window")
    R = C.get_int(cfg, "shift_range")
    cases = []
    for r in range(-R, R + 1):
        ratios = set()
        mismatches = 0
        n = 0
        for c in range(-W - 1, W + 2):
            for J in enumerate_basis(c, D):
                st = ChargedPHSet(0, J)
                so, Ko = shift_apply_oracle(r, st)
                sl, Kl = shift_apply_lemma(r, st)
                n += 1
                if Ko != Kl:
                    mismatches += 1
                else:
                    ratios.add(sl * so)
        cases.append(
            _case(f"set-map|r={r}", "lemma23-set", {"r": r, "states": n}, mismatches, 0, mismatches, 0)
        )
        cases.append(
            _case(
                f"sign-ratio|r={r}",
                "lemma23-sign",
                {"r": r, "ratios": sorted(ratios)},
                len(ratios),
                1,
                abs(len(ratios) - 1),
                0,
            )
        )
    return cases


# --- integrals and the determinant route -------------------------------------

def _vacuum_integral_oracle(p: int, h: int, nu, om) -> complex:
    """<0| psi*_{p-1} psi_{-h} e^{Jcal_-(nu, omega)} |0> from operator algebra."""
    bra = bra_times_psi(-h, bra_times_psi_star(p - 1, vacuum()))
    bra = apply_exp_Jminus_to_bra(CurrentParams(nu, om), bra)
    if bra.sector_charge != 0:
        return 0j
    return inner_product(bra, vacuum())


def suite_integrals(cfg: Mapping[str, str]) -> List[Case]:
    nus, omegas = _grid(cfg)
    M = C.get_int(cfg, "index_max")
    M0 = C.get_int(cfg, "vacuum_index_max")
    tol = C.get_float(cfg, "tol_integrals")
    tol0 = C.get_float(cfg, "tol_vacuum_integral")
    tolw = C.get_float(cfg, "tol_wick")
    cases = []
    for nu, om in itertools.product(nus, omegas):
        g = {"nu": nu, "omega": _fmt_c(om)}
        for a, b in itertools.product(range(1, M + 1), repeat=2):
            for name, closed, quad in (
                ("I1", I1_closed(a, b, nu, om), I1_quadrature(a, b, nu, om)),
                ("I2", I2_closed(a, b, nu, om), I2_quadrature(a, b, nu, om)),
                ("tildeI1", tilde_relations(1, (a, b), nu, om), I1_tilde_quadrature(a, b, nu, om)),
                ("tildeI2", tilde_relations(2, (a, b), nu, om), I2_tilde_quadrature(a, b, nu, om)),
            ):
                cases.append(
                    _case(f"{name}|{a},{b}|nu={nu}|omega={_fmt_c(om)}", name, dict(g, i=a, j=b),
                          closed, quad, _rel(closed, quad), tol)
                )
        for p, h in itertools.product(range(1, M0 + 1), repeat=2):
            lhs = _vacuum_integral_oracle(p, h, nu, om)
            rhs = I2_tilde_closed(p, h, nu, om)
            cases.append(
                _case(f"vacuum-tildeI2|{p},{h}|nu={nu}|omega={_fmt_c(om)}", "vacuum-integral",
                      dict(g, p=p, h=h), lhs, rhs, _rel(lhs, rhs), tol0)
            )
    cases += suite_wick(cfg)
    return cases


def _exact_identity_residual(A: np.ndarray, B: np.ndarray) -> float:
    """max |(A B - I)_ij| with the product of the given float entries carried
    out in exact rational arithmetic, so the check adds no rounding of its own."""
    from fractions import Fraction

    n = A.shape[0]
    Ar = [[(Fraction(z.real), Fraction(z.imag)) for z in row] for row in A.tolist()]
    Br = [[(Fraction(z.real), Fraction(z.imag)) for z in row] for row in B.tolist()]
    worst = 0.0
    for i in range(n):
        for j in range(n):
            re = sum(Ar[i][k][0] * Br[k][j][0] - Ar[i][k][1] * Br[k][j][1] for k in range(n)) - (1 if i == j else 0)
            im = sum(Ar[i][k][0] * Br[k][j][1] + Ar[i][k][1] * Br[k][j][0] for k in range(n))
            worst = max(worst, abs(complex(float(re), float(im))))
    return worst


def suite_wick(cfg: Mapping[str, str]) -> List[Case]:
    nus, omegas = _grid(cfg)
    npairs = C.get_int(cfg, "wick_pairs")
    size = C.get_int(cfg, "cauchy_size")
    tol = C.get_float(cfg, "tol_wick")
    cases = []
    paired = [J for J in enumerate_basis(0, 2 * (npairs + 3)) if 1 <= J.n_p <= npairs]
    index_sets = {n: list(itertools.combinations(range(1, size + 3), n)) for n in range(1, size + 1)}
    for nu, om in itertools.product(nus, omegas):
        g = {"nu": nu, "omega": _fmt_c(om)}
        for J in paired:
            lhs = wick_route_vacuum_ff(J, nu, om)
            rhs = prop21_ff(J, enumerate_basis(0, 0)[0], nu, om)
            cases.append(_case(f"wick|{J!r}|nu={nu}|omega={_fmt_c(om)}", "wick", dict(g, J=repr(J)),
                               lhs, rhs, _rel(lhs, rhs), tol))
        for n, sets in index_sets.items():
            worst = worst_float = worst_left = 0.0
            for P in sets:
                for H in sets:
                    N = tilde_I2_matrix(P, H, nu, om)
                    Ni = cauchy_inverse(P, H, nu, om)
                    I = np.eye(n)
                    worst_float = max(worst_float, np.max(np.abs(N @ Ni - I)))
                    worst = max(worst, _exact_identity_residual(N, Ni))
                    worst_left = max(worst_left, _exact_identity_residual(Ni, N))
            cases.append(_case(f"cauchy-inverse|n={n}|nu={nu}|omega={_fmt_c(om)}", "cauchy",
                               dict(g, n=n, sets=len(sets) ** 2, float64_product_residual=float(worst_float),
                                    left_inverse_residual=float(worst_left)),
                               worst, 0.0, worst, tol))
    return cases


# --- restricted sums and vertex products -------------------------------------

def _restricted_eval(fn, *args):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ConvergenceWarning)
        val = fn(*args)
    tails = [w.message.last_shell for w in caught if isinstance(w.message, ConvergenceWarning)]
    return val, tails


def suite_restricted(cfg: Mapping[str, str], include_insertion: bool = True) -> List[Case]:
    nus = C.get_floats(cfg, "nu")
    ratio = C.get_float(cfg, "restricted_ratio")
    D2, D3 = C.get_int(cfg, "restricted_r2_degree"), C.get_int(cfg, "restricted_r3_degree")
    tol2, tol3 = C.get_float(cfg, "tol_restricted_r2"), C.get_float(cfg, "tol_restricted_r3")
    nu3 = tuple(C.get_floats(cfg, "restricted_r3_nu"))
    cases = []
    for n1, n2 in itertools.product(nus, repeat=2):
        for ell in (-1, 0, 1):
            ch = VertexChain((n1, n2), (1.0, ratio), (ell,))
            lhs, tails = _restricted_eval(restricted_sum_truncated, ch, D2)
            rhs = restricted_sum_closed(ch)
            cases.append(_case(f"r2|nu=({n1},{n2})|ell={ell}", "restricted-r2",
                               {"nus": [n1, n2], "ell": ell, "max_degree": D2, "warned": bool(tails)},
                               lhs, rhs, _true_rel(lhs, rhs), tol2))
    zs3 = (1.0, ratio, ratio ** 2)
    for ells in itertools.product((-1, 0, 1), repeat=2):
        ch = VertexChain(nu3, zs3, ells)
        lhs, tails = _restricted_eval(restricted_sum_truncated, ch, D3)
        rhs = restricted_sum_closed(ch)
        cases.append(_case(f"r3|ells={ells}", "restricted-r3",
                           {"nus": list(nu3), "ells": list(ells), "max_degree": D3, "warned": bool(tails)},
                           lhs, rhs, _true_rel(lhs, rhs), tol3))
        bridge = vertex_product(ch) * restricted_C(ch)
        cases.append(_case(f"bridge|ells={ells}", "restricted-bridge", {"nus": list(nu3), "ells": list(ells)},
                           rhs, bridge, _true_rel(rhs, bridge), 1e-12))
    if include_insertion:
        cases += suite_insertion(cfg)
    return cases


def suite_insertion(cfg: Mapping[str, str]) -> List[Case]:
    ratio = C.get_float(cfg, "restricted_ratio")
    D = C.get_int(cfg, "insertion_degree")
    tol = C.get_float(cfg, "tol_insertion")
    nu3 = tuple(C.get_floats(cfg, "restricted_r3_nu"))
    zs3 = (1.0, ratio, ratio ** 2)
    cases = []
    for ells in itertools.product((-1, 0, 1), repeat=2):
        ch = VertexChain(nu3, zs3, ells)
        lhs, tails = _restricted_eval(vertex_chain_insertion, ch, D)
        rhs = vertex_product(ch)
        cases.append(_case(f"insertion|ells={ells}", "insertion",
                           {"nus": list(nu3), "ells": list(ells), "max_degree": D, "warned": bool(tails)},
                           lhs, rhs, _true_rel(lhs, rhs), tol))
    return cases


# --- special functions ----------------------------------------------------------

def barnes_grid() -> List[complex]:
    re = [-2.7, -1.3, -0.4, 0.17, 0.5, 0.83, 1.6, 2.9, 4.2]
    im = [0.0, 0.35, -1.2, 2.5]
    return [complex(a, b) for a in re for b in im]


def suite_barnes(cfg: Mapping[str, str]) -> List[Case]:
    tol = C.get_float(cfg, "tol_barnes")
    cases = []
    for z in barnes_grid():
        lhs = barnes_g(z + 1)
        rhs = cmath.exp(log_gamma(z)) * barnes_g(z)
        cases.append(_case(f"functional|z={_fmt_c(z)}", "barnes-functional", {"z": _fmt_c(z)},
                           lhs, rhs, _rel(lhs, rhs), tol))
        for ell in range(-3, 4):
            lhs = barnes_reduction(z, ell)
            rhs = barnes_reduction_reference(z, ell)
            cases.append(_case(f"reduction|z={_fmt_c(z)}|ell={ell}", "barnes-reduction",
                               {"z": _fmt_c(z), "ell": ell}, lhs, rhs, _rel(lhs, rhs), tol))
    return cases


# --- operator algebra -------------------------------------------------------------

def suite_commutators(cfg: Mapping[str, str]) -> List[Case]:
    """[J_k, J_l] = k delta_{k,-l}, [J_k, psi_m] = psi_{m-k},
    [J_k, psi*_m] = -psi*_{m+k}, and the canonical anticommutators, on every
    basis vector of bounded degree."""
    D, W = C.get_int(cfg, "commutator_degree"), C.get_int(cfg, "charge_window")
    tol = C.get_float(cfg, "tol_commutators")
    states = [J for c in range(-W, W + 1) for J in enumerate_basis(c, D)]
    ks = [k for k in range(-3, 4) if k]
    modes = range(-4, 4)

    def worst(fn) -> float:
        return max(fn(FockVector.basis(J)).max_abs() for J in states)

    cases = []
    for k, l in itertools.product(ks, ks):
        def comm(v, k=k, l=l):
            out = apply_J(k, apply_J(l, v)) - apply_J(l, apply_J(k, v))
            return out - v.scale(k if k == -l else 0)

        res = worst(comm)
        cases.append(_case(f"[J{k},J{l}]", "current-current", {"k": k, "l": l}, res, 0, res, tol))
    for k, m in itertools.product(ks, modes):
        def cpsi(v, k=k, m=m):
            return apply_J(k, apply_psi(m, v)) - apply_psi(m, apply_J(k, v)) - apply_psi(m - k, v)

        def cpsis(v, k=k, m=m):
            return apply_J(k, apply_psi_star(m, v)) - apply_psi_star(m, apply_J(k, v)) + apply_psi_star(m + k, v)

        for name, fn in (("psi", cpsi), ("psi*", cpsis)):
            res = worst(fn)
            cases.append(_case(f"[J{k},{name}{m}]", "current-mode", {"k": k, "m": m, "op": name}, res, 0, res, tol))
    for m, n in itertools.product(modes, modes):
        def anti(v, m=m, n=n):
            out = apply_psi(m, apply_psi_star(n, v)) + apply_psi_star(n, apply_psi(m, v))
            return out - v.scale(1.0 if m == n else 0.0)

        def anti_pp(v, m=m, n=n):
            return apply_psi(m, apply_psi(n, v)) + apply_psi(n, apply_psi(m, v))

        def anti_ss(v, m=m, n=n):
            return apply_psi_star(m, apply_psi_star(n, v)) + apply_psi_star(n, apply_psi_star(m, v))

        for name, fn in (("{psi,psi*}", anti), ("{psi,psi}", anti_pp), ("{psi*,psi*}", anti_ss)):
            res = worst(fn)
            cases.append(_case(f"{name}|{m},{n}", "anticommutator", {"m": m, "n": n, "op": name}, res, 0, res, tol))
    return cases


# --- correspondence -------------------------------------------------------------

def _edge_pairs(ell: int, max_degree: int):
    return [
        (L, R)
        for R in enumerate_basis(ell, max_degree)
        for L in enumerate_basis(-ell, max_degree)
        if L.degree + R.degree <= max_degree
    ]


def suite_correspondence(cfg: Mapping[str, str]) -> List[Case]:
    D = C.get_int(cfg, "edge_degree")
    K = C.get_int(cfg, "cutoff")
    tol = C.get_float(cfg, "tol_correspondence")
    macro = MacroParams(L=C.get_float(cfg, "asym_L"), p_F=C.get_float(cfg, "asym_p_F"),
                        alpha_plus=1.0, alpha_minus=1.0)
    ops = [
        OperatorSpec(o, {k: complex(0.3 + 0.05 * k, 0.1 * k) for k in range(-K, K + 1)}, npl, nmi)
        for o, npl, nmi in ((0, 0.31, -0.22), (1, 0.17, 0.44), (-1, -0.38, 0.09))
    ]
    x = 3.7
    pairs = {ell: _edge_pairs(ell, D) for ell in range(-K, K + 1)}
    cases = []
    for op in ops:
        worst, n = 0.0, 0
        for lo, li in itertools.product(range(-K, K + 1), repeat=2):
            kappa = lo - li
            if abs(kappa) > K:
                continue
            for (Lo, Ro), (Li, Ri) in itertools.product(pairs[lo], pairs[li]):
                out, inn = CriticalState(0, Lo, Ro), CriticalState(op.o, Li, Ri)
                lhs = critical_ff(out, inn, op, x, macro)
                rhs = (-1) ** kappa * effective_me(out, inn, op, x, macro)
                if lhs == 0 and rhs == 0:
                    continue
                worst = max(worst, _true_rel(lhs, rhs))
                n += 1
        cases.append(_case(f"critical-vs-effective|o={op.o}", "correspondence",
                           {"o": op.o, "nu_plus": op.nu_plus, "nu_minus": op.nu_minus, "pairs": n},
                           worst, 0, worst, tol))
    cases.append(two_point_case(cfg))
    return cases


def two_point_case(cfg: Mapping[str, str]) -> Case:
    """rpoint_asymptotics against the product assembled by hand for r=2 and a
    single harmonic."""
    L, pF = C.get_float(cfg, "asym_L"), C.get_float(cfg, "asym_p_F")
    macro = MacroParams(L=L, p_F=pF)
    npl, nmi, F0 = 0.3, -0.2, 0.7 + 0.1j
    x1, x2 = 0.0, 25.0
    ops = [OperatorSpec(0, {0: F0}, npl, nmi), OperatorSpec(0, {0: F0.conjugate()}, -npl, -nmi)]
    got = rpoint_asymptotics(ops, [x1, x2], macro, kappa_cutoff=0).total
    w1p, w2p = macro.omega_plus(x1), macro.omega_plus(x2)
    w1m, w2m = macro.omega_minus(x1), macro.omega_minus(x2)
    power = (2 * math.pi / L) ** (npl ** 2 + nmi ** 2)
    hand = abs(F0) ** 2 * power * (1 - w2p / w1p) ** (-npl * npl) * (1 - w2m / w1m) ** (-nmi * nmi)
    tol = C.get_float(cfg, "tol_restricted_r2")
    return _case("two-point|single-harmonic", "rpoint", {"L": L, "x": [x1, x2]}, got, hand, _true_rel(got, hand), tol)


# --- xxz ----------------------------------------------------------------------------

def xxz_values(sol) -> Dict[str, float]:
    q = sol.q
    return {
        "Z_q": float(sol.Z_q),
        "Z_minus_q": float(sol.Z_minus_q),
        "phi_qq": float(sol.phi(q, q)[0]),
        "phi_mqq": float(sol.phi(-q, q)[0]),
        "p_F": float(sol.p_F),
        "D": float(sol.D),
        "alpha_plus": float(sol.alpha_plus),
        "alpha_minus": float(sol.alpha_minus),
        "nystrom_residual": float(sol.residual),
    }


def suite_xxz(cfg: Mapping[str, str]) -> List[Case]:
    """Boundary identities of the relative shift function, the reflection
    relation and grid-doubling stability at one (zeta, q) point."""
    zeta, q = C.get_float(cfg, "zeta"), C.get_float(cfg, "q")
    grid, tol = C.get_int(cfg, "grid"), C.get_float(cfg, "tol_xxz")
    sol = solve_lieb(XxzParams(zeta, q, grid))
    fine = solve_lieb(XxzParams(zeta, q, 2 * grid))
    base = {"zeta": zeta, "q": q, "grid": grid}
    cases = []
    coarse_v, fine_v = xxz_values(sol), xxz_values(fine)
    for key in ("Z_q", "phi_qq", "p_F", "alpha_plus", "alpha_minus"):
        a, b = coarse_v[key], fine_v[key]
        cases.append(_case(f"doubling|{key}", "xxz-doubling", dict(base, fine_grid=2 * grid), a, b, abs(a - b), tol))
    for o, k in itertools.product(C.get_ints(cfg, "xxz_o"), C.get_ints(cfg, "xxz_kappa")):
        inp = dict(base, o=o, kappa=k)
        r_plus, r_minus = nu_identity_residuals(sol, o, k)
        nq, nmq = relative_nu(sol, o, k, tol=math.inf)
        cases.append(_case(f"nu-at-q|o={o}|kappa={k}", "xxz-nu", inp, nq + k - o,
                           k * sol.Z_q - o / (2 * sol.Z_q), r_plus, tol))
        cases.append(_case(f"nu-at-minus-q|o={o}|kappa={k}", "xxz-nu", inp, nmq + k,
                           k * sol.Z_q + o / (2 * sol.Z_q), r_minus, tol))
        rep = luttinger_check(sol, o, k, tol=math.inf)
        cases.append(_case(f"reflection|o={o}|kappa={k}", "xxz-reflection", dict(inp, v=rep.v, K=rep.K),
                           rep.nu_at_q, o - rep.nu_at_minus_q, rep.residual, tol))
    return cases


SUITES: Dict[str, Callable[[Mapping[str, str]], List[Case]]] = {
    "prop21": suite_prop21,
    "thm22": suite_thm22,
    "lemma23": suite_lemma23,
    "integrals": suite_integrals,
    "restricted": suite_restricted,
    "barnes": suite_barnes,
    "commutators": suite_commutators,
    "correspondence": suite_correspondence,
    "xxz": suite_xxz,
}
