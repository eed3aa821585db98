"""Lifting cone-point symmetries to automorphisms of the curve.

A lift of a symmetry s with permutation sigma has the form
x_i -> c_i chi(x_{sigma^-1(i)}). In the variables y_i = x_i^k it acts
linearly with t_i = c_i^k, and it preserves the curve exactly when every
transformed equation stays in the row space of Q, i.e. is annihilated by
ker(Q). That is a homogeneous linear system in t (or in conj(t) for
anticonformal s) whose solution space is one-dimensional for a genuine
symmetry. The k^n lifts then come from the k-th roots of t with c_1 = 1.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from itertools import product
from typing import Optional

import numpy as np

from src.curve.fermat import (
    FermatCurve,
    h_group,
    kernel_basis,
    on_curve,
    principal_root,
    random_fiber_point,
)
from src.errors import CapExceeded, NoLift
from src.lift.automorphism import CurveAutomorphism, apply_auto, compose_autos, inverse_perm
from src.orbifold.configuration import ConfigSymmetry
from src.sphere.mobius import DEFAULT_EPS
from src.utils.linalg import in_row_space, null_space

logger = logging.getLogger(__name__)

DEFAULT_LIFT_CAP = 10**6


@dataclass(frozen=True)
class LiftFamily:
    symmetry: ConfigSymmetry
    tk: tuple[complex, ...]
    lifts: tuple[CurveAutomorphism, ...]
    exponents: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.lifts)


def lift_system(curve: FermatCurve, perm: tuple[int, ...], anticonformal: bool) -> np.ndarray:
    """Rows (r, K): sum_i chi(Q)_{r,i} K_{sigma^-1(i)} u_i = 0, with u = t or conj(t)."""
    q = np.conj(curve.Q) if anticonformal else curve.Q
    kb = kernel_basis(curve)[:, list(inverse_perm(perm))]
    return np.vstack([q * kvec[None, :] for kvec in kb])


def solve_lift_constants(curve: FermatCurve, s: ConfigSymmetry,
                         eps: float = DEFAULT_EPS) -> tuple[complex, ...]:
    """The k-th powers t_i = c_i^k of a lift of ``s``, scaled so t_1 = 1."""
    if len(s.perm) != curve.size:
        raise NoLift(f"symmetry permutes {len(s.perm)} points, curve has {curve.size}")
    system = lift_system(curve, s.perm, s.anticonformal)
    basis = null_space(system, eps)
    if basis.shape[1] != 1:
        raise NoLift(
            f"lift equations for {s.cycles()} have a {basis.shape[1]}-dimensional solution space")
    u = basis[:, 0]
    t = np.conj(u) if s.anticonformal else u
    scale = float(np.max(np.abs(t)))
    if np.any(np.abs(t) <= eps * scale):
        raise NoLift(f"lift constants for {s.cycles()} vanish: {t}")
    t = t / t[0]
    return tuple(complex(z) for z in t)


def enumerate_lifts(curve: FermatCurve, s: ConfigSymmetry, cap: int = DEFAULT_LIFT_CAP,
                    eps: float = DEFAULT_EPS) -> LiftFamily:
    """All k^n lifts, ordered by exponent vector (e_2, ..., e_{n+1}) with e_1 = 0."""
    count = curve.lift_count
    if count > cap:
        raise CapExceeded(f"k^n = {count} lifts exceeds the cap {cap}")
    tk = solve_lift_constants(curve, s, eps)
    k = curve.k
    zeta = cmath.exp(2j * math.pi / k)
    roots = [principal_root(t, k) for t in tk]
    lifts: list[CurveAutomorphism] = []
    exps: list[tuple[int, ...]] = []
    for tail in product(range(k), repeat=curve.n):
        e = (0,) + tail
        c = tuple(r * zeta ** ei for r, ei in zip(roots, e))
        lifts.append(CurveAutomorphism(s.perm, c, s.anticonformal))
        exps.append(e)
    logger.debug("lift family %s: %d lifts", s.cycles(), len(lifts))
    return LiftFamily(symmetry=s, tk=tk, lifts=tuple(lifts), exponents=tuple(exps))


def transformed_rows(rows: np.ndarray, a: CurveAutomorphism, k: int) -> np.ndarray:
    """Pull the equations ``rows`` back along ``a`` in the variables y = x^k.

    v_{r,j} = rows_{r,sigma(j)} t_{sigma(j)}, conjugated when ``a`` is anticonformal.
    """
    t = a.constants ** k
    sigma = list(a.perm)
    v = np.asarray(rows, dtype=complex)[:, sigma] * t[sigma][None, :]
    return np.conj(v) if a.anticonformal else v


def maps_rowspace(curve: FermatCurve, a: CurveAutomorphism, eps: float = DEFAULT_EPS,
                  target_rows: Optional[np.ndarray] = None) -> bool:
    """Equations of the target (default: the curve itself) pull back into rowspace(Q)."""
    rows = curve.Q if target_rows is None else target_rows
    return in_row_space(curve.Q, transformed_rows(rows, a, curve.k), eps)


def is_curve_automorphism(curve: FermatCurve, a: CurveAutomorphism, eps: float = DEFAULT_EPS,
                          samples: int = 20, seed: int = 0) -> bool:
    """Rank test on the transformed equations plus ``samples`` random fiber points."""
    if a.size != curve.size or not maps_rowspace(curve, a, eps):
        return False
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        p = random_fiber_point(curve, rng, eps)
        if not on_curve(curve, apply_auto(a, p), eps):
            return False
    return True


def is_h_coset(curve: FermatCurve, family: LiftFamily, eps: float = DEFAULT_EPS,
               cap: int = DEFAULT_LIFT_CAP) -> bool:
    """The lifts are exactly {h ∘ f0 : h in H} for the first lift f0."""
    if not family.lifts:
        return False
    f0 = family.lifts[0]
    coset = [compose_autos(h, f0) for h in h_group(curve, cap)]
    if len(coset) != len(family):
        return False
    return all(any(a.equals(b, eps) for b in family.lifts) for a in coset)
