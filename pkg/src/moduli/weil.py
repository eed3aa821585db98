"""Weil's descent condition for the extension C/R.

For Gal(C/R) = {id, sigma} a descent datum is an isomorphism
f_sigma: X -> X^sigma (the conjugate curve) with f_id = id. The only
nontrivial cocycle condition is f_sigma^sigma ∘ f_sigma = id, where the twist
conjugates the constants of f_sigma.

An anticonformal automorphism tau of X gives f_sigma = J ∘ tau, J being
coordinatewise conjugation X -> X^sigma. It is the conformal coefficient map
with perm sigma and constants conj(c), and the cocycle holds exactly when tau
is an involution.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from src.curve.fermat import FermatCurve
from src.errors import NotAMapToConjugate, NotAnticonformal
from src.lift.automorphism import CurveAutomorphism, compose_autos, identity_auto, is_identity_auto
from src.lift.lifting import maps_rowspace
from src.sphere.mobius import DEFAULT_EPS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeilFamily:
    f_sigma: CurveAutomorphism

    @property
    def f_id(self) -> CurveAutomorphism:
        return identity_auto(self.f_sigma.size)

    @classmethod
    def from_anticonformal(cls, tau: CurveAutomorphism) -> "WeilFamily":
        """f_sigma = J ∘ tau."""
        if not tau.anticonformal:
            raise NotAnticonformal("a Weil family is built from an anticonformal automorphism")
        return cls(CurveAutomorphism(tau.perm, tuple(np.conj(tau.constants)), False))

    @classmethod
    def conjugation(cls, size: int) -> "WeilFamily":
        """The family of J itself: f_sigma = identity coordinates, X -> X^sigma."""
        return cls(identity_auto(size))


def twisted(f: CurveAutomorphism) -> CurveAutomorphism:
    """f^sigma: the same map with conjugated constants."""
    return CurveAutomorphism(f.perm, tuple(np.conj(f.constants)), f.anticonformal)


def maps_to_conjugate(curve: FermatCurve, f: CurveAutomorphism, eps: float = DEFAULT_EPS) -> bool:
    return maps_rowspace(curve, f, eps, target_rows=np.conj(curve.Q))


def check_weil_cocycle(curve: FermatCurve, w: WeilFamily, eps: float = DEFAULT_EPS) -> bool:
    if not maps_to_conjugate(curve, w.f_sigma, eps):
        raise NotAMapToConjugate("f_sigma does not map the curve onto its conjugate")
    ok = is_identity_auto(compose_autos(twisted(w.f_sigma), w.f_sigma), eps)
    logger.debug("Weil cocycle for perm %s: %s", w.f_sigma.perm, ok)
    return ok
