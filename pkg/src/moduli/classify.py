"""Is the field of moduli of a generalized Fermat curve real, and is the curve real?

Over C/R the field of moduli is R exactly when the curve admits an
anticonformal automorphism, and R is a field of definition exactly when it
admits an anticonformal involution. With H normal in Aut(S), every
automorphism descends to a symmetry of the cone points, so:

  1. no anticonformal cone-point symmetry   -> field of moduli is not R
  2. otherwise every such symmetry lifts    -> field of moduli is R
  3. an exhaustive scan of all anticonformal lifts decides reality.

Whether H is normal is known for k prime with (n-1)(k-1) > 2 and for type
(2,4); elsewhere the verdict is reported as conditional on it.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
from tqdm import tqdm

from src.curve.fermat import FermatCurve, cone_points
from src.errors import CapExceeded, NoLift, NonHyperbolic
from src.lift.automorphism import CurveAutomorphism, auto_order, is_involution
from src.lift.lifting import DEFAULT_LIFT_CAP, LiftFamily, enumerate_lifts, is_curve_automorphism
from src.orbifold.configuration import ConfigSymmetry, is_involutive, symmetries
from src.sphere.mobius import DEFAULT_EPS, order

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    FIELD_OF_MODULI_NOT_R = "field_of_moduli_not_R"
    MODULI_R_AND_REAL = "moduli_R_and_real"
    MODULI_R_NOT_REAL = "moduli_R_not_real"


class Assumption(str, Enum):
    UNCONDITIONAL = "unconditional"
    CONDITIONAL = "conditional_on_normalizer"


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def assumption_for(k: int, n: int) -> Assumption:
    if (is_prime(k) and (n - 1) * (k - 1) > 2) or (k, n) == (2, 4):
        return Assumption.UNCONDITIONAL
    return Assumption.CONDITIONAL


@dataclass(frozen=True)
class Exhaustion:
    antisymmetries: int
    lifts_scanned: int
    lifts_excluded_by_permutation: int
    involutions_found: int

    def as_dict(self) -> dict:
        return {
            "antisymmetries": self.antisymmetries,
            "lifts_scanned": self.lifts_scanned,
            "lifts_excluded_by_permutation": self.lifts_excluded_by_permutation,
            "involutions_found": self.involutions_found,
        }


@dataclass(frozen=True)
class FamilyScan:
    symmetry: ConfigSymmetry
    map_order: int
    family: LiftFamily
    involutions: tuple[int, ...]  # indices into family.lifts
    excluded: bool


@dataclass(frozen=True)
class InvolutionSearch:
    involution: Optional[CurveAutomorphism]
    involution_symmetry: Optional[ConfigSymmetry]
    generator: Optional[CurveAutomorphism]
    generator_symmetry: Optional[ConfigSymmetry]
    exhaustion: Exhaustion
    scans: tuple[FamilyScan, ...]


@dataclass(frozen=True)
class ModuliClassification:
    verdict: Verdict
    witness: Optional[CurveAutomorphism]
    witness_order: Optional[int]
    witness_symmetry: Optional[ConfigSymmetry]
    exhaustion: Exhaustion
    assumption: Assumption
    epsilon: float


def involution_mask(family: LiftFamily, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Lifts whose square is the identity: d_i = c_i conj(c_sigma(i)) constant.

    Only meaningful when sigma is an involution and the family is anticonformal.
    """
    c = np.array([a.c for a in family.lifts], dtype=complex)
    sigma = list(family.symmetry.perm)
    d = c * np.conj(c[:, sigma])
    ref = d[:, :1]
    return np.max(np.abs(d - ref), axis=1) <= eps * np.maximum(1.0, np.abs(ref[:, 0]))


def _scan_family(curve: FermatCurve, s: ConfigSymmetry, map_order: int, lift_cap: int,
                 eps: float) -> FamilyScan:
    family = enumerate_lifts(curve, s, lift_cap, eps)
    if not is_involutive(s.perm):
        return FamilyScan(s, map_order, family, (), excluded=True)
    hits = tuple(int(i) for i in np.flatnonzero(involution_mask(family, eps)))
    return FamilyScan(s, map_order, family, hits, excluded=False)


def anticonformal_families(curve: FermatCurve, eps: float = DEFAULT_EPS,
                           order_cap: Optional[int] = None) -> list[tuple[ConfigSymmetry, int]]:
    """Anticonformal cone-point symmetries with their orders, lowest order first."""
    cfg = cone_points(curve, eps)
    cap = min(order_cap or cfg.default_order_cap(), cfg.default_order_cap())
    fams = [(s, order(s.map, cap, eps)) for s in symmetries(cfg, "anticonformal", eps)]
    return sorted(fams, key=lambda item: (item[1], item[0].perm))


def find_anticonformal_involution(curve: FermatCurve, eps: float = DEFAULT_EPS,
                                  order_cap: Optional[int] = None,
                                  lift_cap: int = DEFAULT_LIFT_CAP,
                                  workers: int = 1, progress: bool = False) -> InvolutionSearch:
    """Scan every lift of every anticonformal symmetry for an involution.

    Families whose permutation is not an involution are counted as scanned and
    excluded without testing their lifts. Results are aggregated in family
    order, so threads do not change the outcome.
    """
    if not curve.hyperbolic:
        raise NonHyperbolic(f"type ({curve.k},{curve.n}) is not hyperbolic")
    if curve.lift_count > lift_cap:
        logger.warning("k^n = %d exceeds lift cap %d; search not attempted",
                       curve.lift_count, lift_cap)
        raise CapExceeded(f"k^n = {curve.lift_count} lifts exceeds the cap {lift_cap}")

    fams = anticonformal_families(curve, eps, order_cap)
    scans: list[Optional[FamilyScan]] = [None] * len(fams)
    if workers > 1 and len(fams) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(_scan_family, curve, s, q, lift_cap, eps): idx
                for idx, (s, q) in enumerate(fams)
            }
            for future in tqdm(as_completed(futures), total=len(futures),
                               desc="Lift families", disable=not progress):
                scans[futures[future]] = future.result()
    else:
        for idx, (s, q) in enumerate(tqdm(fams, desc="Lift families", disable=not progress)):
            scans[idx] = _scan_family(curve, s, q, lift_cap, eps)

    done: list[FamilyScan] = [scan for scan in scans if scan is not None]
    scanned = sum(len(scan.family) for scan in done)
    excluded = sum(len(scan.family) for scan in done if scan.excluded)
    found = sum(len(scan.involutions) for scan in done)
    exhaustion = Exhaustion(len(done), scanned, excluded, found)

    involution = inv_sym = generator = gen_sym = None
    if done:
        generator, gen_sym = done[0].family.lifts[0], done[0].symmetry
    for scan in done:
        if scan.involutions:
            involution = scan.family.lifts[scan.involutions[0]]
            inv_sym = scan.symmetry
            break
    logger.info("scanned %d anticonformal families, %d lifts (%d excluded by permutation), "
                "%d involutions", exhaustion.antisymmetries, scanned, excluded, found)
    return InvolutionSearch(involution, inv_sym, generator, gen_sym, exhaustion, tuple(done))


def classify(curve: FermatCurve, eps: float = DEFAULT_EPS, order_cap: Optional[int] = None,
             lift_cap: int = DEFAULT_LIFT_CAP, workers: int = 1, progress: bool = False,
             samples: int = 20, seed: int = 0) -> ModuliClassification:
    assumption = assumption_for(curve.k, curve.n)
    search = find_anticonformal_involution(curve, eps, order_cap, lift_cap, workers, progress)
    if assumption is Assumption.CONDITIONAL:
        logger.warning("type (%d,%d): verdict assumes H is normal in Aut(S)", curve.k, curve.n)

    if search.generator is None:
        verdict, witness, sym = Verdict.FIELD_OF_MODULI_NOT_R, None, None
    elif search.involution is not None:
        verdict, witness, sym = Verdict.MODULI_R_AND_REAL, search.involution, search.involution_symmetry
    else:
        verdict, witness, sym = Verdict.MODULI_R_NOT_REAL, search.generator, search.generator_symmetry

    witness_order = None
    if witness is not None:
        if not is_curve_automorphism(curve, witness, eps, samples=samples, seed=seed):
            raise NoLift(f"witness over {sym.cycles()} failed the automorphism check")
        witness_order = auto_order(witness, eps=eps)
        if verdict is Verdict.MODULI_R_AND_REAL and not is_involution(witness, eps):
            raise NoLift(f"witness over {sym.cycles()} has order {witness_order}, not 2")
    logger.info("verdict: %s (%s)", verdict.value, assumption.value)
    return ModuliClassification(verdict, witness, witness_order, sym, search.exhaustion,
                                assumption, eps)
