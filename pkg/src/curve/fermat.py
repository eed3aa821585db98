"""Generalized Fermat curves of type (k, n).

The curve C(lambda_1, ..., lambda_{n-2}; k) in P^n is cut out by

    x1^k + x2^k + x3^k = 0
    lambda_j x1^k + x2^k + x_{j+3}^k = 0        j = 1 .. n-2

so with y_i = x_i^k every equation is a row of the coefficient matrix Q
applied to y. The group H generated by the coordinate scalings a_j acts with
quotient map pi([x]) = -(x2/x1)^k, branched over infinity, 0, 1 and the lambdas.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from itertools import product
from typing import TYPE_CHECKING, Optional, Sequence

import numpy as np

from src.errors import CapExceeded, GenusOverflow, InputError, InvalidLambda, NotOnCurve, RamifiedFiber
from src.orbifold.configuration import ConeConfiguration
from src.sphere.mobius import DEFAULT_EPS, SpherePoint, chordal_distance

if TYPE_CHECKING:
    from src.lift.automorphism import CurveAutomorphism

logger = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1


def genus(k: int, n: int) -> int:
    """g = 1 + k^(n-1) ((n-1)(k-1) - 2) / 2, in exact integer arithmetic."""
    if k < 2 or n < 2:
        raise InputError(f"genus needs k, n >= 2, got k={k} n={n}")
    power = k ** (n - 1)
    if power > INT64_MAX:
        raise GenusOverflow(f"k^(n-1) = {k}^{n - 1} exceeds the 64-bit range")
    return 1 + (power * ((n - 1) * (k - 1) - 2)) // 2


def is_hyperbolic(k: int, n: int) -> bool:
    return (n - 1) * (k - 1) > 2


def coefficient_matrix(lambdas: Sequence[complex]) -> np.ndarray:
    n = len(lambdas) + 2
    q = np.zeros((n - 1, n + 1), dtype=complex)
    q[0, :3] = 1.0
    for j, lam in enumerate(lambdas, start=1):
        q[j, 0] = lam
        q[j, 1] = 1.0
        q[j, j + 2] = 1.0
    return q


@dataclass(frozen=True, eq=False)
class FermatCurve:
    k: int
    lambdas: tuple[complex, ...]
    Q: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        lambdas = tuple(complex(z) for z in self.lambdas)
        object.__setattr__(self, "lambdas", lambdas)
        q = coefficient_matrix(lambdas)
        q.setflags(write=False)
        object.__setattr__(self, "Q", q)

    @property
    def n(self) -> int:
        return len(self.lambdas) + 2

    @property
    def size(self) -> int:
        return self.n + 1

    @property
    def hyperbolic(self) -> bool:
        return is_hyperbolic(self.k, self.n)

    @property
    def genus(self) -> int:
        return genus(self.k, self.n)

    @property
    def lift_count(self) -> int:
        return self.k ** self.n

    def conjugate(self) -> "FermatCurve":
        """The Galois-conjugate curve: same k, conjugated lambdas."""
        return FermatCurve(self.k, tuple(z.conjugate() for z in self.lambdas))

    def is_real(self, eps: float = DEFAULT_EPS) -> bool:
        return all(abs(z.imag) <= eps * max(1.0, abs(z)) for z in self.lambdas)


def build(k: int, lambdas: Sequence[complex], eps: float = DEFAULT_EPS) -> FermatCurve:
    if int(k) != k or k < 2:
        raise InputError(f"k must be an integer >= 2, got {k}")
    lams = [complex(z) for z in lambdas]
    pts = [SpherePoint.from_complex(z) for z in lams]
    zero, one = SpherePoint.from_complex(0.0), SpherePoint.from_complex(1.0)
    for j, p in enumerate(pts, start=1):
        if chordal_distance(p, zero) <= eps or chordal_distance(p, one) <= eps:
            raise InvalidLambda(f"lambda_{j} = {lams[j - 1]} is 0 or 1")
        for i in range(1, j):
            if chordal_distance(p, pts[i - 1]) <= eps:
                raise InvalidLambda(f"lambda_{i} and lambda_{j} coincide")
    curve = FermatCurve(int(k), tuple(lams))
    if not curve.hyperbolic:
        logger.warning("type (%d,%d) is not hyperbolic; moduli classification will refuse it",
                       curve.k, curve.n)
    return curve


def kernel_basis(curve: FermatCurve) -> np.ndarray:
    """Two vectors spanning ker(Q): rows K1 = (0,1,-1,...,-1), K2 = (1,0,-1,-lambda_1,...)."""
    size = curve.size
    kb = np.zeros((2, size), dtype=complex)
    kb[0, 1] = 1.0
    kb[0, 2:] = -1.0
    kb[1, 0] = 1.0
    kb[1, 2] = -1.0
    kb[1, 3:] = [-lam for lam in curve.lambdas]
    return kb


def cone_points(curve: FermatCurve, eps: float = DEFAULT_EPS) -> ConeConfiguration:
    pts = [SpherePoint.infinity(), SpherePoint.from_complex(0.0), SpherePoint.from_complex(1.0)]
    pts += [SpherePoint.from_complex(z) for z in curve.lambdas]
    return ConeConfiguration(tuple(pts), eps)


# ---------------------------------------------------------------------
# Points
# ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CurvePoint:
    x: np.ndarray

    def __post_init__(self):
        x = np.array(self.x, dtype=complex).ravel()
        if not np.all(np.isfinite(x)) or not np.any(x != 0):
            raise ValueError("CurvePoint needs finite, not-all-zero coordinates")
        x.setflags(write=False)
        object.__setattr__(self, "x", x)

    def canonical(self) -> "CurvePoint":
        idx = int(np.argmax(np.abs(self.x)))
        return CurvePoint(self.x / self.x[idx])

    def equals(self, other: "CurvePoint", eps: float = DEFAULT_EPS) -> bool:
        a, b = self.x, other.x
        idx = int(np.argmax(np.abs(a)))
        if a.shape != b.shape or abs(b[idx]) <= eps * float(np.max(np.abs(b))):
            return False
        return bool(np.max(np.abs(a / a[idx] - b / b[idx])) <= eps)


def residual(curve: FermatCurve, p: CurvePoint) -> float:
    x = p.canonical().x
    if x.shape != (curve.size,):
        raise ValueError(f"point has {x.shape[0]} coordinates, curve needs {curve.size}")
    return float(np.max(np.abs(curve.Q @ x ** curve.k)))


def on_curve(curve: FermatCurve, p: CurvePoint, eps: float = DEFAULT_EPS) -> bool:
    return residual(curve, p) < eps


def quotient_map(curve: FermatCurve, p: CurvePoint, eps: float = DEFAULT_EPS) -> SpherePoint:
    """pi([x]) = [-x2^k : x1^k]."""
    if not on_curve(curve, p, eps):
        raise NotOnCurve(f"residual {residual(curve, p):.3e} >= {eps:g}")
    x = p.canonical().x
    return SpherePoint(-x[1] ** curve.k, x[0] ** curve.k).canonical()


def principal_root(w: complex, k: int) -> complex:
    """|w|^(1/k) e^{i arg(w)/k} with arg in (-pi, pi]."""
    w = complex(w.real, w.imag + 0.0)  # -0.0 imaginary parts would give arg = -pi
    if w == 0:
        return 0j
    return abs(w) ** (1.0 / k) * cmath.exp(1j * cmath.phase(w) / k)


def fiber_points(curve: FermatCurve, z: SpherePoint, root_choice: Sequence[int],
                 eps: float = DEFAULT_EPS) -> CurvePoint:
    """The point over z with x1 = zeta^e1 and x_i the principal root times zeta^e_i."""
    k = curve.k
    if len(root_choice) != curve.size:
        raise ValueError(f"root_choice needs {curve.size} entries, got {len(root_choice)}")
    if any(chordal_distance(z, c) <= eps for c in cone_points(curve, eps).points):
        raise RamifiedFiber(f"{z} is a cone point")
    w = z.to_complex()
    targets = [1.0 + 0j, -w, w - 1.0] + [w - lam for lam in curve.lambdas]
    zeta = cmath.exp(2j * math.pi / k)
    x = [principal_root(t, k) * zeta ** (int(e) % k) for t, e in zip(targets, root_choice)]
    return CurvePoint(np.array(x, dtype=complex))


def random_fiber_point(curve: FermatCurve, rng: np.random.Generator,
                       eps: float = DEFAULT_EPS, min_gap: float = 1e-2) -> CurvePoint:
    """A point over a random non-cone value, kept ``min_gap`` away from the cone points."""
    cones = cone_points(curve, eps).points
    while True:
        w = complex(rng.normal(scale=2.0), rng.normal(scale=2.0))
        z = SpherePoint.from_complex(w)
        if all(chordal_distance(z, c) > min_gap for c in cones):
            break
    choice = [0] + [int(e) for e in rng.integers(0, curve.k, size=curve.size - 1)]
    return fiber_points(curve, z, choice, eps)


# ---------------------------------------------------------------------
# The group H
# ---------------------------------------------------------------------

def h_generators(curve: FermatCurve) -> list["CurveAutomorphism"]:
    """a_1 .. a_n; a_j multiplies x_j by e^{2 pi i/k}, then c is rescaled so c_1 = 1."""
    from src.lift.automorphism import CurveAutomorphism

    zeta = cmath.exp(2j * math.pi / curve.k)
    ident = tuple(range(curve.size))
    gens = []
    for j in range(curve.n):
        c = [1.0 + 0j] * curve.size
        c[j] = zeta
        gens.append(CurveAutomorphism(ident, tuple(c)))
    return gens


def h_group(curve: FermatCurve, cap: Optional[int] = None) -> list["CurveAutomorphism"]:
    """All k^n elements of H, diagonal with c_1 = 1 and c_i in the k-th roots of unity."""
    from src.lift.automorphism import CurveAutomorphism

    if cap is not None and curve.lift_count > cap:
        raise CapExceeded(f"|H| = {curve.lift_count} exceeds cap {cap}")
    zeta = cmath.exp(2j * math.pi / curve.k)
    ident = tuple(range(curve.size))
    return [
        CurveAutomorphism(ident, (1.0 + 0j,) + tuple(zeta ** e for e in exps))
        for exps in product(range(curve.k), repeat=curve.n)
    ]
