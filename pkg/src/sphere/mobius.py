"""Points of the Riemann sphere and extended Möbius transformations.

A point is a projective pair [u:v] (z = u/v, infinity = [1:0]); a map is a 2x2
complex matrix plus an orientation flag. Anticonformal maps conjugate the
representative first, z -> (a*conj(z) + b) / (c*conj(z) + d).

Matrices are stored unnormalized. Every comparison is projective: both matrices
are divided by the entry where the first one has maximum modulus and compared
entrywise within epsilon.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from src.errors import DegenerateTriple, NotAnticonformal, NotFiniteOrder

logger = logging.getLogger(__name__)

DEFAULT_EPS = 1e-9
ORDER_CAP_CEILING = 40320

# [u:v] is read as infinity when |v| is this small relative to |u|.
_INF_REL = 1e-14


def _finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


@dataclass(frozen=True)
class SpherePoint:
    u: complex
    v: complex = 1.0 + 0.0j

    def __post_init__(self):
        u, v = complex(self.u), complex(self.v)
        if not (_finite(u) and _finite(v)):
            raise ValueError(f"SpherePoint components must be finite, got [{u}:{v}]")
        if u == 0 and v == 0:
            raise ValueError("SpherePoint [0:0] is not a point")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @classmethod
    def from_complex(cls, z: complex) -> "SpherePoint":
        return cls(complex(z), 1.0 + 0.0j)

    @classmethod
    def infinity(cls) -> "SpherePoint":
        return cls(1.0 + 0.0j, 0.0j)

    @property
    def is_infinity(self) -> bool:
        return abs(self.v) <= _INF_REL * abs(self.u)

    def canonical(self) -> "SpherePoint":
        if self.is_infinity:
            return SpherePoint.infinity()
        return SpherePoint(self.u / self.v, 1.0 + 0.0j)

    def to_complex(self) -> complex:
        if self.is_infinity:
            raise ValueError("The point at infinity has no finite coordinate")
        return self.u / self.v

    def conjugate(self) -> "SpherePoint":
        return SpherePoint(self.u.conjugate(), self.v.conjugate())

    def as_vector(self) -> np.ndarray:
        return np.array([self.u, self.v], dtype=complex)


def chordal_distance(p: SpherePoint, q: SpherePoint) -> float:
    """Chordal distance on the unit sphere, 2|u1 v2 - u2 v1| / (|p| |q|). At most 2."""
    num = abs(p.u * q.v - q.u * p.v)
    den = math.hypot(abs(p.u), abs(p.v)) * math.hypot(abs(q.u), abs(q.v))
    return 2.0 * num / den


def projective_equal(m1: np.ndarray, m2: np.ndarray, eps: float = DEFAULT_EPS) -> bool:
    a = np.asarray(m1, dtype=complex).ravel()
    b = np.asarray(m2, dtype=complex).ravel()
    idx = int(np.argmax(np.abs(a)))
    if abs(b[idx]) <= eps * float(np.max(np.abs(b))):
        return False
    a = a / a[idx]
    b = b / b[idx]
    return bool(np.max(np.abs(a - b)) <= eps)


@dataclass(frozen=True, eq=False)
class ExtendedMobius:
    m: np.ndarray
    anticonformal: bool = False

    def __post_init__(self):
        m = np.array(self.m, dtype=complex).reshape(2, 2)
        if not np.all(np.isfinite(m)):
            raise ValueError("Möbius matrix has non-finite entries")
        scale = float(np.max(np.abs(m)))
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if scale == 0.0 or abs(det) <= DEFAULT_EPS * scale * scale:
            raise ValueError(f"Singular Möbius matrix (det={det})")
        m.setflags(write=False)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "anticonformal", bool(self.anticonformal))

    @classmethod
    def identity(cls) -> "ExtendedMobius":
        return cls(np.eye(2))

    @classmethod
    def conjugation(cls) -> "ExtendedMobius":
        """z -> conj(z)."""
        return cls(np.eye(2), anticonformal=True)

    @classmethod
    def from_coefficients(cls, a: complex, b: complex, c: complex, d: complex,
                          anticonformal: bool = False) -> "ExtendedMobius":
        return cls(np.array([[a, b], [c, d]], dtype=complex), anticonformal)

    @property
    def determinant(self) -> complex:
        m = self.m
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])

    def equals(self, other: "ExtendedMobius", eps: float = DEFAULT_EPS) -> bool:
        return self.anticonformal == other.anticonformal and projective_equal(self.m, other.m, eps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtendedMobius):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # tolerance-based equality

    def __call__(self, p: SpherePoint) -> SpherePoint:
        return apply(self, p)

    def __repr__(self) -> str:
        a, b, c, d = (complex(x) for x in self.m.ravel())
        z = "conj(z)" if self.anticonformal else "z"
        return f"ExtendedMobius(({a:.6g})*{z}+({b:.6g}) / ({c:.6g})*{z}+({d:.6g}))"


@dataclass(frozen=True)
class NormalForm:
    """conjugator ∘ t ∘ conjugator⁻¹ = (z -> parameter / conj(z)), parameter**N = 1."""

    N: int
    conjugator: ExtendedMobius = field(compare=False)
    parameter: complex
    order: int


def apply(t: ExtendedMobius, p: SpherePoint) -> SpherePoint:
    u, v = (p.u.conjugate(), p.v.conjugate()) if t.anticonformal else (p.u, p.v)
    m = t.m
    nu = m[0, 0] * u + m[0, 1] * v
    nv = m[1, 0] * u + m[1, 1] * v
    return SpherePoint(complex(nu), complex(nv)).canonical()


def compose(t1: ExtendedMobius, t2: ExtendedMobius) -> ExtendedMobius:
    """t1 ∘ t2."""
    m2 = np.conj(t2.m) if t1.anticonformal else t2.m
    return ExtendedMobius(t1.m @ m2, t1.anticonformal != t2.anticonformal)


def _adjugate(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


def inverse(t: ExtendedMobius) -> ExtendedMobius:
    adj = _adjugate(t.m)
    if t.anticonformal:
        # t = M∘J, so t⁻¹ = J∘M⁻¹ = conj(M⁻¹)∘J
        return ExtendedMobius(np.conj(adj), True)
    return ExtendedMobius(adj, False)


def is_identity(t: ExtendedMobius, eps: float = DEFAULT_EPS) -> bool:
    return (not t.anticonformal) and projective_equal(t.m, np.eye(2), eps)


def power(t: ExtendedMobius, e: int) -> ExtendedMobius:
    base = t if e >= 0 else inverse(t)
    result = ExtendedMobius.identity()
    for _ in range(abs(int(e))):
        result = compose(result, base)
    return result


def _cross(x: SpherePoint, w: SpherePoint) -> complex:
    # vanishes exactly when w = x
    return w.u * x.v - w.v * x.u


def mobius_to_standard(p: SpherePoint, q: SpherePoint, r: SpherePoint,
                       eps: float = DEFAULT_EPS) -> ExtendedMobius:
    """The conformal map sending p -> infinity, q -> 0, r -> 1."""
    for a, b, label in ((p, q, "p,q"), (p, r, "p,r"), (q, r, "q,r")):
        if chordal_distance(a, b) <= eps:
            raise DegenerateTriple(f"Points {label} coincide: {a} and {b}")
    lp = _cross(p, r)
    lq = _cross(q, r)
    m = np.array(
        [[q.v * lp, -q.u * lp],
         [p.v * lq, -p.u * lq]],
        dtype=complex,
    )
    return ExtendedMobius(m)


def order(t: ExtendedMobius, cap: int = ORDER_CAP_CEILING, eps: float = DEFAULT_EPS) -> int:
    """Smallest q >= 1 with t**q the identity. Even for anticonformal t."""
    if cap < 1:
        raise ValueError(f"order cap must be >= 1, got {cap}")
    cap = min(int(cap), ORDER_CAP_CEILING)
    current = t
    for q in range(1, cap + 1):
        if is_identity(current, eps):
            return q
        current = compose(current, t)
    raise NotFiniteOrder(f"No power of {t!r} up to {cap} is the identity")


def fixed_points(t: ExtendedMobius) -> list[SpherePoint]:
    """Fixed points of a conformal map, from the eigenvectors of its matrix."""
    if t.anticonformal:
        raise ValueError("fixed_points expects a conformal map")
    _, vecs = np.linalg.eig(t.m)
    pts: list[SpherePoint] = []
    for j in range(2):
        cand = SpherePoint(complex(vecs[0, j]), complex(vecs[1, j])).canonical()
        if all(chordal_distance(cand, q) > 1e-7 for q in pts):
            pts.append(cand)
    return pts


# Probe points for choosing a non-fixed point of an order-two map. No circle
# passes through all of them.
_PROBES = (
    SpherePoint.from_complex(0.0),
    SpherePoint.from_complex(1.0),
    SpherePoint.infinity(),
    SpherePoint.from_complex(1j),
    SpherePoint.from_complex(-0.7 + 1.9j),
    SpherePoint.from_complex(2.3 - 0.4j),
)


def _third_point(a: SpherePoint, b: SpherePoint) -> SpherePoint:
    return max(_PROBES, key=lambda r: min(chordal_distance(r, a), chordal_distance(r, b)))


def anticonformal_normal_form(t: ExtendedMobius, cap: int = ORDER_CAP_CEILING,
                              eps: float = DEFAULT_EPS) -> NormalForm:
    """Conjugate t to z -> e^{2 pi i j/N} / conj(z), with 0 <= j <= N/2.

    N is the multiplicative order of the parameter. For t**2 != id the two
    fixed points of t**2 go to 0 and infinity; for an involution a point p
    with t(p) far from p goes to 0 and t(p) to infinity. A real rescaling then
    gives the parameter modulus one.
    """
    if not t.anticonformal:
        raise NotAnticonformal(f"{t!r} is conformal")
    two_m = order(t, cap, eps)
    a, b, c, d = (complex(x) for x in t.m.ravel())
    if (abs(a) + abs(d) <= eps * (abs(b) + abs(c))
            and abs(abs(b / c) - 1.0) <= eps and (b / c).imag >= -eps):
        conj, param = ExtendedMobius.identity(), b / c
    else:
        conj, param = _normalizing_map(t, eps)
    N = next((n for n in range(1, two_m + 1) if abs(param ** n - 1.0) <= max(eps, 1e-7)), None)
    if N is None:
        raise NotFiniteOrder(f"Normal-form parameter {param} is not a root of unity")
    expected = 2 * N if N % 2 else N
    if expected != two_m:
        raise NotFiniteOrder(f"Normal form N={N} is inconsistent with order {two_m}")
    logger.debug("normal form: order=%d N=%d parameter=%s", two_m, N, param)
    return NormalForm(N=N, conjugator=conj, parameter=param, order=two_m)


def _normalizing_map(t: ExtendedMobius, eps: float) -> tuple[ExtendedMobius, complex]:
    if is_identity(compose(t, t), eps):
        p = max(_PROBES, key=lambda x: chordal_distance(x, apply(t, x)))
        q = apply(t, p)
    else:
        fps = fixed_points(compose(t, t))
        if len(fps) != 2:
            raise NotFiniteOrder(f"t**2 of {t!r} is parabolic")
        p, q = fps
    g = mobius_to_standard(q, p, _third_point(p, q), eps)
    u = compose(compose(g, t), inverse(g))
    a, b, c, d = (complex(x) for x in u.m.ravel())
    if abs(a) + abs(d) > 1e-6 * (abs(b) + abs(c)):
        raise NotFiniteOrder(f"{t!r} does not swap the fixed points of its square")
    alpha = b / c
    h = ExtendedMobius.from_coefficients(1.0, 0.0, 0.0, math.sqrt(abs(alpha)))
    conj = compose(h, g)
    param = alpha / abs(alpha)
    if param.imag < -eps:
        # z -> 1/z turns e^{i phi}/conj(z) into e^{-i phi}/conj(z)
        conj = compose(ExtendedMobius.from_coefficients(0.0, 1.0, 1.0, 0.0), conj)
        param = param.conjugate()
    return conj, param


def unit_root(j: int, N: int) -> complex:
    return cmath.exp(2j * math.pi * j / N)
