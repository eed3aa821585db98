"""Generalized permutation maps of P^n and their group law.

A CurveAutomorphism acts by

    x_i -> c_i * chi(x_{sigma^-1(i)})

where chi is complex conjugation for anticonformal maps and the identity
otherwise. The constants are kept with c_1 = 1, so two maps are equal when
perm, flag and c agree entrywise.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from src.curve.fermat import CurvePoint
from src.errors import NotFiniteOrder
from src.sphere.mobius import DEFAULT_EPS, ORDER_CAP_CEILING

logger = logging.getLogger(__name__)


def _check_perm(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(int(i) for i in perm)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
    return perm


def inverse_perm(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


@dataclass(frozen=True, eq=False)
class CurveAutomorphism:
    perm: tuple[int, ...]
    c: tuple[complex, ...]
    anticonformal: bool = False

    def __post_init__(self):
        perm = _check_perm(self.perm)
        c = np.array(self.c, dtype=complex).ravel()
        if c.shape != (len(perm),):
            raise ValueError(f"{len(c)} constants for a permutation of size {len(perm)}")
        if not np.all(np.isfinite(c)) or np.any(c == 0):
            raise ValueError("Automorphism constants must be finite and nonzero")
        c = c / c[0]
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "c", tuple(complex(z) for z in c))
        object.__setattr__(self, "anticonformal", bool(self.anticonformal))

    @property
    def size(self) -> int:
        return len(self.perm)

    @property
    def constants(self) -> np.ndarray:
        return np.array(self.c, dtype=complex)

    def act(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=complex)
        if self.anticonformal:
            x = np.conj(x)
        return self.constants * x[list(inverse_perm(self.perm))]

    def equals(self, other: "CurveAutomorphism", eps: float = DEFAULT_EPS) -> bool:
        return (
            self.perm == other.perm
            and self.anticonformal == other.anticonformal
            and bool(np.max(np.abs(self.constants - other.constants)) <= eps)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CurveAutomorphism):
            return NotImplemented
        return self.equals(other)

    __hash__ = None


def identity_auto(size: int) -> CurveAutomorphism:
    return CurveAutomorphism(tuple(range(size)), (1.0 + 0j,) * size)


def apply_auto(a: CurveAutomorphism, p: CurvePoint) -> CurvePoint:
    return CurvePoint(a.act(p.x))


def compose_autos(a1: CurveAutomorphism, a2: CurveAutomorphism) -> CurveAutomorphism:
    """a1 ∘ a2: perm sigma1 sigma2, c_i = c1_i * chi1(c2_{sigma1^-1(i)})."""
    if a1.size != a2.size:
        raise ValueError("automorphisms act on different spaces")
    inv1 = list(inverse_perm(a1.perm))
    c2 = a2.constants
    if a1.anticonformal:
        c2 = np.conj(c2)
    c = a1.constants * c2[inv1]
    perm = tuple(a1.perm[a2.perm[i]] for i in range(a1.size))
    return CurveAutomorphism(perm, tuple(c), a1.anticonformal != a2.anticonformal)


def auto_power(a: CurveAutomorphism, e: int) -> CurveAutomorphism:
    if e < 0:
        raise ValueError("negative powers are not supported")
    result = identity_auto(a.size)
    for _ in range(int(e)):
        result = compose_autos(result, a)
    return result


def is_identity_auto(a: CurveAutomorphism, eps: float = DEFAULT_EPS) -> bool:
    return (
        not a.anticonformal
        and a.perm == tuple(range(a.size))
        and bool(np.max(np.abs(a.constants - 1.0)) <= eps)
    )


def auto_order(a: CurveAutomorphism, cap: int = ORDER_CAP_CEILING,
               eps: float = DEFAULT_EPS) -> int:
    current = a
    for q in range(1, int(cap) + 1):
        if is_identity_auto(current, eps):
            return q
        current = compose_autos(current, a)
    raise NotFiniteOrder(f"no power of the automorphism up to {cap} is the identity")


def is_involution(a: CurveAutomorphism, eps: float = DEFAULT_EPS) -> bool:
    """Order exactly two. For anticonformal maps this is sigma^2 = id plus
    c_i * conj(c_{sigma(i)}) constant in i."""
    if is_identity_auto(a, eps):
        return False
    return is_identity_auto(compose_autos(a, a), eps)


def descend_to_involution(a: CurveAutomorphism, cap: int = ORDER_CAP_CEILING,
                          eps: float = DEFAULT_EPS) -> Optional[CurveAutomorphism]:
    """a^s when a is anticonformal of order 2s with s odd, else None."""
    if not a.anticonformal:
        return None
    q = auto_order(a, cap, eps)
    s = q // 2
    if s % 2 == 0:
        return None
    return auto_power(a, s)
