"""Orbit types of an anticonformal symmetry of finite order.

Conjugated to its normal form z -> e^{2 pi i/N} / conj(z), a symmetry of order
2M splits the cone points into orbits whose lengths depend only on N:

    N odd >= 3   lengths 2 (the pair {0, inf}), N (unit circle), 2N (elsewhere)
    N even >= 4  lengths 2 (the pair {0, inf}) and N
    N = 1        lengths 1 (fixed circle) and 2
    N = 2        length 2 only

With A, B, C the number of orbits of each kind (in the order 2N, N, 2 for
N >= 3, and 2, 1 for N = 1) the configuration size is

    n + 1 = 2*N*A + N*B + 2*C,   C in {0, 1}.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from src.errors import InconsistentOrbitLengths
from src.sphere.mobius import ExtendedMobius, SpherePoint, apply, chordal_distance, unit_root

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class OrbitTypeSolution:
    N: int
    A: int
    B: int
    C: int

    @property
    def size(self) -> int:
        return 2 * self.N * self.A + self.N * self.B + 2 * self.C

    def as_row(self) -> dict:
        return {"N": self.N, "A": self.A, "B": self.B, "C": self.C}


@dataclass(frozen=True)
class OrbitProfile:
    order2M: int
    N: int
    A: int
    B: int
    C: int

    @property
    def solution(self) -> OrbitTypeSolution:
        return OrbitTypeSolution(self.N, self.A, self.B, self.C)

    def as_row(self) -> dict:
        return {"order": self.order2M, **self.solution.as_row()}


def _allowed(N: int, A: int, C: int) -> bool:
    if N == 1:
        return C == 0
    if N == 2:
        return A == 0 and C == 0
    if N % 2 == 0:
        return A == 0
    return True


def orbit_type_solutions(n: int, max_n: int | None = None) -> list[OrbitTypeSolution]:
    """Every (N, A, B, C) with 1 <= N <= max_n solving the orbit equation for n + 1 points."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    size = n + 1
    max_n = size if max_n is None else int(max_n)
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    out: list[OrbitTypeSolution] = []
    for N in range(1, max_n + 1):
        for C in (0, 1):
            for A in range(0, size // (2 * N) + 1):
                if not _allowed(N, A, C):
                    continue
                rest = size - 2 * N * A - 2 * C
                if rest < 0 or rest % N:
                    continue
                out.append(OrbitTypeSolution(N, A, rest // N, C))
    return sorted(out)


def profile_from_orbit_lengths(N: int, order2M: int, lengths: Iterable[int]) -> OrbitProfile:
    counts = Counter(int(x) for x in lengths)
    if N == 1:
        kinds = {2: "A", 1: "B"}
    elif N == 2:
        kinds = {2: "B"}
    elif N % 2 == 0:
        kinds = {N: "B", 2: "C"}
    else:
        kinds = {2 * N: "A", N: "B", 2: "C"}
    stray = sorted(set(counts) - set(kinds))
    if stray:
        raise InconsistentOrbitLengths(
            f"Orbit lengths {sorted(counts.elements())} do not fit N={N} (unexpected {stray})")
    tally = {"A": 0, "B": 0, "C": 0}
    for length, kind in kinds.items():
        tally[kind] += counts.get(length, 0)
    if tally["C"] > 1:
        raise InconsistentOrbitLengths(f"{tally['C']} orbits of length 2 for N={N}; at most one")
    return OrbitProfile(order2M=order2M, N=N, **tally)


def normal_form_map(N: int) -> ExtendedMobius:
    """z -> e^{2 pi i/N} / conj(z)."""
    return ExtendedMobius.from_coefficients(0.0, unit_root(1, N), 1.0, 0.0, anticonformal=True)


def _orbit(tau: ExtendedMobius, z: SpherePoint, limit: int) -> list[SpherePoint]:
    pts = [z.canonical()]
    cur = apply(tau, z)
    while chordal_distance(cur, pts[0]) > 1e-9:
        pts.append(cur)
        if len(pts) > limit:
            raise InconsistentOrbitLengths(f"Orbit of {z} longer than {limit}")
        cur = apply(tau, cur)
    return pts


def realize_orbit_type(n: int, sol: OrbitTypeSolution) -> tuple[list[SpherePoint], ExtendedMobius]:
    """Cone points invariant under the normal form map with exactly the profile ``sol``.

    Off-circle orbits use radii 3/2, 2, 5/2, ...; circle orbits use evenly
    spaced phases inside one fundamental arc.
    """
    if sol.size != n + 1 or not _allowed(sol.N, sol.A, sol.C):
        raise ValueError(f"{sol} is not an orbit type for n={n}")
    N = sol.N
    tau = normal_form_map(N)
    theta = 2.0 * math.pi / N
    seeds: list[SpherePoint] = []
    if sol.C:
        seeds.append(SpherePoint.from_complex(0.0))

    def off_circle(i: int) -> SpherePoint:
        r = 1.5 + 0.5 * i
        psi = theta / 3.0 + 0.37 * i
        return SpherePoint.from_complex(r * complex(math.cos(psi), math.sin(psi)))

    def on_circle(i: int, count: int, arc: float) -> SpherePoint:
        phi = arc * (i + 1) / (count + 2)
        return SpherePoint.from_complex(complex(math.cos(phi), math.sin(phi)))

    if N == 1:
        seeds += [off_circle(a) for a in range(sol.A)]
        seeds += [on_circle(b, sol.B, 2.0 * math.pi) for b in range(sol.B)]
    elif N == 2 or N % 2 == 0:
        seeds += [off_circle(b) for b in range(sol.B)]
    else:
        seeds += [off_circle(a) for a in range(sol.A)]
        seeds += [on_circle(b, sol.B, theta) for b in range(sol.B)]

    points: list[SpherePoint] = []
    for seed in seeds:
        points += _orbit(tau, seed, 2 * N)
    if len(points) != n + 1:
        raise InconsistentOrbitLengths(f"Realized {len(points)} points for {sol}, expected {n + 1}")
    logger.debug("realized %s with %d points", sol, len(points))
    return points, tau
