"""Cone-point configurations and their (anti)conformal symmetries.

The symmetry sweep is exhaustive: an extended Möbius map is fixed by the
images of three points, so trying every ordered target triple for the first
three points (once plainly, once after conjugation) finds every map that
permutes the configuration.

Permutations are 0-based tuples internally (``perm[i] = j`` when point i goes
to point j); cycle strings for users are 1-based.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from itertools import permutations
from typing import NamedTuple, Optional, Sequence

from src.errors import DegenerateConfiguration, LiteralParseError, NotAnticonformal
from src.orbifold.orbit_types import OrbitProfile, profile_from_orbit_lengths
from src.sphere.mobius import (
    DEFAULT_EPS,
    ORDER_CAP_CEILING,
    ExtendedMobius,
    SpherePoint,
    anticonformal_normal_form,
    apply,
    chordal_distance,
    compose,
    inverse,
    mobius_to_standard,
)

logger = logging.getLogger(__name__)

ORIENTATIONS = ("conformal", "anticonformal", "both")


@dataclass(frozen=True)
class ConeConfiguration:
    points: tuple[SpherePoint, ...]
    eps: float = field(default=DEFAULT_EPS, compare=False)

    def __post_init__(self):
        pts = tuple(p.canonical() for p in self.points)
        if len(pts) < 3:
            raise DegenerateConfiguration(f"Need at least 3 cone points, got {len(pts)}")
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if chordal_distance(pts[i], pts[j]) <= self.eps:
                    raise DegenerateConfiguration(
                        f"Cone points {i + 1} and {j + 1} coincide within {self.eps:g}")
        object.__setattr__(self, "points", pts)

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points) - 1

    def default_order_cap(self) -> int:
        return min(2 * math.factorial(self.size), ORDER_CAP_CEILING)


@dataclass(frozen=True)
class ConfigSymmetry:
    map: ExtendedMobius
    perm: tuple[int, ...]

    @property
    def anticonformal(self) -> bool:
        return self.map.anticonformal

    def cycles(self) -> str:
        return format_cycles(self.perm)


class Normalization(NamedTuple):
    lambdas: list[complex]
    used: ExtendedMobius


# ---------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------

def orbits(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycle decomposition, each cycle starting at its smallest index."""
    seen: set[int] = set()
    out: list[tuple[int, ...]] = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        out.append(tuple(cycle))
    return out


def format_cycles(perm: Sequence[int]) -> str:
    cycles = [c for c in orbits(perm) if len(c) > 1]
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, size: int) -> tuple[int, ...]:
    """``"(1 2)(3 4)"`` -> 0-based permutation tuple of length ``size``."""
    s = str(text).strip()
    if _CYCLE.sub("", s).strip():
        raise LiteralParseError(f"Not cycle notation: {text!r}")
    perm = list(range(size))
    used: set[int] = set()
    for body in _CYCLE.findall(s):
        tokens = body.replace(",", " ").split()
        try:
            cycle = [int(t) - 1 for t in tokens]
        except ValueError as e:
            raise LiteralParseError(f"Bad index in cycle ({body})") from e
        for i in cycle:
            if not 0 <= i < size or i in used:
                raise LiteralParseError(f"Index {i + 1} out of range or repeated in {text!r}")
            used.add(i)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            perm[a] = b
    return tuple(perm)


def is_involutive(perm: Sequence[int]) -> bool:
    return all(perm[perm[i]] == i for i in range(len(perm)))


# ---------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------

def normalize(cfg: ConeConfiguration, eps: float = DEFAULT_EPS) -> Normalization:
    """Send points 1, 2, 3 to infinity, 0, 1; the remaining images are the lambdas."""
    p1, p2, p3 = cfg.points[:3]
    used = mobius_to_standard(p1, p2, p3, eps)
    images = [apply(used, p) for p in cfg.points[3:]]
    specials = (SpherePoint.infinity(), SpherePoint.from_complex(0.0), SpherePoint.from_complex(1.0))
    for j, img in enumerate(images):
        if any(chordal_distance(img, s) <= eps for s in specials):
            raise DegenerateConfiguration(f"Point {j + 4} normalizes onto infinity, 0 or 1")
        for i in range(j):
            if chordal_distance(img, images[i]) <= eps:
                raise DegenerateConfiguration(f"Points {i + 4} and {j + 4} normalize together")
    return Normalization([img.to_complex() for img in images], used)


def _induced_permutation(t: ExtendedMobius, cfg: ConeConfiguration,
                         eps: float) -> Optional[tuple[int, ...]]:
    perm: list[int] = []
    for p in cfg.points:
        j = _nearest(t, p, cfg, eps)
        if j is None or j in perm:
            return None
        perm.append(j)
    return tuple(perm)


def _nearest(t: ExtendedMobius, p: SpherePoint, cfg: ConeConfiguration, eps: float) -> Optional[int]:
    img = apply(t, p)
    hits = [i for i, q in enumerate(cfg.points) if chordal_distance(img, q) <= eps]
    return hits[0] if len(hits) == 1 else None


def symmetries(cfg: ConeConfiguration, orientation: str = "both",
               eps: float = DEFAULT_EPS) -> list[ConfigSymmetry]:
    """Every extended Möbius map permuting the cone points, sorted by (flag, perm)."""
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    p1, p2, p3 = cfg.points[:3]
    sources: list[ExtendedMobius] = []
    if orientation in ("conformal", "both"):
        sources.append(mobius_to_standard(p1, p2, p3, eps))
    if orientation in ("anticonformal", "both"):
        bar = mobius_to_standard(p1.conjugate(), p2.conjugate(), p3.conjugate(), eps)
        sources.append(compose(bar, ExtendedMobius.conjugation()))

    found: dict[tuple[bool, tuple[int, ...]], ConfigSymmetry] = {}
    rejected = 0
    for i, j, k in permutations(range(cfg.size), 3):
        back = inverse(mobius_to_standard(cfg.points[i], cfg.points[j], cfg.points[k], eps))
        for src in sources:
            cand = compose(back, src)
            perm = _induced_permutation(cand, cfg, eps)
            if perm is None:
                rejected += 1
                continue
            found.setdefault((cand.anticonformal, perm), ConfigSymmetry(cand, perm))
    out = [found[key] for key in sorted(found)]
    logger.debug("symmetry sweep: %d kept, %d candidates rejected", len(out), rejected)
    logger.info("%d %s symmetries of %d cone points", len(out), orientation, cfg.size)
    return out


def orbit_profile(s: ConfigSymmetry, cfg: ConeConfiguration,
                  cap: Optional[int] = None, eps: float = DEFAULT_EPS) -> OrbitProfile:
    if not s.anticonformal:
        raise NotAnticonformal("orbit_profile needs an anticonformal symmetry")
    nf = anticonformal_normal_form(s.map, cap or cfg.default_order_cap(), eps)
    lengths = [len(c) for c in orbits(s.perm)]
    return profile_from_orbit_lengths(nf.N, nf.order, lengths)
