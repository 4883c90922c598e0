"""Deterministic random generation of rational polygons.

Reproducibility across runs, platforms and implementations matters more
here than statistical quality, so the generator is a fixed 64-bit
SplitMix64 with its standard constants, and every trial draws from its own
stream derived from (seed, trial index).  No use of `random`.
"""
from __future__ import annotations

from fractions import Fraction

from .geometry import DegenerateInput, Polygon, convex_hull

_GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: state += golden; output = mix(state). Fixed constants."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform-ish integer in [0, m); modulo bias is irrelevant here."""
        return self.next() % m

    def int_between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def trial_rng(seed: int, trial: int) -> SplitMix64:
    """Independent stream for one trial; scheduling-order independent."""
    return SplitMix64((seed + trial * _GOLDEN) & _MASK)


def random_polygon(rng: SplitMix64, max_denominator: int, coord_bound: int) -> Polygon | None:
    """Hull of 3..7 random rational points, or None when degenerate.

    All coordinates of one polygon share a denominator q <= max_denominator,
    so the polygon's own denominator is also <= max_denominator.
    """
    q = rng.int_between(1, max_denominator)
    k = rng.int_between(3, 7)
    pts = [(Fraction(rng.int_between(-coord_bound * q, coord_bound * q), q),
            Fraction(rng.int_between(-coord_bound * q, coord_bound * q), q))
           for _ in range(k)]
    try:
        return convex_hull(pts)
    except DegenerateInput:
        return None


def polygon_corpus(seed: int, size: int, max_denominator: int = 6,
                   coord_bound: int = 5) -> list[Polygon]:
    """Deterministic corpus of `size` valid random polygons."""
    out: list[Polygon] = []
    trial = 0
    while len(out) < size:
        P = random_polygon(trial_rng(seed, trial), max_denominator, coord_bound)
        trial += 1
        if P is not None:
            out.append(P)
    return out
