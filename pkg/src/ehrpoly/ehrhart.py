"""Ehrhart quasi-polynomials by exact interpolation.

For a rational polygon (or semi-open region) with coordinate denominator
lcm D, the counting function n |-> |nP ∩ Z^2| is a degree-2 quasi-polynomial
whose coefficient functions have period dividing D.  We therefore fit, for
each residue class r mod D, an exact quadratic through the counts at
n = r, r+D, r+2D, and verify it against one further count at r+3D.  The
verification turns the divisibility premise into a checked fact instead of
an assumption.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .geometry import (
    Polygon,
    coord_lcm,
    denominator,
    lattice_count,
    primitive,
    vec_sub,
)
from .regions import RegionUnion, SemiOpenRegion, region_count


class VerificationFailure(ArithmeticError):
    """An interpolated quasi-polynomial failed its extra-sample check."""


class PeriodSequence(NamedTuple):
    s2: int
    s1: int
    s0: int
    quasi_period: int


@dataclass(frozen=True)
class EhrhartQuasiPolynomial:
    """Degree-2 quasi-polynomial as per-residue coefficient tables.

    `c2[r]`, `c1[r]`, `c0[r]` hold the coefficients valid for n ≡ r (mod
    modulus); tables are tuples of Fractions indexed by r in 0..modulus-1.
    """

    modulus: int
    c2: tuple[Fraction, ...]
    c1: tuple[Fraction, ...]
    c0: tuple[Fraction, ...]

    def evaluate(self, n: int) -> Fraction:
        r = n % self.modulus
        return self.c2[r] * n * n + self.c1[r] * n + self.c0[r]

    def coefficient(self, i: int, n: int) -> Fraction:
        return (self.c0, self.c1, self.c2)[i][n % self.modulus]

    def period_sequence(self) -> PeriodSequence:
        s2 = minimal_period(self.c2)
        s1 = minimal_period(self.c1)
        s0 = minimal_period(self.c0)
        return PeriodSequence(s2, s1, s0, math.lcm(s0, s1, s2))

    @property
    def quasi_period(self) -> int:
        return self.period_sequence().quasi_period

    @property
    def is_polynomial(self) -> bool:
        return self.quasi_period == 1


def region_denominator(R) -> int:
    """lcm of coordinate denominators of all vertices and removed endpoints."""
    if isinstance(R, Polygon):
        return denominator(R)
    if isinstance(R, SemiOpenRegion):
        pts = list(R.closed.vertices)
        for seg in R.removed:
            pts.extend((seg.open_end, seg.closed_end))
        return coord_lcm(pts)
    if isinstance(R, RegionUnion):
        return math.lcm(*(region_denominator(p) for p in R.pieces))
    raise TypeError(f"no denominator for {type(R).__name__}")


def _fit_quadratic(samples: list[tuple[int, int]]) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (c2, c1, c0) through three (n, value) points, distinct n."""
    (n0, v0), (n1, v1), (n2, v2) = samples
    # divided differences
    d01 = Fraction(v1 - v0, n1 - n0)
    d12 = Fraction(v2 - v1, n2 - n1)
    c2 = (d12 - d01) / (n2 - n0)
    c1 = d01 - c2 * (n0 + n1)
    c0 = v0 - c2 * n0 * n0 - c1 * n0
    return c2, c1, c0


def ehrhart(R, extra_checks: int = 1) -> EhrhartQuasiPolynomial:
    """Interpolate the Ehrhart quasi-polynomial of a polygon or region.

    Counts at n = r + kD for k = 0, 1, 2 determine each residue class; the
    count at k = 3 (and beyond, if extra_checks > 1) must match or a
    VerificationFailure is raised.
    """
    D = region_denominator(R)
    counts = {n: region_count(R, n) for n in range(1, (3 + extra_checks) * D + 1)}
    c2 = [Fraction(0)] * D
    c1 = [Fraction(0)] * D
    c0 = [Fraction(0)] * D
    for r in range(1, D + 1):
        ns = [r, r + D, r + 2 * D]
        q2, q1, q0 = _fit_quadratic([(n, counts[n]) for n in ns])
        for k in range(3, 3 + extra_checks):
            n = r + k * D
            got = q2 * n * n + q1 * n + q0
            if got != counts[n]:
                raise VerificationFailure(
                    f"interpolated value {got} != count {counts[n]} at n={n} "
                    f"(residue {r % D} mod {D})")
        idx = r % D
        c2[idx], c1[idx], c0[idx] = q2, q1, q0
    return EhrhartQuasiPolynomial(D, tuple(c2), tuple(c1), tuple(c0))


def minimal_period(values) -> int:
    """Smallest divisor p of len(values) with values[(i+p) % D] == values[i].

    Periods of an Ehrhart coefficient table always divide the modulus, so
    only divisors need checking.
    """
    D = len(values)
    for p in range(1, D + 1):
        if D % p:
            continue
        if all(values[i] == values[(i + p) % D] for i in range(D)):
            return p
    raise AssertionError("unreachable: D is a period of itself")


def period_sequence(R) -> PeriodSequence:
    return ehrhart(R).period_sequence()


def is_pip(R) -> bool:
    """Pseudo-integral: the Ehrhart quasi-polynomial is a true polynomial."""
    return ehrhart(R).quasi_period == 1


def mcmullen_indices(P: Polygon) -> tuple[int, int, int]:
    """(p2, p1, p0): least dilations making all i-faces meet the lattice.

    p2 = 1 always (the affine span of a polygon is the whole plane);
    p1 = lcm over edges of the least p making the edge's line hit Z^2;
    p0 = lcm of vertex coordinate denominators.  By construction
    p2 | p1 | p0, and each coefficient period s_i divides p_i.
    """
    p1 = 1
    for a, b in P.edges():
        u, v = primitive(vec_sub(b, a))
        # the line of p*edge is {x : det((u,v), x) = p*c}; it meets Z^2 iff
        # p*c is an integer, since gcd(u, v) = 1
        c = Fraction(u) * a[1] - Fraction(v) * a[0]
        p1 = math.lcm(p1, c.denominator)
    return 1, p1, denominator(P)


def series_coefficients(t: int, N: int) -> list[int]:
    """First N coefficients of (1 - z)^(-2) * (1 - z^t)^(-1)."""
    out = [0] * N
    for j in range(0, N, t):
        for k in range(j, N):
            out[k] += k - j + 1
    return out


def gf_series_check(P: Polygon, t: int, N: int) -> bool:
    """Compare counts of P against the generating function with a pole at
    the t-th roots of unity; the n = 0 term is taken to be 1."""
    if N < 3 * t:
        raise ValueError(f"need N >= 3t for a meaningful check, got N={N}, t={t}")
    expected = series_coefficients(t, N)
    if expected[0] != 1:
        return False
    return all(lattice_count(P, k) == expected[k] for k in range(1, N))
