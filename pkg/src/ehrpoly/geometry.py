"""Exact rational plane geometry for lattice-point counting.

Every coordinate is a `fractions.Fraction`; no floats appear anywhere, so
all predicates (orientation, containment, counts) are exact.  Points and
vectors are plain `(Fraction, Fraction)` tuples, which keeps them hashable
and cheap; `Polygon` is the only real class.

Three independent lattice counters are provided:

* ``lattice_count``       -- default, per-edge floor-sums, O(edges * log)
* ``lattice_count_rowscan`` -- per-row interval counting, O(rows * edges)
* ``lattice_count_naive`` -- full bounding-box scan, O(area * edges)

They must always agree; the slower ones exist as oracles for the faster.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class GeometryError(ValueError):
    pass


class DegenerateInput(GeometryError):
    """Input does not span two dimensions (collinear / too few points)."""


class ZeroVector(GeometryError):
    pass


Point = tuple[Fraction, Fraction]
Vector = tuple[Fraction, Fraction]


def point(x, y) -> Point:
    """Coerce a coordinate pair to an exact rational point."""
    return (Fraction(x), Fraction(y))


def vec_sub(a: Point, b: Point) -> Vector:
    return (a[0] - b[0], a[1] - b[1])


def vec_add(a: Point, b: Vector) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def vec_scale(a: Point, k) -> Point:
    k = Fraction(k)
    return (a[0] * k, a[1] * k)


def det2(r: Vector, x: Vector) -> Fraction:
    """Determinant of the 2x2 matrix with columns r and x, in that order.

    This sign convention is fixed package-wide: det2(r, x) > 0 means x lies
    counterclockwise from r.
    """
    return r[0] * x[1] - r[1] * x[0]


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Cross product of (a - o) and (b - o); > 0 for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def is_lattice(p: Point) -> bool:
    return p[0].denominator == 1 and p[1].denominator == 1


def coord_lcm(points: Iterable[Point]) -> int:
    """lcm of all coordinate denominators (1 for an empty iterable)."""
    d = 1
    for p in points:
        d = math.lcm(d, p[0].denominator, p[1].denominator)
    return d


class Polygon:
    """Strictly convex polygon, counterclockwise vertex tuple.

    Vertices are canonicalized to start at the lexicographically smallest
    vertex, so two polygons are equal iff they are the same point set.
    Construction rejects repeated vertices, collinear triples, clockwise
    order and anything contained in a line.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence):
        verts = tuple(point(v[0], v[1]) for v in vertices)
        if len(verts) < 3:
            raise DegenerateInput(f"need at least 3 vertices, got {len(verts)}")
        if len(set(verts)) != len(verts):
            raise DegenerateInput("repeated vertex")
        m = len(verts)
        for i in range(m):
            turn = cross(verts[i], verts[(i + 1) % m], verts[(i + 2) % m])
            if turn == 0:
                raise DegenerateInput("three consecutive collinear vertices")
            if turn < 0:
                raise DegenerateInput("vertices are not in counterclockwise order")
        start = min(range(m), key=lambda i: verts[i])
        self.vertices: tuple[Point, ...] = verts[start:] + verts[:start]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        pts = ", ".join(f"({v[0]}, {v[1]})" for v in self.vertices)
        return f"Polygon[{pts}]"

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterator[tuple[Point, Point]]:
        vs = self.vertices
        for i in range(len(vs)):
            yield vs[i], vs[(i + 1) % len(vs)]

    def dilate(self, n: int) -> "Polygon":
        _check_dilation(n)
        return Polygon([vec_scale(v, n) for v in self.vertices])

    def translate(self, d: Vector) -> "Polygon":
        d = point(d[0], d[1])
        return Polygon([vec_add(v, d) for v in self.vertices])

    def contains(self, p: Point) -> bool:
        """Closed containment (boundary counts)."""
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def contains_strict(self, p: Point) -> bool:
        return all(cross(a, b, p) > 0 for a, b in self.edges())

    def on_boundary(self, p: Point) -> bool:
        return any(point_on_segment(p, a, b) for a, b in self.edges())

    def bounding_box(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def _check_dilation(n) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dilation factor must be a positive integer, got {n!r}")


def point_on_segment(p: Point, a: Point, b: Point) -> bool:
    """Exact membership of p in the closed segment [a, b]."""
    if cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def convex_hull(points: Iterable) -> Polygon:
    """Convex hull via monotone chain; collinear points are dropped.

    Raises DegenerateInput when fewer than 3 distinct points remain or all
    points are collinear.
    """
    pts = sorted({point(p[0], p[1]) for p in points})
    if len(pts) < 3:
        raise DegenerateInput("hull needs at least 3 distinct points")
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 3:
        raise DegenerateInput("all points collinear")
    return Polygon(verts)


def hull_of_lattice_points(points: Sequence[Point]):
    """Hull of a finite lattice point set, degenerate cases allowed.

    Returns a Polygon for a 2-dimensional set, otherwise the sorted tuple of
    extreme points (2 for a segment, 1 for a point, 0 for empty).
    """
    pts = sorted(set(points))
    if not pts:
        return ()
    try:
        return convex_hull(pts)
    except DegenerateInput:
        return (pts[0],) if len(pts) == 1 else (pts[0], pts[-1])


def area(P: Polygon) -> Fraction:
    """Exact shoelace area; positive since vertices are counterclockwise."""
    s = Fraction(0)
    for a, b in P.edges():
        s += a[0] * b[1] - a[1] * b[0]
    return s / 2


def denominator(P: Polygon) -> int:
    """lcm of all vertex coordinate denominators (the 0-index p0)."""
    return coord_lcm(P.vertices)


# ---------------------------------------------------------------------------
# lattice vectors


def lattice_length(r: Vector) -> Fraction:
    """The positive rational L with r = L * primitive(r).

    For r = (a/b, c/d) in lowest terms this is gcd(a, c) / lcm(b, d).
    """
    rx, ry = Fraction(r[0]), Fraction(r[1])
    if rx == 0 and ry == 0:
        raise ZeroVector("lattice length of the zero vector")
    g = math.gcd(rx.numerator, ry.numerator)
    return Fraction(g, math.lcm(rx.denominator, ry.denominator))


def primitive(r: Vector) -> tuple[int, int]:
    """Shortest integer vector positively proportional to r."""
    L = lattice_length(r)
    px, py = Fraction(r[0]) / L, Fraction(r[1]) / L
    assert px.denominator == 1 and py.denominator == 1
    return (px.numerator, py.numerator)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def segment_lattice_count(a: Point, b: Point) -> int:
    """Number of integer points on the closed segment [a, b], a != b.

    The lattice points on the line through a with primitive direction
    (u, v) form either the empty set or an arithmetic progression with
    step (u, v); we count how much of it lands inside [a, b].
    """
    a = point(a[0], a[1])
    b = point(b[0], b[1])
    if a == b:
        raise ZeroVector("degenerate segment")
    d = vec_sub(b, a)
    u, v = primitive(d)
    L = lattice_length(d)
    c = Fraction(u) * a[1] - Fraction(v) * a[0]  # det((u,v), p) is constant on the line
    if c.denominator != 1:
        return 0
    t0 = _line_lattice_offset(a, (u, v))
    if t0 > L:
        return 0
    return math.floor(L - t0) + 1


def _line_lattice_offset(a: Point, prim: tuple[int, int]) -> Fraction:
    """Least t >= 0 with a + t*prim integral, assuming the line meets Z^2."""
    u, v = prim
    g, alpha, beta = _egcd(u, v)
    assert g == 1
    # t*(u,v) = -a (mod Z^2) componentwise; combine with alpha*u + beta*v = 1
    t = -(alpha * a[0] + beta * a[1])
    return t - math.floor(t)


def segment_lattice_points(a: Point, b: Point) -> list[tuple[int, int]]:
    """All integer points on the closed segment [a, b], in order from a to b."""
    a = point(a[0], a[1])
    b = point(b[0], b[1])
    n = segment_lattice_count(a, b)
    if n == 0:
        return []
    u, v = primitive(vec_sub(b, a))
    t0 = _line_lattice_offset(a, (u, v))
    x0 = a[0] + t0 * u
    y0 = a[1] + t0 * v
    assert x0.denominator == 1 and y0.denominator == 1
    return [(int(x0) + k * u, int(y0) + k * v) for k in range(n)]


# ---------------------------------------------------------------------------
# lattice point counting in dilates


def floor_sum(n: int, m: int, a: int, b: int) -> int:
    """sum_{i=0}^{n-1} floor((a*i + b) / m) for m > 0, exact and fast.

    Euclidean-style reduction, O(log max(a, m)); handles negative a, b.
    """
    assert m > 0 and n >= 0
    ans = 0
    if a < 0:
        a2 = a % m
        ans -= n * (n - 1) // 2 * ((a2 - a) // m)
        a = a2
    if b < 0:
        b2 = b % m
        ans -= n * ((b2 - b) // m)
        b = b2
    while True:
        if a >= m:
            ans += n * (n - 1) // 2 * (a // m)
            a %= m
        if b >= m:
            ans += n * (b // m)
            b %= m
        y = a * n + b
        if y < m:
            break
        n = y // m
        b = y % m
        m, a = a, m
    return ans


def _scaled_vertices(P: Polygon) -> tuple[list[tuple[int, int]], int]:
    """Vertices as integer pairs over the common denominator Q."""
    Q = denominator(P)
    return [(int(v[0] * Q), int(v[1] * Q)) for v in P.vertices], Q


def _chains(V: list[tuple[int, int]]):
    """Split the CCW integer vertex cycle into right (rising) and left
    (falling) monotone chains, as lists of directed edges."""
    m = len(V)
    br = min(range(m), key=lambda i: (V[i][1], -V[i][0]))  # bottom, rightmost
    tl = min(range(m), key=lambda i: (-V[i][1], V[i][0]))  # top, leftmost
    right = []
    k = br
    while V[(k + 1) % m][1] > V[k][1]:
        right.append((V[k], V[(k + 1) % m]))
        k = (k + 1) % m
    left = []
    k = tl
    while V[(k + 1) % m][1] < V[k][1]:
        left.append((V[k], V[(k + 1) % m]))
        k = (k + 1) % m
    return right, left


def lattice_count(P: Polygon, n: int) -> int:
    """|nP ∩ Z^2| via exact per-edge floor sums.

    Each row y contributes floor(xR(y)) - ceil(xL(y)) + 1 where xL, xR are
    the row's exact boundary abscissae; summed per boundary chain edge with
    `floor_sum`, so the cost is O(edges * log), independent of n.
    """
    _check_dilation(n)
    V, Q = _scaled_vertices(P)
    # scaled polygon nP has vertices (n*X/Q, n*Y/Q)
    ys = [y for _, y in V]
    ylo = -((-n * min(ys)) // Q)   # ceil
    yhi = (n * max(ys)) // Q       # floor
    if ylo > yhi:
        return 0
    total = yhi - ylo + 1
    right, left = _chains(V)

    def edge_sum(a, b, y1, y2, negate: bool) -> int:
        # x(y) = (A*y + B) / M along edge a->b of the dilate
        A = Q * (b[0] - a[0])
        B = n * (a[0] * b[1] - b[0] * a[1])
        M = Q * (b[1] - a[1])
        if M < 0:
            A, B, M = -A, -B, -M
        if negate:
            A, B = -A, -B
        return floor_sum(y2 - y1 + 1, M, A, A * y1 + B)

    cur = ylo
    for a, b in right:
        y2 = (n * b[1]) // Q
        if y2 >= cur:
            total += edge_sum(a, b, cur, min(y2, yhi), negate=False)
            cur = y2 + 1
    cur = yhi
    for a, b in left:
        y2 = -((-n * b[1]) // Q)
        if y2 <= cur:
            # -ceil(xL) = floor(-xL)
            total += edge_sum(a, b, max(y2, ylo), cur, negate=True)
            cur = y2 - 1
    return total


def _row_interval(P_scaled: list[Point], y: Fraction) -> tuple[Fraction, Fraction] | None:
    xs = []
    m = len(P_scaled)
    for i in range(m):
        (x1, y1), (x2, y2) = P_scaled[i], P_scaled[(i + 1) % m]
        if min(y1, y2) <= y <= max(y1, y2):
            if y1 == y2:
                xs.extend((x1, x2))
            else:
                xs.append(x1 + (y - y1) * (x2 - x1) / (y2 - y1))
    if not xs:
        return None
    return min(xs), max(xs)


def lattice_count_rowscan(P: Polygon, n: int) -> int:
    """|nP ∩ Z^2| by scanning integer rows between exact edge crossings."""
    _check_dilation(n)
    verts = [vec_scale(v, n) for v in P.vertices]
    ymin = min(v[1] for v in verts)
    ymax = max(v[1] for v in verts)
    total = 0
    for y in range(math.ceil(ymin), math.floor(ymax) + 1):
        iv = _row_interval(verts, Fraction(y))
        if iv is None:
            continue
        xl, xr = iv
        total += max(0, math.floor(xr) - math.ceil(xl) + 1)
    return total


def lattice_count_naive(P: Polygon, n: int) -> int:
    """|nP ∩ Z^2| by testing every bounding-box point against every edge."""
    _check_dilation(n)
    V, Q = _scaled_vertices(P)
    m = len(V)
    # point (x, y) is inside iff for every edge, cross >= 0 after clearing Q:
    #   (bx-ax)*(Q*y - n*ay) - (by-ay)*(Q*x - n*ax) >= 0
    coeffs = []
    for i in range(m):
        (ax, ay), (bx, by) = V[i], V[(i + 1) % m]
        cx = -(by - ay) * Q
        cy = (bx - ax) * Q
        c0 = (by - ay) * n * ax - (bx - ax) * n * ay
        coeffs.append((cx, cy, c0))
    xs = [x for x, _ in V]
    ys = [y for _, y in V]
    xlo, xhi = -((-n * min(xs)) // Q), (n * max(xs)) // Q
    ylo, yhi = -((-n * min(ys)) // Q), (n * max(ys)) // Q
    count = 0
    for y in range(ylo, yhi + 1):
        partial = [(cx, cy * y + c0) for cx, cy, c0 in coeffs]
        for x in range(xlo, xhi + 1):
            ok = True
            for cx, t in partial:
                if cx * x + t < 0:
                    ok = False
                    break
            if ok:
                count += 1
    return count


def lattice_points(P: Polygon, n: int = 1) -> list[tuple[int, int]]:
    """Enumerate nP ∩ Z^2 row by row (exact)."""
    _check_dilation(n)
    verts = [vec_scale(v, n) for v in P.vertices]
    ymin = min(v[1] for v in verts)
    ymax = max(v[1] for v in verts)
    out = []
    for y in range(math.ceil(ymin), math.floor(ymax) + 1):
        iv = _row_interval(verts, Fraction(y))
        if iv is None:
            continue
        xl, xr = iv
        out.extend((x, y) for x in range(math.ceil(xl), math.floor(xr) + 1))
    return out


def boundary_count(P: Polygon, n: int) -> int:
    """Lattice points on the boundary of nP, counted edge by edge.

    Each closed edge count drops the leading vertex, so going around the
    cycle counts every boundary point exactly once.
    """
    _check_dilation(n)
    total = 0
    for a, b in P.edges():
        na, nb = vec_scale(a, n), vec_scale(b, n)
        total += segment_lattice_count(na, nb)
        if is_lattice(na):
            total -= 1
    return total


def boundary_points(P: Polygon, n: int = 1) -> list[tuple[int, int]]:
    pts: set[tuple[int, int]] = set()
    for a, b in P.edges():
        pts.update(segment_lattice_points(vec_scale(a, n), vec_scale(b, n)))
    return sorted(pts)


def interior_count(P: Polygon, n: int) -> int:
    return lattice_count(P, n) - boundary_count(P, n)


# ---------------------------------------------------------------------------
# integral hull and convex unions


class IntegralHull:
    """Convex hull of P ∩ Z^2; may be 2-, 1-, 0-dimensional or empty.

    `polygon` is set only when the hull is 2-dimensional; `vertices` always
    holds the extreme points (possibly fewer than 3).
    """

    __slots__ = ("dim", "vertices", "polygon")

    def __init__(self, lattice_pts: Sequence[tuple[int, int]]):
        pts = [point(x, y) for x, y in lattice_pts]
        h = hull_of_lattice_points(pts)
        if isinstance(h, Polygon):
            self.dim = 2
            self.polygon: Polygon | None = h
            self.vertices = h.vertices
        else:
            self.dim = len(h) - 1 if h else -1
            self.polygon = None
            self.vertices = h

    @property
    def is_degenerate(self) -> bool:
        return self.dim < 2

    def __repr__(self) -> str:
        if self.polygon is not None:
            return f"IntegralHull({self.polygon!r})"
        return f"IntegralHull(dim={self.dim}, vertices={self.vertices})"


def integral_hull(P: Polygon) -> IntegralHull:
    return IntegralHull(lattice_points(P, 1))


def convex_union(pieces: Sequence[Polygon]) -> Polygon:
    """Union of interior-disjoint convex pieces, required to be convex.

    The hull of all vertices is the union iff its area equals the sum of
    the piece areas; anything else raises.
    """
    hull = convex_hull([v for p in pieces for v in p.vertices])
    total = sum(area(p) for p in pieces)
    if area(hull) != total:
        raise GeometryError(
            f"pieces do not tile a convex region (hull area {area(hull)}, "
            f"piece areas sum to {total})")
    return hull
