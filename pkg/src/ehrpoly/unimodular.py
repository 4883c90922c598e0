"""Skew unimodular transformations and piecewise maps built from them.

The skew transformation for a nonzero rational direction r fixes the line
through r pointwise and shears everything else parallel to r:

    skew(r): x  |->  x + det2(r_p, x) * r_p,      r_p = primitive(r)

(the lattice-length normalization in the defining formula cancels, so only
the primitive direction matters).  The one-sided variants act on a single
halfplane and are glued with the identity along the splitting line, which
makes them lattice-count preserving homeomorphisms of the plane.

`apply_piecewise` pushes a semi-open region through such a map: it clips the
region by the splitting line, maps each closed piece, and reassembles.  A
removed half-open segment whose image is covered by the other piece is
dropped (the other preimage still supplies those points), which is exactly
how a semi-open construction chain can end in a genuinely closed polygon.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import (
    GeometryError,
    Point,
    Polygon,
    Vector,
    area,
    convex_hull,
    cross,
    det2,
    is_lattice,
    point,
    point_on_segment,
    primitive,
    vec_add,
    vec_sub,
)
from .regions import HalfOpenSegment, InvalidRegion, RegionUnion, SemiOpenRegion


class CoincidentPoints(GeometryError):
    pass


class NonLatticeAnchor(GeometryError):
    pass


@dataclass(frozen=True)
class AffineUnimodular:
    """x |-> M x + t with M an integer matrix of determinant +-1, t integral."""

    m00: int
    m01: int
    m10: int
    m11: int
    tx: int = 0
    ty: int = 0

    def __post_init__(self):
        for f in (self.m00, self.m01, self.m10, self.m11, self.tx, self.ty):
            if not isinstance(f, int):
                raise ValueError(f"entries must be integers, got {f!r}")
        if abs(self.det) != 1:
            raise ValueError(f"matrix determinant must be +-1, got {self.det}")

    @property
    def det(self) -> int:
        return self.m00 * self.m11 - self.m01 * self.m10

    def apply(self, p: Point) -> Point:
        x, y = Fraction(p[0]), Fraction(p[1])
        return (self.m00 * x + self.m01 * y + self.tx,
                self.m10 * x + self.m11 * y + self.ty)

    def compose(self, other: "AffineUnimodular") -> "AffineUnimodular":
        """self after other."""
        return AffineUnimodular(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
            self.m00 * other.tx + self.m01 * other.ty + self.tx,
            self.m10 * other.tx + self.m11 * other.ty + self.ty)

    def inverse(self) -> "AffineUnimodular":
        d = self.det
        a, b, c, e = self.m11 * d, -self.m01 * d, -self.m10 * d, self.m00 * d
        return AffineUnimodular(a, b, c, e, -(a * self.tx + b * self.ty),
                                -(c * self.tx + e * self.ty))

    @property
    def is_identity(self) -> bool:
        return (self.m00, self.m01, self.m10, self.m11, self.tx, self.ty) == (1, 0, 0, 1, 0, 0)


IDENTITY = AffineUnimodular(1, 0, 0, 1)


def skew(r: Vector) -> AffineUnimodular:
    """The determinant-1 shear fixing the line through r pointwise.

    With (u, v) = primitive(r) the matrix is ((1-uv, u**2), (-v**2, 1+uv)).
    """
    u, v = primitive(r)
    return AffineUnimodular(1 - u * v, u * u, -v * v, 1 + u * v)


@dataclass(frozen=True)
class PiecewiseUnimodularMap:
    """One affine unimodular map per side of a splitting line.

    The line passes through `anchor` with primitive integer `direction`;
    the sign of det2(direction, x - anchor) selects the side.  Both maps
    must agree on the line, so the glued map is a homeomorphism.
    """

    anchor: Point
    direction: tuple[int, int]
    positive_side_map: AffineUnimodular
    negative_side_map: AffineUnimodular

    def __post_init__(self):
        object.__setattr__(self, "anchor", point(*self.anchor))
        object.__setattr__(self, "direction", primitive(self.direction))
        # agreement at two distinct line points implies agreement on the line
        for p in (self.anchor, vec_add(self.anchor, self.direction)):
            if self.positive_side_map.apply(p) != self.negative_side_map.apply(p):
                raise ValueError("side maps disagree on the splitting line")

    def side(self, p: Point) -> int:
        s = det2(self.direction, vec_sub(p, self.anchor))
        return (s > 0) - (s < 0)

    def side_map(self, sign: int) -> AffineUnimodular:
        return self.positive_side_map if sign >= 0 else self.negative_side_map

    def apply(self, p: Point) -> Point:
        return self.side_map(self.side(p)).apply(p)

    @property
    def splitting_line(self) -> tuple[Point, tuple[int, int]]:
        return self.anchor, self.direction


def _conjugate_by_translation(m: AffineUnimodular, u: tuple[int, int]) -> AffineUnimodular:
    """p |-> m(p - u) + u."""
    ux, uy = u
    return AffineUnimodular(
        m.m00, m.m01, m.m10, m.m11,
        m.tx + ux - (m.m00 * ux + m.m01 * uy),
        m.ty + uy - (m.m10 * ux + m.m11 * uy))


def skew_plus(r: Vector) -> PiecewiseUnimodularMap:
    """skew(r) where det2(r, x) >= 0, identity elsewhere."""
    return PiecewiseUnimodularMap((Fraction(0), Fraction(0)), primitive(r),
                                  skew(r), IDENTITY)


def skew_minus(r: Vector) -> PiecewiseUnimodularMap:
    """The inverse of skew_plus(-r).

    skew_plus(-r) shears the halfplane det2(r, x) <= 0 onto itself, so the
    inverse applies the inverse shear there and the identity on the other
    side.
    """
    return PiecewiseUnimodularMap((Fraction(0), Fraction(0)), primitive(r),
                                  IDENTITY, skew(r).inverse())


def affine_skew(u, w, sign: str) -> PiecewiseUnimodularMap:
    """skew_plus/minus of (w - u), conjugated to fix the line through u and w.

    `u` must be a lattice point so the conjugated map stays in GL2(Z) x Z^2.
    """
    u = point(*u)
    w = point(*w)
    if u == w:
        raise CoincidentPoints("anchor and target coincide")
    if not is_lattice(u):
        raise NonLatticeAnchor(f"anchor {u} is not a lattice point")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    base = skew_plus(vec_sub(w, u)) if sign == "+" else skew_minus(vec_sub(w, u))
    ui = (int(u[0]), int(u[1]))
    return PiecewiseUnimodularMap(
        u, base.direction,
        _conjugate_by_translation(base.positive_side_map, ui),
        _conjugate_by_translation(base.negative_side_map, ui))


# ---------------------------------------------------------------------------
# applying piecewise maps to regions


def _split_polygon(P: Polygon, anchor: Point, direction: tuple[int, int]):
    """Clip P against both closed halfplanes of the line.

    Returns (pos_piece, neg_piece, chord); each piece is a Polygon or None
    when that side has empty interior, chord is the (a, b) segment of the
    line inside P or None when the line misses the interior.
    """
    verts = P.vertices
    sides = [det2(direction, vec_sub(v, anchor)) for v in verts]
    on_line: list[Point] = [v for v, s in zip(verts, sides) if s == 0]
    pos: list[Point] = []
    neg: list[Point] = []
    m = len(verts)
    for i in range(m):
        a, sa = verts[i], sides[i]
        b, sb = verts[(i + 1) % m], sides[(i + 1) % m]
        if sa >= 0:
            pos.append(a)
        if sa <= 0:
            neg.append(a)
        if (sa > 0 > sb) or (sa < 0 < sb):
            t = sa / (sa - sb)
            c = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            pos.append(c)
            neg.append(c)
            on_line.append(c)

    def build(pts):
        try:
            return convex_hull(pts)
        except GeometryError:
            return None

    pos_piece = build(pos) if len(pos) >= 3 else None
    neg_piece = build(neg) if len(neg) >= 3 else None
    chord = None
    if pos_piece is not None and neg_piece is not None:
        ends = sorted(set(on_line))
        chord = (ends[0], ends[-1])
    return pos_piece, neg_piece, chord


def _split_segment(seg: HalfOpenSegment, m: PiecewiseUnimodularMap):
    """Split a half-open segment by the map's line into sided sub-segments.

    Yields (sign, sub-segment).  Segments lying on the line go to the
    positive side; both side maps agree there, so the choice is immaterial.
    """
    so, sc = m.side(seg.open_end), m.side(seg.closed_end)
    if so * sc >= 0:
        sign = so + sc
        yield (1 if sign > 0 else (-1 if sign < 0 else 1)), seg
        return
    da = det2(m.direction, vec_sub(seg.open_end, m.anchor))
    db = det2(m.direction, vec_sub(seg.closed_end, m.anchor))
    t = da / (da - db)
    cut = (seg.open_end[0] + t * (seg.closed_end[0] - seg.open_end[0]),
           seg.open_end[1] + t * (seg.closed_end[1] - seg.open_end[1]))
    yield so, HalfOpenSegment(seg.open_end, cut)
    yield sc, HalfOpenSegment(cut, seg.closed_end)


def _map_segment(seg: HalfOpenSegment, m: AffineUnimodular) -> HalfOpenSegment:
    return HalfOpenSegment(m.apply(seg.open_end), m.apply(seg.closed_end))


def _segment_inside(seg: HalfOpenSegment, P: Polygon) -> bool:
    return P.contains(seg.open_end) and P.contains(seg.closed_end)


def _collinear_overlap(a: HalfOpenSegment, b: HalfOpenSegment) -> bool:
    from .regions import _segments_overlap
    return _segments_overlap(a, b)


def _merge_removed(segs: list[HalfOpenSegment]) -> list[HalfOpenSegment]:
    """Chain collinear (a, c] + (c, b] into (a, b]; drop exact duplicates."""
    out: list[HalfOpenSegment] = []
    for s in segs:
        if s in out:
            continue
        out.append(s)
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            for j in range(len(out)):
                if i == j:
                    continue
                s, t = out[i], out[j]
                if (s.closed_end == t.open_end
                        and cross(s.open_end, t.closed_end, s.closed_end) == 0):
                    merged = HalfOpenSegment(s.open_end, t.closed_end)
                    out = [u for k, u in enumerate(out) if k not in (i, j)]
                    out.append(merged)
                    changed = True
                    break
            if changed:
                break
    return out


def _reassemble(mapped: list[tuple[Polygon, list[HalfOpenSegment]]],
                seam: tuple[Point, Point] | None):
    """Glue mapped closed pieces back into a region.

    Convex union: removed segments covered by another piece are dropped
    (their points have surviving preimages); the rest must land on the hull
    boundary.  Non-convex union: return a RegionUnion over the seam.
    """
    pieces = [(P, segs) for P, segs in mapped if P is not None]
    if len(pieces) == 1:
        P, segs = pieces[0]
        return SemiOpenRegion(P, _merge_removed(segs))
    hull = convex_hull([v for P, _ in pieces for v in P.vertices])
    if area(hull) == sum(area(P) for P, _ in pieces):
        survivors: list[HalfOpenSegment] = []
        seen: list[HalfOpenSegment] = []
        for i, (_, segs) in enumerate(pieces):
            for g in segs:
                if g in seen:
                    continue  # removed from both sides: keep a single copy
                seen.append(g)
                covered = False
                for j, (Pj, segs_j) in enumerate(pieces):
                    if i == j:
                        continue
                    if not _segment_inside(g, Pj):
                        continue
                    if any(_collinear_overlap(g, h) for h in segs_j):
                        continue
                    covered = True
                    break
                if not covered:
                    survivors.append(g)
        return SemiOpenRegion(hull, _merge_removed(survivors))
    if len(pieces) != 2 or seam is None:
        raise InvalidRegion("cannot represent a non-convex union of these pieces")
    return RegionUnion(
        [SemiOpenRegion(P, _merge_removed(segs)) for P, segs in pieces],
        [seam])


def apply_piecewise(m: PiecewiseUnimodularMap, R):
    """Image of a polygon or semi-open region under a one-line piecewise map.

    Returns a SemiOpenRegion when the image is convex (a closed Polygon is
    just a region with nothing removed), otherwise a RegionUnion.
    """
    if isinstance(R, Polygon):
        R = SemiOpenRegion(R)
    if not isinstance(R, SemiOpenRegion):
        raise InvalidRegion(f"apply_piecewise expects a region, got {type(R).__name__}")
    pos_piece, neg_piece, chord = _split_polygon(R.closed, m.anchor, m.direction)
    sided_segments: dict[int, list[HalfOpenSegment]] = {1: [], -1: []}
    for seg in R.removed:
        for sign, sub in _split_segment(seg, m):
            sided_segments[sign].append(sub)

    # a side without area can still be assigned segments, but only ones on
    # the splitting line, where both side maps agree: hand them across
    for sign, piece in ((1, pos_piece), (-1, neg_piece)):
        if piece is None:
            sided_segments[-sign].extend(sided_segments[sign])
            sided_segments[sign] = []

    mapped: list[tuple[Polygon, list[HalfOpenSegment]]] = []
    seam = None
    for sign, piece in ((1, pos_piece), (-1, neg_piece)):
        if piece is None:
            continue
        amap = m.side_map(sign)
        mapped.append((
            Polygon([amap.apply(v) for v in piece.vertices]),
            [_map_segment(s, amap) for s in sided_segments[sign]]))
    if chord is not None:
        # both side maps agree on the chord; map it through either
        amap = m.positive_side_map
        seam = (amap.apply(chord[0]), amap.apply(chord[1]))
    return _reassemble(mapped, seam)


def apply_to_polygon(m: PiecewiseUnimodularMap, P: Polygon) -> Polygon:
    """apply_piecewise for closed polygons whose image is again closed."""
    out = apply_piecewise(m, P)
    if not isinstance(out, SemiOpenRegion) or out.removed:
        raise InvalidRegion("image is not a closed convex polygon")
    return out.closed


def apply_disjoint(maps: Sequence[PiecewiseUnimodularMap], R):
    """Apply several one-line maps acting simultaneously on disjoint cells.

    The region is cut by all splitting lines; each cell may be moved by at
    most one of the maps (checked), the rest act as the identity there.
    This is the cell-wise action of a piecewise map with several lines, not
    the composition of the individual maps.
    """
    if isinstance(R, Polygon):
        R = SemiOpenRegion(R)
    cells: list[tuple[Polygon, list[HalfOpenSegment], tuple[int, ...]]] = [
        (R.closed, list(R.removed), ())]
    for m in maps:
        nxt = []
        for poly, segs, signs in cells:
            pos_piece, neg_piece, _ = _split_polygon(poly, m.anchor, m.direction)
            sided: dict[int, list[HalfOpenSegment]] = {1: [], -1: []}
            for seg in segs:
                for sign, sub in _split_segment(seg, m):
                    sided[sign].append(sub)
            if pos_piece is None:
                sided[-1].extend(sided[1])
                sided[1] = []
            if neg_piece is None:
                sided[1].extend(sided[-1])
                sided[-1] = []
            for sign, piece in ((1, pos_piece), (-1, neg_piece)):
                if piece is not None:
                    nxt.append((piece, sided[sign], signs + (sign,)))
        cells = nxt
    mapped: list[tuple[Polygon, list[HalfOpenSegment]]] = []
    for poly, segs, signs in cells:
        acting = [m.side_map(s) for m, s in zip(maps, signs) if not m.side_map(s).is_identity]
        if len(acting) > 1:
            raise InvalidRegion("maps act on overlapping cells")
        amap = acting[0] if acting else IDENTITY
        mapped.append((
            Polygon([amap.apply(v) for v in poly.vertices]),
            [_map_segment(s, amap) for s in segs]))
    return _reassemble(mapped, None)


def iterate(m: PiecewiseUnimodularMap, k: int, R):
    """k-fold composition of apply_piecewise; every intermediate image must
    stay convex (it does in all the construction chains here)."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"iteration count must be a positive integer, got {k!r}")
    cur = R
    for _ in range(k):
        cur = apply_piecewise(m, cur)
        if isinstance(cur, RegionUnion):
            raise InvalidRegion("intermediate image became non-convex; "
                                "iterate only supports convex chains")
    return cur
