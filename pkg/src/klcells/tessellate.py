"""Poincare-disk tessellation by a right-angled polygon group.

The base chamber is the regular right-angled hyperbolic n-gon centred at the
origin (circumradius cosh R = cot(pi/n), from the right triangle with angles
pi/n and pi/4 at the centre and edge midpoint).  Side k joins vertices k and
k+1 and carries generator k, so reflections in adjacent sides commute exactly
as in the polygon presentation.  The chamber of a group element w is the
image of the base polygon under the composition of side reflections along
the letters of w; reflections are anti-Moebius maps of the disk (inversions
in circles orthogonal to the unit circle).

Floating point lives only in this module; everything upstream is exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .coxeter import CoxeterSystem, Element

ANGLE_TOL = 1e-9
AREA_FLOOR = 1e-9

_PALETTE = {
    "unit": "#f5e6b8",
    "one-dim": "#8fb7d9",
    "two-dim": "#ffffff",
}


@dataclass(frozen=True)
class Mobius:
    """z -> (a z + b)/(c z + d), applied to conj(z) first when conj is set."""

    a: complex
    b: complex
    c: complex
    d: complex
    conj: bool = False

    def __call__(self, z: complex) -> complex:
        if self.conj:
            z = z.conjugate()
        return (self.a * z + self.b) / (self.c * z + self.d)

    def compose(self, other: "Mobius") -> "Mobius":
        """self after other."""
        oa, ob, oc, od = other.a, other.b, other.c, other.d
        if self.conj:
            oa, ob, oc, od = (
                oa.conjugate(),
                ob.conjugate(),
                oc.conjugate(),
                od.conjugate(),
            )
        return Mobius(
            self.a * oa + self.b * oc,
            self.a * ob + self.b * od,
            self.c * oa + self.d * oc,
            self.c * ob + self.d * od,
            self.conj != other.conj,
        )


IDENT = Mobius(1, 0, 0, 1)


def reflection_in_geodesic(p: complex, q: complex) -> Mobius:
    """Reflection of the disk in the geodesic through p and q."""
    cross = p.real * q.imag - p.imag * q.real
    if abs(cross) < 1e-14 * max(abs(p), abs(q), 1.0):
        # geodesic is a diameter: Euclidean reflection in the line through 0
        u = (q - p) / abs(q - p)
        return Mobius(u * u, 0, 0, 1, conj=True)
    # circle orthogonal to the unit circle through p and q:
    # 2 Re(conj(c) z) = |z|^2 + 1 for z in {p, q}
    rp = (abs(p) ** 2 + 1) / 2
    rq = (abs(q) ** 2 + 1) / 2
    det = cross
    cx = (rp * q.imag - rq * p.imag) / det
    cy = (rq * p.real - rp * q.real) / det
    c0 = complex(cx, cy)
    r2 = abs(c0) ** 2 - 1
    # inversion: z -> c0 + r^2 / conj(z - c0)
    return Mobius(c0, r2 - abs(c0) ** 2, 1, -c0.conjugate(), conj=True)


def _transport_to_origin(p: complex) -> Mobius:
    return Mobius(1, -p, -p.conjugate(), 1)


def hyperbolic_angle(at: complex, toward1: complex, toward2: complex) -> float:
    """Angle at a disk point between the geodesics toward two other points."""
    t = _transport_to_origin(at)
    z1, z2 = t(toward1), t(toward2)
    ang = abs(cmath.phase(z1 / z2))
    return min(ang, 2 * math.pi - ang)


def cross_ratio(a: complex, b: complex, c: complex, d: complex) -> complex:
    return ((a - c) * (b - d)) / ((a - d) * (b - c))


@dataclass(frozen=True)
class Chamber:
    element: Element
    points: tuple[complex, ...]

    def area(self) -> float:
        pts = self.points
        acc = 0.0
        for i, p in enumerate(pts):
            q = pts[(i + 1) % len(pts)]
            acc += p.real * q.imag - p.imag * q.real
        return abs(acc) / 2


def base_polygon(n: int) -> Chamber:
    """Regular right-angled hyperbolic n-gon centred at the origin; raises
    if n < 5 (no such polygon) or if the realised corner angles are not
    right angles to within 1e-9."""
    if n < 5:
        raise ValueError(f"a right-angled hyperbolic polygon needs n >= 5, got {n}")
    cosh_r = 1 / math.tan(math.pi / n)
    r_euclid = math.sqrt((cosh_r - 1) / (cosh_r + 1))  # tanh(R/2)
    pts = tuple(
        r_euclid * cmath.exp(2j * math.pi * k / n) for k in range(n)
    )
    for k in range(n):
        ang = hyperbolic_angle(pts[k], pts[k - 1], pts[(k + 1) % n])
        if abs(ang - math.pi / 2) > ANGLE_TOL:
            raise ArithmeticError(
                f"corner angle {ang} deviates from pi/2 beyond {ANGLE_TOL}"
            )
    return Chamber((), pts)


def side_reflections(base: Chamber) -> list[Mobius]:
    """Reflection in side k (vertices k, k+1), indexed by generator."""
    n = len(base.points)
    return [
        reflection_in_geodesic(base.points[k], base.points[(k + 1) % n])
        for k in range(n)
    ]


def chamber_for(
    base: Chamber, refls: list[Mobius], w: Element
) -> Chamber:
    phi = IDENT
    for s in w:
        phi = phi.compose(refls[s])
    return Chamber(w, tuple(phi(p) for p in base.points))


def chambers(sys: CoxeterSystem, depth: int) -> list[Chamber]:
    base = base_polygon(sys.n)
    refls = side_reflections(base)
    return [chamber_for(base, refls, w) for w in sys.ball(depth)]


def _geodesic_samples(p: complex, q: complex, k: int = 8) -> list[complex]:
    """Points along the hyperbolic segment from p to q (excluding p)."""
    t = _transport_to_origin(p)
    m = t(q)
    # inverse transport of the straight segment 0 -> m
    inv = Mobius(1, p, p.conjugate(), 1)
    return [inv(m * (i / k)) for i in range(1, k + 1)]


def _fmt(x: float) -> str:
    out = f"{x:.6f}"
    return "0.000000" if out == "-0.000000" else out


def tessellate(sys: CoxeterSystem, depth: int, classifier=None) -> bytes:
    """Render the tessellation truncated at the given depth as SVG bytes.

    Chambers are coloured by two-sided cell: the unit chamber, shaded
    one-dimensional strips, and white two-dimensional patches.  Output is
    deterministic; chambers too small for float sanity are counted in a
    truncation warning inside the SVG metadata.
    """
    if sys.kind != "polygon" or sys.n < 5:
        raise ValueError("tessellation is implemented for P_n with n >= 5")
    if classifier is None:
        from . import cells as _cells

        def classifier(w: Element) -> str:
            return _cells.classify_two_sided(sys, w)

    cs = chambers(sys, depth)
    scale = 400.0
    tiny = 0
    body = []
    for ch in cs:
        if ch.area() < AREA_FLOOR:
            tiny += 1
        color = _PALETTE.get(classifier(ch.element), "#dddddd")
        pts = ch.points
        path = []
        start = pts[0]
        path.append(f"M {_fmt(scale * start.real)} {_fmt(scale * start.imag)}")
        for i in range(len(pts)):
            q = pts[(i + 1) % len(pts)]
            for z in _geodesic_samples(pts[i], q):
                path.append(f"L {_fmt(scale * z.real)} {_fmt(scale * z.imag)}")
        path.append("Z")
        word = ",".join(str(s + 1) for s in ch.element) or "e"
        body.append(
            f'<path id="c{word.replace(",", "-")}" d="{" ".join(path)}" '
            f'fill="{color}" stroke="#333333" stroke-width="0.6"/>'
        )
    meta = (
        f'<metadata>chambers={len(cs)} depth={depth} '
        f'truncation-warning={"true" if tiny else "false"} tiny={tiny}</metadata>'
    )
    svg = (
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-410 -410 820 820">\n'
        + meta
        + "\n"
        + f'<circle cx="0" cy="0" r="{_fmt(scale)}" fill="none" '
        'stroke="#000000" stroke-width="1"/>\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )
    return svg.encode()
