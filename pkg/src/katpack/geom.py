"""Metric layer: triangle trigonometry, circles, and inversive geometry.

Hyperbolic radii are carried as ``s = exp(-r)``, so an infinite radius is
the exact value ``s = 0`` and the ideal limits of the angle formulas need no
special-casing beyond what the algebra already does.  Circles in the plane,
lines, and circles on the unit sphere share one coordinate system: the
space-like unit vectors of Minkowski R^{3,1} ("inversive coordinates"),
in which stereographic projection is the identity and the inversive
distance is minus the Minkowski product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


class GeometryError(ValueError):
    pass


class NoTriangleDatum(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class CoincidentCircles(GeometryError):
    pass


class DiskDisjoint(GeometryError):
    pass


# -- radii -------------------------------------------------------------------

@dataclass(frozen=True)
class Radius:
    """A circle radius: positive, and possibly infinite in hyperbolic geometry."""
    value: float
    geometry: str = "hyperbolic"

    def __post_init__(self):
        if self.geometry not in ("hyperbolic", "euclidean"):
            raise GeometryError(f"unknown geometry {self.geometry!r}")
        if self.geometry == "euclidean" and not (0 < self.value < np.inf):
            raise GeometryError("euclidean radii must be finite and positive")
        if self.geometry == "hyperbolic" and not self.value > 0:
            raise GeometryError("hyperbolic radii must be positive (inf allowed)")

    @property
    def s(self):
        """Internal encoding exp(-r); 0 exactly when r is infinite."""
        return math.exp(-self.value) if np.isfinite(self.value) else 0.0


def _as_value(r):
    return r.value if isinstance(r, Radius) else float(r)


def s_from_r(r):
    r = np.asarray(r, dtype=float)
    out = np.zeros_like(r)
    finite = np.isfinite(r)
    out[finite] = np.exp(-r[finite])
    return out if out.ndim else float(out)


def r_from_s(s):
    s = np.asarray(s, dtype=float)
    out = np.full_like(s, np.inf)
    pos = s > 0
    out[pos] = -np.log(s[pos])
    return out if out.ndim else float(out)


# -- lengths and angles --------------------------------------------------------

def edge_length(r_a, r_b, datum=1.0, geometry="hyperbolic"):
    """Length of the edge between circles of the given radii.

    ``datum`` is the cosine form of the edge data: cos of the overlap angle,
    or the inversive distance (tangency = 1).  Tangency returns the exact
    sum of the radii.
    """
    ra, rb = _as_value(r_a), _as_value(r_b)
    if datum < -1.0:
        raise NoTriangleDatum(f"inversive distance {datum} < -1 has no realization")
    if geometry == "euclidean":
        if datum == 1.0:
            return ra + rb
        return math.sqrt(ra * ra + rb * rb + 2.0 * ra * rb * datum)
    if datum == 1.0 or not (np.isfinite(ra) and np.isfinite(rb)):
        return ra + rb  # = inf when either is ideal
    x = (math.cosh(ra) * math.cosh(rb) + datum * math.sinh(ra) * math.sinh(rb))
    return math.acosh(max(1.0, x))


def _half_angle(num, den, scale):
    if num < 0 or den < 0:
        worst = min(num, den)
        if worst < -1e-9 * max(scale, 1.0):
            raise DegenerateTriangle("triangle inequality violated")
        num, den = max(num, 0.0), max(den, 0.0)
    if num == 0.0 and den == 0.0:
        raise DegenerateTriangle("all side data vanish")
    return 2.0 * math.atan2(math.sqrt(num), math.sqrt(den))


def _angle_from_lengths(a, b, c, geometry):
    """Angle opposite side ``a`` via the half-angle form (atan2, not acos)."""
    s = 0.5 * (a + b + c)
    if geometry == "euclidean":
        num = (s - b) * (s - c)
        den = s * (s - a)
        return _half_angle(num, den, s * s)
    num = math.sinh(s - b) * math.sinh(s - c)
    den = math.sinh(s) * math.sinh(s - a)
    return _half_angle(num, den, math.sinh(s) ** 2)


def face_angle(at, b, c, d_bc=1.0, d_ac=1.0, d_ab=1.0, geometry="hyperbolic"):
    """Angle of a labeled face at the vertex carrying radius ``at``.

    ``d_xy`` is the cosine-form datum of the edge joining the vertices with
    radii x and y; ``d_bc`` sits opposite the evaluated corner.  Ideal
    vertices (infinite hyperbolic radii) give angle 0 at themselves and
    closed-form limits at their finite partners.
    """
    ra, rb, rc = _as_value(at), _as_value(b), _as_value(c)
    for d in (d_bc, d_ac, d_ab):
        if d < -1.0:
            raise NoTriangleDatum(f"inversive distance {d} < -1 has no realization")
    if geometry == "euclidean":
        if d_bc == d_ac == d_ab == 1.0:
            s = ra + rb + rc
            return _half_angle(rb * rc, s * ra, s * s)
        lab = edge_length(ra, rb, d_ab, "euclidean")
        lac = edge_length(ra, rc, d_ac, "euclidean")
        lbc = edge_length(rb, rc, d_bc, "euclidean")
        return _angle_from_lengths(lbc, lac, lab, "euclidean")
    if geometry != "hyperbolic":
        raise GeometryError(f"unknown geometry {geometry!r}")

    if not np.isfinite(ra):
        return 0.0
    sa = math.exp(-ra)
    sb = 0.0 if not np.isfinite(rb) else math.exp(-rb)
    sc = 0.0 if not np.isfinite(rc) else math.exp(-rc)

    if d_bc == d_ac == d_ab == 1.0:
        # tangency: exact half-angle form in the s-encoding, ideal-safe
        P = sa * sb * sc
        num = sa * sa * (1 - sb * sb) * (1 - sc * sc)
        den = (1 - sa * sa) * (1 - P * P)
        return _half_angle(num, den, 1.0)

    b_ideal, c_ideal = sb == 0.0, sc == 0.0
    if b_ideal and c_ideal:
        u_ab = math.cosh(ra) + d_ab * math.sinh(ra)
        u_ac = math.cosh(ra) + d_ac * math.sinh(ra)
        return math.acos(_clamp1(1.0 - (1.0 + d_bc) / (u_ab * u_ac)))
    if b_ideal or c_ideal:
        if c_ideal:  # swap so b is the ideal one
            rb, rc = rc, rb
            d_ab, d_ac = d_ac, d_ab
        u_ab = math.cosh(ra) + d_ab * math.sinh(ra)
        u_cb = math.cosh(rc) + d_bc * math.sinh(rc)
        lac = edge_length(ra, rc, d_ac)
        val = (u_ab * math.cosh(lac) - u_cb) / (u_ab * math.sinh(lac))
        return math.acos(_clamp1(val))
    lab = edge_length(ra, rb, d_ab)
    lac = edge_length(ra, rc, d_ac)
    lbc = edge_length(rb, rc, d_bc)
    return _angle_from_lengths(lbc, lac, lab, "hyperbolic")


def _clamp1(x):
    return -1.0 if x < -1.0 else (1.0 if x > 1.0 else x)


def angle_sum(T, radii, phi=None, v=None, geometry="hyperbolic"):
    """Angle sum at vertex ``v`` under the label ``radii``.

    ``radii`` maps every vertex of ``T`` to a radius (numpy array, inf
    allowed in hyperbolic geometry); ``phi`` is an optional
    :class:`~katpack.complexes.EdgeLabel` (default tangency).  Summation is
    compensated.  Infinite label at ``v`` gives 0.
    """
    radii = np.asarray(radii, dtype=float)
    if not np.isfinite(radii[v]):
        return 0.0
    delta = None if phi is None else phi.delta()

    def d(u, w):
        if delta is None:
            return 1.0
        return float(delta[T.edge_index[(u, w) if u < w else (w, u)]])

    terms = []
    for f, bb, cc in T.corners[v]:
        terms.append(face_angle(radii[v], radii[bb], radii[cc],
                                d_bc=d(bb, cc), d_ac=d(v, cc), d_ab=d(v, bb),
                                geometry=geometry))
    return math.fsum(terms)


def face_area_hyperbolic(angles):
    """Hyperbolic area of a triangle from its three angles: pi minus their sum."""
    a = math.fsum(angles)
    if min(angles) < -1e-12 or a > math.pi + 1e-9:
        raise GeometryError("angles must be nonnegative with sum below pi")
    return math.pi - a


# -- circles -------------------------------------------------------------------

class Circle:
    """Oriented circle: in the plane, on the unit 2-sphere, or a line.

    Orientation +1 means the companion disk is the bounded side (plane), the
    cap around ``center`` (sphere), or the side the normal points into
    (line).  ``xi()`` returns the space-like unit vector of Minkowski
    R^{3,1} representing the oriented circle; all metric queries go through
    it.
    """

    __slots__ = ("kind", "center", "radius", "orientation", "normal", "offset")

    def __init__(self, kind, center=None, radius=None, orientation=1,
                 normal=None, offset=None):
        self.kind = kind
        self.orientation = int(orientation)
        if self.orientation not in (-1, 1):
            raise GeometryError("orientation must be +1 or -1")
        if kind == "plane":
            self.center = complex(center)
            self.radius = float(radius)
            if not self.radius > 0:
                raise GeometryError("plane circles need positive radius")
            self.normal = self.offset = None
        elif kind == "sphere":
            p = np.asarray(center, dtype=float)
            if abs(np.linalg.norm(p) - 1.0) > 1e-12:
                raise GeometryError("spherical center must be a unit vector")
            self.center = p
            self.radius = float(radius)
            if not 0 < self.radius < math.pi:
                raise GeometryError("spherical radius must lie in (0, pi)")
            self.normal = self.offset = None
        elif kind == "line":
            n = complex(normal)
            if abs(abs(n) - 1.0) > 1e-12:
                raise GeometryError("line normal must be a unit vector")
            self.normal = n
            self.offset = float(offset)
            self.center = self.radius = None
        else:
            raise GeometryError(f"unknown circle kind {kind!r}")

    # constructors
    @classmethod
    def plane(cls, center, radius, orientation=1):
        return cls("plane", center=center, radius=radius, orientation=orientation)

    @classmethod
    def sphere(cls, center, radius, orientation=1):
        return cls("sphere", center=center, radius=radius, orientation=orientation)

    @classmethod
    def line(cls, normal, offset, orientation=1):
        return cls("line", normal=normal, offset=offset, orientation=orientation)

    def xi(self):
        if self.kind == "plane":
            rho = self.orientation * self.radius
            c = self.center
            q = abs(c) ** 2 - self.radius ** 2
            return np.array([c.real / rho, c.imag / rho,
                             (q - 1.0) / (2.0 * rho), (q + 1.0) / (2.0 * rho)])
        if self.kind == "line":
            n, h = self.normal, self.offset
            return self.orientation * np.array([n.real, n.imag, h, h])
        p, rho = self.center, self.radius
        s = math.sin(rho)
        return self.orientation * np.array(
            [p[0] / s, p[1] / s, p[2] / s, math.cos(rho) / s])

    @classmethod
    def from_xi_plane(cls, xi):
        xi = np.asarray(xi, dtype=float)
        inv_r = xi[3] - xi[2]
        if abs(inv_r) < 1e-13 * (1.0 + abs(xi[2])):
            n = complex(xi[0], xi[1])
            return cls.line(n / abs(n), xi[2])
        r_signed = 1.0 / inv_r
        c = complex(xi[0], xi[1]) * r_signed
        return cls.plane(c, abs(r_signed), 1 if r_signed > 0 else -1)

    @classmethod
    def from_xi_sphere(cls, xi):
        xi = np.asarray(xi, dtype=float)
        nrm = float(np.linalg.norm(xi[:3]))
        if nrm == 0:
            raise GeometryError("not a circle vector")
        rho = math.atan2(1.0, xi[3] / nrm)
        return cls.sphere(xi[:3] / nrm, rho, 1)

    def reversed(self):
        if self.kind == "plane":
            return Circle.plane(self.center, self.radius, -self.orientation)
        if self.kind == "line":
            return Circle.line(self.normal, self.offset, -self.orientation)
        return Circle.sphere(self.center, self.radius, -self.orientation)

    def contains_point(self, z):
        """Point in the (closed) companion disk; plane/line kinds only."""
        if self.kind == "plane":
            inside = abs(z - self.center) <= self.radius
            return inside if self.orientation > 0 else not inside
        if self.kind == "line":
            side = (z * self.normal.conjugate()).real >= self.offset
            return side if self.orientation > 0 else not side
        raise GeometryError("use spherical point tests on the sphere")

    def to_json(self):
        if self.kind == "plane":
            return {"kind": "plane", "c": [self.center.real, self.center.imag],
                    "r": self.radius, "o": self.orientation}
        if self.kind == "sphere":
            return {"kind": "sphere", "p": list(map(float, self.center)),
                    "rho": self.radius, "o": self.orientation}
        return {"kind": "line", "n": [self.normal.real, self.normal.imag],
                "h": self.offset, "o": self.orientation}

    @classmethod
    def from_json(cls, doc):
        if doc["kind"] == "plane":
            return cls.plane(complex(*doc["c"]), doc["r"], doc.get("o", 1))
        if doc["kind"] == "sphere":
            return cls.sphere(doc["p"], doc["rho"], doc.get("o", 1))
        return cls.line(complex(*doc["n"]), doc["h"], doc.get("o", 1))

    def __repr__(self):
        if self.kind == "plane":
            return f"Circle.plane({self.center:.6g}, {self.radius:.6g}, {self.orientation:+d})"
        if self.kind == "line":
            return f"Circle.line({self.normal:.6g}, {self.offset:.6g}, {self.orientation:+d})"
        return f"Circle.sphere({self.center}, {self.radius:.6g}, {self.orientation:+d})"


def minkowski(x, y):
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] - x[3] * y[3]


# -- Moebius maps ----------------------------------------------------------------

class MobiusMap:
    """Fractional-linear map of the extended plane, det normalized to 1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        det = a * d - b * c
        if det == 0:
            raise GeometryError("singular matrix is not a Moebius map")
        s = np.sqrt(complex(det))
        self.a, self.b, self.c, self.d = a / s, b / s, c / s, d / s

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def scaling(cls, k):
        return cls(k, 0, 0, 1)

    @classmethod
    def disk_automorphism(cls, center, rotation=0.0):
        """Disk automorphism sending ``center`` to 0, then rotating."""
        rot = np.exp(1j * rotation)
        return cls(rot, -rot * center, -np.conj(center), 1)

    @classmethod
    def from_three_points(cls, z1, z2, z3, w1=0.0, w2=1.0, w3=np.inf):
        """Map sending z1,z2,z3 to w1,w2,w3 (None/inf allowed)."""
        def to_01inf(p, q, r):
            if np.isinf(p):
                return cls(0, -(q - r), -1, r)
            if np.isinf(q):
                return cls(1, -p, 1, -r)
            if np.isinf(r):
                return cls(-1, p, 0, p - q)
            return cls(q - r, -p * (q - r), q - p, -r * (q - p))
        A = to_01inf(complex(z1) if not np.isinf(z1) else np.inf,
                     complex(z2) if not np.isinf(z2) else np.inf,
                     complex(z3) if not np.isinf(z3) else np.inf)
        B = to_01inf(complex(w1) if not np.isinf(w1) else np.inf,
                     complex(w2) if not np.isinf(w2) else np.inf,
                     complex(w3) if not np.isinf(w3) else np.inf)
        return B.inverse().compose(A)

    def matrix(self):
        return np.array([[self.a, self.b], [self.c, self.d]])

    def inverse(self):
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, other):
        m = self.matrix() @ other.matrix()
        return MobiusMap(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def __call__(self, z):
        if np.isinf(z):
            return np.inf if self.c == 0 else self.a / self.c
        z = complex(z)
        den = self.c * z + self.d
        if den == 0:
            return np.inf
        return (self.a * z + self.b) / den

    def to_json(self):
        return [[[x.real, x.imag] for x in (self.a, self.b)],
                [[x.real, x.imag] for x in (self.c, self.d)]]

    @classmethod
    def from_json(cls, doc):
        (a, b), (c, d) = doc
        return cls(complex(*a), complex(*b), complex(*c), complex(*d))


def _hermitian_of(C: Circle):
    xi = C.xi() if C.kind != "sphere" else C.xi()
    A = xi[3] - xi[2]
    B = -complex(xi[0], xi[1])
    D = xi[3] + xi[2]
    return np.array([[A, B], [B.conjugate(), D]], dtype=complex)


def _xi_of_hermitian(H):
    A = H[0, 0].real
    D = H[1, 1].real
    B = H[0, 1]
    return np.array([-B.real, -B.imag, (D - A) / 2.0, (D + A) / 2.0])


def apply_mobius(M: MobiusMap, C: Circle):
    """Image of an oriented circle (or line) under a Moebius map.

    Spherical circles are transported through stereographic projection.
    Inversive distances between circles are exactly preserved.
    """
    spherical = C.kind == "sphere"
    H = _hermitian_of(C)
    Minv = M.inverse().matrix()
    H2 = Minv.conj().T @ H @ Minv
    xi = _xi_of_hermitian(H2)
    out = Circle.from_xi_plane(xi)
    if spherical:
        out = stereographic(out, "plane->sphere") if out.kind != "sphere" else out
    return out


def stereographic(C: Circle, direction):
    """Stereographic transport of circles, pole (0,0,1), plane z = 0.

    In inversive coordinates the map is the identity, so round trips are
    exact; the plane unit circle corresponds to the equator with companion
    cap centered at the south pole.
    """
    if direction in ("plane->sphere", "plane_to_sphere"):
        if C.kind == "sphere":
            raise GeometryError("already spherical")
        return Circle.from_xi_sphere(C.xi())
    if direction in ("sphere->plane", "sphere_to_plane"):
        if C.kind != "sphere":
            raise GeometryError("already planar")
        return Circle.from_xi_plane(C.xi())
    raise GeometryError(f"unknown direction {direction!r}")


def stereographic_point(p, direction="sphere->plane"):
    """Pointwise stereographic projection, pole (0,0,1)."""
    if direction == "sphere->plane":
        x, y, z = p
        if abs(1.0 - z) < 1e-300:
            return np.inf
        return complex(x, y) / (1.0 - z)
    z = complex(p)
    if np.isinf(z):
        return np.array([0.0, 0.0, 1.0])
    q = abs(z) ** 2
    return np.array([2 * z.real, 2 * z.imag, q - 1.0]) / (q + 1.0)


# -- inversive distance ----------------------------------------------------------

def _plane_pair(C1, C2):
    out = []
    for C in (C1, C2):
        out.append(stereographic(C, "sphere->plane") if C.kind == "sphere" else C)
    return out


def _sphere_pair(C1, C2):
    out = []
    for C in (C1, C2):
        out.append(stereographic(C, "plane->sphere") if C.kind != "sphere" else C)
    return out


def inversive_distance(C1: Circle, C2: Circle, method="desitter"):
    """Inversive distance of two oriented circles.

    Four routes: the planar center/radius formula, the spherical one, the
    cross-ratio along a common orthogonal circle, and the Minkowski product
    of the de Sitter vectors.  All agree; tangency gives 1, orthogonality 0,
    reversing one orientation flips the sign.
    """
    xi1, xi2 = C1.xi(), C2.xi()
    if np.allclose(xi1, xi2, atol=1e-15) or np.allclose(xi1, -xi2, atol=1e-15):
        raise CoincidentCircles("inversive distance needs distinct circles")
    if method == "desitter":
        return -minkowski(xi1, xi2)
    if method == "planar":
        P1, P2 = _plane_pair(C1, C2)
        if P1.kind == "line" or P2.kind == "line":
            return -minkowski(P1.xi(), P2.xi())
        r1 = P1.orientation * P1.radius
        r2 = P2.orientation * P2.radius
        return (abs(P1.center - P2.center) ** 2 - P1.radius ** 2
                - P2.radius ** 2) / (2.0 * r1 * r2)
    if method == "spherical":
        S1, S2 = _sphere_pair(C1, C2)
        v = (-float(S1.center @ S2.center)
             + math.cos(S1.radius) * math.cos(S2.radius)) \
            / (math.sin(S1.radius) * math.sin(S2.radius))
        return S1.orientation * S2.orientation * v
    if method == "cross_ratio":
        return _inversive_cross_ratio(C1, C2)
    raise GeometryError(f"unknown method {method!r}")


def _circle_circle_points(c, r, c2, r2):
    """Intersection points of two plane circles (assumed to meet)."""
    d = abs(c2 - c)
    if d == 0:
        raise CoincidentCircles("concentric circles do not meet")
    x = (d * d + r * r - r2 * r2) / (2 * d)
    h2 = r * r - x * x
    if h2 < 0:
        raise GeometryError("circles do not intersect")
    h = math.sqrt(max(0.0, h2))
    u = (c2 - c) / d
    base = c + x * u
    off = 1j * u * h
    return base + off, base - off


def _inversive_cross_ratio(C1, C2):
    P1, P2 = _plane_pair(C1, C2)
    if P1.kind == "line" or P2.kind == "line":
        # rotate the sphere so neither circle passes through the pole
        S1, S2 = _sphere_pair(C1, C2)
        R = _rotation_avoiding_pole([S1, S2])
        P1, P2 = (stereographic(_rotate_sphere_circle(S, R), "sphere->plane")
                  for S in (S1, S2))
    c1, r1, c2, r2 = P1.center, P1.radius, P2.center, P2.radius
    d = abs(c2 - c1)
    if d < 1e-13 * (r1 + r2):
        return -minkowski(C1.xi(), C2.xi())  # concentric: no radical axis
    u = (c2 - c1) / d
    foot = c1 + ((d * d + r1 * r1 - r2 * r2) / (2 * d)) * u
    pow_foot = abs(foot - c1) ** 2 - r1 * r1
    y = 2.0 * (r1 + r2 + d) + math.sqrt(max(0.0, -pow_foot))
    P = foot + 1j * u * y
    rho = math.sqrt(abs(P - c1) ** 2 - r1 * r1)  # orthogonal to both
    z1, z2 = _order_on_companion(P, rho, P1)
    w1, w2 = _order_on_companion(P, rho, P2)
    cr = ((z1 - w1) * (z2 - w2)) / ((z1 - z2) * (w1 - w2))
    return 2.0 * cr.real - 1.0


def _order_on_companion(P, rho, C):
    """Intersections of the orthogonal circle with C, ordered so the
    counterclockwise arc from the first to the second lies in C's disk."""
    z1, z2 = _circle_circle_points(P, rho, C.center, C.radius)
    a1 = np.angle(z1 - P)
    a2 = np.angle(z2 - P)
    mid = a1 + ((a2 - a1) % TWO_PI) / 2.0
    zm = P + rho * np.exp(1j * mid)
    if C.contains_point(zm):
        return z1, z2
    return z2, z1


def _rotation_avoiding_pole(circles, seed_axes=((0.3, 0.5, 0.81), (0.7, -0.2, 0.4))):
    from numpy.linalg import norm
    rng_axes = list(seed_axes) + [(1, 0, 0), (0, 1, 0)]
    for ax in rng_axes:
        ax = np.asarray(ax, float)
        ax = ax / norm(ax)
        R = _axis_angle_matrix(ax, 1.0)
        ok = True
        for S in circles:
            if abs(math.cos(S.radius) - (R @ S.center)[2]) < 1e-6:
                ok = False
        if ok:
            return R
    return np.eye(3)


def _axis_angle_matrix(axis, angle):
    x, y, z = axis
    c, s = math.cos(angle), math.sin(angle)
    C = 1 - c
    return np.array([
        [c + x * x * C, x * y * C - z * s, x * z * C + y * s],
        [y * x * C + z * s, c + y * y * C, y * z * C - x * s],
        [z * x * C - y * s, z * y * C + x * s, c + z * z * C]])


def _rotate_sphere_circle(S, R):
    return Circle.sphere(R @ S.center, S.radius, S.orientation)


# -- hyperbolic cycles ------------------------------------------------------------

# the ideal boundary of the Poincare disk, oriented so interior circles get
# positive curvature
_XI_BOUNDARY = np.array([0.0, 0.0, 1.0, 0.0])


def geodetic_curvature(C: Circle, tol=1e-10):
    """Geodetic curvature of the cycle a circle cuts in the Poincare disk.

    Returns ``(kappa, tag)``.  Counterclockwise circles inside the disk give
    coth of the hyperbolic radius; horocycles give 1, hypercycles the cosine
    of the crossing angle, geodesics 0.
    """
    if C.kind == "sphere":
        raise GeometryError("geodetic curvature is read in the plane model")
    if C.kind == "plane":
        meets = abs(abs(C.center) - C.radius) < 1.0 - 1e-15
    else:
        meets = abs(C.offset) < 1.0 - 1e-15
    if not meets:
        raise DiskDisjoint("the cycle must meet the open unit disk")
    kappa = -minkowski(_XI_BOUNDARY, C.xi())
    a = abs(kappa)
    if a > 1.0 + tol:
        tag = "circle"
    elif a >= 1.0 - tol:
        tag = "horocycle"
    elif a <= tol:
        tag = "geodesic"
    else:
        tag = "hypercycle"
    return kappa, tag


def circle_from_hyperbolic(center_point, hyp_radius):
    """Euclidean realization of the hyperbolic circle with the given
    hyperbolic center (a point of the unit disk) and radius."""
    if not np.isfinite(hyp_radius):
        raise GeometryError("horocycles carry no hyperbolic center")
    t = math.tanh(hyp_radius / 2.0)
    b = abs(center_point)
    if b >= 1.0:
        raise GeometryError("hyperbolic centers lie strictly inside the disk")
    den = 1.0 - (t * b) ** 2
    c = center_point * (1.0 - t * t) / den
    rho = t * (1.0 - b * b) / den
    return Circle.plane(c, rho, 1)


def hyperbolic_center_radius(C: Circle):
    """Hyperbolic center and radius of a circle strictly inside the disk."""
    if C.kind != "plane":
        raise GeometryError("plane circles only")
    b, rho = abs(C.center), C.radius
    if b + rho >= 1.0:
        raise GeometryError("circle is not strictly inside the unit disk")
    r = math.atanh(b + rho) - math.atanh(b - rho)
    d_center = math.atanh(b + rho) - r / 2.0
    u = C.center / b if b > 0 else 1.0
    return u * math.tanh(d_center), r


def verify_realization(edges, beta, circles, tol=1e-8):
    """Check that circles realize prescribed inversive distances on edges.

    ``edges`` iterates (u, v) pairs, ``beta`` maps an edge index to its
    target, ``circles`` maps vertices to oriented circles.  Returns a report
    with the maximum residual.
    """
    residuals = []
    for k, (u, v) in enumerate(edges):
        got = inversive_distance(circles[u], circles[v], "desitter")
        want = beta[k]
        residuals.append({"edge": (int(u), int(v)), "target": float(want),
                          "actual": float(got), "residual": abs(got - want)})
    worst = max((r["residual"] for r in residuals), default=0.0)
    return {"passed": worst <= tol, "max_residual": worst, "edges": residuals}
