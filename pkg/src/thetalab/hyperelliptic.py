"""Genus-2 hyperelliptic curves y^2 = f(x) and their Jacobians.

The model is a monic squarefree quintic over Q or an odd prime field, so
there is a single point at infinity, it is a Weierstrass point, and the
canonical class is 2*[infinity].  Divisor classes of any degree are
stored as a reduced Mumford pair plus a degree shift: the class is
[div(u, v)] - deg(u)*[infinity] + degree*[infinity].  Reduced pairs are
unique per class, so equality, hashing, and printing are canonical.

Cantor composition and reduction implement the group law; everything
else (Riemann-Roch dimensions, the Serre involution, translate
intersections, torsion) is derived from it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .errors import ThetaLabError
from .fields import PrimeField, QQ, RationalField, field_from_spec
from .polys import Poly, gcd as poly_gcd, parse_poly, xgcd

ENUMERATION_FIELD_BOUND = 37


class NotSquarefree(ThetaLabError):
    """The quintic has a repeated root."""


class EvenCharacteristic(ThetaLabError):
    """y^2 = f(x) needs characteristic different from 2."""


class DoesNotSplit(ThetaLabError):
    """A polynomial fails to split into linear factors over the base field."""


class WrongDegree(ThetaLabError):
    """A divisor class of the wrong degree was supplied."""


class OrderTwo(ThetaLabError):
    """The translating class has order dividing 2, a degenerate case."""


class NotWeierstrass(ThetaLabError):
    """The point is not fixed by the hyperelliptic involution."""


class FieldTooLarge(ThetaLabError):
    """Exhaustive enumeration is limited to small prime fields."""


@dataclass(frozen=True)
class HyperellipticCurve:
    field: RationalField | PrimeField
    f: Poly

    def __post_init__(self) -> None:
        if self.field.characteristic == 2:
            raise EvenCharacteristic("the base field has characteristic 2")
        if self.f.degree != 5 or self.f.lc() != self.field.one:
            raise ValueError("f must be a monic quintic")
        fprime = self.f.derivative()
        if fprime.is_zero or poly_gcd(self.f, fprime).degree != 0:
            raise NotSquarefree("f has a repeated root")

    @property
    def f_coeffs(self) -> tuple:
        """The six coefficients of f, constant term first."""
        return self.f.coeffs

    def point(self, x, y) -> CurvePoint:
        return CurvePoint(self, self.field(x), self.field(y))

    def infinity(self) -> CurvePoint:
        return CurvePoint(self, None, None, True)

    def __str__(self) -> str:
        coeffs = ",".join(str(c) for c in (list(self.f.coeffs[:5]) + [0, 0, 0, 0, 0])[:5])
        return f"field={self.field}; f={coeffs}"


@dataclass(frozen=True)
class CurvePoint:
    curve: HyperellipticCurve
    x: object = None
    y: object = None
    at_infinity: bool = False

    def __post_init__(self) -> None:
        if not self.at_infinity:
            F = self.curve.field
            if F.mul(self.y, self.y) != self.curve.f(self.x):
                raise ValueError(f"({self.x}, {self.y}) is not on the curve")

    def __str__(self) -> str:
        if self.at_infinity:
            return "infinity"
        return f"({self.x}, {self.y})"

    def _key(self):
        if self.at_infinity:
            return (1, 0, 0)
        return (0, self.x, self.y)


def new_curve(field, f_coeffs) -> HyperellipticCurve:
    """Build and validate a curve from low-order coefficients c0..c4 of a
    monic quintic (a sixth coefficient, if given, must equal 1)."""
    F = field_from_spec(field)
    coeffs = list(f_coeffs)
    if len(coeffs) == 6:
        if F(coeffs[5]) != F.one:
            raise ValueError("f must be monic")
        coeffs = coeffs[:5]
    if len(coeffs) != 5:
        raise ValueError("expected 5 coefficients c0..c4")
    return HyperellipticCurve(F, Poly(F, coeffs + [1]))


def parse_curve(text: str) -> HyperellipticCurve:
    """Parse 'field=Q; f=c0,c1,c2,c3,c4' or 'field=Fp:<p>; f=...'."""
    parts: dict[str, str] = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, _, value = chunk.partition("=")
        parts[key.strip()] = value.strip()
    if set(parts) != {"field", "f"}:
        raise ValueError(f"curve spec needs 'field' and 'f': {text!r}")
    coeffs = [Fraction(c.strip()) for c in parts["f"].split(",")]
    return new_curve(parts["field"], coeffs)


def involution(p: CurvePoint) -> CurvePoint:
    """The hyperelliptic involution (x, y) -> (x, -y)."""
    if p.at_infinity:
        return p
    return CurvePoint(p.curve, p.x, p.curve.field.neg(p.y))


def is_weierstrass(p: CurvePoint) -> bool:
    return p.at_infinity or p.y == p.curve.field.zero


def _fp_root_split(g: Poly, field: PrimeField) -> list:
    """All roots of a product of distinct linear factors over F_p."""
    if g.degree == 0:
        return []
    if g.degree == 1:
        return [field.neg(g[0])]
    x = Poly.x(field)
    shift = 0
    while True:
        probe = _pow_mod(x + shift, (field.p - 1) // 2, g) - 1
        h = poly_gcd(g, probe)
        if 0 < h.degree < g.degree:
            return _fp_root_split(h, field) + _fp_root_split(g // h, field)
        shift += 1


def _pow_mod(base: Poly, n: int, modulus: Poly) -> Poly:
    acc = Poly.constant(base.field, base.field.one)
    base = base % modulus
    while n:
        if n & 1:
            acc = acc * base % modulus
        base = base * base % modulus
        n >>= 1
    return acc


def _rational_roots(g: Poly) -> list[Fraction]:
    """All rational roots of a polynomial over Q, by the rational root test."""
    roots: list[Fraction] = []
    while g[0] == 0 and g.degree > 0:
        roots.append(Fraction(0))
        g = g // Poly.x(QQ)
    if g.degree == 0:
        return roots
    denom = lcm(*[Fraction(c).denominator for c in g.coeffs])
    ints = [int(Fraction(c) * denom) for c in g.coeffs]
    lead, const = ints[-1], ints[0]
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for candidate in (Fraction(p, q), Fraction(-p, q)):
                if g(candidate) == 0 and candidate not in roots:
                    roots.append(candidate)
    return roots


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def weierstrass_points(curve: HyperellipticCurve) -> list[CurvePoint]:
    """The five roots of f with y = 0, plus the point at infinity."""
    F = curve.field
    if isinstance(F, PrimeField):
        x = Poly.x(F)
        radical = poly_gcd(curve.f, _pow_mod(x, F.p, curve.f) - x)
        if radical.degree != 5:
            raise DoesNotSplit("f does not split over the base field")
        roots = _fp_root_split(radical, F)
    else:
        roots = _rational_roots(curve.f)
        if len(roots) != 5:
            raise DoesNotSplit("f does not split over Q")
    points = [curve.point(r, 0) for r in roots]
    points.sort(key=CurvePoint._key)
    return points + [curve.infinity()]


@dataclass(frozen=True)
class MumfordDivisor:
    curve: HyperellipticCurve
    u: Poly
    v: Poly

    def __post_init__(self) -> None:
        F = self.curve.field
        if self.u.is_zero or self.u.lc() != F.one:
            raise ValueError("u must be monic")
        if self.u.degree > 2:
            raise ValueError("reduced pairs have deg u <= 2")
        if not self.v.is_zero and self.v.degree >= self.u.degree:
            raise ValueError("deg v must be smaller than deg u")
        if not self.u.divides(self.v * self.v - self.curve.f):
            raise ValueError("u does not divide v^2 - f")

    @classmethod
    def zero(cls, curve: HyperellipticCurve) -> MumfordDivisor:
        F = curve.field
        return cls(curve, Poly.constant(F, F.one), Poly(F, ()))

    @classmethod
    def from_point(cls, p: CurvePoint) -> MumfordDivisor:
        """The class [p] - [infinity]."""
        if p.at_infinity:
            return cls.zero(p.curve)
        F = p.curve.field
        return cls(p.curve, Poly(F, [F.neg(p.x), F.one]), Poly.constant(F, p.y))

    @property
    def is_zero(self) -> bool:
        return self.u.degree == 0

    def points(self) -> list[CurvePoint]:
        """The effective support over the base field; DoesNotSplit when u
        is an irreducible quadratic."""
        F = self.curve.field
        if self.u.degree == 0:
            return []
        if self.u.degree == 1:
            x0 = F.neg(self.u[0])
            return [self.curve.point(x0, self.v(x0))]
        disc = F.sub(F.mul(self.u[1], self.u[1]), F.mul(F(4), self.u[0]))
        root = F.sqrt(disc)
        if root is None:
            raise DoesNotSplit(f"u = {self.u} is irreducible")
        half = F.inv(F(2))
        xs = sorted(
            (F.mul(F.add(F.neg(self.u[1]), root), half),
             F.mul(F.sub(F.neg(self.u[1]), root), half))
        )
        return [self.curve.point(x0, self.v(x0)) for x0 in xs]

    def _key(self):
        return (self.u.degree, self.u.coeffs, self.v.coeffs)

    def __str__(self) -> str:
        return f"u={self.u}; v={self.v}"


def identity(curve: HyperellipticCurve) -> MumfordDivisor:
    return MumfordDivisor.zero(curve)


def negate(curve: HyperellipticCurve, a: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(curve, a.u, (-a.v) % a.u)


def cantor_add(curve: HyperellipticCurve, a: MumfordDivisor, b: MumfordDivisor) -> MumfordDivisor:
    """Cantor composition followed by reduction to deg u <= 2."""
    f = curve.f
    g1, s1, t1 = xgcd(a.u, b.u)
    g, s2, t2 = xgcd(g1, a.v + b.v)
    u3 = (a.u * b.u) // (g * g)
    num = s2 * s1 * a.u * b.v + s2 * t1 * b.u * a.v + t2 * (a.v * b.v + f)
    v3 = (num // g) % u3
    u, v = u3, v3
    while u.degree > 2:
        u_next = ((f - v * v) // u).monic()
        v_next = (-v) % u_next
        u, v = u_next, v_next
    return MumfordDivisor(curve, u, v)


def scalar_mul(curve: HyperellipticCurve, a: MumfordDivisor, n: int) -> MumfordDivisor:
    if n < 0:
        return scalar_mul(curve, negate(curve, a), -n)
    acc = identity(curve)
    base = a
    while n:
        if n & 1:
            acc = cantor_add(curve, acc, base)
        base = cantor_add(curve, base, base)
        n >>= 1
    return acc


@dataclass(frozen=True)
class PicClass:
    base: MumfordDivisor
    degree: int

    @property
    def curve(self) -> HyperellipticCurve:
        return self.base.curve

    @property
    def is_trivial(self) -> bool:
        return self.degree == 0 and self.base.is_zero

    def __add__(self, other: PicClass) -> PicClass:
        if not isinstance(other, PicClass):
            return NotImplemented
        return PicClass(cantor_add(self.curve, self.base, other.base),
                        self.degree + other.degree)

    def __neg__(self) -> PicClass:
        return PicClass(negate(self.curve, self.base), -self.degree)

    def __sub__(self, other: PicClass) -> PicClass:
        return self + (-other)

    def __mul__(self, n: int) -> PicClass:
        if not isinstance(n, int):
            return NotImplemented
        return PicClass(scalar_mul(self.curve, self.base, n), self.degree * n)

    __rmul__ = __mul__

    def _key(self):
        return (self.degree,) + self.base._key()

    def __str__(self) -> str:
        return f"{self.base}; d={self.degree}"


def point_class(p: CurvePoint) -> PicClass:
    """The degree-1 class of a single point."""
    return PicClass(MumfordDivisor.from_point(p), 1)


def reduce_class(curve: HyperellipticCurve, points) -> PicClass:
    """Canonical form of a formal sum of points.

    Accepts an iterable of CurvePoint or of (CurvePoint, multiplicity)
    pairs, or a mapping point -> multiplicity.
    """
    if hasattr(points, "items"):
        items = list(points.items())
    else:
        items = []
        for entry in points:
            if isinstance(entry, CurvePoint):
                items.append((entry, 1))
            else:
                point, mult = entry
                items.append((point, int(mult)))
    total = identity(curve)
    degree = 0
    for point, mult in items:
        degree += mult
        if point.at_infinity:
            continue
        piece = scalar_mul(curve, MumfordDivisor.from_point(point), mult)
        total = cantor_add(curve, total, piece)
    return PicClass(total, degree)


def canonical_class(curve: HyperellipticCurve) -> PicClass:
    """K = 2*[infinity] for the quintic model."""
    return PicClass(identity(curve), 2)


def h0(curve: HyperellipticCurve, d: PicClass) -> int:
    """Genus-2 closed form for the dimension of global sections.

    Degree 0 detects triviality, degree 1 effectivity (the reduced base
    must not need two affine points), degree 2 is 2 for the canonical
    class and 1 otherwise (every degree-2 class is effective), and from
    degree 3 on Riemann-Roch gives d - 1 outright.
    """
    deg = d.degree
    if deg < 0:
        return 0
    if deg == 0:
        return 1 if d.base.is_zero else 0
    if deg == 1:
        return 1 if d.base.u.degree <= 1 else 0
    if deg == 2:
        return 2 if d.base.is_zero else 1
    return deg - 1


def serre_involution(curve: HyperellipticCurve, L: PicClass) -> PicClass:
    """L -> K - L on classes of degree 1."""
    if L.degree != 1:
        raise WrongDegree(f"expected degree 1, got {L.degree}")
    return PicClass(negate(curve, L.base), 1)


def km2_points(curve: HyperellipticCurve, M: PicClass) -> tuple[CurvePoint, CurvePoint]:
    """The unique effective pair (q1, q2) with [q1 + q2] = K + 2M.

    Requires 2M nonzero; when 2M = 0 the class is canonical and moves in
    a pencil, so no unique pair exists (OrderTwo).  When the pair is a
    conjugate pair over a quadratic extension, DoesNotSplit is raised.
    """
    if M.degree != 0:
        raise WrongDegree(f"expected degree 0, got {M.degree}")
    double = scalar_mul(curve, M.base, 2)
    if double.u.degree == 0:
        raise OrderTwo("K + 2M is the canonical class")
    if double.u.degree == 1:
        pair = (double.points()[0], curve.infinity())
    else:
        pts = double.points()
        pair = (pts[0], pts[1])
    check = reduce_class(curve, pair)
    expected = canonical_class(curve) + M + M
    assert check == expected, "effective pair does not reduce to K + 2M"
    return pair


def theta_translate_intersection(curve: HyperellipticCurve, M: PicClass) -> tuple[PicClass, PicClass]:
    """The two degree-1 classes on both translates of the theta divisor
    by M and by -M; they are exchanged by the Serre involution."""
    q1, q2 = km2_points(curve, M)
    first = M + point_class(involution(q1))
    second = M + point_class(involution(q2))
    ordered = sorted((first, second), key=PicClass._key)
    return (ordered[0], ordered[1])


def two_torsion(curve: HyperellipticCurve) -> list[PicClass]:
    """All 16 classes killed by doubling, generated by differences of
    Weierstrass points."""
    ws = weierstrass_points(curve)
    generators = [MumfordDivisor.from_point(w) for w in ws[:4]]
    classes = []
    for mask in range(16):
        acc = identity(curve)
        for bit, gen in enumerate(generators):
            if mask >> bit & 1:
                acc = cantor_add(curve, acc, gen)
        classes.append(PicClass(acc, 0))
    unique = sorted(set(classes), key=PicClass._key)
    assert len(unique) == 16, "Weierstrass differences generated fewer than 16 classes"
    return unique


def kx_w_pencil_member(curve: HyperellipticCurve, w: CurvePoint, p: CurvePoint):
    """The effective divisor w + p + involution(p) in the pencil K + [w]."""
    if not is_weierstrass(w):
        raise NotWeierstrass(f"{w} is not a Weierstrass point")
    support: dict[CurvePoint, int] = {}
    for point in (w, p, involution(p)):
        support[point] = support.get(point, 0) + 1
    divisor = sorted(support.items(), key=lambda item: item[0]._key())
    assert reduce_class(curve, divisor) == canonical_class(curve) + point_class(w), \
        "pencil member is not in the class K + [w]"
    return divisor


def curve_points(curve: HyperellipticCurve) -> list[CurvePoint]:
    """All points over a small prime field, infinity last."""
    F = _enumeration_field(curve)
    points = []
    for x in F.elements():
        z = curve.f(x)
        y = F.sqrt(z)
        if y is None:
            continue
        points.append(curve.point(x, y))
        if y != 0:
            points.append(curve.point(x, F.neg(y)))
    points.sort(key=CurvePoint._key)
    return points + [curve.infinity()]


def _enumeration_field(curve: HyperellipticCurve) -> PrimeField:
    F = curve.field
    if not isinstance(F, PrimeField) or F.p > ENUMERATION_FIELD_BOUND:
        raise FieldTooLarge(
            f"enumeration needs a prime field with p <= {ENUMERATION_FIELD_BOUND}"
        )
    return F


_REDUCED_CACHE: dict[HyperellipticCurve, tuple[MumfordDivisor, ...]] = {}


def _all_reduced(curve: HyperellipticCurve) -> tuple[MumfordDivisor, ...]:
    """Every reduced Mumford pair over a small prime field."""
    cached = _REDUCED_CACHE.get(curve)
    if cached is not None:
        return cached
    F = _enumeration_field(curve)
    p = F.p
    f = curve.f
    found = [MumfordDivisor.zero(curve)]
    for point in curve_points(curve)[:-1]:
        found.append(MumfordDivisor.from_point(point))
    x = Poly.x(F)
    for u1 in range(p):
        for u0 in range(p):
            u = x * x + Poly(F, (u0, u1))
            rem = f % u
            r1, r0 = rem[1], rem[0]
            for v1 in range(p):
                a = (2 * v1) % p
                c1 = (v1 * v1 * u1) % p
                c0 = (v1 * v1 * u0) % p
                for v0 in range(p):
                    # v^2 mod u has linear coefficient 2 v0 v1 - v1^2 u1
                    # and constant v0^2 - v1^2 u0
                    if (a * v0 - c1 - r1) % p == 0 and (v0 * v0 - c0 - r0) % p == 0:
                        found.append(MumfordDivisor(curve, u, Poly(F, (v0, v1))))
    ordered = tuple(sorted(found, key=MumfordDivisor._key))
    _REDUCED_CACHE[curve] = ordered
    return ordered


def enumerate_pic(curve: HyperellipticCurve, degree: int) -> list[PicClass]:
    """The complete list of degree-d classes over a small prime field."""
    return [PicClass(div, degree) for div in _all_reduced(curve)]


def parse_mumford(curve: HyperellipticCurve, text: str) -> MumfordDivisor:
    """Parse the canonical printed form 'u=<poly>; v=<poly>'."""
    parts = _key_value_parts(text)
    if not {"u", "v"} <= set(parts):
        raise ValueError(f"Mumford text needs 'u' and 'v': {text!r}")
    u = parse_poly(parts["u"], curve.field)
    v = parse_poly(parts["v"], curve.field)
    return MumfordDivisor(curve, u, v)


def parse_class(curve: HyperellipticCurve, text: str) -> PicClass:
    """Parse 'u=<poly>; v=<poly>' with an optional '; d=<degree>'."""
    parts = _key_value_parts(text)
    degree = int(parts.pop("d", "0"))
    if set(parts) != {"u", "v"}:
        raise ValueError(f"class text needs 'u' and 'v': {text!r}")
    u = parse_poly(parts["u"], curve.field)
    v = parse_poly(parts["v"], curve.field)
    return PicClass(MumfordDivisor(curve, u, v), degree)


def _key_value_parts(text: str) -> dict[str, str]:
    parts: dict[str, str] = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, _, value = chunk.partition("=")
        parts[key.strip()] = value.strip()
    return parts
