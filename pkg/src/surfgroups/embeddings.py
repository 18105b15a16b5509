"""The embedding of the Klein bottle group into the torus 2-string braid
group, the lift calculus from Klein-bottle mapping classes to SL(2, Z), and
point-set lifting through the orientable double cover.

The covering is modelled flatly on (R/Z)^2 with the free orientation-
reversing involution iota(u, v) = (u + 1/2 mod 1, -v mod 1); the quotient is
the Klein bottle with fundamental domain u in [0, 1/2), v in [0, 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .klein import KLEIN_PRESENTATION, MCG_K, KleinElement, KleinEndo
from .torusbraid import GEN_A, GEN_B, GEN_X, GEN_Y, IDENTITY, SIGMA_INV, XY, B2TElement
from .words import GroupHom, HomReport

DEFAULT_BALL_BOUND = 64


class NotLiftable(ValueError):
    """The endomorphism does not lift through the double cover."""


class NonAutomorphism(ValueError):
    """SL(2, Z) output requires generator images of infinite-order type +-1."""


class DuplicatePoint(ValueError):
    pass


class OutOfDomain(ValueError):
    pass


# Generator images: al -> a^-1 x^2, be -> y s^-1.
PHI1_IMAGE_ALPHA = GEN_A.inverse() * GEN_X * GEN_X
PHI1_IMAGE_BETA = GEN_Y * SIGMA_INV

PHI1_HOM = GroupHom(
    KLEIN_PRESENTATION,
    {"al": PHI1_IMAGE_ALPHA, "be": PHI1_IMAGE_BETA},
    identity=IDENTITY,
)


def phi1(u: KleinElement) -> B2TElement:
    """Image of al^r be^s under the embedding into the torus braid group."""
    return PHI1_IMAGE_ALPHA ** u.r * PHI1_IMAGE_BETA ** u.s


def phi1_closed_form(r: int, s: int) -> B2TElement:
    """Direct normal form of phi1(al^r be^s):
    x^(2r) a^-r b^(s/2) when s is even, and x^(2r) y a^-r b^((s-1)/2) s^-1
    when s is odd, with the trailing s^-1 canonicalised as B^-1 s.
    """
    if s % 2 == 0:
        return B2TElement(XY.word([("x", 2 * r)]), -r, s // 2, 0)
    # x^(2r) * y * B^-1 reduces to x^(2r+1) * y * x^-1.
    word = XY.word([("x", 2 * r + 1), ("y", 1), ("x", -1)])
    return B2TElement(word, -r, (s - 1) // 2, 1)


def verify_phi1() -> HomReport:
    return PHI1_HOM.verify()


@dataclass(frozen=True)
class BallReport:
    radius: int
    count: int
    collisions: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def passed(self) -> bool:
        return not self.collisions and self.count == (2 * self.radius + 1) ** 2


def certify_injectivity_ball(radius: int, bound: int = DEFAULT_BALL_BOUND) -> BallReport:
    """Enumerate all al^r be^s with |r|, |s| <= radius and certify that their
    images are pairwise distinct by canonical-form hashing."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if radius > bound:
        raise ValueError(f"radius {radius} exceeds configured bound {bound}")
    seen: dict = {}
    collisions = []
    for r in range(-radius, radius + 1):
        for s in range(-radius, radius + 1):
            img = phi1(KleinElement(r, s))
            key = (img.w.syllables, img.m, img.n, img.eps)
            if key in seen:
                collisions.append((seen[key], (r, s)))
            else:
                seen[key] = (r, s)
    return BallReport(radius, len(seen), tuple(collisions))


@dataclass(frozen=True)
class IntMat2:
    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "IntMat2") -> "IntMat2":
        return IntMat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "IntMat2":
        return IntMat2(-self.a, -self.b, -self.c, -self.d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


MAT_I = IntMat2(1, 0, 0, 1)


def lift_matrices(e: KleinEndo) -> tuple[IntMat2, IntMat2]:
    """The two lifts of an endomorphism al -> al^r, be -> al^u be^v (v odd)
    act on the torus group by the matrices diag(r, v) and diag(-r, v)."""
    if e.image_alpha.s != 0:
        raise NotLiftable(f"image of al must be a power of al, got {e.image_alpha}")
    v = e.image_beta.s
    if v % 2 == 0:
        raise NotLiftable(f"image of be has even be-exponent {v}; no lift exists")
    r = e.image_alpha.r
    return IntMat2(r, 0, 0, v), IntMat2(-r, 0, 0, v)


def induced_sl2(e: KleinEndo) -> IntMat2:
    """The degree-1 lift: whichever of the two lift matrices has determinant +1."""
    m1, m2 = lift_matrices(e)
    if abs(e.image_alpha.r) != 1 or abs(e.image_beta.s) != 1:
        raise NonAutomorphism(
            f"SL(2, Z) image requires |r| = |v| = 1, got r={e.image_alpha.r}, v={e.image_beta.s}"
        )
    chosen = m1 if m1.det() == 1 else m2
    # Cross-check against the direct action on the index-2 subgroup <al, be^2>,
    # identified with the torus group via a -> al, b -> be^2.
    image_b2 = e.image_beta * e.image_beta
    direct = IntMat2(e.image_alpha.r, 0, 0, image_b2.s // 2)
    if image_b2.r != 0 or chosen not in (direct, IntMat2(-direct.a, 0, 0, direct.d)):
        raise AssertionError("lift matrix disagrees with the direct subgroup action")
    return chosen


def ker_phi_mcgk() -> tuple[KleinEndo, ...]:
    """The mapping classes sent to the identity matrix (exactly two of four)."""
    return tuple(e for e in MCG_K if induced_sl2(e) == MAT_I)


HALF = Fraction(1, 2)


def _mod1(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


@dataclass(frozen=True, order=True)
class TorusPoint:
    u: Fraction
    v: Fraction

    def __post_init__(self):
        if not (0 <= self.u < 1 and 0 <= self.v < 1):
            raise OutOfDomain(f"torus point ({self.u}, {self.v}) outside [0,1)x[0,1)")


@dataclass(frozen=True, order=True)
class KleinPoint:
    u: Fraction
    v: Fraction

    def __post_init__(self):
        if not (0 <= self.u < HALF and 0 <= self.v < 1):
            raise OutOfDomain(f"Klein point ({self.u}, {self.v}) outside [0,1/2)x[0,1)")


def deck(p: TorusPoint) -> TorusPoint:
    """The free involution iota(u, v) = (u + 1/2, -v) on the torus."""
    return TorusPoint(_mod1(p.u + HALF), _mod1(-p.v))


def lift_configuration(points: Iterable[KleinPoint]) -> list[TorusPoint]:
    """Full preimage of a configuration under the double cover: each point
    lifts to an iota-orbit {p, iota(p)}; the result has 2k distinct points."""
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("configuration points must be pairwise distinct")
    lifted: set[TorusPoint] = set()
    for p in pts:
        q = TorusPoint(p.u, p.v)
        lifted.add(q)
        lifted.add(deck(q))
    return sorted(lifted)
