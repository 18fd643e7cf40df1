"""Rank/degree bookkeeping for vector bundles on a smooth curve of genus g.

A BundleSymbol carries no cohomology, only the (rank, degree, genus)
triple; chi is Riemann-Roch, slopes are exact rationals, and the tensor
algebra follows the standard multilinear rank/degree rules.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import ThetaLabError


class UnsupportedGenus(ThetaLabError):
    """The requested invariant chain is only defined at genus 2."""


@dataclass(frozen=True)
class BundleSymbol:
    rank: int
    degree: int
    genus: int = 2

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.genus < 2:
            raise ValueError("genus must be at least 2")

    def _same_genus(self, other: BundleSymbol) -> None:
        if self.genus != other.genus:
            raise ValueError("mixed genera")

    def tensor(self, other: BundleSymbol) -> BundleSymbol:
        self._same_genus(other)
        return BundleSymbol(
            self.rank * other.rank,
            self.rank * other.degree + other.rank * self.degree,
            self.genus,
        )

    def hom(self, other: BundleSymbol) -> BundleSymbol:
        return self.dual().tensor(other)

    def dual(self) -> BundleSymbol:
        return BundleSymbol(self.rank, -self.degree, self.genus)

    def det(self) -> BundleSymbol:
        return BundleSymbol(1, self.degree, self.genus)

    def twist(self, line_degree: int) -> BundleSymbol:
        return BundleSymbol(self.rank, self.degree + self.rank * line_degree, self.genus)

    def sym2(self) -> BundleSymbol:
        r, d = self.rank, self.degree
        return BundleSymbol(r * (r + 1) // 2, d * (r + 1), self.genus)

    def wedge2(self) -> BundleSymbol:
        r, d = self.rank, self.degree
        if r < 2:
            raise ValueError("wedge2 needs rank at least 2")
        return BundleSymbol(r * (r - 1) // 2, d * (r - 1), self.genus)


def chi(b: BundleSymbol) -> int:
    """Euler characteristic by Riemann-Roch: deg + rank(1 - g)."""
    return b.degree + b.rank * (1 - b.genus)


def slope(b: BundleSymbol) -> Fraction:
    return Fraction(b.degree, b.rank)


def stability_allows(sub: BundleSymbol, ambient: BundleSymbol) -> bool:
    """Whether a subbundle of these invariants is compatible with
    stability of the ambient bundle (strict slope inequality)."""
    if sub.rank >= ambient.rank:
        raise ValueError("subbundle rank must be smaller")
    return slope(sub) < slope(ambient)


def combine(a: BundleSymbol, b: BundleSymbol, op: str) -> BundleSymbol:
    if op == "tensor":
        return a.tensor(b)
    if op == "hom":
        return a.hom(b)
    raise ValueError(f"unknown op {op!r}")


def moduli_dim(n: int, g: int) -> int:
    """Dimension n(2n+1)(g-1) of the moduli of rank-2n symplectic bundles."""
    if n < 1:
        raise ValueError("n must be positive")
    if g < 2:
        raise ValueError("g must be at least 2")
    return n * (2 * n + 1) * (g - 1)


def theta_self_intersection(multiple: int, g: int) -> int:
    """(m Theta)^g = m^g * g! for a principal polarization on a
    g-dimensional abelian variety."""
    return multiple ** g * factorial(g)


@dataclass(frozen=True)
class RaynaudInvariants:
    mukai_rank: int
    duplication_degree: int
    theta_self_int_2theta: int
    pullback_degree_on_Y: int
    slope_Ec: Fraction


def raynaud_invariants(g: int = 2) -> RaynaudInvariants:
    """The invariant chain of the rank-4 Fourier-Mukai bundle on a
    2-dimensional Jacobian restricted along duplication.

    rank = (2 Theta)^g / g!, duplication has degree 2^(2g) (the order of
    the 2-torsion subgroup), the restricted polarization degree on an
    embedded curve is 2g, and the slope of the descended bundle is the
    pullback degree divided by the covering degree and the rank.
    """
    if g != 2:
        raise UnsupportedGenus(f"invariant chain defined only at genus 2, got {g}")
    theta2 = theta_self_intersection(2, g)
    mukai_rank = theta2 // factorial(g)
    duplication_degree = 2 ** (2 * g)
    pullback_degree = duplication_degree * 2 * g
    slope_ec = Fraction(pullback_degree, duplication_degree) / mukai_rank
    return RaynaudInvariants(
        mukai_rank=mukai_rank,
        duplication_degree=duplication_degree,
        theta_self_int_2theta=theta2,
        pullback_degree_on_Y=pullback_degree,
        slope_Ec=slope_ec,
    )
