"""Holomorphic fixed-point bookkeeping for involutions with isolated
fixed points on a curve, and the eigenspace splitting it determines.

For an involution gamma with local model z -> -z at each fixed point p,
det(I - d gamma_p) = 2 and the fixed-point formula reads

    (h0_+ - h0_-) - (h1_+ - h1_-) = sum_p trace_p / det_p.

Together with h1_+ + h1_- = h1 this pins the eigenspace dimensions of H1
once the invariant part of H0 is known; a solution that is negative,
fractional, or too large is reported as Infeasible, which is itself
meaningful output (it rejects a wrong trace table).

The pinned scenarios below describe two rank-2 bundles E_e, E_f attached
to a marked Weierstrass point w on a genus-2 hyperelliptic curve.  The
lifted involution acts on the fibre of either bundle by diag(1, -1) over
the five fixed points other than w and by a scalar over w, and on the
fibre of O(-w) by -1 away from w and +1 at w.  Traces of the derived
bundles follow by multilinear algebra: sym2 of diag(a, b) has trace
a^2 + ab + b^2, and a Hom of +-1-diagonal actions has trace equal to the
product of the two traces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundles import BundleSymbol, chi
from .errors import ThetaLabError


class Infeasible(ThetaLabError):
    """No nonnegative integer eigenspace split exists."""


@dataclass(frozen=True)
class FixedPointDatum:
    trace: Fraction
    jacobian_det: Fraction = Fraction(2)

    def __post_init__(self) -> None:
        object.__setattr__(self, "trace", Fraction(self.trace))
        object.__setattr__(self, "jacobian_det", Fraction(self.jacobian_det))
        if self.jacobian_det == 0:
            raise ValueError("jacobian determinant must be nonzero")


@dataclass(frozen=True)
class LefschetzScenario:
    fixed_points: tuple[FixedPointDatum, ...]
    h0_total: int
    h1_total: int
    h0_plus: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "fixed_points", tuple(self.fixed_points))
        if min(self.h0_total, self.h1_total, self.h0_plus, 0) < 0:
            raise ValueError("cohomology dimensions must be nonnegative")
        if self.h0_plus > self.h0_total:
            raise ValueError("h0_plus cannot exceed h0_total")


def lefschetz_number(s: LefschetzScenario) -> Fraction:
    return sum((p.trace / p.jacobian_det for p in s.fixed_points), Fraction(0))


def split_eigendims(s: LefschetzScenario) -> tuple[int, int]:
    """The unique (h1_plus, h1_minus) solving the fixed-point identity,
    or Infeasible when no nonnegative integer solution exists."""
    number = lefschetz_number(s)
    # (2*h0_plus - h0_total) - number = h1_plus - h1_minus
    difference = (2 * s.h0_plus - s.h0_total) - number
    twice_plus = s.h1_total + difference
    if twice_plus.denominator != 1 or twice_plus.numerator % 2 != 0:
        raise Infeasible(f"parity mismatch: 2*h1_plus = {twice_plus}")
    h1_plus = twice_plus.numerator // 2
    if not 0 <= h1_plus <= s.h1_total:
        raise Infeasible(f"h1_plus = {h1_plus} outside 0..{s.h1_total}")
    return (h1_plus, s.h1_total - h1_plus)


def _six_points(common_trace, marked_trace) -> tuple[FixedPointDatum, ...]:
    points = [FixedPointDatum(Fraction(common_trace)) for _ in range(5)]
    points.append(FixedPointDatum(Fraction(marked_trace)))
    return tuple(points)


_EXT_RANK2 = BundleSymbol(2, -1)  # either extension of O(w) by O(-w)
_LINE_MINUS_W = BundleSymbol(1, -1)  # O(-w)


def sym2_possibilities() -> tuple[LefschetzScenario, LefschetzScenario]:
    """The two candidate trace tables for sym2 of a lifted extension
    bundle: diag(1, -1) fibres contribute trace 1 and scalar fibres
    trace 3, and the scalar slot sits either at the marked point or at
    the other five.  Feasibility of the split selects the true table."""
    h1 = -chi(_EXT_RANK2.sym2())
    first = LefschetzScenario(_six_points(1, 3), h0_total=0, h1_total=h1, h0_plus=0)
    second = LefschetzScenario(_six_points(3, 1), h0_total=0, h1_total=h1, h0_plus=0)
    return first, second


def sym2_scenario() -> LefschetzScenario:
    """The feasible sym2 trace table (five fibres of trace 1, one of 3)."""
    for candidate in sym2_possibilities():
        try:
            split_eigendims(candidate)
        except Infeasible:
            continue
        return candidate
    raise Infeasible("neither sym2 trace table admits a split")


def sym2_rejected_scenario() -> LefschetzScenario:
    """The infeasible sym2 table; splitting it raises Infeasible."""
    feasible = sym2_scenario()
    for candidate in sym2_possibilities():
        if candidate != feasible:
            return candidate
    raise AssertionError("unreachable")


def hom_ee_scenario() -> LefschetzScenario:
    """Hom between the two distinct extension bundles E_f, E_e: fibre
    traces 0*0 = 0 away from the marked point and 2*2 = 4 at it; no
    global maps between distinct stable bundles of equal slope."""
    h1 = -chi(_EXT_RANK2.hom(_EXT_RANK2))
    return LefschetzScenario(_six_points(0, 4), h0_total=0, h1_total=h1, h0_plus=0)


def hom_ow_scenario() -> LefschetzScenario:
    """Hom(O(-w), E_e): fibre traces (-1)*0 = 0 away from the marked
    point and (+1)*2 = 2 at it; the one global section is equivariant."""
    h0 = 1
    h1 = h0 - chi(_LINE_MINUS_W.hom(_EXT_RANK2))
    return LefschetzScenario(_six_points(0, 2), h0_total=h0, h1_total=h1, h0_plus=1)
