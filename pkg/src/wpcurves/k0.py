"""Rank/degree classes and the averaged Euler form.

The averaged Euler form is the tau-average of the Euler form
``<X,Y> = dim Hom(X,Y) - dim Ext^1(X,Y)`` over one tau-period.  The
Auslander-Reiten translation tau needs the sheaf category itself, so only the
closed Riemann-Roch expression is evaluated here::

    <<X,Y>> = (chi/2) rk X rk Y + (1/abar) (rk X dg Y - rk Y dg X)

with ``abar`` the lcm of the weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DomainError, WeightedCurve, euler_characteristic, weight_lcm


@dataclass(frozen=True)
class K0Class:
    """Numerical class (rank, degree) in the Grothendieck group."""

    rank: int
    degree: int

    def __add__(self, other: "K0Class") -> "K0Class":
        return K0Class(self.rank + other.rank, self.degree + other.degree)

    def __sub__(self, other: "K0Class") -> "K0Class":
        return K0Class(self.rank - other.rank, self.degree - other.degree)

    def __neg__(self) -> "K0Class":
        return K0Class(-self.rank, -self.degree)

    def __rmul__(self, k: int) -> "K0Class":
        return K0Class(k * self.rank, k * self.degree)


def structure_sheaf() -> K0Class:
    return K0Class(1, 0)


def simple_sheaf_degree(curve: WeightedCurve, point_weight: int) -> int:
    """Degree abar / w of the simple sheaf at a point of weight w."""
    if point_weight != 1 and point_weight not in curve.weights:
        raise DomainError(f"{curve} has no point of weight {point_weight}")
    return weight_lcm(curve) // point_weight


def simple_sheaf(curve: WeightedCurve, point_weight: int = 1) -> K0Class:
    return K0Class(0, simple_sheaf_degree(curve, point_weight))


def averaged_euler_form(curve: WeightedCurve, x: K0Class, y: K0Class) -> Fraction:
    abar = weight_lcm(curve)
    half_chi = euler_characteristic(curve) / 2
    return half_chi * x.rank * y.rank + Fraction(x.rank * y.degree - y.rank * x.degree, abar)
