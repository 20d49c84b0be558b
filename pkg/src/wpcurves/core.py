"""Weighted curves and their scalar invariants.

A weighted curve is recorded by the genus of the underlying surface and the
multiset of weights of its exceptional points.  Point positions are not
modelled; nothing computed here depends on them.

All invariants are exact rationals (``fractions.Fraction``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

ExactRational = Fraction
Number = Union[int, Fraction]


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


@dataclass(frozen=True, order=True)
class WeightedCurve:
    genus: int
    weights: tuple[int, ...] = ()

    def __init__(self, genus: int = 0, weights: Iterable[int] = ()):
        if not isinstance(genus, int) or genus < 0:
            raise DomainError(f"genus must be a non-negative integer, got {genus!r}")
        ws = []
        for w in weights:
            if not isinstance(w, int) or w < 1:
                raise DomainError(f"weights must be positive integers, got {w!r}")
            if w > 1:
                ws.append(w)
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "weights", tuple(sorted(ws)))

    @classmethod
    def line(cls, *weights: int) -> "WeightedCurve":
        """The weighted projective line P^1<weights>."""
        return cls(0, weights)

    @property
    def t(self) -> int:
        return len(self.weights)

    def label(self) -> str:
        ws = ",".join(map(str, self.weights))
        if self.genus == 0:
            return f"P1<{ws}>" if ws else "P1"
        return f"g={self.genus}<{ws}>"

    def __str__(self) -> str:
        return self.label()


class Trisection(enum.Enum):
    SPHERICAL = "Spherical"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"
    EXCLUDED_PQ = "ExcludedPQ"


def weight_lcm(curve: WeightedCurve) -> int:
    return math.lcm(*curve.weights) if curve.weights else 1


def euler_characteristic(curve: WeightedCurve) -> Fraction:
    """chi = 2(1 - g) - sum(1 - 1/a) over the weights."""
    chi = Fraction(2 * (1 - curve.genus))
    for a in curve.weights:
        chi -= 1 - Fraction(1, a)
    return chi


def is_excluded_pq(curve: WeightedCurve) -> bool:
    """True for P^1<p> and P^1<p,q> with p != q, which are not orbifold quotients."""
    if curve.genus != 0:
        return False
    if curve.t == 1:
        return True
    return curve.t == 2 and curve.weights[0] != curve.weights[1]


def classify(curve: WeightedCurve) -> Trisection:
    if is_excluded_pq(curve):
        return Trisection.EXCLUDED_PQ
    chi = euler_characteristic(curve)
    if chi > 0:
        return Trisection.SPHERICAL
    if chi == 0:
        return Trisection.PARABOLIC
    return Trisection.HYPERBOLIC


def riemann_hurwitz_chi(chi_cover: Number, group_order: int) -> Fraction:
    """Euler characteristic of the quotient by a group of the given order."""
    if not isinstance(group_order, int) or group_order < 1:
        raise DomainError(f"group order must be a positive integer, got {group_order!r}")
    return Fraction(chi_cover) / group_order


def _as_even_integer(chi: Number) -> int:
    chi = Fraction(chi)
    if chi.denominator != 1 or chi.numerator % 2:
        raise DomainError(f"Euler characteristic {chi} of an ordinary surface must be an even integer")
    return chi.numerator


def hurwitz_bound(chi: Number) -> int:
    """Upper bound 42|chi| on the automorphism group of an ordinary hyperbolic surface."""
    value = Fraction(chi)
    if value >= 0 or value.denominator != 1 or value.numerator % 2:
        raise DomainError("bound applies to ordinary hyperbolic surfaces (chi a negative even integer)")
    return 42 * -value.numerator


def genus_from_chi(chi: Number) -> int:
    g2 = 2 - _as_even_integer(chi)
    if g2 < 0:
        raise DomainError(f"chi = {chi} exceeds 2, no surface has negative genus")
    return g2 // 2


def chi_from_genus(genus: int) -> int:
    if not isinstance(genus, int) or genus < 0:
        raise DomainError(f"genus must be a non-negative integer, got {genus!r}")
    return 2 * (1 - genus)


def genus_chi_convert(value: Number, direction: str) -> int:
    """Convert between Euler characteristic and genus of an ordinary surface.

    ``direction`` is ``"chi->g"`` or ``"g->chi"``.
    """
    if direction in ("chi->g", "chi_to_genus"):
        return genus_from_chi(value)
    if direction in ("g->chi", "genus_to_chi"):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise DomainError(f"genus must be an integer, got {value}")
            value = value.numerator
        return chi_from_genus(value)
    raise DomainError(f"unknown direction {direction!r}")


def spherical_triangle_group_order(a: int, b: int, c: int) -> int:
    """Order 2 / (1/a + 1/b + 1/c - 1) of the polyhedral group with quotient P^1<a,b,c>.

    Entries equal to 1 are ordinary points, so ``(1, n, n)`` gives the cyclic
    group of order n.  Triples reducing to the excluded lines P^1<p> and
    P^1<p,q>, p != q, are rejected even where the formula happens to be
    integral, e.g. (1, 3, 6).
    """
    for x in (a, b, c):
        if not isinstance(x, int) or x < 1:
            raise DomainError(f"entries must be positive integers, got {(a, b, c)}")
    excess = Fraction(1, a) + Fraction(1, b) + Fraction(1, c) - 1
    if excess <= 0:
        raise DomainError(f"({a},{b},{c}) is not spherical")
    order = 2 / excess
    if is_excluded_pq(WeightedCurve(0, (a, b, c))) or order.denominator != 1:
        raise DomainError(f"({a},{b},{c}) is not the quotient of P^1 by a finite group")
    return order.numerator
