"""Exact invariants of weighted projective curves and finite witnesses for Fenchel's conjecture."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    DomainError,
    ExactRational,
    Trisection,
    WeightedCurve,
    classify,
    euler_characteristic,
    genus_chi_convert,
    hurwitz_bound,
    riemann_hurwitz_chi,
    spherical_triangle_group_order,
    weight_lcm,
)
from .permgrp import Permutation, PermGroup, compose, element_order, group_order, is_simple, parse_cycles  # noqa: E402
