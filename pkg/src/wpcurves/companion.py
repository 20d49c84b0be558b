"""Twisted companion curves, polyhedral realizations and the strange-duality table.

The twisted companion Y[a_1..a_t] of P^1<a_1..a_t> covers it with deck group
(mu_a1 x ... x mu_at) / mu_abar of order (prod a_i) / abar, so its Euler
characteristic follows from Riemann-Hurwitz.  It is an ordinary curve when the
degrees abar / a_i are pairwise coprime (and t >= 3, see
:func:`twisted_companion`).

A polyhedral group P acting on P^1 with a P-stable set A of points of weight
a lifts to Y[a^[A]], giving realizations

    Y[a^[A]] / ((mu_a^|A| / mu_a) x| P)  =  P^1<a^[A]> / P

of weighted projective lines as quotients of smooth curves.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .core import DomainError, WeightedCurve, euler_characteristic, genus_from_chi

TABLE_FORMAT = "wpcurves.arnold_table"
TABLE_VERSION = 1
INCONSISTENT = "INCONSISTENT_PAPER_ROW"


# -- twisted companions ----------------------------------------------------

@dataclass(frozen=True)
class CompanionCurve:
    source_weights: tuple[int, ...]
    degrees: tuple[int, ...]
    group_order: int
    chi: Fraction
    smooth: bool
    genus: Optional[int]
    parameter: Optional[str] = None

    def label(self) -> str:
        body = ",".join(map(str, self.source_weights))
        if self.parameter:
            body += f";{self.parameter}"
        return f"Y[{body}]"


def _pairwise_coprime(xs: Sequence[int]) -> bool:
    return all(math.gcd(x, y) == 1 for i, x in enumerate(xs) for y in xs[i + 1:])


def twisted_companion(weights: Sequence[int], parameter: Optional[str] = None) -> CompanionCurve:
    """Twisted companion of P^1<weights>.

    For t = 2 the coordinate algebra has no relation and the companion is a
    weighted line P(d_1, d_2); it is ordinary only when both degrees are 1.
    """
    ws = tuple(weights)
    if len(ws) < 2:
        raise DomainError("a twisted companion needs at least two weighted points")
    if any(not isinstance(a, int) or a < 2 for a in ws):
        raise DomainError(f"weights must be integers >= 2, got {ws}")
    abar = math.lcm(*ws)
    degrees = tuple(abar // a for a in ws)
    order = math.prod(ws) // abar
    chi = order * euler_characteristic(WeightedCurve(0, ws))
    smooth = _pairwise_coprime(degrees) and (len(ws) >= 3 or set(degrees) == {1})
    genus = None
    if smooth:
        assert chi.denominator == 1 and chi.numerator % 2 == 0, f"smooth companion with chi {chi}"
        genus = genus_from_chi(chi)
    return CompanionCurve(ws, degrees, order, chi, smooth, genus, parameter)


def uniform_companion_chi(a: int, t: int) -> Fraction:
    """Closed form -a^(t-2) ((t-2) a - t) for the Euler characteristic of Y[a^[t]]."""
    if a < 1 or t < 2:
        raise DomainError(f"need a >= 1 and t >= 2, got a={a}, t={t}")
    return Fraction(-(a ** (t - 2)) * ((t - 2) * a - t))


# -- polyhedral groups -----------------------------------------------------

class PolyhedralKind(enum.Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    PLATONIC = "platonic"


_PLATONIC_NAMES = {3: "A4", 4: "S4", 5: "A5"}


@dataclass(frozen=True)
class PolyhedralGroup:
    kind: PolyhedralKind
    n: int

    def __post_init__(self):
        if self.kind is PolyhedralKind.CYCLIC and self.n < 1:
            raise DomainError("cyclic group needs n >= 1")
        if self.kind is PolyhedralKind.DIHEDRAL and self.n < 2:
            raise DomainError("dihedral group needs n >= 2")
        if self.kind is PolyhedralKind.PLATONIC and self.n not in _PLATONIC_NAMES:
            raise DomainError("platonic group needs n in {3, 4, 5}")

    @classmethod
    def cyclic(cls, n: int) -> "PolyhedralGroup":
        return cls(PolyhedralKind.CYCLIC, n)

    @classmethod
    def dihedral(cls, n: int) -> "PolyhedralGroup":
        return cls(PolyhedralKind.DIHEDRAL, n)

    @classmethod
    def platonic(cls, n: int) -> "PolyhedralGroup":
        return cls(PolyhedralKind.PLATONIC, n)

    @classmethod
    def parse(cls, text: str) -> "PolyhedralGroup":
        """Accepts C<n>, D<n>, A4, S4, A5 or P<n> (platonic)."""
        s = text.strip().upper().replace("_", "")
        by_name = {v: k for k, v in _PLATONIC_NAMES.items()}
        if s in by_name:
            return cls.platonic(by_name[s])
        try:
            head, n = s[0], int(s[1:])
        except (IndexError, ValueError):
            raise DomainError(f"unknown polyhedral group {text!r}") from None
        factory = {"C": cls.cyclic, "D": cls.dihedral, "P": cls.platonic}.get(head)
        if factory is None:
            raise DomainError(f"unknown polyhedral group {text!r}")
        return factory(n)

    @property
    def order(self) -> int:
        if self.kind is PolyhedralKind.CYCLIC:
            return self.n
        if self.kind is PolyhedralKind.DIHEDRAL:
            return 2 * self.n
        return 12 * self.n // (6 - self.n)

    @property
    def name(self) -> str:
        if self.kind is PolyhedralKind.CYCLIC:
            return f"C{self.n}"
        if self.kind is PolyhedralKind.DIHEDRAL:
            return f"D{self.n}"
        return _PLATONIC_NAMES[self.n]

    def exceptional_orbits(self) -> list[tuple[int, int]]:
        """(stabilizer order, orbit size) of the orbits with non-trivial stabilizer."""
        n, order = self.n, self.order
        if self.kind is PolyhedralKind.CYCLIC:
            return [(n, 1), (n, 1)]
        if self.kind is PolyhedralKind.DIHEDRAL:
            return [(2, n), (2, n), (n, 2)]
        return [(2, order // 2), (3, order // 3), (n, order // n)]


# -- realizations ----------------------------------------------------------

@dataclass(frozen=True)
class GroupTerm:
    """(mu_a1 x ... x mu_ak) / mu_abar  semidirect  P, kept as notation only."""

    cover_weights: tuple[int, ...]
    polyhedral: Optional[PolyhedralGroup] = None
    label: Optional[str] = None

    @property
    def abelian_order(self) -> int:
        if len(self.cover_weights) == 0:
            return 1
        return math.prod(self.cover_weights) // math.lcm(*self.cover_weights)

    def describe(self) -> str:
        if self.label:
            return self.label
        ws = self.cover_weights
        if not ws:
            return self.polyhedral.name if self.polyhedral else "1"
        abar = math.lcm(*ws)
        counts: dict[int, int] = {}
        for w in ws:
            counts[w] = counts.get(w, 0) + 1
        parts = [f"mu{w}" + (f"^{k}" if k > 1 else "") for w, k in sorted(counts.items())]
        head = parts[0] if len(parts) == 1 else "(" + " x ".join(parts) + ")"
        text = f"{head}/mu{abar}"
        if self.polyhedral and self.polyhedral.order > 1:
            text += f" x| {self.polyhedral.name}"
        return text


@dataclass(frozen=True)
class RealizationRecord:
    quotient_weights: tuple[int, ...]
    group: GroupTerm
    group_order: int
    chi_quotient: Fraction
    chi_cover: Fraction
    genus_cover: Optional[int]
    curve_label: Optional[str] = None
    companion_chi: Optional[Fraction] = None

    @property
    def group_description(self) -> str:
        return self.group.describe()

    def problems(self) -> list[str]:
        """Violations of Riemann-Hurwitz, genus and companion consistency (empty when sound)."""
        out = []
        if self.chi_cover != self.group_order * self.chi_quotient:
            out.append("chi_cover != |G| * chi_quotient")
        if self.genus_cover is not None and self.chi_cover != 2 * (1 - self.genus_cover):
            out.append("chi_cover != 2(1 - g)")
        if self.companion_chi is not None and self.companion_chi != self.chi_cover:
            out.append(f"companion chi {self.companion_chi} != {self.chi_cover}")
        return out


def _genus_or_none(chi: Fraction) -> Optional[int]:
    if chi.denominator == 1 and chi.numerator % 2 == 0 and chi <= 2:
        return genus_from_chi(chi)
    return None


def stable_set_size(P: PolyhedralGroup, eps: Sequence[int], r: int) -> int:
    """Cardinality of the P-stable set: chosen exceptional orbits plus r regular orbits."""
    orbits = P.exceptional_orbits()
    if len(eps) != 3 or any(e not in (0, 1) for e in eps):
        raise DomainError(f"eps must be three 0/1 flags, got {tuple(eps)}")
    if len(orbits) == 2 and eps[2]:
        raise DomainError("the cyclic case has only two exceptional orbits (eps3 must be 0)")
    return sum(e * size for e, (_, size) in zip(eps, orbits)) + r * P.order


def polyhedral_realize(P: PolyhedralGroup, eps: Sequence[int], a: int, r: int) -> RealizationRecord:
    """Quotient of the twisted companion Y[a^[A]] by (mu_a^|A| / mu_a) x| P."""
    if not isinstance(a, int) or a < 1:
        raise DomainError(f"a must be an integer >= 1, got {a!r}")
    if not isinstance(r, int) or r < 0:
        raise DomainError(f"r must be an integer >= 0, got {r!r}")
    size = stable_set_size(P, eps, r)
    quotient = WeightedCurve(
        0, [stab * a ** e for e, (stab, _) in zip(eps, P.exceptional_orbits())] + [a] * r
    )
    order = (a ** (size - 1) if size else 1) * P.order
    chi_q = euler_characteristic(quotient)
    chi_cover = order * chi_q
    companion = uniform_companion_chi(a, size) if size >= 2 else None
    return RealizationRecord(
        quotient.weights,
        GroupTerm((a,) * size if a > 1 else (), P),
        order,
        chi_q,
        chi_cover,
        _genus_or_none(chi_cover),
        f"Y[{a}^[{size}]]" if a > 1 and size else "P1",
        companion,
    )


def companion_realize(
    weights: Sequence[int], P: Optional[PolyhedralGroup] = None, label: Optional[str] = None
) -> RealizationRecord:
    """Realization Y[weights] / (G_companion x| P) for a P-action on P^1<weights>.

    Used for generalized polyhedral types, where points of the stable set
    carry different weights; the quotient weights are supplied by the caller
    through the table, only orders and Euler characteristics are computed.
    """
    comp = twisted_companion(weights)
    p_order = P.order if P else 1
    order = comp.group_order * p_order
    chi_q = comp.chi / order
    return RealizationRecord(
        (),
        GroupTerm(tuple(weights), P, label),
        order,
        chi_q,
        comp.chi,
        comp.genus,
        comp.label(),
        comp.chi,
    )


def corollary_realizations(n: int, a: int) -> dict[str, RealizationRecord]:
    """The six families P^1<n,n,a>, <n,a,an>, <2,2a,n>, <3,4,2a>, <3,3,2a>, <3,5,2a>."""
    C, D, Pl = PolyhedralGroup.cyclic, PolyhedralGroup.dihedral, PolyhedralGroup.platonic
    return {
        "n,n,a": polyhedral_realize(C(n), (0, 0, 0), a, 1),
        "n,a,an": polyhedral_realize(C(n), (1, 0, 0), a, 1),
        "2,2a,n": polyhedral_realize(D(n), (0, 1, 0), a, 0),
        "3,3,2a": polyhedral_realize(Pl(3), (1, 0, 0), a, 0),
        "3,4,2a": polyhedral_realize(Pl(4), (1, 0, 0), a, 0),
        "3,5,2a": polyhedral_realize(Pl(5), (1, 0, 0), a, 0),
    }


# -- the strange-duality table ---------------------------------------------

@dataclass(frozen=True)
class PrintedRow:
    weights: tuple[int, int, int]
    group: str
    group_order: int
    neg_chi_quotient: Fraction
    neg_chi_cover: int
    genus: int
    curve: str
    note: Optional[str] = None


@dataclass(frozen=True)
class TableRow:
    printed: PrintedRow
    recomputed: RealizationRecord
    mismatches: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.mismatches

    @property
    def flags(self) -> tuple[str, ...]:
        return () if self.consistent else (INCONSISTENT,)

    @property
    def weights(self) -> tuple[int, ...]:
        return self.printed.weights


def _published_witness_order(key: tuple[int, int, int]) -> RealizationRecord:
    from .fuchsian import certificate_from_triangle, published_witness

    cert = certificate_from_triangle(published_witness(*key))
    assert cert.torsionfree
    order = cert.image_group_order
    chi_q = euler_characteristic(WeightedCurve(0, key))
    chi_cover = order * chi_q
    return RealizationRecord(
        key, GroupTerm((), None, "G168" if order == 168 else f"G{order}"),
        order, chi_q, chi_cover, _genus_or_none(chi_cover),
    )


_F = Fraction
_C, _D, _P = PolyhedralGroup.cyclic, PolyhedralGroup.dihedral, PolyhedralGroup.platonic

# (printed row, recipe).  Recipes: ("witness",), ("poly", P, eps, a, r), ("companion", weights, P).
_TABLE: list[tuple[PrintedRow, tuple]] = [
    (PrintedRow((2, 3, 7), "G168", 168, _F(1, 42), 4, 3, "K4: x^3y+y^3z+z^3x"), ("witness",)),
    (PrintedRow((2, 3, 8), "mu4^3/mu4 x| D3", 96, _F(1, 24), 4, 3, "F4: x^4+y^4+z^4"),
     ("poly", _D(3), (0, 1, 0), 4, 0)),
    (PrintedRow((2, 3, 9), "mu3^4/mu_e x| A4", 396, _F(2, 3), 18, 10, "Y[3,3,3,3]",
                "group printed with denominator mu_e"),
     ("poly", _P(3), (0, 0, 1), 3, 0)),
    (PrintedRow((2, 4, 5), "mu2^5/mu2 x| D5", 160, _F(1, 20), 8, 5, "Y[2,2,2,2,2]"),
     ("poly", _D(5), (0, 1, 0), 2, 0)),
    (PrintedRow((2, 4, 6), "(mu3 x mu6^2)/mu6 x| D2", 72, _F(1, 12), 6, 4, "Y[3,6,6]",
                "generalized polyhedral type"),
     ("companion", (3, 6, 6), _D(2))),
    (PrintedRow((2, 4, 6), "mu2^6/mu2 x| D6", 384, _F(1, 12), 32, 17, "Y[2,2,2,2,2,2]"),
     ("poly", _D(6), (0, 1, 0), 2, 0)),
    (PrintedRow((2, 4, 7), "G168", 168, _F(3, 28), 18, 10, "5x^2y^2z^2-(xy^5+yz^5+zx^5)"), ("witness",)),
    (PrintedRow((2, 4, 7), "mu2^7/mu2 x| D7", 2**7 * 7, _F(3, 28), 96, 49, "Y[2,2,2,2,2,2,2]"),
     ("poly", _D(7), (0, 1, 0), 2, 0)),
    (PrintedRow((2, 5, 5), "mu2^5/mu2 x| C5", 80, _F(1, 10), 8, 5, "Y[2,2,2,2,2]"),
     ("poly", _C(5), (0, 0, 0), 2, 1)),
    (PrintedRow((2, 5, 6), "mu3^5/mu3 x| D5", 810, _F(2, 15), 108, 55, "Y[3,3,3,3,3]"),
     ("poly", _D(5), (0, 1, 0), 3, 0)),
    (PrintedRow((3, 3, 4), "mu4^3/mu4 x| C3", 48, _F(1, 12), 4, 3, "F4: x^4+y^4+z^4"),
     ("poly", _C(3), (0, 0, 0), 4, 1)),
    (PrintedRow((3, 3, 5), "mu5^3/mu5 x| C3", 75, _F(2, 15), 10, 6, "F5: x^5+y^5+z^z",
                "curve printed as x^5+y^5+z^z, evidently z^5"),
     ("poly", _C(3), (0, 0, 0), 5, 1)),
    (PrintedRow((3, 3, 6), "mu6^3/mu6 x| C3", 108, _F(1, 6), 18, 10, "F6: x^6+y^6+z^6"),
     ("poly", _C(3), (0, 0, 0), 6, 1)),
    (PrintedRow((3, 4, 4), "mu3^4/mu3 x| C4", 108, _F(1, 6), 18, 10, "Y[3,3,3,3]"),
     ("poly", _C(4), (0, 0, 0), 3, 1)),
    (PrintedRow((3, 4, 5), "mu2^30/mu2 x| A5", 2**29 * 60, _F(13, 60), 13 * 2**29, 13 * 2**28 + 1,
                "Y[2^[30]]"),
     ("poly", _P(5), (1, 0, 0), 2, 0)),
    (PrintedRow((4, 4, 4), "mu4^3/mu4", 16, _F(1, 4), 4, 3, "F4: x^4+y^4+z^4"),
     ("companion", (4, 4, 4), None)),
]


def _recompute(printed: PrintedRow, recipe: tuple) -> RealizationRecord:
    kind = recipe[0]
    if kind == "witness":
        rec = _published_witness_order(printed.weights)
    elif kind == "poly":
        rec = polyhedral_realize(*recipe[1:])
    else:
        rec = companion_realize(recipe[1], recipe[2])
        chi_q = euler_characteristic(WeightedCurve(0, printed.weights))
        # the companion route fixes |G| and chi_cover; the quotient must match both
        if rec.chi_quotient != chi_q:
            raise AssertionError(f"companion route for {printed.weights} gives chi {rec.chi_quotient}")
        rec = RealizationRecord(printed.weights, rec.group, rec.group_order, chi_q, rec.chi_cover,
                                rec.genus_cover, rec.curve_label, rec.companion_chi)
    return RealizationRecord(rec.quotient_weights, rec.group, rec.group_order, rec.chi_quotient,
                             rec.chi_cover, rec.genus_cover, printed.curve, rec.companion_chi)


def _compare(printed: PrintedRow, rec: RealizationRecord) -> tuple[str, ...]:
    checks = [
        ("weights", tuple(printed.weights) == tuple(rec.quotient_weights)),
        ("|G|", printed.group_order == rec.group_order),
        ("-chi_X", printed.neg_chi_quotient == -rec.chi_quotient),
        ("-chi_M", printed.neg_chi_cover == -rec.chi_cover),
        ("g_M", printed.genus == rec.genus_cover),
    ]
    return tuple(name for name, ok in checks if not ok)


def arnold_table() -> list[TableRow]:
    """The 16 realization rows of the 14 strange-duality weight triples, printed vs recomputed."""
    rows = []
    for printed, recipe in _TABLE:
        rec = _recompute(printed, recipe)
        problems = rec.problems()
        assert not problems, f"{printed.weights}: {problems}"
        rows.append(TableRow(printed, rec, _compare(printed, rec)))
    return rows


def _frac(x: Fraction) -> str:
    return str(x)


def table_to_dict(rows: Sequence[TableRow]) -> dict:
    out = []
    for row in rows:
        p, rc = row.printed, row.recomputed
        out.append({
            "weights": list(p.weights),
            "printed": {
                "group": p.group,
                "group_order": p.group_order,
                "neg_chi_quotient": _frac(p.neg_chi_quotient),
                "neg_chi_cover": p.neg_chi_cover,
                "genus_cover": p.genus,
            },
            "recomputed": {
                "group": rc.group_description,
                "group_order": rc.group_order,
                "neg_chi_quotient": _frac(-rc.chi_quotient),
                "neg_chi_cover": _frac(-rc.chi_cover),
                "genus_cover": rc.genus_cover,
            },
            "curve": p.curve,
            "consistent": row.consistent,
            "mismatches": list(row.mismatches),
            "flags": list(row.flags),
            "note": p.note,
        })
    return {"format": TABLE_FORMAT, "version": TABLE_VERSION, "tool_version": __version__, "rows": out}


def table_to_json(rows: Sequence[TableRow], indent: int | None = 2) -> str:
    return json.dumps(table_to_dict(rows), indent=indent)


def format_table(rows: Sequence[TableRow], audit: bool = False) -> str:
    """Aligned text mirroring the printed columns, with recomputed values and a flags column.

    With ``audit`` the printed values of inconsistent rows are shown below them.
    """
    header = ["weights", "G", "|G|", "-chi_X", "-chi_M", "g_M", "curve", "flags"]
    lines = []
    for row in rows:
        rc = row.recomputed
        lines.append([
            "<" + ",".join(map(str, row.weights)) + ">",
            rc.group_description,
            str(rc.group_order),
            str(-rc.chi_quotient),
            str(-rc.chi_cover),
            str(rc.genus_cover),
            row.printed.curve,
            ",".join(row.flags) or "ok",
        ])
        if audit and not row.consistent:
            p = row.printed
            lines.append([
                "  printed:", p.group, str(p.group_order), str(p.neg_chi_quotient),
                str(p.neg_chi_cover), str(p.genus), "", "mismatch: " + ",".join(row.mismatches),
            ])
    widths = [max(len(r[i]) for r in [header] + lines) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    return "\n".join([fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in lines]) + "\n"
