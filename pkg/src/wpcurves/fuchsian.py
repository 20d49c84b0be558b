"""Orbifold fundamental groups and finite-quotient certificates.

The orbifold fundamental group of a weighted curve of genus g with weights
a_1..a_t has generators alpha_i, beta_i (i <= g), sigma_j (j <= t) and the
t + 1 relations ::

    sigma_j^(a_j) = 1,    sigma_1 ... sigma_t [alpha_1, beta_1] ... [alpha_g, beta_g] = 1

with [x, y] = x y x^-1 y^-1.  A homomorphism onto a finite permutation group
in which every sigma_j keeps its order a_j has a torsionfree kernel, since
every torsion element is conjugate to a power of some sigma_j.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import __version__
from .core import DomainError, WeightedCurve, is_excluded_pq
from .foxsearch import (
    WitnessNotFound,
    cycle_types,
    min_degree,
    search_triple,
    type_representative,
)
from .permgrp import (
    CapExceededError,
    Permutation,
    StabilizerChain,
    common_degree,
    format_cycles,
    parse_cycles,
    product,
)

Word = tuple[tuple[str, int], ...]

CERTIFICATE_FORMAT = "wpcurves.certificate"
CERTIFICATE_VERSION = 1


@dataclass(frozen=True)
class OrbifoldPresentation:
    genus: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if self.genus < 0 or any(a < 1 for a in self.weights):
            raise DomainError(f"invalid presentation data g={self.genus}, weights={self.weights}")

    @property
    def t(self) -> int:
        return len(self.weights)

    def generators(self) -> list[str]:
        g = self.genus
        return (
            [f"a{i}" for i in range(1, g + 1)]
            + [f"b{i}" for i in range(1, g + 1)]
            + [f"s{j}" for j in range(1, self.t + 1)]
        )

    def relations(self) -> list[Word]:
        rels: list[Word] = [((f"s{j}", a),) for j, a in enumerate(self.weights, 1)]
        long_word = [(f"s{j}", 1) for j in range(1, self.t + 1)]
        for i in range(1, self.genus + 1):
            long_word += [(f"a{i}", 1), (f"b{i}", 1), (f"a{i}", -1), (f"b{i}", -1)]
        rels.append(tuple(long_word))
        return rels

    def render(self) -> str:
        """Canonical text form, e.g. ``< s1, s2, s3 | s1^2, s2^3, s3^7, s1*s2*s3 >``."""
        return f"< {', '.join(self.generators())} | {', '.join(map(render_word, self.relations()))} >"

    def __str__(self) -> str:
        return self.render()


def render_word(word: Word) -> str:
    if not word:
        return "1"
    return "*".join(g if e == 1 else f"{g}^{e}" for g, e in word)


def presentation(curve: WeightedCurve) -> OrbifoldPresentation:
    return OrbifoldPresentation(curve.genus, curve.weights)


def triangle_presentation(a: int, b: int, c: int) -> OrbifoldPresentation:
    """T(a,b,c), keeping the given order of the weights (entries 1 allowed)."""
    return OrbifoldPresentation(0, (a, b, c))


@dataclass(frozen=True)
class GeneratorImages:
    alpha: tuple[Permutation, ...] = ()
    beta: tuple[Permutation, ...] = ()
    sigma: tuple[Permutation, ...] = ()

    def __post_init__(self):
        for name in ("alpha", "beta", "sigma"):
            perms = tuple(parse_cycles(p) if isinstance(p, str) else p for p in getattr(self, name))
            object.__setattr__(self, name, perms)

    def lookup(self) -> dict[str, Permutation]:
        table = {}
        for i, p in enumerate(self.alpha, 1):
            table[f"a{i}"] = p
        for i, p in enumerate(self.beta, 1):
            table[f"b{i}"] = p
        for j, p in enumerate(self.sigma, 1):
            table[f"s{j}"] = p
        return table

    def all(self) -> list[Permutation]:
        return [*self.alpha, *self.beta, *self.sigma]

    @property
    def degree(self) -> int:
        return common_degree(self.all())


def _check_arity(pres: OrbifoldPresentation, images: GeneratorImages) -> None:
    g = pres.genus
    if len(images.alpha) != g or len(images.beta) != g or len(images.sigma) != pres.t:
        raise DomainError(
            f"presentation needs {g}+{g}+{pres.t} images, got "
            f"{len(images.alpha)}+{len(images.beta)}+{len(images.sigma)}"
        )


def evaluate_word(word: Word, table: dict[str, Permutation]) -> Permutation:
    return product(table[g] ** e for g, e in word)


def failing_relation(pres: OrbifoldPresentation, images: GeneratorImages) -> Optional[int]:
    """Index of the first relation not mapped to the identity, or None."""
    _check_arity(pres, images)
    table = images.lookup()
    for k, rel in enumerate(pres.relations()):
        if not evaluate_word(rel, table).is_identity():
            return k
    return None


def check_homomorphism(pres: OrbifoldPresentation, images: GeneratorImages) -> bool:
    return failing_relation(pres, images) is None


class RelationFailure(DomainError):
    def __init__(self, pres: OrbifoldPresentation, index: int):
        rel = render_word(pres.relations()[index])
        super().__init__(f"relation {index + 1} ({rel}) is not satisfied by the images")
        self.index = index
        self.relation = rel


@dataclass(frozen=True)
class WitnessCertificate:
    """A finite quotient of an orbifold group, certified by explicit computation.

    ``image_group_order`` is the index of the kernel.  ``torsionfree`` holds
    exactly when each sigma_j image has order a_j.  ``reduction`` records how
    the images were obtained when generators were killed on the way.
    """

    presentation: OrbifoldPresentation
    images: GeneratorImages
    image_group_order: int
    torsionfree: bool
    normal: bool = True
    reduction: Optional[str] = None

    @property
    def index(self) -> int:
        return self.image_group_order

    def sigma_orders(self) -> list[int]:
        return [p.order() for p in self.images.sigma]

    def to_dict(self) -> dict:
        return {
            "format": CERTIFICATE_FORMAT,
            "version": CERTIFICATE_VERSION,
            "tool_version": __version__,
            "presentation": {
                "genus": self.presentation.genus,
                "weights": list(self.presentation.weights),
                "text": self.presentation.render(),
            },
            "images": {
                "alpha": [format_cycles(p) for p in self.images.alpha],
                "beta": [format_cycles(p) for p in self.images.beta],
                "sigma": [format_cycles(p) for p in self.images.sigma],
            },
            "degree": self.images.degree,
            "sigma_orders": self.sigma_orders(),
            "image_group_order": self.image_group_order,
            "torsionfree": self.torsionfree,
            "normal": self.normal,
            "reduction": self.reduction,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def images_from_dict(data: dict) -> tuple[OrbifoldPresentation, GeneratorImages]:
    """Read presentation and images from a certificate or images document."""
    pres_data = data["presentation"]
    pres = OrbifoldPresentation(int(pres_data["genus"]), tuple(int(a) for a in pres_data["weights"]))
    imgs = data["images"]
    images = GeneratorImages(
        tuple(imgs.get("alpha", ())), tuple(imgs.get("beta", ())), tuple(imgs.get("sigma", ()))
    )
    return pres, images


def certificate_from_dict(data: dict) -> WitnessCertificate:
    pres, images = images_from_dict(data)
    return WitnessCertificate(
        pres,
        images,
        int(data["image_group_order"]),
        bool(data["torsionfree"]),
        bool(data.get("normal", True)),
        data.get("reduction"),
    )


def certify_torsionfree_kernel(
    pres: OrbifoldPresentation,
    images: GeneratorImages,
    cap: Optional[int] = None,
    reduction: Optional[str] = None,
) -> WitnessCertificate:
    """Verify the relations and compute the index of the kernel.

    The image group order comes from a stabilizer chain; ``cap``, when given,
    bounds the index that may be certified.
    """
    bad = failing_relation(pres, images)
    if bad is not None:
        raise RelationFailure(pres, bad)
    perms = images.all()
    order = StabilizerChain(perms).order() if perms else 1
    if cap is not None and order > cap:
        raise CapExceededError(cap, order)
    torsionfree = all(p.order() == a for p, a in zip(images.sigma, pres.weights))
    return WitnessCertificate(pres, images, order, torsionfree, True, reduction)


@dataclass(frozen=True)
class TriangleWitness:
    a: int
    b: int
    c: int
    c1: Permutation
    c2: Permutation
    c3: Permutation = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        expected = (self.c1 * self.c2).inverse()
        if self.c3 is None:
            object.__setattr__(self, "c3", expected)
        elif self.c3 != expected:
            raise DomainError("c3 must equal (c1*c2)^-1")
        got = (self.c1.order(), self.c2.order(), self.c3.order())
        if got != (self.a, self.b, self.c):
            raise DomainError(f"witness orders {got} differ from targets {(self.a, self.b, self.c)}")

    @property
    def degree(self) -> int:
        return common_degree((self.c1, self.c2, self.c3))

    def images(self) -> GeneratorImages:
        return GeneratorImages(sigma=(self.c1, self.c2, self.c3))


def fox_witness_search(a: int, b: int, c: int, max_degree: int = 24, workers: int = 1) -> TriangleWitness:
    """Least permutation triple realizing T(a,b,c) with all three orders kept.

    See :mod:`wpcurves.foxsearch` for the enumeration order.  Raises
    :class:`~wpcurves.foxsearch.WitnessNotFound` when no degree up to
    ``max_degree`` admits one.
    """
    for x in (a, b, c):
        if not isinstance(x, int) or x < 1:
            raise DomainError(f"orders must be positive integers, got {(a, b, c)}")
    c1, c2 = search_triple(a, b, c, max_degree, workers)
    return TriangleWitness(a, b, c, c1, c2)


def trivial_witness(n: int) -> TriangleWitness:
    """The witness (n-cycle, its inverse, identity) for T(n,n,1)."""
    c1 = Permutation.cycle(*range(1, n + 1)) if n > 1 else Permutation.identity()
    return TriangleWitness(n, n, 1, c1, c1.inverse())


PUBLISHED_WITNESSES = {
    (2, 3, 7): ("(1,2)(3,6)", "(1,2,3,4,5,6,7)"),
    (2, 4, 7): ("(3,4)(5,7)", "(1,2,3,4,5,6,7)"),
    (2, 3, 9): ("(1,4)(2,6)(3,7)(5,8)", "(1,2,3,4,5,6,7,8,9)"),
}


def published_witness(a: int, b: int, c: int) -> TriangleWitness:
    """Published generator pairs for T(2,3,7), T(2,4,7) and T(2,3,9).

    Each pair (s, r) has s of order a, r of order c and s*r of order b.
    Since s is an involution, (s, s*r, r^-1) multiplies to the identity and
    has orders (a, b, c).
    """
    s, r = (parse_cycles(x) for x in PUBLISHED_WITNESSES[(a, b, c)])
    return TriangleWitness(a, b, c, s, s * r, r.inverse())


def certificate_from_triangle(witness: TriangleWitness, cap: Optional[int] = None) -> WitnessCertificate:
    pres = triangle_presentation(witness.a, witness.b, witness.c)
    return certify_torsionfree_kernel(pres, witness.images(), cap)


# -- reduction chain for arbitrary weighted curves -------------------------

def _solve_commutator(target: Permutation, n: int) -> Optional[tuple[Permutation, Permutation]]:
    """Find alpha, beta in S_n with alpha*beta*alpha^-1*beta^-1 == target.

    [alpha, beta] = target  iff  gamma^-1 x gamma = x*target for x = alpha^-1
    and gamma = beta^-1, so it suffices to find alpha with x and x*target of
    equal cycle type and read gamma off the cycles.
    """
    if not target.is_even():
        return None
    for img in itertools.permutations(range(n)):
        alpha = Permutation._raw(img)
        x = alpha.inverse()
        y = x * target
        cx, cy = _full_cycles(x, n), _full_cycles(y, n)
        if sorted(map(len, cx)) != sorted(map(len, cy)):
            continue
        gamma = [0] * n
        for cyc_x, cyc_y in zip(sorted(cx, key=len), sorted(cy, key=len)):
            for p, q in zip(cyc_x, cyc_y):
                gamma[p - 1] = q - 1
        beta = Permutation(gamma).inverse()
        if alpha * beta * alpha.inverse() * beta.inverse() == target:
            return alpha, beta
    return None


def _full_cycles(p: Permutation, n: int) -> list[tuple[int, ...]]:
    moved = p.cycles()
    fixed = [(i,) for i in range(1, n + 1) if p(i) == i]
    return moved + fixed


def _elements_of_order(n: int, k: int):
    for img in itertools.permutations(range(n)):
        p = Permutation._raw(img)
        if p.order() == k:
            yield p


def _genus_witness(genus: int, weights: tuple[int, ...], max_degree: int):
    """Images for genus >= 1 with one or two sigmas: sigma product equals an inverse commutator."""
    for n in range(max(min_degree(a) for a in weights), max_degree + 1):
        for parts in cycle_types(n, weights[0]):
            s1 = type_representative(parts)
            seconds = _elements_of_order(n, weights[1]) if len(weights) == 2 else [None]
            for s2 in seconds:
                sig = (s1,) if s2 is None else (s1, s2)
                solved = _solve_commutator(product(sig).inverse(), n)
                if solved is not None:
                    alpha, beta = solved
                    ident = Permutation.identity()
                    return GeneratorImages(
                        (alpha,) + (ident,) * (genus - 1), (beta,) + (ident,) * (genus - 1), sig
                    )
    return None


def certify_curve(
    curve: WeightedCurve,
    max_degree: int = 24,
    workers: int = 1,
    cap: Optional[int] = None,
    surface_k: int = 2,
) -> WitnessCertificate:
    """Produce a finite-quotient certificate for the orbifold group of ``curve``.

    The route follows the classical reduction: alpha and beta are sent to the
    identity and sigma_4..sigma_t are killed, leaving a triangle group handled
    by :func:`fox_witness_search`.  With killed sigmas the certificate is not
    torsionfree for the original group; ``reduction`` says so.  Surfaces
    without weighted points map onto C_k x C_k; genus >= 1 with one or two
    unequal weights uses an explicit commutator.
    """
    pres = presentation(curve)
    g, ws, t = curve.genus, curve.weights, curve.t
    ident = Permutation.identity()
    if is_excluded_pq(curve):
        raise DomainError(f"{curve} is excluded: its orbifold group is not Fuchsian")
    if t == 0:
        if g == 0:
            return certify_torsionfree_kernel(pres, GeneratorImages(), cap)
        k = surface_k
        a = Permutation.cycle(*range(1, k + 1)) if k > 1 else ident
        b = Permutation.cycle(*range(k + 1, 2 * k + 1)) if k > 1 else ident
        images = GeneratorImages((a,) + (ident,) * (g - 1), (b,) + (ident,) * (g - 1))
        return certify_torsionfree_kernel(pres, images, cap, reduction=f"abelianization onto C{k} x C{k}")
    if t == 2 and ws[0] == ws[1]:
        c = Permutation.cycle(*range(1, ws[0] + 1))
        images = GeneratorImages((ident,) * g, (ident,) * g, (c, c.inverse()))
        return certify_torsionfree_kernel(pres, images, cap, reduction="cyclic quotient" if g else None)
    if t <= 2:
        images = _genus_witness(g, ws, max_degree)
        if images is None:
            raise WitnessNotFound((ws + (1, 1))[:3], range(1, max_degree + 1))
        return certify_torsionfree_kernel(pres, images, cap, reduction="commutator solution")
    w = fox_witness_search(ws[0], ws[1], ws[2], max_degree, workers)
    sigma = (w.c1, w.c2, w.c3) + (ident,) * (t - 3)
    images = GeneratorImages((ident,) * g, (ident,) * g, sigma)
    steps = []
    if g:
        steps.append("alpha, beta killed")
    if t > 3:
        steps.append("sigma_4 killed" if t == 4 else f"sigma_4..sigma_{t} killed")
    note = "; ".join(steps) if steps else None
    if t > 3:
        note += " (torsionfreeness for the full group rests on the Mennicke reduction, not on this quotient)"
    return certify_torsionfree_kernel(pres, images, cap, reduction=note)
