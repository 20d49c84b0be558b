"""Permutations on {1..n} and the groups they generate.

Products are read left to right: ``(p * q)(x) = q(p(x))``.  With this
convention ``(1,2)(3,6) * (1,2,3,4,5,6,7) == (1,3,7)(4,5,6)``.

Internally a permutation is a tuple of 0-based images with trailing fixed
points stripped, so equal permutations compare and hash equal whatever
degree they were written in.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

from .core import DomainError

DEFAULT_CAP = 10**7


class CycleParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class CapExceededError(RuntimeError):
    """Enumeration stopped after ``found`` elements without closing up."""

    def __init__(self, cap: int, found: int):
        super().__init__(f"group enumeration exceeded cap {cap} ({found} elements found so far)")
        self.cap = cap
        self.found = found


def _trim(images: Sequence[int]) -> tuple[int, ...]:
    n = len(images)
    while n > 1 and images[n - 1] == n - 1:
        n -= 1
    return tuple(images[:n]) if n else (0,)


class Permutation:
    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int] = (0,), *, zero_based: bool = True):
        img = list(images)
        if not zero_based:
            img = [x - 1 for x in img]
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation: {img}")
        self._img = _trim(img)
        self._hash = hash(self._img)

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> "Permutation":
        p = cls.__new__(cls)
        p._img = _trim(img)
        p._hash = hash(p._img)
        return p

    @classmethod
    def identity(cls) -> "Permutation":
        return cls._raw((0,))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int = 1) -> "Permutation":
        """Build from disjoint cycles of 1-based points."""
        cycles = [list(c) for c in cycles]
        n = max([degree] + [max(c) for c in cycles if c])
        img = list(range(n))
        seen: set[int] = set()
        for c in cycles:
            for x in c:
                if x < 1:
                    raise ValueError(f"points must be positive, got {x}")
                if x in seen:
                    raise ValueError(f"point {x} repeated")
                seen.add(x)
            for i, x in enumerate(c):
                img[x - 1] = c[(i + 1) % len(c)] - 1
        return cls._raw(tuple(img))

    @classmethod
    def cycle(cls, *points: int) -> "Permutation":
        return cls.from_cycles([points])

    @property
    def degree(self) -> int:
        return len(self._img)

    def images(self, degree: int | None = None) -> tuple[int, ...]:
        """0-based image tuple padded to ``degree``."""
        n = degree or self.degree
        if n < self.degree:
            raise ValueError(f"degree {n} below support {self.degree}")
        return self._img + tuple(range(self.degree, n))

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self._img[point - 1] + 1 if point <= self.degree else point

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        n = max(self.degree, other.degree)
        return self.images(n) < other.images(n)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Permutation.identity(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self._img):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return self._img == (0,)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self._img[start] == start:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = self._img[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Lengths of the non-trivial cycles, descending."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if not self.is_identity() else 1

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def support(self) -> set[int]:
        return {i + 1 for i, x in enumerate(self._img) if i != x}

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: apply ``p`` first, then ``q``."""
    n = max(p.degree, q.degree)
    pi, qi = p.images(n), q.images(n)
    return Permutation._raw(tuple(qi[x] for x in pi))


def product(perms: Iterable[Permutation]) -> Permutation:
    result = Permutation.identity()
    for p in perms:
        result = result * p
    return result


def element_order(p: Permutation) -> int:
    return p.order()


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def parse_cycles(text: str) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1,2)(3,6)"``; ``"()"`` is the identity.

    Whitespace is ignored; points inside a cycle are separated by commas.
    """
    cycles: list[list[int]] = []
    seen: set[int] = set()
    i, n = 0, len(text)

    def skip_ws(j: int) -> int:
        while j < n and text[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    if i == n:
        raise CycleParseError("empty input", text, i)
    while i < n:
        if text[i] != "(":
            raise CycleParseError("expected '('", text, i)
        i = skip_ws(i + 1)
        cyc: list[int] = []
        if i < n and text[i] == ")":
            i = skip_ws(i + 1)
            cycles.append(cyc)
            continue
        while True:
            start = i
            if i < n and text[i] in "+-":
                i += 1
            while i < n and text[i].isdigit():
                i += 1
            if start == i or not text[start:i].lstrip("+-"):
                raise CycleParseError("expected a point", text, start)
            point = int(text[start:i])
            if point < 1:
                raise CycleParseError(f"non-positive point {point}", text, start)
            if point in seen:
                raise CycleParseError(f"repeated point {point}", text, start)
            seen.add(point)
            cyc.append(point)
            i = skip_ws(i)
            if i < n and text[i] == ",":
                i = skip_ws(i + 1)
                continue
            if i < n and text[i] == ")":
                i = skip_ws(i + 1)
                break
            raise CycleParseError("expected ',' or ')'", text, i)
        cycles.append(cyc)
    return Permutation.from_cycles([c for c in cycles if len(c) > 1])


def _as_perms(gens: Iterable[Permutation | str]) -> list[Permutation]:
    return [parse_cycles(g) if isinstance(g, str) else g for g in gens]


def common_degree(perms: Iterable[Permutation]) -> int:
    return max([1] + [p.degree for p in perms])


# -- enumeration -----------------------------------------------------------

def enumerate_elements(gens: Sequence[Permutation], cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """All elements of <gens> as image tuples of common degree, by BFS over the Cayley graph."""
    n = common_degree(gens)
    gen_imgs = [g.images(n) for g in gens]
    ident = tuple(range(n))
    seen = {ident}
    frontier = deque([ident])
    while frontier:
        x = frontier.popleft()
        for g in gen_imgs:
            y = tuple(g[i] for i in x)
            if y not in seen:
                if len(seen) >= cap:
                    raise CapExceededError(cap, len(seen))
                seen.add(y)
                frontier.append(y)
    return seen


# -- stabilizer chain ------------------------------------------------------

def _mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(b[x] for x in a)


def _inv(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


class StabilizerChain:
    """Base and strong generating set built by the deterministic Schreier-Sims algorithm.

    Level ``i`` holds the generators fixing ``base[:i]`` and a transversal
    mapping ``base[i]`` to every point of its orbit.
    """

    def __init__(self, gens: Sequence[Permutation], degree: int | None = None):
        self.degree = n = degree or common_degree(gens)
        self.identity = tuple(range(n))
        self.base: list[int] = []
        self.gens: list[list[tuple[int, ...]]] = []
        self.transversals: list[dict[int, tuple[int, ...]]] = []
        self._tested: list[set[tuple[int, int]]] = []

        strong = [g.images(n) for g in gens if not g.is_identity()]
        for g in strong:
            if all(g[b] == b for b in self.base):
                self._new_level(next(i for i in range(n) if g[i] != i))
        for level in range(len(self.base)):
            self.gens[level] = [g for g in strong if all(g[b] == b for b in self.base[:level])]
            self._extend_orbit(level)
        self._complete()

    def _new_level(self, point: int) -> None:
        self.base.append(point)
        self.gens.append([])
        self.transversals.append({point: self.identity})
        self._tested.append(set())

    def _extend_orbit(self, level: int) -> None:
        trans = self.transversals[level]
        queue = deque(trans)
        while queue:
            p = queue.popleft()
            u = trans[p]
            for s in self.gens[level]:
                q = s[p]
                if q not in trans:
                    trans[q] = _mul(u, s)
                    queue.append(q)

    def sift(self, g: tuple[int, ...], start: int = 0) -> tuple[tuple[int, ...], int]:
        for level in range(start, len(self.base)):
            x = g[self.base[level]]
            u = self.transversals[level].get(x)
            if u is None:
                return g, level
            g = _mul(g, _inv(u))
        return g, len(self.base)

    def _complete(self) -> None:
        level = len(self.base) - 1
        while level >= 0:
            restarted = False
            trans = self.transversals[level]
            for p in list(trans):
                for si, s in enumerate(self.gens[level]):
                    if (p, si) in self._tested[level]:
                        continue
                    self._tested[level].add((p, si))
                    y = _mul(_mul(trans[p], s), _inv(trans[s[p]]))
                    h, j = self.sift(y, level + 1)
                    if h == self.identity:
                        continue
                    if j == len(self.base):
                        self._new_level(next(i for i in range(self.degree) if h[i] != i))
                    for lv in range(level + 1, j + 1):
                        self.gens[lv].append(h)
                        self._extend_orbit(lv)
                    level = j
                    restarted = True
                    break
                if restarted:
                    break
            if not restarted:
                level -= 1

    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def contains(self, p: Permutation) -> bool:
        if p.degree > self.degree:
            return False
        h, _ = self.sift(p.images(self.degree))
        return h == self.identity


def group_order(gens: Iterable[Permutation | str], cap: int = DEFAULT_CAP, method: str = "bfs") -> int:
    """Exact order of the group generated by ``gens``.

    ``method="bfs"`` enumerates elements and raises :class:`CapExceededError`
    past ``cap``; ``method="chain"`` uses a stabilizer chain and never
    enumerates, so ``cap`` does not apply.
    """
    perms = _as_perms(gens)
    if not perms:
        return 1
    if method == "bfs":
        return len(enumerate_elements(perms, cap))
    if method == "chain":
        return StabilizerChain(perms).order()
    raise ValueError(f"unknown method {method!r}")


class PermGroup:
    """Finitely generated permutation group with its order computed eagerly."""

    def __init__(self, gens: Iterable[Permutation | str], cap: int = DEFAULT_CAP):
        self.generators = tuple(_as_perms(gens)) or (Permutation.identity(),)
        self.degree = common_degree(self.generators)
        self.cap = cap
        self.chain = StabilizerChain(self.generators, self.degree)
        self.order = self.chain.order()
        self._elements: frozenset[tuple[int, ...]] | None = None

    def __contains__(self, p: Permutation) -> bool:
        return self.chain.contains(p)

    def elements(self) -> frozenset[tuple[int, ...]]:
        if self._elements is None:
            if self.order > self.cap:
                raise CapExceededError(self.cap, 0)
            self._elements = frozenset(enumerate_elements(self.generators, self.cap))
        return self._elements

    def conjugacy_classes(self) -> list[frozenset[tuple[int, ...]]]:
        elems = self.elements()
        gens = [g.images(self.degree) for g in self.generators]
        gens_inv = [_inv(g) for g in gens]
        remaining = set(elems)
        classes = []
        for x in sorted(elems):
            if x not in remaining:
                continue
            cls = {x}
            queue = deque([x])
            while queue:
                y = queue.popleft()
                for g, gi in zip(gens, gens_inv):
                    z = _mul(_mul(gi, y), g)
                    if z not in cls:
                        cls.add(z)
                        queue.append(z)
            remaining -= cls
            classes.append(frozenset(cls))
        return classes

    def normal_closure_order(self, x: Permutation) -> int:
        cls = next(c for c in self.conjugacy_classes() if x.images(self.degree) in c)
        return len(enumerate_elements([Permutation._raw(y) for y in cls], self.cap))

    def is_simple(self) -> bool:
        return is_simple(self)


def is_simple(group: PermGroup) -> bool:
    """True iff every non-identity conjugacy class generates the whole group."""
    if group.order == 1:
        raise DomainError("the trivial group is not considered simple")
    ident = tuple(range(group.degree))
    for cls in group.conjugacy_classes():
        if ident in cls:
            continue
        closure = enumerate_elements([Permutation._raw(y) for y in cls], group.cap)
        if len(closure) != group.order:
            return False
    return True


def elements_of_order(n: int, k: int) -> Iterator[Permutation]:
    """Every element of S_n with order k, in lexicographic order of images."""
    from itertools import permutations

    for img in permutations(range(n)):
        p = Permutation._raw(img)
        if p.order() == k:
            yield p
