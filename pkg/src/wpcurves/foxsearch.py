"""Deterministic search for permutation triples of prescribed orders.

Given target orders (a, b, c) we look for c1 of order a and c2 of order b in
some S_n such that c1*c2 has order c.  The enumeration order is fixed, so the
result does not depend on how the work is split between processes:

1. degree n ascending, starting from the least n admitting elements of
   orders a, b and c;
2. c1 runs over one representative per cycle type of order a, types ordered
   by number of moved points, then by cycle lengths (descending, compared
   lexicographically); the representative puts the longest cycle on
   1, 2, ... and the remaining cycles on consecutive points after it;
3. c2 runs over all elements of order b, ordered first by their largest
   moved point, then lexicographically by image list.

The first pair found is returned.  A pair (c1, c2) living on {1..n-1} was
already tried at degree n-1, so at degree n a representative c1 that fixes n
is only paired with c2 moving n.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional

import numpy as np

from .permgrp import Permutation

_SUFFIX = 8
_DTYPE = np.int8


class WitnessNotFound(LookupError):
    def __init__(self, orders: tuple[int, int, int], degrees: range):
        super().__init__(
            f"no permutation triple with orders {orders} in degrees "
            f"{degrees.start}..{degrees.stop - 1}"
        )
        self.orders = orders
        self.degrees = degrees


def _prime_powers(k: int) -> list[int]:
    out, p = [], 2
    while p * p <= k:
        if k % p == 0:
            q = 1
            while k % p == 0:
                k //= p
                q *= p
            out.append(q)
        p += 1
    if k > 1:
        out.append(k)
    return out


def min_degree(k: int) -> int:
    """Least n such that S_n has an element of order k."""
    return max(1, sum(_prime_powers(k)))


def _partitions(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 1, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def cycle_types(n: int, k: int) -> list[tuple[int, ...]]:
    """Cycle types (non-trivial parts, descending) of elements of order k in S_n."""
    found = []
    for moved in range(0, n + 1):
        for parts in _partitions(moved, moved):
            if (math.lcm(*parts) if parts else 1) == k:
                found.append(parts)
    return found


def type_representative(parts: tuple[int, ...]) -> Permutation:
    cycles, start = [], 1
    for length in parts:
        cycles.append(range(start, start + length))
        start += length
    return Permutation.from_cycles(cycles)


def _sign(parts: tuple[int, ...]) -> int:
    return sum(p - 1 for p in parts) % 2


@lru_cache(maxsize=None)
def _lex_table(s: int) -> np.ndarray:
    return np.array(list(permutations(range(s))), dtype=_DTYPE).reshape(-1, s)


def _block(n: int, m: int) -> Iterator[np.ndarray]:
    """Permutations of {0..m-1} moving m-1, padded to degree n, in lexicographic order."""
    if m == 1:
        yield np.arange(n, dtype=_DTYPE)[None, :]
        return
    s = min(m, _SUFFIX)
    table = _lex_table(s)
    tail = np.arange(m, n, dtype=_DTYPE)
    for prefix in permutations(range(m), m - s):
        rest = np.array(sorted(set(range(m)) - set(prefix)), dtype=_DTYPE)
        chunk = np.empty((len(table), n), dtype=_DTYPE)
        chunk[:, : m - s] = prefix
        chunk[:, m - s : m] = rest[table]
        chunk[:, m:] = tail
        chunk = chunk[chunk[:, m - 1] != m - 1]
        if len(chunk):
            yield chunk


def _compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise left-to-right product: apply ``a`` then ``b``."""
    return np.take_along_axis(b, a.astype(np.intp), axis=1)


def _power(a: np.ndarray, e: int) -> np.ndarray:
    result = np.broadcast_to(np.arange(a.shape[1], dtype=a.dtype), a.shape).copy()
    base = a
    while e:
        if e & 1:
            result = _compose(result, base)
        e >>= 1
        if e:
            base = _compose(base, base)
    return result


def _has_order(a: np.ndarray, k: int) -> np.ndarray:
    ident = np.arange(a.shape[1], dtype=a.dtype)
    ok = (_power(a, k) == ident).all(axis=1)
    for p in _prime_powers(k):
        prime = next(q for q in range(2, p + 1) if p % q == 0)
        ok &= ~(_power(a, k // prime) == ident).all(axis=1)
    return ok


def _search_c1(task: tuple) -> Optional[tuple[int, ...]]:
    """First c2 (as images) completing the given c1, or None."""
    n, c1_parts, b, c, full = task
    c1 = np.array(type_representative(c1_parts).images(n), dtype=np.intp)
    blocks = range(1, n + 1) if full else (n,)
    for m in blocks:
        for chunk in _block(n, m):
            mask = _has_order(chunk, b)
            if not mask.any():
                continue
            cand = chunk[mask]
            prod = cand[:, c1]
            hit = np.flatnonzero(_has_order(prod, c))
            if len(hit):
                return tuple(int(x) for x in cand[hit[0]])
    return None


def candidate_tasks(a: int, b: int, c: int, n: int) -> list[tuple]:
    """Search tasks at degree n, in enumeration order, after parity pruning."""
    b_parities = {_sign(t) for t in cycle_types(n, b)}
    c_parities = {_sign(t) for t in cycle_types(n, c)}
    tasks = []
    for parts in cycle_types(n, a):
        e1 = _sign(parts)
        if not any((e1 + e2) % 2 in c_parities for e2 in b_parities):
            continue
        tasks.append((n, parts, b, c, sum(parts) == n))
    return tasks


def search_triple(
    a: int, b: int, c: int, max_degree: int, workers: int = 1
) -> tuple[Permutation, Permutation]:
    """Return (c1, c2) with orders a, b and c1*c2 of order c, first in enumeration order."""
    start = max(min_degree(a), min_degree(b), min_degree(c))
    rest = sorted((a, b, c))
    if rest[0] == 1 and rest[1] != rest[2]:
        # an identity entry forces the other two to be mutually inverse
        raise WitnessNotFound((a, b, c), range(start, max_degree + 1))
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in range(start, max_degree + 1):
            tasks = candidate_tasks(a, b, c, n)
            if not tasks:
                continue
            results = pool.map(_search_c1, tasks) if pool else map(_search_c1, tasks)
            # results arrive in task order, so the first hit is the same for any worker count
            found = next(((t, r) for t, r in zip(tasks, results) if r is not None), None)
            if found is not None:
                task, c2 = found
                return type_representative(task[1]), Permutation(c2)
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)
    raise WitnessNotFound((a, b, c), range(start, max_degree + 1))
