"""Classical Schubert calculus on Gr(l, n).

Littlewood-Richardson coefficients are counted by enumerating LR skew
tableaux: semistandard fillings of nu/lam with content mu whose reverse
reading word (rows top to bottom, each read right to left) is a lattice word.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterator, Optional

from .partitions import (
    GrassmannFrame,
    Partition,
    _require_fit,
    dual_in_frame,
    sort_key,
)

SchurExpansion = Dict[Partition, int]


def sorted_expansion(terms: SchurExpansion) -> SchurExpansion:
    return {lam: terms[lam] for lam in sorted(terms, key=sort_key) if terms[lam]}


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Count LR tableaux of shape nu/lam and content mu, one cell at a time."""
    if nu.weight != lam.weight + mu.weight or len(lam) > len(nu):
        return 0
    if any(a > b for a, b in zip(lam, nu)):
        return 0
    if not mu:
        return 1

    # reverse reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam.part(r + 1) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def extend(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        hi = len(mu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filling[r, c] = v
            total += extend(pos + 1)
            del filling[r, c]
            counts[v] -= 1
        return total

    return extend(0)


def _lr_shapes(lam: Partition, mu: Partition, rows: int) -> Iterator[tuple[int, ...]]:
    """Yield the outer shape of every LR tableau of content mu on top of lam.

    Letters are added one horizontal strip at a time. ``rows`` caps the
    number of rows of the outer shape.
    """
    start = lam.padded(rows)
    zero = (0,) * rows

    def add_letter(i: int, shape: tuple[int, ...], prev: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(mu):
            yield shape
            return
        new = list(shape)
        placed = [0] * rows

        def fill(r: int, remaining: int, used: int, prev_before: int) -> Iterator[tuple[int, ...]]:
            # used = letters i placed in rows < r, prev_before = letters i-1 in rows < r
            if remaining == 0:
                yield from add_letter(i + 1, tuple(new), tuple(placed))
                return
            if r == rows:
                return
            cap = remaining
            if r > 0:
                cap = min(cap, shape[r - 1] - shape[r])
            if i > 0:
                cap = min(cap, prev_before - used)
            for a in range(cap, -1, -1):
                new[r] = shape[r] + a
                placed[r] = a
                yield from fill(r + 1, remaining - a, used + a, prev_before + prev[r])
            new[r] = shape[r]
            placed[r] = 0

        yield from fill(0, mu[i], 0, 0)

    yield from add_letter(0, start, zero)


@lru_cache(maxsize=None)
def _schur_product_cached(lam: Partition, mu: Partition, rows: int) -> tuple[tuple[Partition, int], ...]:
    terms: SchurExpansion = {}
    for shape in _lr_shapes(lam, mu, rows):
        nu = Partition(shape)
        terms[nu] = terms.get(nu, 0) + 1
    return tuple(sorted_expansion(terms).items())


def schur_product(lam: Partition, mu: Partition, max_rows: Optional[int] = None) -> SchurExpansion:
    """Expand s_lam * s_mu, keeping only partitions with at most ``max_rows`` parts."""
    full = len(lam) + len(mu)
    rows = full if max_rows is None else min(max_rows, full)
    if len(lam) > rows:
        return {}
    return dict(_schur_product_cached(lam, mu, rows))


def classical_pieri(p: int, lam: Partition, f: GrassmannFrame) -> SchurExpansion:
    """Add p boxes to lam, no two in a column, staying inside the rectangle."""
    if not 0 <= p <= f.k:
        raise ValueError(f"Pieri index {p} outside [0, {f.k}]")
    _require_fit(f, lam)
    old = lam.padded(f.l)
    result: SchurExpansion = {}

    def grow(i: int, remaining: int, acc: list[int]) -> None:
        if i == f.l:
            if remaining == 0:
                result[Partition(acc)] = 1
            return
        hi = f.k if i == 0 else old[i - 1]
        for v in range(old[i], min(hi, old[i] + remaining) + 1):
            grow(i + 1, remaining - (v - old[i]), acc + [v])

    grow(0, p, [])
    return sorted_expansion(result)


def classical_product_in_frame(lam: Partition, mu: Partition, f: GrassmannFrame) -> SchurExpansion:
    _require_fit(f, lam, mu)
    if lam.weight + mu.weight > f.dimension:
        return {}
    return {nu: c for nu, c in schur_product(lam, mu, f.l).items() if nu.part(1) <= f.k}


def classical_gw(a: Partition, b: Partition, c: Partition, f: GrassmannFrame) -> int:
    """Triple intersection number <a, b, c>_0 in H*Gr(l,n)."""
    if a.weight + b.weight + c.weight != f.dimension:
        return 0
    return classical_product_in_frame(a, b, f).get(dual_in_frame(c, f), 0)
