"""Partitions, Grassmannian frames and the rectangle operations built on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same value. The empty tuple is the empty
    partition.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part {p} in {list(parts)}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts not weakly decreasing: {list(parts)}")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return super().__new__(cls, parts[:end])

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part lookup that reads missing parts as zero."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, size: int) -> tuple[int, ...]:
        if len(self) > size:
            raise ValueError(f"{self} has more than {size} parts")
        return tuple(self) + (0,) * (size - len(self))

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    __str__ = __repr__


EMPTY = Partition()


def normalize(raw: Iterable[int]) -> Partition:
    return Partition(raw)


def parse_partition(text: str) -> Partition:
    """Read the bracketed form ``"[2,1]"``; ``"[]"`` is the empty partition."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"expected a bracketed partition, got {text!r}")
    body = body[1:-1].strip()
    if not body:
        return EMPTY
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"non-integer part in {text!r}") from None
    return Partition(parts)


@dataclass(frozen=True)
class GrassmannFrame:
    """Gr(l, n): l-planes in n-space, with k = n - l."""

    l: int
    n: int

    def __post_init__(self):
        if self.l < 1 or self.n - self.l < 1:
            raise ValueError(f"need 1 <= l <= n-1, got l={self.l}, n={self.n}")

    @property
    def k(self) -> int:
        return self.n - self.l

    @property
    def dimension(self) -> int:
        return self.l * self.k

    def transposed(self) -> "GrassmannFrame":
        return GrassmannFrame(self.k, self.n)

    def __str__(self) -> str:
        return f"Gr({self.l},{self.n})"


def frames_up_to(max_n: int, min_n: int = 2) -> list[GrassmannFrame]:
    return [GrassmannFrame(l, n) for n in range(min_n, max_n + 1) for l in range(1, n)]


def sort_key(lam: Partition) -> tuple:
    """Graded order; within a weight, lexicographically descending."""
    return (lam.weight, tuple(-p for p in lam))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def fits_in_frame(lam: Partition, f: GrassmannFrame) -> bool:
    return len(lam) <= f.l and lam.part(1) <= f.k


def _require_fit(f: GrassmannFrame, *parts: Partition) -> None:
    for lam in parts:
        if not fits_in_frame(lam, f):
            raise ValueError(f"{lam} does not fit the {f.l}x{f.k} rectangle of {f}")


def dual_in_frame(nu: Partition, f: GrassmannFrame) -> Partition:
    """Complement of ``nu`` in the l x k rectangle, rotated by 180 degrees."""
    _require_fit(f, nu)
    return Partition(f.k - p for p in reversed(nu.padded(f.l)))


def strip_columns(lam: Partition, d: int) -> Partition:
    return Partition(max(p - d, 0) for p in lam)


def strip_rows(lam: Partition, d: int) -> Partition:
    return Partition(lam[d:])


def strip_rows_and_columns(lam: Partition, d: int) -> Partition:
    return Partition(max(p - d, 0) for p in lam[d:])


def classical_nonvanishing(lam: Partition, mu: Partition, f: GrassmannFrame) -> bool:
    """Whether the product of the two Schubert classes is nonzero in H*Gr(l,n)."""
    _require_fit(f, lam, mu)
    return all(lam.part(i) + mu.part(f.l + 1 - i) <= f.k for i in range(1, f.l + 1))


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``.

    Unordered; uses the lattice-path bijection with ``rows``-subsets of
    ``range(rows + cols)``.
    """
    for subset in combinations(range(rows + cols), rows):
        yield Partition(sorted((s - i for i, s in enumerate(subset)), reverse=True))


def enumerate_partitions_in_frame(f: GrassmannFrame) -> list[Partition]:
    return sorted(partitions_in_box(f.l, f.k), key=sort_key)
