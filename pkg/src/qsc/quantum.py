"""The small quantum cohomology ring QH*Gr(l, n).

Elements are integer combinations of q^d s[lam] with lam inside the l x k
rectangle. Products are available two ways:

* ``qproduct_rimhook``: classical LR expansion, then mod-n rim-hook
  reduction of every term to the basis;
* ``qproduct_pieri``: expand the second factor as its Giambelli determinant
  in single-row classes and apply quantum Pieri factor by factor.

The two share no code beyond the partition helpers, so agreement between them
is a meaningful check.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .classical import schur_product
from .partitions import (
    EMPTY,
    GrassmannFrame,
    Partition,
    _require_fit,
    dual_in_frame,
    fits_in_frame,
    sort_key,
)

Key = tuple  # (d, Partition)


def term_key(key: Key) -> tuple:
    d, lam = key
    return (d, sort_key(lam))


class QElement:
    """An immutable element of QH*Gr(l, n).

    ``terms`` maps ``(d, lam)`` to a nonzero integer coefficient, meaning
    ``coeff * q^d * s[lam]``. Terms are kept in canonical order (by q-degree,
    then graded-lex on ``lam``).
    """

    __slots__ = ("frame", "_terms")

    def __init__(self, frame: GrassmannFrame, terms: Optional[Mapping[Key, int]] = None):
        clean = {}
        for (d, lam), c in (terms or {}).items():
            if not c:
                continue
            lam = Partition(lam)
            if d < 0:
                raise ValueError(f"negative q-degree {d}")
            if not fits_in_frame(lam, frame):
                raise ValueError(f"{lam} is not a basis index of {frame}")
            clean[d, lam] = c
        self.frame = frame
        self._terms = {key: clean[key] for key in sorted(clean, key=term_key)}

    @classmethod
    def zero(cls, frame: GrassmannFrame) -> "QElement":
        return cls(frame)

    @classmethod
    def one(cls, frame: GrassmannFrame) -> "QElement":
        return cls(frame, {(0, EMPTY): 1})

    @classmethod
    def schubert(cls, lam: Iterable[int], frame: GrassmannFrame, d: int = 0, coeff: int = 1) -> "QElement":
        return cls(frame, {(d, Partition(lam)): coeff})

    @classmethod
    def q(cls, frame: GrassmannFrame, d: int = 1) -> "QElement":
        return cls(frame, {(d, EMPTY): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, lam: Partition, d: int = 0) -> int:
        return self._terms.get((d, Partition(lam)), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> set[int]:
        """Total degrees |lam| + d*n of the terms (q has degree n)."""
        return {lam.weight + d * self.frame.n for d, lam in self._terms}

    def min_q_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero element has no q-degree")
        return min(d for d, _ in self._terms)

    def q0_part(self) -> dict:
        return {lam: c for (d, lam), c in self._terms.items() if d == 0}

    def _check_frame(self, other: "QElement") -> None:
        if other.frame != self.frame:
            raise ValueError(f"frame mismatch: {self.frame} vs {other.frame}")

    def __add__(self, other: "QElement") -> "QElement":
        if not isinstance(other, QElement):
            return NotImplemented
        self._check_frame(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return QElement(self.frame, out)

    def __neg__(self) -> "QElement":
        return QElement(self.frame, {key: -c for key, c in self._terms.items()})

    def __sub__(self, other: "QElement") -> "QElement":
        return self + (-other)

    def scale(self, c: int) -> "QElement":
        return QElement(self.frame, {key: c * v for key, v in self._terms.items()})

    def times_q(self, d: int = 1) -> "QElement":
        return QElement(self.frame, {(e + d, lam): c for (e, lam), c in self._terms.items()})

    def __mul__(self, other: Union["QElement", int]) -> "QElement":
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, QElement):
            return qproduct(self, other)
        return NotImplemented

    def __rmul__(self, other: int) -> "QElement":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, QElement):
            return NotImplemented
        return self.frame == other.frame and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.frame, tuple(self._terms.items())))

    def __repr__(self) -> str:
        return f"QElement({self.frame}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, ((d, lam), c) in enumerate(self._terms.items()):
            body = format_monomial(abs(c), d, lam)
            if i == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append((" + " if c > 0 else " - ") + body)
        return "".join(out)

    def to_json(self) -> dict:
        return {
            "frame": {"l": self.frame.l, "n": self.frame.n},
            "terms": [
                {"q": d, "partition": list(lam), "coeff": c} for (d, lam), c in self._terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QElement":
        frame = GrassmannFrame(data["frame"]["l"], data["frame"]["n"])
        terms: dict = {}
        for t in data["terms"]:
            key = (int(t["q"]), Partition(t["partition"]))
            terms[key] = terms.get(key, 0) + int(t["coeff"])
        return cls(frame, terms)


def format_monomial(c: int, d: int, lam: Partition) -> str:
    factors = []
    if c != 1:
        factors.append(str(c))
    if d == 1:
        factors.append("q")
    elif d > 1:
        factors.append(f"q^{d}")
    if lam:
        factors.append("s" + str(lam))
    return "*".join(factors) if factors else "1"


def _sum(elements: Iterable[QElement], frame: GrassmannFrame) -> QElement:
    acc: dict = {}
    for x in elements:
        for key, c in x.items():
            acc[key] = acc.get(key, 0) + c
    return QElement(frame, acc)


# -- straightening and rim-hook reduction -----------------------------------


def straighten(entries: Sequence[int], f: Optional[GrassmannFrame] = None):
    """Rewrite s_I for an integer sequence I as 0 or sign * s_lam.

    Returns ``None`` for zero, otherwise ``(sign, lam)``. Sorting the shifted
    values I_j - j is the same as applying the row-swap moves repeatedly.
    """
    entries = list(entries)
    if f is not None:
        if len(entries) > f.l:
            raise ValueError(f"index sequence longer than l={f.l}")
        entries += [0] * (f.l - len(entries))
    shifted = [a - j for j, a in enumerate(entries, start=1)]
    if len(set(shifted)) < len(shifted):
        return None
    inversions = sum(
        1 for i in range(len(shifted)) for j in range(i + 1, len(shifted)) if shifted[i] < shifted[j]
    )
    ordered = sorted(shifted, reverse=True)
    parts = [s + j for j, s in enumerate(ordered, start=1)]
    if parts and parts[-1] < 0:
        return None
    return (-1 if inversions % 2 else 1), Partition(parts)


@lru_cache(maxsize=None)
def reduce_to_basis(lam: Partition, f: GrassmannFrame) -> QElement:
    """Express s_lam (lam may stick out to the right) in the basis q^d s_mu."""
    lam = Partition(lam)
    if len(lam) > f.l:
        raise ValueError(f"{lam} has more than l={f.l} parts")
    l, n = f.l, f.n
    residues = []
    for j, part in enumerate(lam.padded(l), start=1):
        low = j - l
        residues.append(low + (part - low) % n)
    d, rem = divmod(lam.weight - sum(residues), n)
    assert rem == 0 and d >= 0
    st = straighten(residues)
    if st is None:
        return QElement.zero(f)
    sign, mu = st
    assert fits_in_frame(mu, f), f"rim-hook reduction left the rectangle: {mu}"
    if d * (l - 1) % 2:
        sign = -sign
    return QElement(f, {(d, mu): sign})


@lru_cache(maxsize=None)
def qproduct_rimhook(lam: Partition, mu: Partition, f: GrassmannFrame) -> QElement:
    lam, mu = Partition(lam), Partition(mu)
    _require_fit(f, lam, mu)
    acc: dict = {}
    for nu, c in schur_product(lam, mu, f.l).items():
        for key, v in reduce_to_basis(nu, f).items():
            acc[key] = acc.get(key, 0) + c * v
    return QElement(f, acc)


def qproduct(x: QElement, y: QElement) -> QElement:
    """Bilinear extension of the basis product (rim-hook route)."""
    x._check_frame(y)
    acc: dict = {}
    for (d1, a), c1 in x.items():
        for (d2, b), c2 in y.items():
            for (d, nu), c in qproduct_rimhook(a, b, x.frame).items():
                key = (d + d1 + d2, nu)
                acc[key] = acc.get(key, 0) + c * c1 * c2
    return QElement(x.frame, acc)


def gw_invariant(lam: Partition, mu: Partition, nu: Partition, d: int, f: GrassmannFrame) -> int:
    """Three-point Gromov-Witten invariant <lam, mu, nu>_d read off the ring."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _require_fit(f, lam, mu, nu)
    if d < 0 or lam.weight + mu.weight + nu.weight != f.dimension + d * f.n:
        return 0
    return qproduct_rimhook(lam, mu, f).coefficient(dual_in_frame(nu, f), d)


# -- Pieri route -------------------------------------------------------------


def _interlacing(upper: Sequence[int], lower: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Sequences x with upper[i] >= x[i] >= lower[i] and sum(x) == total."""
    size = len(upper)
    room = [0] * (size + 1)
    for i in range(size - 1, -1, -1):
        room[i] = room[i + 1] + max(upper[i] - lower[i], 0)
    base = sum(lower)

    def walk(i: int, remaining: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == size:
            if remaining == 0:
                yield tuple(acc)
            return
        if upper[i] < lower[i] or remaining > room[i]:
            return
        for extra in range(0, min(upper[i] - lower[i], remaining) + 1):
            acc.append(lower[i] + extra)
            yield from walk(i + 1, remaining - extra, acc)
            acc.pop()

    if total >= base:
        yield from walk(0, total - base, [])


@lru_cache(maxsize=None)
def quantum_pieri(p: int, lam: Partition, f: GrassmannFrame) -> QElement:
    """s_p * s_lam by the quantum Pieri rule."""
    lam = Partition(lam)
    if not 0 <= p <= f.k:
        raise ValueError(f"Pieri index {p} outside [0, {f.k}]")
    _require_fit(f, lam)
    l, k, n = f.l, f.k, f.n
    parts = lam.padded(l)
    terms: dict = {}
    # k >= mu_1 >= lam_1 >= mu_2 >= ... >= mu_l >= lam_l
    upper = (k,) + parts[:-1]
    for mu in _interlacing(upper, parts, lam.weight + p):
        terms[0, Partition(mu)] = 1
    # lam_1 - 1 >= nu_1 >= lam_2 - 1 >= ... >= lam_l - 1 >= nu_l >= 0
    if lam.weight + p >= n:
        upper = tuple(x - 1 for x in parts)
        lower = tuple(x - 1 for x in parts[1:]) + (0,)
        for nu in _interlacing(upper, lower, lam.weight + p - n):
            terms[1, Partition(nu)] = 1
    return QElement(f, terms)


def _sigma_index(p: int, f: GrassmannFrame):
    """s_p = sign * q^d * s_(b) as (sign, d, b), or None when s_p = 0."""
    sign, d = 1, 0
    while p >= f.n:
        p -= f.n
        d += 1
        if f.l % 2 == 0:
            sign = -sign
    if p < 0 or p > f.k:
        return None
    return sign, d, p


def extended_sigma(p: int, f: GrassmannFrame) -> QElement:
    idx = _sigma_index(p, f)
    if idx is None:
        return QElement.zero(f)
    sign, d, b = idx
    return QElement(f, {(d, Partition((b,))): sign})


def times_sigma(p: int, x: QElement) -> QElement:
    """s_p * x for any integer p, via quantum Pieri."""
    f = x.frame
    idx = _sigma_index(p, f)
    if idx is None:
        return QElement.zero(f)
    sign, shift, b = idx
    acc: dict = {}
    for (d, lam), c in x.items():
        for (e, nu), v in quantum_pieri(b, lam, f).items():
            key = (d + e + shift, nu)
            acc[key] = acc.get(key, 0) + sign * c * v
    return QElement(f, acc)


def _permutation_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def _jacobi_trudi_terms(entries: tuple[int, ...], f: GrassmannFrame) -> tuple:
    size = len(entries)
    out = []
    perm: list[int] = []

    def choose(i: int, used: int) -> None:
        if i == size:
            out.append((_permutation_sign(perm), tuple(entries[r] + perm[r] - r for r in range(size))))
            return
        for j in range(size):
            if used >> j & 1 or _sigma_index(entries[i] + j - i, f) is None:
                continue
            perm.append(j)
            choose(i + 1, used | 1 << j)
            perm.pop()

    choose(0, 0)
    return tuple(out)


def jacobi_trudi_terms(entries: Sequence[int], f: GrassmannFrame) -> list[tuple[int, tuple[int, ...]]]:
    """Nonzero monomials of det(s_{I_i + j - i}) as (sign, row indices).

    Permutations are built row by row, skipping vanishing entries early.
    """
    return list(_jacobi_trudi_terms(tuple(entries), f))


def evaluate_jacobi_trudi(entries: Sequence[int], f: GrassmannFrame, start: Optional[QElement] = None) -> QElement:
    """start * det(s_{I_i + j - i}), multiplying in one row class at a time."""
    if start is None:
        start = QElement.one(f)
    pieces = []
    for sign, idx in jacobi_trudi_terms(entries, f):
        acc = start
        for p in idx:
            acc = times_sigma(p, acc)
            if not acc:
                break
        pieces.append(acc.scale(sign))
    return _sum(pieces, f)


def giambelli_det(lam: Partition, f: GrassmannFrame) -> QElement:
    lam = Partition(lam)
    _require_fit(f, lam)
    return evaluate_jacobi_trudi(lam.padded(f.l), f)


@lru_cache(maxsize=None)
def qproduct_pieri(lam: Partition, mu: Partition, f: GrassmannFrame) -> QElement:
    lam, mu = Partition(lam), Partition(mu)
    _require_fit(f, lam, mu)
    return evaluate_jacobi_trudi(mu.padded(f.l), f, start=QElement.schubert(lam, f))
