"""Executable checks of the structural theorems about QH*Gr(l, n).

Every check sweeps a whole frame (or a seeded sample of it) and returns a
:class:`VerificationReport`. Failures are reported, never raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Any, Callable, Iterable, Iterator, Optional

from .classical import classical_gw, classical_product_in_frame
from .partitions import (
    GrassmannFrame,
    Partition,
    classical_nonvanishing,
    conjugate,
    enumerate_partitions_in_frame,
    partitions_in_box,
    sort_key,
    strip_columns,
    strip_rows_and_columns,
)
from .quantum import (
    QElement,
    evaluate_jacobi_trudi,
    extended_sigma,
    giambelli_det,
    gw_invariant,
    qproduct,
    qproduct_pieri,
    qproduct_rimhook,
    quantum_pieri,
    reduce_to_basis,
    straighten,
)

DEFAULT_DEGREE_BOUND = 3
ASSOCIATIVITY_SAMPLES = 1000
STRAIGHTEN_SAMPLES = 2000


@dataclass
class VerificationReport:
    frame: GrassmannFrame
    check: str
    cases: int
    counterexample: Optional[dict] = None
    seed: Optional[int] = None

    @property
    def status(self) -> str:
        return "fail" if self.counterexample is not None else "pass"

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        out = {
            "frame": {"l": self.frame.l, "n": self.frame.n},
            "check": self.check,
            "status": self.status,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def to_text(self) -> str:
        line = f"{self.status.upper():4} {self.frame} {self.check} cases={self.cases}"
        if self.counterexample is not None:
            line += f" counterexample={self.counterexample}"
        return line


@dataclass
class _Context:
    seed: int = 0
    degree_bound: int = DEFAULT_DEGREE_BOUND


def _cx(**payload: Any) -> dict:
    return {k: _plain(v) for k, v in payload.items()}


def _agree(got: Any, expected: Any, **inputs: Any) -> Optional[dict]:
    if got == expected:
        return None
    return _cx(**inputs, got=got, expected=expected)


def _plain(v: Any) -> Any:
    if isinstance(v, QElement):
        return v.to_text()
    if isinstance(v, Partition):
        return list(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    return v


def _pairs(f: GrassmannFrame):
    basis = enumerate_partitions_in_frame(f)
    return [(a, b) for a in basis for b in basis]


# -- single-purpose operations ----------------------------------------------


def min_q_degree_formula(lam: Partition, mu: Partition, f: GrassmannFrame) -> int:
    """Smallest d with s[lam minus d rows and d columns] * s[mu] nonzero classically."""
    lam, mu = Partition(lam), Partition(mu)
    d = 0
    while not classical_nonvanishing(strip_rows_and_columns(lam, d), mu, f):
        d += 1
    return d


def min_q_degree_observed(lam: Partition, mu: Partition, f: GrassmannFrame) -> int:
    prod = qproduct_rimhook(Partition(lam), Partition(mu), f)
    if not prod:
        raise AssertionError(f"s{lam} * s{mu} vanished in {f}")
    return prod.min_q_degree()


def vanishes_mod_n(lam: Partition, f: GrassmannFrame) -> bool:
    lam = Partition(lam)
    if len(lam) > f.l:
        raise ValueError(f"{lam} has more than l={f.l} parts")
    residues = [(p - i) % f.n for i, p in enumerate(lam.padded(f.l), start=1)]
    return len(set(residues)) < len(residues)


def column_class(i: int, f: GrassmannFrame) -> QElement:
    """c_i = s[1^i] for 0 <= i <= l, zero otherwise."""
    if 0 <= i <= f.l:
        return QElement.schubert((1,) * i, f)
    return QElement.zero(f)


def determinant(entry: Callable[[int, int], QElement], size: int, f: GrassmannFrame) -> QElement:
    """Determinant of a size x size matrix over QH*, by Laplace expansion along rows."""
    memo: dict = {}

    def minor(row: int, cols: int) -> QElement:
        # cols: bitmask of columns still free; rows row..size-1 remain
        if row == size:
            return QElement.one(f)
        if (row, cols) in memo:
            return memo[row, cols]
        acc = QElement.zero(f)
        free = [j for j in range(size) if cols >> j & 1]
        for pos, j in enumerate(free):
            a = entry(row, j)
            if not a:
                continue
            term = qproduct(a, minor(row + 1, cols & ~(1 << j)))
            acc = acc + (term if pos % 2 == 0 else -term)
        memo[row, cols] = acc
        return acc

    return minor(0, (1 << size) - 1)


def sigma_from_columns(p: int, f: GrassmannFrame) -> QElement:
    """s_p as det(c_{1+j-i}) of size p, computed in QH*."""
    if p < 0:
        return QElement.zero(f)
    if p == 0:
        return QElement.one(f)
    return determinant(lambda i, j: column_class(1 + j - i, f), p, f)


def ytilde(i: int, f: GrassmannFrame) -> QElement:
    return _ytilde(i, f)


@lru_cache(maxsize=None)
def _ytilde(i: int, f: GrassmannFrame) -> QElement:
    if i < 0:
        return QElement.zero(f)
    if i == 0:
        return QElement.one(f)
    acc = QElement.zero(f)
    for j in range(1, f.k + 1):
        term = qproduct(QElement.schubert((j,), f), _ytilde(i - j, f))
        acc = acc + (term if j % 2 == 1 else -term)
    return acc


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _presentation(f: GrassmannFrame, ctx: _Context):
    l, k, n = f.l, f.k, f.n
    q = QElement.q(f)
    for p in range(1, n + 1):
        got = sigma_from_columns(p, f)
        if p <= k:
            want = QElement.schubert((p,), f)
        elif p < n:
            want = QElement.zero(f)
        else:
            want = q.scale(_sign(l - 1))
        if got != want:
            yield _cx(relation=f"det(c)_{p}", got=got, expected=want)
        else:
            yield _agree(got, extended_sigma(p, f), relation=f"sigma_{p} by shift rule")
    top = qproduct(QElement.schubert((k,), f), QElement.schubert((1,) * l, f))
    yield _agree(top, q, relation="s_k * s_(1^l)")
    for p in range(l + 1, n + 1):
        want = QElement.zero(f) if p < n else q.scale(_sign(k - 1))
        yield _agree(ytilde(p, f), want, relation=f"ytilde_{p}")


def verify_presentation(f: GrassmannFrame) -> VerificationReport:
    return _run("presentation", f, _Context())


# -- sweeps ------------------------------------------------------------------
# Each check is a generator yielding one item per case examined: None when the
# case holds, a counterexample payload when it does not.


def _pipeline_equivalence(f, ctx):
    for a, b in _pairs(f):
        yield _agree(qproduct_pieri(a, b, f), qproduct_rimhook(a, b, f), lam=a, mu=b)


def _quantum_pieri(f, ctx):
    for lam in enumerate_partitions_in_frame(f):
        for p in range(f.k + 1):
            yield _agree(quantum_pieri(p, lam, f), qproduct_rimhook(Partition((p,)), lam, f), p=p, lam=lam)


def _giambelli(f, ctx):
    for lam in enumerate_partitions_in_frame(f):
        yield _agree(giambelli_det(lam, f), QElement.schubert(lam, f), lam=lam)


def _grading(f, ctx):
    for a, b in _pairs(f):
        prod = qproduct_rimhook(a, b, f)
        yield None if prod.degrees() == {a.weight + b.weight} else _cx(lam=a, mu=b, product=prod)


def _commutativity(f, ctx):
    for a, b in _pairs(f):
        yield _agree(qproduct_rimhook(a, b, f), qproduct_rimhook(b, a, f), lam=a, mu=b)


def _positivity(f, ctx):
    for a, b in _pairs(f):
        prod = qproduct_rimhook(a, b, f)
        yield None if all(c > 0 for _, c in prod.items()) else _cx(lam=a, mu=b, product=prod)


def _q0_slice(f, ctx):
    for a, b in _pairs(f):
        yield _agree(qproduct_rimhook(a, b, f).q0_part(), classical_product_in_frame(a, b, f), lam=a, mu=b)


def _noq(f, ctx):
    for a, b in _pairs(f):
        if len(a) + len(b) <= f.l or a.part(1) + b.part(1) <= f.k:
            prod = qproduct_rimhook(a, b, f)
            yield None if all(d == 0 for d, _ in prod.terms) else _cx(lam=a, mu=b, product=prod)


def _fulton_woodward(f, ctx):
    for a, b in _pairs(f):
        prod = qproduct_rimhook(a, b, f)
        if not prod:
            yield _cx(lam=a, mu=b, product=prod)
            continue
        formula, observed = min_q_degree_formula(a, b, f), prod.min_q_degree()
        if formula != observed:
            yield _cx(lam=a, mu=b, formula=formula, observed=observed)
        elif formula and a.part(formula) < formula:
            yield _cx(lam=a, mu=b, formula=formula, reason="lam does not contain a d x d square")
        else:
            yield None


def _fw_witness(f, ctx):
    for d in range(1, min(f.l, f.k) + 1):
        rect = qproduct(QElement.schubert((d,) * f.l, f), QElement.schubert((f.k,) * d, f))
        for lam in enumerate_partitions_in_frame(f):
            if lam.part(d) < d:
                continue
            core = QElement.schubert(strip_rows_and_columns(lam, d), f)
            yield _agree(qproduct(rect, core), core.times_q(d), lam=lam, d=d)


def _vanishing(f, ctx):
    for lam in partitions_in_box(f.l, f.k + f.n):
        yield _agree(vanishes_mod_n(lam, f), not reduce_to_basis(lam, f), lam=lam)


def _straightening(f, ctx):
    lo, hi = -f.l, f.k + f.l
    if (hi - lo + 1) ** f.l <= 4 * STRAIGHTEN_SAMPLES:
        seqs: Iterable = product(range(lo, hi + 1), repeat=f.l)
    else:
        rng = random.Random(f"{ctx.seed}:straighten:{f.l}:{f.n}")
        seqs = [tuple(rng.randint(lo, hi) for _ in range(f.l)) for _ in range(STRAIGHTEN_SAMPLES)]
    for seq in seqs:
        st = straighten(seq, f)
        want = QElement.zero(f) if st is None else reduce_to_basis(st[1], f).scale(st[0])
        yield _agree(evaluate_jacobi_trudi(seq, f), want, index=list(seq))


def _classical_pieri_gw(a: Partition, b: Partition, p: int, f: GrassmannFrame) -> int:
    """<a, b, s_p>_0 in Gr(l+1, n); Gr(n, n) is a point."""
    if f.k == 1:
        return int(not a and not b and p == 0)
    return classical_gw(a, b, Partition((p,)), GrassmannFrame(f.l + 1, f.n))


def _pieri_gw(f, ctx):
    target = f.dimension + f.n
    for a, b in _pairs(f):
        p = target - a.weight - b.weight
        if not 0 <= p <= f.k:
            continue
        got = gw_invariant(a, b, Partition((p,)), 1, f)
        want = _classical_pieri_gw(strip_columns(a, 1), strip_columns(b, 1), max(p - 1, 0), f)
        yield None if got in (0, 1) and got == want else _cx(alpha=a, beta=b, p=p, quantum=got, classical=want)


def _s3_symmetry(f, ctx):
    if f.n > 6:
        return
    basis = enumerate_partitions_in_frame(f)
    for a, b, c in product(basis, repeat=3):
        excess = a.weight + b.weight + c.weight - f.dimension
        if excess < 0 or excess % f.n:
            continue
        d = excess // f.n
        vals = {gw_invariant(x, y, z, d, f) for x, y, z in permutations((a, b, c))}
        yield None if len(vals) == 1 else _cx(triple=[a, b, c], d=d, values=sorted(vals))


def _eq5(f, ctx):
    for m in range(1, 2 * f.n + 1):
        acc = QElement.zero(f)
        for i in range(f.l + 1):
            acc = acc + qproduct(extended_sigma(m - i, f), column_class(i, f)).scale(_sign(i))
        yield _agree(acc, QElement.zero(f), m=m)


def _transport(x: QElement, target: GrassmannFrame) -> QElement:
    return QElement(target, {(d, conjugate(lam)): c for (d, lam), c in x.items()})


def _duality(f, ctx):
    g = f.transposed()
    for a, b in _pairs(f):
        here = _transport(qproduct_rimhook(a, b, f), g)
        there = qproduct_rimhook(conjugate(a), conjugate(b), g)
        yield None if here.to_json() == there.to_json() else _cx(lam=a, mu=b, transported=here, dual_frame=there)


def _associativity(f, ctx):
    basis = enumerate_partitions_in_frame(f)
    if f.n <= 5:
        triples: Iterable = product(basis, repeat=3)
    else:
        rng = random.Random(f"{ctx.seed}:assoc:{f.l}:{f.n}")
        triples = [tuple(rng.choice(basis) for _ in range(3)) for _ in range(ASSOCIATIVITY_SAMPLES)]
    for a, b, c in triples:
        x, y, z = (QElement.schubert(t, f) for t in (a, b, c))
        yield _agree(qproduct(qproduct(x, y), z), qproduct(x, qproduct(y, z)), triple=[a, b, c])


def goodman_wenzl_partitions(f: GrassmannFrame, degree_bound: int) -> list[Partition]:
    """Partitions with at most l parts, lam_1 - lam_l <= k, |lam| <= lk + D*n."""
    limit = f.dimension + degree_bound * f.n
    out = []
    for core in partitions_in_box(f.l - 1, f.k):
        m = 0
        while core.weight + m * f.l <= limit:
            out.append(Partition(p + m for p in core.padded(f.l)))
            m += 1
    return sorted(out, key=sort_key)


def _goodman_wenzl(f, ctx):
    D = ctx.degree_bound
    seen: dict = {}
    for lam in goodman_wenzl_partitions(f, D):
        red = reduce_to_basis(lam, f)
        if len(red) != 1 or next(iter(red.terms.values())) != 1:
            yield _cx(lam=lam, reduced=red)
            return
        key = next(iter(red.terms))
        if key in seen:
            yield _cx(lam=lam, other=seen[key], image=[key[0], list(key[1])])
            return
        seen[key] = lam
        yield None
    missing = [[d, list(mu)] for d in range(D + 1) for mu in enumerate_partitions_in_frame(f) if (d, mu) not in seen]
    if missing:
        yield _cx(missing=missing)


CHECKS: dict[str, Callable[[GrassmannFrame, _Context], Iterator[Optional[dict]]]] = {
    "pipeline-equivalence": _pipeline_equivalence,
    "quantum-pieri": _quantum_pieri,
    "giambelli": _giambelli,
    "grading": _grading,
    "commutativity": _commutativity,
    "positivity": _positivity,
    "q0-slice": _q0_slice,
    "noq": _noq,
    "fulton-woodward": _fulton_woodward,
    "fw-witness": _fw_witness,
    "vanishing-criterion": _vanishing,
    "straightening": _straightening,
    "pieri-gw-dichotomy": _pieri_gw,
    "s3-symmetry": _s3_symmetry,
    "eq5": _eq5,
    "presentation": _presentation,
    "duality": _duality,
    "associativity": _associativity,
    "goodman-wenzl-basis": _goodman_wenzl,
}


def _run(name: str, f: GrassmannFrame, ctx: _Context) -> VerificationReport:
    seed = ctx.seed if name in ("associativity", "straightening") else None
    cases = 0
    for outcome in CHECKS[name](f, ctx):
        cases += 1
        if outcome is not None:
            return VerificationReport(f, name, cases=cases, counterexample=outcome, seed=seed)
    return VerificationReport(f, name, cases=cases, seed=seed)


def verify_frame(
    f: GrassmannFrame,
    checks: Optional[Iterable[str]] = None,
    sample_seed: int = 0,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> list[VerificationReport]:
    names = sorted(CHECKS if checks is None else set(checks))
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    ctx = _Context(seed=sample_seed, degree_bound=degree_bound)
    return [_run(name, f, ctx) for name in names]
