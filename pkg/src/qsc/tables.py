"""Export of quantum structure constants as CSV or JSON lines."""

from __future__ import annotations

import csv
import json
from typing import IO, Iterable, Iterator, Union

from .partitions import GrassmannFrame, enumerate_partitions_in_frame
from .quantum import qproduct_rimhook

FIELDS = ("l", "n", "lambda", "mu", "nu", "d", "coeff")


def structure_constants(f: GrassmannFrame, full: bool = False) -> Iterator[dict]:
    """Nonzero coefficients of q^d s_nu in s_lam * s_mu, in canonical order.

    Unless ``full`` is set only pairs with lam <= mu in basis order are listed.
    """
    basis = enumerate_partitions_in_frame(f)
    for i, lam in enumerate(basis):
        for mu in basis if full else basis[i:]:
            for (d, nu), c in qproduct_rimhook(lam, mu, f).items():
                yield {"l": f.l, "n": f.n, "lambda": lam, "mu": mu, "nu": nu, "d": d, "coeff": c}


def export_table(
    frames: Union[GrassmannFrame, Iterable[GrassmannFrame]],
    fmt: str,
    stream: IO[str],
    full: bool = False,
) -> int:
    """Write one record per structure constant to ``stream``; return the record count."""
    if isinstance(frames, GrassmannFrame):
        frames = [frames]
    if fmt not in ("csv", "jsonl"):
        raise ValueError(f"unknown table format {fmt!r}")
    writer = None
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(FIELDS)
    count = 0
    for f in frames:
        for rec in structure_constants(f, full):
            if writer is not None:
                writer.writerow([rec[k] for k in FIELDS])
            else:
                row = {k: (list(v) if k in ("lambda", "mu", "nu") else v) for k, v in rec.items()}
                stream.write(json.dumps(row, separators=(",", ":")) + "\n")
            count += 1
    return count
