"""Parser for product expressions such as ``"q * 3 * s[2,1]"``.

Grammar (whitespace is ignored)::

    EXPR := TERM ('*' TERM)*
    TERM := 's[' INT (',' INT)* ']' | 's[]' | 'q' ['^' INT] | INT

``parse_qelement`` additionally accepts signed sums of such products, which is
exactly the shape of :meth:`QElement.to_text` output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .partitions import GrassmannFrame, Partition
from .quantum import QElement, reduce_to_basis


class ExpressionError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Schubert:
    partition: Partition


@dataclass(frozen=True)
class QPower:
    exponent: int = 1


Factor = Union[Schubert, QPower, int]


@dataclass(frozen=True)
class ProductExpression:
    factors: tuple[Factor, ...]

    def evaluate(self, f: GrassmannFrame) -> QElement:
        acc = QElement.one(f)
        for factor in self.factors:
            if isinstance(factor, QPower):
                acc = acc.times_q(factor.exponent)
            elif isinstance(factor, Schubert):
                acc = acc * schubert_class(factor.partition, f)
            else:
                acc = acc.scale(factor)
        return acc


def schubert_class(lam: Partition, f: GrassmannFrame) -> QElement:
    """s_lam for any partition: reduced to the basis, zero beyond l rows."""
    if len(lam) > f.l:
        return QElement.zero(f)
    return reduce_to_basis(lam, f)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.end = len(text)

    def skip(self) -> None:
        while self.pos < self.end and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < self.end else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ExpressionError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < self.end and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = repr(self.text[start]) if start < self.end else "end of input"
            raise ExpressionError(f"expected an integer, found {found}", start)
        return int(self.text[start:self.pos])

    def term(self) -> Factor:
        ch = self.peek()
        start = self.pos
        if ch == "s":
            self.pos += 1
            self.expect("[")
            parts = []
            if self.peek() != "]":
                parts.append(self.integer())
                while self.peek() == ",":
                    self.pos += 1
                    parts.append(self.integer())
            self.expect("]")
            try:
                return Schubert(Partition(parts))
            except ValueError as exc:
                raise ExpressionError(f"not a partition ({exc})", start) from None
        if ch == "q":
            self.pos += 1
            if self.peek() == "^":
                self.pos += 1
                return QPower(self.integer())
            return QPower()
        if ch.isdigit():
            return self.integer()
        found = repr(ch) if ch else "end of input"
        raise ExpressionError(f"expected s[...], q or an integer, found {found}", self.pos)

    def product(self) -> ProductExpression:
        factors = [self.term()]
        while self.peek() == "*":
            self.pos += 1
            factors.append(self.term())
        return ProductExpression(tuple(factors))


def parse_expression(text: str) -> ProductExpression:
    sc = _Scanner(text)
    expr = sc.product()
    if sc.peek():
        raise ExpressionError(f"unexpected {sc.peek()!r}", sc.pos)
    return expr


def parse_qelement(text: str, f: GrassmannFrame) -> QElement:
    """Evaluate a signed sum of products, e.g. ``"q*s[2] - 2*s[1,1]"`` or ``"0"``."""
    sc = _Scanner(text)
    total = QElement.zero(f)
    sign = 1
    if sc.peek() == "-":
        sc.pos += 1
        sign = -1
    while True:
        total = total + sc.product().evaluate(f).scale(sign)
        ch = sc.peek()
        if not ch:
            return total
        if ch not in "+-":
            raise ExpressionError(f"unexpected {ch!r}", sc.pos)
        sign = 1 if ch == "+" else -1
        sc.pos += 1
