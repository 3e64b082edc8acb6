"""Parser for element literals such as ``1-e1+2e3`` or ``1/4 + 0.5e2``.

Grammar (whitespace ignored)::

    expr  := [sign] term (sign term)*
    term  := coeff | [coeff] basis
    coeff := integer | integer '/' positive-integer | decimal
    basis := 'e1' | 'e2' | 'e3'

Repeated basis terms accumulate.  Decimals become exact rationals.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Cl2Element

_COEFF = re.compile(r"(\d*\.\d+|\d+\.\d*|\d+)(?:/(\d+))?")
_BASIS = re.compile(r"e([123])")


class LiteralSyntaxError(ValueError):
    """Malformed literal; ``position`` is a 0-based index into the source."""

    def __init__(self, message: str, source: str, position: int):
        super().__init__(f"{message} at position {position} in {source!r}")
        self.source = source
        self.position = position


def parse(source: str) -> Cl2Element:
    # keep the original index of every non-space character
    kept = [(i, ch) for i, ch in enumerate(source) if not ch.isspace()]
    text = "".join(ch for _, ch in kept)

    def where(k: int) -> int:
        return kept[k][0] if k < len(kept) else len(source)

    if not text:
        raise LiteralSyntaxError("empty literal", source, 0)
    coeffs = [Fraction(0)] * 4
    k = 0
    sign = 1
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        k = 1
    while True:
        start = k
        value = Fraction(1)
        m = _COEFF.match(text, k)
        if m:
            num, den = m.group(1), m.group(2)
            if den is not None and "." in num:
                raise LiteralSyntaxError("decimal numerator in a fraction",
                                         source, where(start))
            if den is not None and int(den) == 0:
                raise LiteralSyntaxError("zero denominator", source,
                                         where(m.start(2)))
            value = Fraction(num) / (int(den) if den else 1)
            k = m.end()
        b = _BASIS.match(text, k)
        if b:
            idx = int(b.group(1))
            k = b.end()
        elif m:
            idx = 0
        else:
            raise LiteralSyntaxError("expected a coefficient or e1/e2/e3",
                                     source, where(start))
        coeffs[idx] += sign * value
        if k == len(text):
            break
        if text[k] not in "+-":
            raise LiteralSyntaxError("expected '+' or '-'", source, where(k))
        sign = -1 if text[k] == "-" else 1
        k += 1
        if k == len(text):
            raise LiteralSyntaxError("dangling operator", source, where(k))
    return Cl2Element(*coeffs)
