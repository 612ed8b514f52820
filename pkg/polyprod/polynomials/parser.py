"""Text form of integer polynomials.

Two syntaxes are accepted:

* terms such as ``x^2+1`` or ``2*x^3 - x + 5``, built from ``c``, ``x``,
  ``c x``, ``x^k`` and ``c x^k`` joined by ``+`` and ``-`` (whitespace and
  ``*`` optional);
* ``coeffs:c0,c1,...,cd`` with ascending coefficients.
"""

import re
from typing import Dict

from polyprod.errors import PolynomialParseError
from polyprod.polynomials.intpoly import IntPoly


COEFFS_PREFIX = "coeffs:"

_TERM = re.compile(
    r"""
    (?P<sign>[+-])?\s*
    (?P<coef>\d+)?\s*
    (?P<star>\*)?\s*
    (?P<var>x(?:\s*\^\s*(?P<exp>\d+))?)?\s*
    """,
    re.VERBOSE,
)
_INTEGER = re.compile(r"\s*[+-]?\d+\s*")


def parse_polynomial(text: str) -> IntPoly:
    """Parse polynomial text into an IntPoly.

    Raises:
        PolynomialParseError: On malformed input or a zero polynomial.
    """
    if not text or not text.strip():
        raise PolynomialParseError("empty polynomial", text, 0)
    stripped = text.lstrip()
    if stripped.startswith(COEFFS_PREFIX):
        poly = _parse_coeffs(text, len(text) - len(stripped) + len(COEFFS_PREFIX))
    else:
        poly = _parse_terms(text)
    if poly.is_zero:
        raise PolynomialParseError("zero polynomial", text, 0)
    return poly


def _parse_coeffs(text: str, start: int) -> IntPoly:
    coeffs = []
    pos = start
    for chunk in text[start:].split(","):
        if not _INTEGER.fullmatch(chunk):
            raise PolynomialParseError("expected an integer coefficient", text, pos)
        coeffs.append(int(chunk))
        pos += len(chunk) + 1
    return IntPoly(tuple(coeffs))


def _parse_terms(text: str) -> IntPoly:
    exponents: Dict[int, int] = {}
    pos = len(text) - len(text.lstrip())
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise PolynomialParseError("unexpected character", text, pos)
        sign, coef, star, var = m.group("sign", "coef", "star", "var")
        if sign is None and not first:
            raise PolynomialParseError("expected '+' or '-'", text, pos)
        if coef is None and var is None:
            raise PolynomialParseError("expected a term", text, m.end())
        if star and (coef is None or var is None):
            raise PolynomialParseError("misplaced '*'", text, m.start("star"))
        value = int(coef) if coef is not None else 1
        if sign == "-":
            value = -value
        if var is None:
            exponent = 0
        else:
            exponent = int(m.group("exp")) if m.group("exp") else 1
        exponents[exponent] = exponents.get(exponent, 0) + value
        pos = m.end()
        first = False
    if first:
        raise PolynomialParseError("expected a term", text, pos)
    degree = max(exponents)
    return IntPoly(tuple(exponents.get(i, 0) for i in range(degree + 1)))


def format_polynomial(poly: IntPoly) -> str:
    """Canonical term form, highest degree first (e.g. ``2x^3-x+5``)."""
    if poly.is_zero:
        return "0"
    parts = []
    for exponent in range(poly.degree, -1, -1):
        c = poly.coeffs[exponent]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = "x" if exponent == 1 else f"x^{exponent}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        parts.append(sign + body)
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out
