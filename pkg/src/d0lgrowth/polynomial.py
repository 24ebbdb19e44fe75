"""Exact univariate polynomials over the rationals.

Besides plain arithmetic this module provides the forward difference
operator ``F(x+1) - F(x)``, the integer-valuedness test and the decision
procedure telling whether a polynomial takes positive integer values on
every natural number.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Union

Number = Union[int, Fraction]

DEFAULT_SEARCH_CAP = 10**6


class SearchCapExceeded(RuntimeError):
    """An exhaustive search ran past its safety cap.

    For well-formed input the searches provably terminate, so this means
    something is wrong, not that the input is rejected.
    """


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True, init=False)
class Polynomial:
    """Dense polynomial, coefficients in ascending degree order.

    Trailing zeros are stripped on construction, so ``==`` is equality of
    polynomials. The zero polynomial has an empty coefficient tuple.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Number] = ()):
        coeffs = [_as_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, value: Number) -> Polynomial:
        return cls((value,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        if not self.coefficients:
            return None
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coefficients:
            return Fraction(0)
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, n: Number) -> Fraction:
        return evaluate(self, n)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coefficients])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Number) -> Polynomial:
        factor = _as_fraction(factor)
        return Polynomial([c * factor for c in self.coefficients])

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return NotImplemented


def format_polynomial(F: Polynomial) -> str:
    """Render ``F`` in the same syntax the expression parser accepts."""
    if F.is_zero():
        return "0"
    parts = []
    for power in range(len(F.coefficients) - 1, -1, -1):
        c = F.coefficients[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            monomial = "x" if power == 1 else f"x^{power}"
            body = monomial if mag == 1 else f"{mag}*{monomial}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def evaluate(F: Polynomial, n: Number) -> Fraction:
    """Exact value of ``F`` at ``n`` (Horner's rule)."""
    n = _as_fraction(n)
    acc = Fraction(0)
    for c in reversed(F.coefficients):
        acc = acc * n + c
    return acc


def shift_argument(F: Polynomial, k: int) -> Polynomial:
    """Return ``G`` with ``G(x) = F(x + k)``."""
    x_plus_k = Polynomial((k, 1))
    result = Polynomial()
    for c in reversed(F.coefficients):
        result = result * x_plus_k + c
    return result


def difference(F: Polynomial) -> Polynomial:
    """Forward difference ``F(x + 1) - F(x)``."""
    return shift_argument(F, 1) - F


def iterated_difference(F: Polynomial, i: int) -> Polynomial:
    if i < 0:
        raise ValueError("i must be a natural number")
    for _ in range(i):
        if F.is_zero():
            break
        F = difference(F)
    return F


def iterated_difference_direct(F: Polynomial, i: int, n: int) -> Fraction:
    """Value of the ``i``-th forward difference at ``n`` from point values.

    Uses the alternating binomial sum over ``F(n), ..., F(n + i)`` and never
    builds the differenced polynomial.
    """
    if i < 0:
        raise ValueError("i must be a natural number")
    total = Fraction(0)
    for j in range(i + 1):
        term = comb(i, j) * evaluate(F, n + j)
        total += term if (i - j) % 2 == 0 else -term
    return total


def is_integer_valued(F: Polynomial) -> tuple[bool, Optional[int]]:
    """Check integrality on ``0..degree``, which decides it on all integers.

    Returns ``(True, None)`` or ``(False, n)`` with ``n`` the least point in
    ``0..degree`` where ``F(n)`` is not an integer. The zero polynomial counts
    as integer-valued.
    """
    if F.is_zero():
        return True, None
    for n in range(F.degree + 1):
        if evaluate(F, n).denominator != 1:
            return False, n
    return True, None


class Reason(enum.Enum):
    NON_INTEGER = "NonInteger"
    NON_POSITIVE = "NonPositive"
    ZERO_POLYNOMIAL = "ZeroPolynomial"


@dataclass(frozen=True)
class Member:
    """``F`` maps every natural number to a positive integer.

    ``shift_k`` is the least ``k`` with every difference ``∂^i F(k)``
    positive; ``difference_values_at_k`` lists those differences for
    ``i = 0..degree`` and ``prefix_values`` holds ``F(0), ..., F(k - 1)``.
    """

    shift_k: int
    difference_values_at_k: tuple[int, ...]
    prefix_values: tuple[int, ...]

    is_member = True


@dataclass(frozen=True)
class NotMember:
    witness_n: int
    reason: Reason

    is_member = False


MembershipVerdict = Union[Member, NotMember]


def difference_values(F: Polynomial, n: int = 0) -> list[Fraction]:
    """``[∂^0 F(n), ..., ∂^d F(n)]`` for ``d = degree(F)``; empty for zero."""
    if F.is_zero():
        return []
    return [iterated_difference_direct(F, i, n) for i in range(F.degree + 1)]


def _least_nonpositive(F: Polynomial, cap: int) -> int:
    for n in range(cap + 1):
        if evaluate(F, n) <= 0:
            return n
    raise SearchCapExceeded(f"no n <= {cap} with F(n) <= 0 for {F}")


def decide_membership(F: Polynomial, cap: int = DEFAULT_SEARCH_CAP) -> MembershipVerdict:
    """Decide whether ``F(n)`` is a positive integer for every ``n >= 0``."""
    if F.is_zero():
        return NotMember(0, Reason.ZERO_POLYNOMIAL)

    ok, witness = is_integer_valued(F)
    if not ok:
        return NotMember(witness, Reason.NON_INTEGER)

    if F.leading_coefficient < 0:
        return NotMember(_least_nonpositive(F, cap), Reason.NON_POSITIVE)

    # Row of the Newton forward-difference table at the current k; stepping
    # k -> k+1 is row[i] += row[i+1], all in integers.
    row = [int(v) for v in difference_values(F, 0)]
    prefix = []
    for k in range(cap + 1):
        if all(v > 0 for v in row):
            break
        prefix.append(row[0])
        for i in range(len(row) - 1):
            row[i] += row[i + 1]
    else:
        raise SearchCapExceeded(f"no shift k <= {cap} makes every difference of {F} positive")

    for n, value in enumerate(prefix):
        if value <= 0:
            return NotMember(n, Reason.NON_POSITIVE)
    return Member(k, tuple(row), tuple(prefix))
