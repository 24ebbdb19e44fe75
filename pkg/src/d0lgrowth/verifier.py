"""Check a D0L-system's growth against a polynomial, and the two length
computations against each other.

Scans are ascending in ``n`` and stop at the first mismatch, so a failure
always reports the least failing ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .d0l import DEFAULT_EXPANSION_CAP, D0LSystem, ExpansionTooLarge, iterate_words, parikh_vectors
from .polynomial import Polynomial, evaluate


class Method(enum.Enum):
    EXPAND = "expand"
    MATRIX = "matrix"
    BOTH = "both"


@dataclass(frozen=True)
class Failure:
    n: int
    expected: Union[int, Fraction]
    actual: int


@dataclass(frozen=True)
class VerificationOutcome:
    checked_range: tuple[int, int]
    method: Method
    failure: Optional[Failure] = None
    skipped: tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return self.failure is None

    def __str__(self) -> str:
        lo, hi = self.checked_range
        if self.passed:
            text = f"Pass for n in [{lo}, {hi}] ({self.method.value})"
            if self.skipped:
                text += f", skipped n = {list(self.skipped)} (expansion cap)"
            return text
        f = self.failure
        return f"Fail at n = {f.n}: expected {f.expected}, actual {f.actual} ({self.method.value})"


def _plain(value: Fraction) -> Union[int, Fraction]:
    return int(value) if value.denominator == 1 else value


def _expanded_lengths(S: D0LSystem, n_max: int, cap: int):
    words = iterate_words(S, cap)
    for _ in range(n_max + 1):
        yield len(next(words))


def _matrix_lengths(S: D0LSystem, n_max: int):
    vectors = parikh_vectors(S)
    for _ in range(n_max + 1):
        yield sum(next(vectors))


def verify_growth(
    S: D0LSystem,
    F: Polynomial,
    n_max: int,
    method: Method = Method.MATRIX,
    cap: int = DEFAULT_EXPANSION_CAP,
) -> VerificationOutcome:
    """Compare ``|sigma^n(axiom)|`` with ``F(n)`` for ``n`` in ``0..n_max``.

    With ``Method.EXPAND`` or ``Method.BOTH`` an ExpansionTooLarge from the
    rewriting is propagated rather than reported as a failure. ``BOTH`` also
    fails where the two length computations disagree.
    """
    method = Method(method)
    matrix = _matrix_lengths(S, n_max) if method is not Method.EXPAND else None
    expanded = _expanded_lengths(S, n_max, cap) if method is not Method.MATRIX else None
    for n in range(n_max + 1):
        expected = evaluate(F, n)
        m = next(matrix) if matrix is not None else None
        e = next(expanded) if expanded is not None else None
        if m is not None and m != expected:
            return VerificationOutcome((0, n_max), method, Failure(n, _plain(expected), m))
        if e is not None and e != expected:
            return VerificationOutcome((0, n_max), method, Failure(n, _plain(expected), e))
    return VerificationOutcome((0, n_max), method)


def cross_check(
    S: D0LSystem, n_max: int, cap: int = DEFAULT_EXPANSION_CAP
) -> VerificationOutcome:
    """Expansion lengths against matrix lengths on ``0..n_max``.

    Once rewriting exceeds ``cap`` the remaining ``n`` are skipped and listed
    in the outcome. In a failure, ``expected`` is the matrix length.
    """
    expanded = _expanded_lengths(S, n_max, cap)
    matrix = _matrix_lengths(S, n_max)
    for n in range(n_max + 1):
        m = next(matrix)
        try:
            e = next(expanded)
        except ExpansionTooLarge:
            return VerificationOutcome((0, n_max), Method.BOTH, skipped=tuple(range(n, n_max + 1)))
        if e != m:
            return VerificationOutcome((0, n_max), Method.BOTH, Failure(n, m, e))
    return VerificationOutcome((0, n_max), Method.BOTH)
