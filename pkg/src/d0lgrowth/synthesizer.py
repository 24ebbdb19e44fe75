"""Build a D0L-system whose growth function is a given polynomial.

Three stages:

* constant ``c``: one letter mapped to itself, axiom of ``c`` copies;
* all forward differences at 0 positive: nest one integration gadget
  ``a_i -> a_i x_{i-1}`` per degree, letters ``a0 .. ad``;
* otherwise find the least shift ``k`` making the differences positive,
  build the previous case for ``F(x + k)`` and prepend a delay chain
  ``b1 .. bk`` padded with the erasing letter ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .d0l import D0LSystem, Word
from .polynomial import (
    DEFAULT_SEARCH_CAP,
    Member,
    MembershipVerdict,
    Polynomial,
    decide_membership,
    difference_values,
    shift_argument,
)

ERASER = "e"


class InvalidConstant(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class NotInF(ValueError):
    """The polynomial does not map every natural number to a positive integer."""

    def __init__(self, polynomial: Polynomial, verdict: MembershipVerdict):
        super().__init__(
            f"{polynomial} is rejected: {verdict.reason.value} at n = {verdict.witness_n}"
        )
        self.polynomial = polynomial
        self.verdict = verdict


def core_letter(i: int) -> str:
    return f"a{i}"


def chain_letter(i: int) -> str:
    return f"b{i}"


@dataclass(frozen=True)
class SynthesisReport:
    input: Polynomial
    degree: int
    shift_k: int
    difference_values: tuple[int, ...]
    system: D0LSystem
    level_axioms: tuple[Word, ...]
    prefix_values: tuple[int, ...]


def synthesize_constant(c: int) -> D0LSystem:
    if not isinstance(c, int) or c < 1:
        raise InvalidConstant(f"constant growth needs a positive integer, got {c!r}")
    a0 = core_letter(0)
    return D0LSystem.from_names([a0], {a0: [a0]}, [a0] * c)


def _restricted_names(f: list[int]) -> tuple[list[str], dict, list[list[str]]]:
    d = len(f) - 1
    names = [core_letter(i) for i in range(d + 1)]
    levels = [[names[0]] * (f[d - i] - 1) + [names[i]] for i in range(d + 1)]
    rules = {names[0]: [names[0]]}
    for i in range(1, d + 1):
        rules[names[i]] = [names[i]] + levels[i - 1]
    return names, rules, levels


def _positive_differences(G: Polynomial) -> list[int]:
    values = difference_values(G, 0)
    if not values:
        raise PreconditionViolated("the zero polynomial has no synthesis")
    for i, v in enumerate(values):
        if v.denominator != 1 or v < 1:
            raise PreconditionViolated(
                f"difference {i} of {G} at 0 is {v}; every one must be a positive integer"
            )
    return [int(v) for v in values]


def synthesize_restricted(G: Polynomial) -> tuple[D0LSystem, tuple[Word, ...]]:
    """System for ``G`` when every ``∂^i G(0)`` is a positive integer.

    Returns the system (axiom ``x_d``) and the level words ``x_0 .. x_d``;
    the length of ``sigma^n(x_{d-i})`` is ``∂^i G(n)``.
    """
    f = _positive_differences(G)
    names, rules, levels = _restricted_names(f)
    system = D0LSystem.from_names(names, rules, levels[-1])
    return system, tuple(system.word(level) for level in levels)


def compute_shift(F: Polynomial, cap: int = DEFAULT_SEARCH_CAP) -> int:
    """Least ``k`` with every ``∂^i F(k)`` positive; ``F`` must be a member."""
    verdict = decide_membership(F, cap)
    if not isinstance(verdict, Member):
        raise NotInF(F, verdict)
    return verdict.shift_k


def synthesize_general(F: Polynomial, cap: int = DEFAULT_SEARCH_CAP) -> SynthesisReport:
    verdict = decide_membership(F, cap)
    if not isinstance(verdict, Member):
        raise NotInF(F, verdict)
    k = verdict.shift_k
    G = shift_argument(F, k)
    f = list(verdict.difference_values_at_k)

    if G.degree == 0:
        core = synthesize_constant(f[0])
        names = list(core.names)
        rules = {name: list(core.rule(name)) for name in names}
        levels = [list(core.spell(core.axiom))]
    else:
        names, rules, levels = _restricted_names(f)

    axiom = levels[-1]
    if k >= 1:
        prefix = verdict.prefix_values
        chain = [chain_letter(i) for i in range(1, k + 1)]
        gadget_rules = {ERASER: []}
        for i in range(1, k):
            gadget_rules[chain[i - 1]] = [ERASER] * (prefix[i] - 1) + [chain[i]]
        gadget_rules[chain[k - 1]] = axiom
        names = [ERASER, *chain, *names]
        rules = {**gadget_rules, **rules}
        axiom = [ERASER] * (prefix[0] - 1) + [chain[0]]

    system = D0LSystem.from_names(names, rules, axiom)
    return SynthesisReport(
        input=F,
        degree=F.degree,
        shift_k=k,
        difference_values=tuple(f),
        system=system,
        level_axioms=tuple(system.word(level) for level in levels),
        prefix_values=verdict.prefix_values,
    )
