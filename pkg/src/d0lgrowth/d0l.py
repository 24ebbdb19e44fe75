"""D0L-systems: alphabet, morphism, axiom, and their growth.

Words are tuples of letter ids (indices into the alphabet). Lengths are
computed either by rewriting the word itself or by pushing the Parikh vector
through the incidence matrix; the second never builds the word.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Iterator, Mapping, Sequence

Word = tuple[int, ...]

DEFAULT_EXPANSION_CAP = 10**6


class InvalidSystem(ValueError):
    pass


class UnknownLetter(ValueError):
    pass


class ExpansionTooLarge(RuntimeError):
    """Rewriting would produce a word longer than the allowed cap."""

    def __init__(self, n: int, length: int, cap: int):
        super().__init__(f"sigma^{n}(axiom) has length {length} > cap {cap}")
        self.n = n
        self.length = length
        self.cap = cap


@dataclass(frozen=True)
class Letter:
    id: int
    name: str


@dataclass(frozen=True)
class D0LSystem:
    """Triple (alphabet, morphism, axiom).

    ``rules[a]`` is the image of the letter with id ``a``. The alphabet order
    is the construction order and fixes the letter ids.
    """

    alphabet: tuple[Letter, ...]
    rules: tuple[Word, ...]
    axiom: Word

    def __post_init__(self):
        names = [letter.name for letter in self.alphabet]
        if any(not name for name in names):
            raise InvalidSystem("letter names must be non-empty")
        if len(set(names)) != len(names):
            raise InvalidSystem(f"duplicate letter names in {names}")
        for i, letter in enumerate(self.alphabet):
            if letter.id != i:
                raise InvalidSystem(f"letter {letter.name!r} has id {letter.id}, expected {i}")
        if len(self.rules) != len(self.alphabet):
            raise InvalidSystem("every letter needs exactly one rule")
        size = len(self.alphabet)
        for word in (*self.rules, self.axiom):
            for a in word:
                if not 0 <= a < size:
                    raise InvalidSystem(f"letter id {a} outside alphabet of size {size}")

    @classmethod
    def from_names(
        cls,
        names: Sequence[str],
        rules: Mapping[str, Sequence[str]],
        axiom: Sequence[str],
    ) -> D0LSystem:
        """Build a system from letter names; words are sequences of names."""
        alphabet = tuple(Letter(i, name) for i, name in enumerate(names))
        index = {letter.name: letter.id for letter in alphabet}
        missing = [name for name in names if name not in rules]
        if missing:
            raise InvalidSystem(f"no rule for letters {missing}")
        extra = [name for name in rules if name not in index]
        if extra:
            raise UnknownLetter(f"rules given for unknown letters {extra}")

        def encode(word):
            try:
                return tuple(index[name] for name in word)
            except KeyError as exc:
                raise UnknownLetter(f"unknown letter {exc.args[0]!r}") from None

        return cls(alphabet, tuple(encode(rules[name]) for name in names), encode(axiom))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(letter.name for letter in self.alphabet)

    def word(self, names: Iterable[str]) -> Word:
        index = {letter.name: letter.id for letter in self.alphabet}
        try:
            return tuple(index[name] for name in names)
        except KeyError as exc:
            raise UnknownLetter(f"unknown letter {exc.args[0]!r}") from None

    def spell(self, word: Word) -> tuple[str, ...]:
        return tuple(self.alphabet[a].name for a in word)

    def rule(self, name: str) -> tuple[str, ...]:
        return self.spell(self.rules[self.word([name])[0]])

    def with_axiom(self, axiom: Word) -> D0LSystem:
        return D0LSystem(self.alphabet, self.rules, tuple(axiom))


def _check_word(S: D0LSystem, w: Word) -> None:
    size = len(S.alphabet)
    for a in w:
        if not isinstance(a, int) or not 0 <= a < size:
            raise UnknownLetter(f"letter id {a!r} is not in the alphabet")


def apply_morphism(S: D0LSystem, w: Word) -> Word:
    _check_word(S, w)
    return tuple(chain.from_iterable(map(S.rules.__getitem__, w)))


def iterate_words(S: D0LSystem, cap: int = DEFAULT_EXPANSION_CAP) -> Iterator[Word]:
    """Yield axiom, sigma(axiom), sigma^2(axiom), ... while within ``cap``.

    Raises ExpansionTooLarge before building the first word longer than
    ``cap``.
    """
    lengths = [len(r) for r in S.rules]
    w = S.axiom
    n = 0
    if len(w) > cap:
        raise ExpansionTooLarge(0, len(w), cap)
    while True:
        yield w
        n += 1
        size = sum(map(lengths.__getitem__, w))
        if size > cap:
            raise ExpansionTooLarge(n, size, cap)
        w = tuple(chain.from_iterable(map(S.rules.__getitem__, w)))


def expand(S: D0LSystem, n: int, cap: int = DEFAULT_EXPANSION_CAP) -> Word:
    """sigma^n(axiom) by ``n`` successive rewrites."""
    if n < 0:
        raise ValueError("n must be a natural number")
    for i, w in enumerate(iterate_words(S, cap)):
        if i == n:
            return w
    raise AssertionError("unreachable")


def incidence_matrix(S: D0LSystem) -> list[list[int]]:
    """``M[a][b]`` = number of occurrences of letter ``b`` in ``sigma(a)``."""
    size = len(S.alphabet)
    matrix = [[0] * size for _ in range(size)]
    for a, image in enumerate(S.rules):
        for b in image:
            matrix[a][b] += 1
    return matrix


def parikh_vector(S: D0LSystem, w: Word) -> list[int]:
    _check_word(S, w)
    vec = [0] * len(S.alphabet)
    for a in w:
        vec[a] += 1
    return vec


def _sparse_rows(S: D0LSystem) -> list[list[tuple[int, int]]]:
    return [sorted(Counter(image).items()) for image in S.rules]


def _step(rows, vec: list[int]) -> list[int]:
    out = [0] * len(vec)
    for a, count in enumerate(vec):
        if count:
            for b, mult in rows[a]:
                out[b] += count * mult
    return out


def parikh_vectors(S: D0LSystem) -> Iterator[list[int]]:
    """Parikh vectors of sigma^n(axiom) for n = 0, 1, 2, ..."""
    rows = _sparse_rows(S)
    vec = parikh_vector(S, S.axiom)
    while True:
        yield vec
        vec = _step(rows, vec)


def growth_length(S: D0LSystem, n: int) -> int:
    """Length of sigma^n(axiom) via ``n`` vector-matrix products."""
    if n < 0:
        raise ValueError("n must be a natural number")
    for i, vec in enumerate(parikh_vectors(S)):
        if i == n:
            return sum(vec)
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class GrowthTable:
    entries: tuple[tuple[int, int], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(length for _, length in self.entries)


def growth_table(S: D0LSystem, n_max: int) -> GrowthTable:
    entries = []
    for n, vec in enumerate(parikh_vectors(S)):
        if n > n_max:
            break
        entries.append((n, sum(vec)))
    return GrowthTable(tuple(entries))


def advance_axiom(S: D0LSystem) -> D0LSystem:
    """Same morphism, axiom replaced by its image: growth shifts by one step."""
    return S.with_axiom(apply_morphism(S, S.axiom))
