"""Words in the standard generators, stored as freely reduced syllables."""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass

from artin.errors import MalformedInput

_TOKEN = re.compile(r"^([^\s^()]+)(?:\^(-?\d+))?$")


def _reduce(syllables: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    out: list[tuple[str, int]] = []
    for x, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == x:
            e += out.pop()[1]
            if e == 0:
                continue
        out.append((x, e))
    return tuple(out)


@dataclass(frozen=True)
class GeneratorWord:
    """A group word such as ``a^-2 w a w a w``.

    Syllables are ``(letter, exponent)`` pairs with nonzero exponents and
    distinct neighbours; construction freely reduces the input.
    """

    syllables: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", _reduce(self.syllables))

    @classmethod
    def of(cls, *parts: str | tuple[str, int] | GeneratorWord) -> GeneratorWord:
        """Build from letters, ``(letter, exp)`` pairs and other words."""
        syl: list[tuple[str, int]] = []
        for p in parts:
            if isinstance(p, GeneratorWord):
                syl.extend(p.syllables)
            elif isinstance(p, str):
                syl.append((p, 1))
            else:
                syl.append(p)
        return cls(tuple(syl))

    @classmethod
    def parse(cls, text: str) -> GeneratorWord:
        """Parse whitespace-separated tokens ``x`` or ``x^e``; ``1`` is the identity."""
        syl = []
        for tok in text.split():
            if tok == "1":
                continue
            m = _TOKEN.match(tok)
            if m is None:
                raise MalformedInput(f"bad word token {tok!r}")
            syl.append((m.group(1), int(m.group(2) or 1)))
        return cls(tuple(syl))

    def __mul__(self, other: GeneratorWord) -> GeneratorWord:
        return GeneratorWord(self.syllables + other.syllables)

    def __pow__(self, n: int) -> GeneratorWord:
        if n < 0:
            return self.inverse() ** (-n)
        return GeneratorWord(self.syllables * n)

    def inverse(self) -> GeneratorWord:
        return GeneratorWord(tuple((x, -e) for x, e in reversed(self.syllables)))

    def conjugate(self, by: GeneratorWord) -> GeneratorWord:
        """``self^by = by^-1 self by``."""
        return by.inverse() * self * by

    def letters(self) -> tuple[tuple[str, int], ...]:
        """Expanded form: one ``(letter, ±1)`` per letter."""
        sign = lambda e: 1 if e > 0 else -1  # noqa: E731
        return tuple((x, sign(e)) for x, e in self.syllables for _ in range(abs(e)))

    def support(self) -> set[str]:
        return {x for x, _ in self.syllables}

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for x, e in self.syllables:
            if e > 0:
                parts.extend([x] * e)
            elif e == -1:
                parts.append(f"{x}^-1")
            else:
                parts.append(f"{x}^{e}")
        return " ".join(parts)

    def to_json(self) -> list[list]:
        return [[x, e] for x, e in self.syllables]


def alternating(u: str, v: str, m: int) -> GeneratorWord:
    """The alternating word ``u v u ...`` with ``m`` letters."""
    return GeneratorWord.of(*((u, v)[i % 2] for i in range(m)))
