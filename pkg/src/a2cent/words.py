"""Freely reduced words in the generators and their inverses.

Words are witnesses only: no relator rewriting is ever applied, so two words
representing the same group element need not compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FormalWord:
    """A freely reduced word; letters are (generator index, exponent in {+1,-1})."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for gen, exp in self.letters:
            if exp not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {exp}")
        for (g1, e1), (g2, e2) in zip(self.letters, self.letters[1:]):
            if g1 == g2 and e1 == -e2:
                raise ValueError("word is not freely reduced")

    @staticmethod
    def identity() -> "FormalWord":
        return FormalWord()

    @staticmethod
    def from_indices(indices) -> "FormalWord":
        """Positive word x_{i0} x_{i1} ... (no reduction needed)."""
        return FormalWord(tuple((i, 1) for i in indices))

    @staticmethod
    def generator(i: int, exp: int = 1) -> "FormalWord":
        return FormalWord(((i, exp),))

    def __mul__(self, other: "FormalWord") -> "FormalWord":
        out = list(self.letters)
        for letter in other.letters:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
        return FormalWord(tuple(out))

    def inverse(self) -> "FormalWord":
        return FormalWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def conjugate_by(self, c: "FormalWord") -> "FormalWord":
        """c * self * c^-1."""
        return c * self * c.inverse()

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for g, e in self.letters:
            parts.append(f"x{g}" if e == 1 else f"x{g}^-1")
        return " ".join(parts)

    def to_json(self):
        return [[g, e] for g, e in self.letters]
