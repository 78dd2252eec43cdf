"""Enumerated finite monoids with right and left Cayley graphs.

The element set is an indexed list of canonical words (index 0 is the
identity, words sorted shortlex), and ``right_cayley[x][g]`` /
``left_cayley[x][g]`` give the index of x*g / g*x.  All products are
recovered by folding the right Cayley graph, so a :class:`FiniteMonoid`
is self-contained: no rewriting system or diagram calculus is needed
once it has been built.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .words import Alphabet, Word

FORMAT_VERSION = 1


@dataclass
class FiniteMonoid:
    alphabet: Alphabet
    elements: tuple[Word, ...]
    right_cayley: tuple[tuple[int, ...], ...]
    left_cayley: tuple[tuple[int, ...], ...]
    complete: bool = True
    _index: dict[Word, int] = field(default=None, repr=False, compare=False)

    identity = 0

    def __post_init__(self):
        if not self.elements or self.elements[0] != ():
            raise ValueError("elements[0] must be the empty word (identity)")
        if self._index is None:
            self._index = {w: i for i, w in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, word: Word) -> int:
        """Index of a canonical word; KeyError if not an element."""
        return self._index[word]

    def word(self, i: int) -> Word:
        return self.elements[i]

    def eval_word(self, word: Word, start: int = 0) -> int:
        """Index of start * (product of the word's generators).

        Valid for arbitrary words over the alphabet, not only canonical
        ones, since every right Cayley edge is an exact product.
        """
        x = start
        right = self.right_cayley
        for g in word:
            x = right[x][g]
            if x < 0:
                raise ValueError("edge missing: monoid is partial")
        return x

    def mult(self, i: int, j: int) -> int:
        return self.eval_word(self.elements[j], start=i)

    def generator_element(self, g: int) -> int:
        return self.right_cayley[self.identity][g]

    def is_idempotent(self, i: int) -> bool:
        return self.mult(i, i) == i

    def idempotents(self) -> list[int]:
        return [i for i in range(len(self.elements)) if self.is_idempotent(i)]

    def to_json_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "family": self.alphabet.family,
            "n": self.alphabet.n,
            "complete": self.complete,
            "elements": [self.alphabet.format(w) for w in self.elements],
            "right_cayley": [list(row) for row in self.right_cayley],
            "left_cayley": [list(row) for row in self.left_cayley],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteMonoid":
        if data.get("format_version") != FORMAT_VERSION:
            raise ValueError(f"unsupported format_version {data.get('format_version')!r}")
        alphabet = Alphabet(data["family"], data["n"])
        elements = tuple(alphabet.parse(t) for t in data["elements"])
        return cls(
            alphabet=alphabet,
            elements=elements,
            right_cayley=tuple(tuple(row) for row in data["right_cayley"]),
            left_cayley=tuple(tuple(row) for row in data["left_cayley"]),
            complete=data["complete"],
        )
