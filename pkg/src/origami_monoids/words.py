"""Alphabets, words and the shortlex order.

A word is a tuple of generator ranks (small ints) relative to an
:class:`Alphabet`.  Rank tuples keep equality, hashing and set membership
cheap, which matters once enumeration reaches tens of thousands of
elements; :class:`Generator` objects and text tokens exist only at the
boundary.

Text syntax: whitespace-separated tokens ``a<i>``, ``b<i>``, ``h<i>``
(e.g. ``a1 b2 a3``).  The empty string and the token ``1`` both denote
the identity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

Word = tuple[int, ...]

ORIGAMI = "origami"
JONES = "jones"

_KINDS = {ORIGAMI: ("a", "b"), JONES: ("h",)}


class Generator(NamedTuple):
    """A single symbol: kind ``a``/``b`` (origami) or ``h`` (Jones), index >= 1."""

    kind: str
    index: int

    @property
    def token(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.token


class Alphabet:
    """The generator set of one monoid family at a fixed degree ``n``.

    Origami: a1..a(n-1), b1..b(n-1) in that rank order.
    Jones:   h1..h(n-1).

    The rank order doubles as the default shortlex precedence: all a's
    before all b's, indices ascending, which makes e.g. ``a1 a3 a5 b2 b4``
    the least member of its congruence class.
    """

    def __init__(self, family: str, n: int):
        if family not in _KINDS:
            raise ValueError(f"unknown family {family!r}")
        if n < 2:
            raise ValueError(f"alphabet needs n >= 2, got {n}")
        self.family = family
        self.n = n
        self.generators: tuple[Generator, ...] = tuple(
            Generator(kind, i) for kind in _KINDS[family] for i in range(1, n)
        )
        self._rank = {g: r for r, g in enumerate(self.generators)}
        self._by_token = {g.token: r for r, g in enumerate(self.generators)}

    @property
    def size(self) -> int:
        return len(self.generators)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Alphabet)
            and other.family == self.family
            and other.n == self.n
        )

    def __hash__(self) -> int:
        return hash((self.family, self.n))

    def __repr__(self) -> str:
        return f"Alphabet({self.family!r}, {self.n})"

    def rank(self, gen: Generator) -> int:
        try:
            return self._rank[gen]
        except KeyError:
            raise ValueError(f"{gen} is not in {self!r}") from None

    def generator(self, rank: int) -> Generator:
        return self.generators[rank]

    def word(self, gens: Iterable[Generator]) -> Word:
        return tuple(self.rank(g) for g in gens)

    def parse(self, text: str) -> Word:
        """Parse whitespace-separated tokens; '' and '1' denote the identity."""
        tokens = text.split()
        if tokens == ["1"]:
            return ()
        word = []
        for tok in tokens:
            rank = self._by_token.get(tok)
            if rank is None:
                raise ValueError(f"unknown generator {tok!r} for {self!r}")
            word.append(rank)
        return tuple(word)

    def format(self, word: Word) -> str:
        """Inverse of :meth:`parse`; the identity prints as ``1``."""
        if not word:
            return "1"
        return " ".join(self.generators[r].token for r in word)

    def validate(self, word: Word) -> Word:
        for r in word:
            if not 0 <= r < self.size:
                raise ValueError(f"symbol rank {r} outside {self!r}")
        return word

    def bar_rank(self, rank: int) -> int:
        if self.family != ORIGAMI:
            raise ValueError("bar is defined only on origami alphabets")
        m = self.n - 1
        return rank + m if rank < m else rank - m


def bar(alphabet: Alphabet, word: Word) -> Word:
    """Swap a_i <-> b_i in every position (the letter-swap involution)."""
    return tuple(alphabet.bar_rank(r) for r in word)


def is_factor(u: Word, v: Word) -> bool:
    """True iff v = x u y for some (possibly empty) x, y."""
    lu = len(u)
    if lu == 0:
        return True
    return any(v[p : p + lu] == u for p in range(len(v) - lu + 1))


@dataclass(frozen=True)
class ShortlexOrder:
    """Shortlex: length first, then lexicographic by generator precedence.

    ``ranking`` maps alphabet rank -> precedence; ``None`` means alphabet
    order.  Shortlex is total, well-founded, and compatible with
    concatenation on both sides, so it orients rewriting rules into a
    terminating system.
    """

    ranking: tuple[int, ...] | None = None

    def key(self, word: Word):
        if self.ranking is None:
            return (len(word), word)
        rk = self.ranking
        return (len(word), tuple(rk[r] for r in word))

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)

    def compare(self, u: Word, v: Word) -> int:
        """-1, 0 or 1 as u <, =, > v."""
        ku, kv = self.key(u), self.key(v)
        return -1 if ku < kv else (0 if ku == kv else 1)

    def max(self, u: Word, v: Word) -> Word:
        return v if self.less(u, v) else u

    def min(self, u: Word, v: Word) -> Word:
        return u if self.less(u, v) else v
