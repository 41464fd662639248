"""Braid words and the combinatorial data of their closures.

A braid on m strands is stored as an ordered sequence of crossings
(generator index i in [1, m-1], sign +-1). Closure-related quantities
(closure permutation, knot test, writhe) treat the word as given; no
rewriting with the braid group relations is performed.
"""
from __future__ import annotations

from dataclasses import dataclass


class NotAKnotError(ValueError):
    """The braid closure has more than one component."""


@dataclass(frozen=True)
class BraidWord:
    crossings: tuple[tuple[int, int], ...]
    strands: int

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        for i, (idx, sign) in enumerate(self.crossings):
            if not 1 <= idx <= self.strands - 1:
                raise ValueError(
                    f"crossing {i + 1}: generator index {idx} out of range for {self.strands} strands"
                )
            if sign not in (1, -1):
                raise ValueError(f"crossing {i + 1}: sign must be +1 or -1, got {sign}")

    @property
    def k(self) -> int:
        """Number of crossings."""
        return len(self.crossings)

    def signs(self) -> tuple[int, ...]:
        return tuple(sign for _, sign in self.crossings)

    def writhe(self) -> int:
        """Sum of crossing signs."""
        return sum(sign for _, sign in self.crossings)

    def mirror(self) -> "BraidWord":
        """Flip the sign of every crossing (diagrammatic mirror image)."""
        return BraidWord(tuple((i, -s) for i, s in self.crossings), self.strands)

    def closure_permutation(self) -> tuple[int, ...]:
        """Permutation of {1..m} induced by the closure, as (image of 1, ..., image of m)."""
        f = list(range(1, self.strands + 1))
        for i, _ in self.crossings:
            f[i - 1], f[i] = f[i], f[i - 1]
        return tuple(f)

    def is_knot_closure(self) -> bool:
        """True iff the closure is a knot, i.e. the closure permutation is a single m-cycle."""
        perm = self.closure_permutation()
        seen = 1
        at = perm[0]
        while at != 1:
            at = perm[at - 1]
            seen += 1
        return seen == self.strands

    def text(self) -> str:
        """The signed-index word, e.g. '-1 2 -1 2'."""
        return " ".join(str(i * s) for i, s in self.crossings)

    def __str__(self) -> str:
        return f"{self.text() or '(trivial)'} on {self.strands} strands"


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse a braid word given as signed generator indices.

    Tokens are separated by whitespace and/or commas; the absolute value is
    the generator index and the sign is the crossing sign. The strand count
    defaults to (max index) + 1 and may only be overridden upward.
    """
    tokens = text.replace(",", " ").split()
    crossings = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ValueError(f"bad braid token {tok!r}: expected a nonzero signed integer") from None
        if v == 0:
            raise ValueError("bad braid token '0': generator indices start at 1")
        crossings.append((abs(v), 1 if v > 0 else -1))
    needed = max((i for i, _ in crossings), default=0) + 1
    if strands is None:
        m = needed if crossings else 1
    else:
        if crossings and strands < needed:
            raise ValueError(f"braid word needs at least {needed} strands, got override {strands}")
        m = strands
    return BraidWord(tuple(crossings), m)
