"""Braid words and the permutation combinatorics of their closures.

A braid on n strands is recorded as a sequence of nonzero integers: the
letter q (1 <= q <= n-1) is the positive generator in which strand q
crosses over strand q+1, and -q is its inverse. Words are read and
composed from the left.

The encoder expects its input rewritten with a descending-transposition
prefix: every braid B on n strands equals T * W in the braid group, where
T = (n-1, n-2, ..., 2, 1) and W = T^-1 * B. :func:`to_tw_form` produces W;
prepending T recovers a word equivalent to B.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import BraidError

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class BraidWord:
    """A braid word: strand count plus signed generator letters."""

    strands: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not isinstance(self.strands, int) or self.strands < 1:
            raise BraidError(f"strand count must be a positive integer, got {self.strands!r}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for k, q in enumerate(self.letters):
            if q == 0:
                raise BraidError(f"letter {k + 1}: generator index 0 is not allowed")
            if abs(q) > self.strands - 1:
                raise BraidError(
                    f"letter {k + 1}: generator {q} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def positive_count(self) -> int:
        """Number of positive letters."""
        return sum(1 for q in self.letters if q > 0)

    def as_dict(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    def __str__(self) -> str:
        return " ".join(str(q) for q in self.letters)


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated signed integers into a braid word.

    ``k`` means the positive generator on strands (k, k+1) and ``-k`` its
    inverse. When ``strands`` is omitted it is inferred as 1 + max |entry|
    (1 for the empty word). Entries of 0, non-integer tokens, and entries
    with |entry| >= strands are rejected.
    """
    letters = []
    for match in _TOKEN.finditer(text):
        token = match.group()
        try:
            value = int(token)
        except ValueError:
            raise BraidError(
                f"column {match.start() + 1}: {token!r} is not a signed integer"
            ) from None
        if value == 0:
            raise BraidError(f"column {match.start() + 1}: generator index 0 is not allowed")
        if strands is not None and abs(value) >= strands:
            raise BraidError(
                f"column {match.start() + 1}: generator {value} out of range "
                f"for {strands} strands"
            )
        letters.append(value)
    if strands is None:
        strands = 1 + max((abs(q) for q in letters), default=0)
    return BraidWord(strands, tuple(letters))


def free_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs until none remains.

    Stack-based reduction; the result is the unique freely reduced word.
    """
    stack: list[int] = []
    for q in letters:
        if stack and stack[-1] == -q:
            stack.pop()
        else:
            stack.append(q)
    return tuple(stack)


def tw_prefix(strands: int) -> tuple[int, ...]:
    """The word T = (n-1, n-2, ..., 1) whose closure is the unknot."""
    return tuple(range(strands - 1, 0, -1))


def to_tw_form(braid: BraidWord, reduce: bool = False) -> BraidWord:
    """Return W with T * W equal to the input braid.

    W is the concatenation (-1, -2, ..., -(n-1)) + letters; with ``reduce``
    the result is freely reduced, which changes its length and positive
    count but not the closure.
    """
    prefix = tuple(-q for q in reversed(tw_prefix(braid.strands)))
    letters = prefix + braid.letters
    if reduce:
        letters = free_reduce(letters)
    return BraidWord(braid.strands, letters)


def closure_permutation(braid: BraidWord) -> tuple[int, ...]:
    """Strand permutation induced by the braid, as images of 1..n.

    Entry i-1 is the right-end position of the strand entering at left
    position i; composition is in word order, so the permutation of a
    concatenation is the composition of the permutations.
    """
    n = braid.strands
    # final[i] = current position (0-based) of the strand that entered at i
    final = list(range(n))
    position_of = list(range(n))  # inverse map: position -> entering strand
    for q in braid.letters:
        a = abs(q) - 1
        sa, sb = position_of[a], position_of[a + 1]
        position_of[a], position_of[a + 1] = sb, sa
        final[sa], final[sb] = final[sb], final[sa]
    return tuple(final[i] + 1 for i in range(n))


def closure_component_count(braid: BraidWord) -> int:
    """Number of link components of the braid closure (permutation cycles)."""
    perm = closure_permutation(braid)
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i] - 1
    return cycles
