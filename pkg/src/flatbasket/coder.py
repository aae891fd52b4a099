"""The braid-to-basket encoder.

Given a word W on n strands (normally produced by ``braid.to_tw_form``),
the encoder proceeds in two steps:

1. Label the letters of W by their rank in the lexicographic order of the
   pairs (generator index, position). Interleave, strand by strand, the
   subwords of letters touching each strand into a double-occurrence word:
   strand 1 keeps only generator 1, strand n only generator n-1, and
   strand i in between keeps generators i-1 and i.
2. For the i-th positive letter (by position), replace the second
   occurrence of its label x in the unmodified intermediate word by the
   five-letter block (m+2i, m+2i-1, x, m+2i, m+2i-1), where m = len(W).

The result is a flat basket code with m + 2s bands, s the number of
positive letters, whose decoded boundary is the closure of T * W.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basket import FlatBasketCode
from .braid import BraidWord, to_tw_form


@dataclass(frozen=True)
class LetterLabeling:
    """Bijective labels for the letters of a word.

    ``double_indices[i]`` is (generator index, 1-based position) of letter
    i; ``labels[i]`` its 1-based rank among all such pairs.
    """

    labels: tuple[int, ...]
    double_indices: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class IntermediateCode:
    """Double-occurrence word over {1..m} before positive-letter expansion."""

    word: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.word)


def letter_labels(w: BraidWord) -> LetterLabeling:
    """Rank the letters of ``w`` lexicographically by (generator, position)."""
    indices = tuple((abs(q), i + 1) for i, q in enumerate(w.letters))
    order = sorted(range(len(indices)), key=lambda i: indices[i])
    labels = [0] * len(indices)
    for rank, i in enumerate(order, start=1):
        labels[i] = rank
    return LetterLabeling(labels=tuple(labels), double_indices=indices)


def intermediate_code(w: BraidWord, labeling: LetterLabeling) -> IntermediateCode:
    """Concatenate the per-strand subwords of ``w``, letters as labels.

    Each letter of ``w`` touches exactly two strands, so every label
    appears exactly twice and the result has length 2 * len(w).
    """
    n = w.strands
    word: list[int] = []
    for strand in range(1, n + 1):
        if n == 1:
            allowed: set[int] = set()
        elif strand == 1:
            allowed = {1}
        elif strand == n:
            allowed = {n - 1}
        else:
            allowed = {strand - 1, strand}
        for i, q in enumerate(w.letters):
            if abs(q) in allowed:
                word.append(labeling.labels[i])
    return IntermediateCode(tuple(word))


def expand_positive(
    c1: IntermediateCode, w: BraidWord, labeling: LetterLabeling
) -> FlatBasketCode:
    """Expand each positive letter of ``w`` into three bands.

    Second occurrences are marked on the unmodified intermediate word
    before any replacement, so earlier splices cannot shift which
    occurrence counts as second; the splice order is then immaterial.
    """
    m = len(w.letters)
    positions = [i for i, q in enumerate(w.letters) if q > 0]
    replacements: dict[int, tuple[int, ...]] = {}
    for rank, i in enumerate(positions, start=1):
        label = labeling.labels[i]
        second = [k for k, x in enumerate(c1.word) if x == label][1]
        hi, lo = m + 2 * rank, m + 2 * rank - 1
        replacements[second] = (hi, lo, label, hi, lo)
    out: list[int] = []
    for k, x in enumerate(c1.word):
        if k in replacements:
            out.extend(replacements[k])
        else:
            out.append(x)
    return FlatBasketCode(tuple(out))


def encode_word(w: BraidWord) -> FlatBasketCode:
    """Run the labeling / interleaving / expansion pipeline on W itself."""
    labeling = letter_labels(w)
    c1 = intermediate_code(w, labeling)
    return expand_positive(c1, w, labeling)


def encode(braid: BraidWord, reduce: bool = False) -> FlatBasketCode:
    """Flat basket code of the braid closure.

    The input braid B is rewritten as T * W and the pipeline is applied to
    W; the resulting code has len(W) + 2 * (positive letters of W) bands.
    An empty W yields the empty code (unknotted boundary, zero bands).
    """
    return encode_word(to_tw_form(braid, reduce=reduce))
