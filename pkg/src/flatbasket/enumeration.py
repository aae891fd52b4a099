"""Exhaustive enumeration and classification of flat basket codes.

Codes are generated in lenient-normal form (first occurrences appear in
increasing label order), which picks one representative per relabeling of
a double-occurrence word; there are (2n-1)!! of them for n bands. The
disk picture is further symmetric under rotating the starting point and
reversing the reading direction, so canonical representatives minimize
over the dihedral orbit (every rotation and reflection of the cyclic
word, each renumbered to lenient-normal form).

Classification fingerprints every canonical class; searches scan codes in
(length, lexicographic) order and report the first fingerprint match,
which is evidence of link equality, not a proof.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .basket import FlatBasketCode, lenient_relabel
from .errors import BudgetError
from .invariants import Fingerprint, fingerprint

DEFAULT_CLASSIFY_BUDGET = 6
DEFAULT_STREAM_BUDGET = 8


def compare_codes(c1: FlatBasketCode, c2: FlatBasketCode) -> int:
    """Order codes by length, then lexicographically; -1, 0, or +1."""
    k1, k2 = code_key(c1), code_key(c2)
    return (k1 > k2) - (k1 < k2)


def code_key(code: FlatBasketCode) -> tuple[int, tuple[int, ...]]:
    return (len(code.word), code.word)


def dihedral_orbit(code: FlatBasketCode) -> tuple[tuple[int, ...], ...]:
    """All rotations and reflections of the cyclic word, each renumbered."""
    word = code.word
    if not word:
        return ((),)
    variants = set()
    for base in (word, word[::-1]):
        for r in range(len(base)):
            variants.add(lenient_relabel(base[r:] + base[:r]))
    return tuple(sorted(variants))


@dataclass(frozen=True)
class CanonicalCode:
    """Lexicographically least representative of a dihedral class."""

    code: FlatBasketCode

    @property
    def word(self) -> tuple[int, ...]:
        return self.code.word


def canonicalize(code: FlatBasketCode) -> CanonicalCode:
    return CanonicalCode(FlatBasketCode(min(dihedral_orbit(code))))


def enumerate_codes(n: int, canonical_only: bool = False) -> Iterator[FlatBasketCode]:
    """All lenient-normal codes with n bands, in lexicographic order.

    With ``canonical_only`` only class representatives (codes equal to
    their own canonical form) are emitted, still in lexicographic order.
    """
    if n < 0:
        raise BudgetError("band count must be nonnegative")
    for word in _lenient_words(n):
        code = FlatBasketCode(word)
        if canonical_only and canonicalize(code).word != word:
            continue
        yield code


def _lenient_words(n: int) -> Iterator[tuple[int, ...]]:
    length = 2 * n
    word: list[int] = []
    open_counts = [0] * (n + 2)  # 1 while a label has an unmatched occurrence

    def extend() -> Iterator[tuple[int, ...]]:
        if len(word) == length:
            yield tuple(word)
            return
        opened = sum(open_counts)
        next_new = max((x for x in word), default=0) + 1
        remaining = length - len(word)
        # close an open label (ascending), or open the next new one; open
        # labels are all smaller than next_new, so this order is lexicographic
        for label in range(1, next_new):
            if open_counts[label]:
                open_counts[label] = 0
                word.append(label)
                yield from extend()
                word.pop()
                open_counts[label] = 1
        if next_new <= n and opened + 2 <= remaining:
            open_counts[next_new] = 1
            word.append(next_new)
            yield from extend()
            word.pop()
            open_counts[next_new] = 0

    yield from extend()


@dataclass(frozen=True)
class ClassRecord:
    """One canonical class with its invariant fingerprint."""

    code: FlatBasketCode
    fingerprint: Fingerprint
    lenient_class_size: int

    def as_dict(self) -> dict:
        record = {"code": list(self.code.word)}
        record.update(self.fingerprint.as_dict())
        return record


def _fingerprint_word(word: tuple[int, ...]) -> Fingerprint:
    # module-level so process pools can pickle it
    return fingerprint(FlatBasketCode(word))


def classify(
    n: int, budget: int | None = None, jobs: int = 1
) -> list[ClassRecord]:
    """Fingerprint every canonical class with n bands.

    Deterministic: classes are produced in (length, lexicographic) order
    regardless of ``jobs``; workers fingerprint disjoint slices of the
    class list and results are reassembled in order.
    """
    limit = DEFAULT_CLASSIFY_BUDGET if budget is None else budget
    if n > limit:
        raise BudgetError(f"classification of {n} bands exceeds the budget {limit}")
    codes = list(enumerate_codes(n, canonical_only=True))
    words = [c.word for c in codes]
    if jobs > 1 and len(words) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(words) // (4 * jobs))
            prints = list(pool.map(_fingerprint_word, words, chunksize=chunk))
    else:
        prints = [_fingerprint_word(w) for w in words]
    return [
        ClassRecord(code, fp, len(dihedral_orbit(code)))
        for code, fp in zip(codes, prints)
    ]


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a minimal-code search."""

    code: FlatBasketCode
    bands: int
    scanned: int
    note: str = (
        "match by invariant fingerprint (components, Alexander, determinant, "
        "|signature|, |lk|); not a proof of link equivalence"
    )

    def as_dict(self) -> dict:
        return {
            "code": list(self.code.word),
            "bands": self.bands,
            "scanned": self.scanned,
            "note": self.note,
        }


def search_min_code(
    target: Fingerprint, max_n: int, budget: int | None = None
) -> SearchResult | None:
    """First code (shortest, then lexicographically least) matching ``target``.

    Scans n = 0..max_n; within each n, lenient-normal codes in
    lexicographic order. Returns None when nothing matches.
    """
    limit = DEFAULT_CLASSIFY_BUDGET if budget is None else budget
    if max_n > limit:
        raise BudgetError(f"search up to {max_n} bands exceeds the budget {limit}")
    scanned = 0
    for n in range(max_n + 1):
        for code in enumerate_codes(n):
            scanned += 1
            if fingerprint(code).matches(target):
                return SearchResult(code=code, bands=n, scanned=scanned)
    return None
