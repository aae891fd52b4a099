"""Integer link invariants of decoded basket boundaries.

The homology basis of the basket surface is the family of loops
gamma_k = (core of band k) closed through the disk along chord k. The
Seifert pairing V[i][j] = lk(gamma_i, push-off of gamma_j) is computed in
the height model: disk at height 0, band k at height k, push-offs at +1/2.
From V come the Alexander polynomial det(V - t V^T), the determinant
|Alexander(-1)|, and the signature of V + V^T.

Everything here is exact: integer Laurent polynomials, fraction-free
Bareiss determinants, and rational congruence diagonalization. No floating
point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import _geom
from .basket import (
    FlatBasketCode,
    LinkDiagram,
    code_to_diagram,
    interleaving_pairs,
    link_of_code,
)
from .errors import LinkError


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial, stored as sorted (exponent, coeff) terms."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        cleaned = tuple(sorted((e, c) for e, c in self.terms if c != 0))
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "LaurentPolynomial":
        return cls(tuple(coeffs.items()))

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls(((0, 1),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        coeffs = dict(self.terms)
        for e, c in other.terms:
            coeffs[e] = coeffs.get(e, 0) + c
        return LaurentPolynomial.from_dict(coeffs)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        coeffs: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                coeffs[e1 + e2] = coeffs.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial.from_dict(coeffs)

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial(tuple((e + k, c) for e, c in self.terms))

    def __call__(self, value: int) -> int:
        """Exact evaluation at a nonzero integer."""
        if value == 0:
            raise ValueError("Laurent polynomials cannot be evaluated at 0")
        total = Fraction(0)
        for e, c in self.terms:
            total += c * Fraction(value) ** e
        assert total.denominator == 1
        return int(total)

    def normalized(self) -> "LaurentPolynomial":
        """Multiply by +-t^k so the lowest exponent is 0 with positive
        coefficient; the zero polynomial passes through unchanged."""
        if self.is_zero:
            return self
        low_exp, low_coeff = self.terms[0]
        out = self.shift(-low_exp)
        return -out if low_coeff < 0 else out

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for e, c in self.terms:
            if e == 0:
                body = str(abs(c))
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact division of dense integer polynomials (remainder must vanish)."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return [0]
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(a[len(b) - 1 + k], b[-1])
        assert r == 0, "inexact polynomial division in Bareiss elimination"
        out[k] = q
        for j, y in enumerate(b):
            a[j + k] -= q * y
    assert all(x == 0 for x in a), "nonzero remainder in exact division"
    return out


def _det_bareiss_poly(rows: list[list[list[int]]]) -> list[int]:
    """Fraction-free determinant of a matrix of dense integer polynomials."""
    n = len(rows)
    if n == 0:
        return [1]
    m = [[list(entry) for entry in row] for row in rows]
    prev = [1]
    sign = 1
    for k in range(n - 1):
        if all(c == 0 for c in m[k][k]):
            pivot_row = next(
                (r for r in range(k + 1, n) if any(c != 0 for c in m[r][k])), None
            )
            if pivot_row is None:
                return [0]
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numer = [
                    x - y
                    for x, y in _zip_pad(
                        _poly_mul(m[k][k], m[i][j]), _poly_mul(m[i][k], m[k][j])
                    )
                ]
                m[i][j] = _poly_divexact(numer, prev)
            m[i][k] = [0]
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return [sign * c for c in det]


def _zip_pad(a: list[int], b: list[int]) -> Iterable[tuple[int, int]]:
    width = max(len(a), len(b))
    return zip(a + [0] * (width - len(a)), b + [0] * (width - len(b)))


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer matrix of the Seifert pairing on the basket's band loops."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if any(len(r) != len(self.rows) for r in self.rows):
            raise LinkError("Seifert matrix must be square")

    @property
    def size(self) -> int:
        return len(self.rows)

    def transpose(self) -> "SeifertMatrix":
        n = self.size
        return SeifertMatrix(tuple(tuple(self.rows[j][i] for j in range(n)) for i in range(n)))


def seifert_matrix(code: FlatBasketCode) -> SeifertMatrix:
    """Seifert pairing of the basket: V[i][j] = lk(gamma_i, gamma_j pushed up).

    For each interleaving pair the two loops cross four times over the
    single chord intersection: core against core, core against disk
    return, and so on. The over-strand at each crossing is the higher one
    in the height model, and the entry is half the signed crossing sum.
    Non-interleaving pairs and the diagonal contribute 0.
    """
    diagram = code_to_diagram(code)
    n = diagram.n
    direction = {}
    for k, (a, b) in enumerate(diagram.chords):
        direction[k + 1] = _geom.sub(
            _geom.circle_point(2 * b), _geom.circle_point(2 * a)
        )
    crossing_pairs = set(interleaving_pairs(diagram))

    def pairing(i: int, j: int) -> int:
        if i == j or (min(i, j), max(i, j)) not in crossing_pairs:
            return 0
        di, dj = direction[i], direction[j]
        neg = lambda v: (-v[0], -v[1])
        # (doubled height, tangent direction) of the two strands of each loop
        loop_i = ((2 * i, di), (0, neg(di)))
        loop_j_pushed = ((2 * j + 1, dj), (1, neg(dj)))
        total = 0
        for h_i, d_i in loop_i:
            for h_j, d_j in loop_j_pushed:
                over, under = (d_i, d_j) if h_i > h_j else (d_j, d_i)
                total += _geom.cross_sign(over, under)
        assert total % 2 == 0
        return total // 2

    return SeifertMatrix(
        tuple(tuple(pairing(i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
    )


def alexander(v: SeifertMatrix) -> LaurentPolynomial:
    """det(V - t V^T), normalized so the constant term is positive.

    Returns the zero polynomial when the determinant vanishes identically
    (split boundaries); the empty matrix gives 1.
    """
    n = v.size
    rows = [
        [[v.rows[i][j], -v.rows[j][i]] for j in range(n)]  # entry + t * entry
        for i in range(n)
    ]
    det = _det_bareiss_poly(rows)
    return LaurentPolynomial.from_dict(dict(enumerate(det))).normalized()


def determinant_invariant(v: SeifertMatrix) -> int:
    """|Alexander(-1)|, evaluated exactly over the integers."""
    return abs(alexander(v)(-1))


def signature(v: SeifertMatrix) -> int:
    """Signature of V + V^T by exact rational congruence diagonalization."""
    n = v.size
    s = [
        [Fraction(v.rows[i][j] + v.rows[j][i]) for j in range(n)] for i in range(n)
    ]
    positive = negative = 0
    i = 0
    while i < n:
        if s[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if s[j][j] != 0), None)
            if swap is not None:
                s[i], s[swap] = s[swap], s[i]
                for row in s:
                    row[i], row[swap] = row[swap], row[i]
            else:
                off = next((j for j in range(i + 1, n) if s[i][j] != 0), None)
                if off is None:
                    i += 1  # zero row: null direction
                    continue
                # Both diagonal entries vanish: fold row/column `off` into i,
                # making s[i][i] = 2 s[i][off] != 0.
                for j in range(n):
                    s[i][j] += s[off][j]
                for row in s:
                    row[i] += row[off]
        pivot = s[i][i]
        if pivot > 0:
            positive += 1
        else:
            negative += 1
        for j in range(i + 1, n):
            factor = s[j][i] / pivot
            if factor == 0:
                continue
            for k in range(n):
                s[j][k] -= factor * s[i][k]
            for row in s:
                row[j] -= factor * row[i]
        i += 1
    return positive - negative


def linking_number(link: LinkDiagram, c1: int, c2: int) -> int:
    """Half the signed crossing count between two distinct components."""
    if c1 == c2:
        raise LinkError("linking number requires two distinct components")
    for c in (c1, c2):
        if not 0 <= c < link.component_count:
            raise LinkError(f"component {c} does not exist")
    total = 0
    for crossing, (over_c, under_c) in zip(link.crossings, link.crossing_components):
        if {over_c, under_c} == {c1, c2}:
            total += crossing.sign
    assert total % 2 == 0
    return total // 2


def pairwise_linking_abs(link: LinkDiagram) -> tuple[int, ...]:
    """Sorted multiset of |lk| over unordered component pairs."""
    values = [
        abs(linking_number(link, a, b))
        for a in range(link.component_count)
        for b in range(a + 1, link.component_count)
    ]
    return tuple(sorted(values))


@dataclass(frozen=True)
class Fingerprint:
    """Invariant record used as the matching key in code searches.

    The record stores the signature as computed; two fingerprints *match*
    when they agree up to mirror image (signature compared in absolute
    value, linking numbers already unsigned), since codes related by a
    rotation or reflection of the disk picture can decode to mirror links.
    """

    components: int
    alexander: LaurentPolynomial
    determinant: int
    signature: int
    linking_abs: tuple[int, ...]

    def matching_key(self) -> tuple:
        return (
            self.components,
            self.alexander.terms,
            self.determinant,
            abs(self.signature),
            self.linking_abs,
        )

    def matches(self, other: "Fingerprint") -> bool:
        return self.matching_key() == other.matching_key()

    def as_dict(self) -> dict:
        return {
            "components": self.components,
            "alexander": str(self.alexander),
            "det": self.determinant,
            "signature": self.signature,
            "lk": list(self.linking_abs),
        }


def fingerprint(code: FlatBasketCode) -> Fingerprint:
    """Deterministic invariant record of a decoded code."""
    v = seifert_matrix(code)
    poly = alexander(v)
    if code.n == 0:
        return Fingerprint(1, poly, determinant_invariant(v), 0, ())
    link = link_of_code(code)
    return Fingerprint(
        components=link.component_count,
        alexander=poly,
        determinant=determinant_invariant(v),
        signature=signature(v),
        linking_abs=pairwise_linking_abs(link),
    )
