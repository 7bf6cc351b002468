"""Standard Young tableaux, their weights, and the F and H sums.

Conventions: rows are indexed from the bottom starting at 0, columns from
the left starting at 0, so the cell in row r, column c carries the content
monomial q^c t^r.  A tableau is stored as its growth sequence: the list of
cells in insertion order.  The content vector z lists the contents in that
order, so z[0] = (0, 0) always.

F(a_2, ..., a_n) sums z_2^{a_2} ... z_n^{a_n} * wt(T) over all standard
tableaux of size n, where

    wt(T) = prod_{i=2..n} 1 / ((1 - z_i^-1) (1 - qt z_{i-1}/z_i))
            * prod_{i<j} (1 - z_i/z_j)(1 - qt z_i/z_j)
                       / ((1 - q z_i/z_j)(1 - t z_i/z_j)),

with the convention that any individual factor equal to (1 - q^0 t^0) is
simply dropped, in numerator and denominator independently.  H restricts
the sum to head-like tableaux (z_2 = q) with the reduced weight
(1 - t/q) * wt(T).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .errors import DomainError
from .poly import ExponentPair, LaurentPoly, ONE
from .rational import BinomialFactor, FactoredRational

#: Exhaustive sums over tableaux are kept to sizes where they stay cheap.
MAX_TABLEAU_SIZE = 8


def canonical_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Validate a weakly decreasing nonnegative sequence and strip trailing zeros."""
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if p < 0:
            raise DomainError(f"partition parts must be nonnegative, got {parts}")
        if i and parts[i - 1] < p:
            raise DomainError(f"partition parts must weakly decrease, got {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


@dataclass(frozen=True)
class StandardTableau:
    """A standard Young tableau given by its growth sequence.

    cells[k] = (row, col) of the cell labeled k+1; rows count from the
    bottom.  The sequence must start at (0, 0) and every prefix must be a
    valid Young diagram grown one corner at a time.
    """

    cells: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows: list[int] = []
        for r, c in self.cells:
            if r > len(rows) or (r < len(rows) and c != rows[r]) or (r == len(rows) and c != 0):
                raise DomainError(f"not a growth sequence: {self.cells}")
            if r > 0 and rows[r - 1] <= c:
                raise DomainError(f"not a growth sequence: {self.cells}")
            if r == len(rows):
                rows.append(1)
            else:
                rows[r] += 1

    @property
    def n(self) -> int:
        return len(self.cells)

    def shape(self) -> tuple[int, ...]:
        counts = Counter(r for r, _ in self.cells)
        return tuple(counts[r] for r in range(len(counts)))

    def contents(self) -> tuple[ExponentPair, ...]:
        """The content exponent vector z(T): cell (r, c) gives (c, r)."""
        return tuple((c, r) for r, c in self.cells)

    def is_head_like(self) -> bool:
        """True iff the cell labeled 2 has content q."""
        return self.n >= 2 and self.cells[1] == (0, 1)


def enumerate_syt(n: int) -> list[StandardTableau]:
    """All standard Young tableaux of size n, in lexicographic order of
    their growth sequences."""
    if n < 1:
        raise DomainError(f"enumerate_syt requires n >= 1, got {n}")
    if n > MAX_TABLEAU_SIZE:
        raise DomainError(
            f"enumerate_syt is limited to n <= {MAX_TABLEAU_SIZE} "
            f"(tableau count and weight cost grow too fast), got {n}"
        )
    out: list[StandardTableau] = []

    def grow(cells: list[tuple[int, int]], rows: list[int]):
        if len(cells) == n:
            out.append(StandardTableau(tuple(cells)))
            return
        for r in range(len(rows) + 1):
            c = rows[r] if r < len(rows) else 0
            if r > 0 and rows[r - 1] <= c:
                continue
            cells.append((r, c))
            if r < len(rows):
                rows[r] += 1
                grow(cells, rows)
                rows[r] -= 1
            else:
                rows.append(1)
                grow(cells, rows)
                rows.pop()
            cells.pop()

    grow([(0, 0)], [1])
    return out


def _add_factor(bag: Counter, alpha: int, beta: int) -> None:
    # the vanishing factor (1 - q^0 t^0) is dropped by convention
    if alpha or beta:
        bag[BinomialFactor(alpha, beta)] += 1


def omega_at(x: ExponentPair) -> FactoredRational:
    """The cross factor (1-x)(1-qtx) / ((1-qx)(1-tx)) at the monomial
    x = q^alpha t^beta, with vanishing factors dropped."""
    alpha, beta = x
    num: Counter = Counter()
    den: Counter = Counter()
    _add_factor(num, alpha, beta)
    _add_factor(num, alpha + 1, beta + 1)
    _add_factor(den, alpha + 1, beta)
    _add_factor(den, alpha, beta + 1)
    num_poly = ONE
    for f, k in num.items():
        for _ in range(k):
            num_poly = num_poly * f.to_poly()
    return FactoredRational(num_poly, den.elements())


def _weight_factors(z: Sequence[ExponentPair], reduced: bool) -> tuple[Counter, Counter]:
    """Numerator and denominator factor multisets of wt (or of the reduced
    weight (1 - t/q) wt), with vanishing factors dropped and exactly
    matching factors cancelled."""
    num: Counter = Counter()
    den: Counter = Counter()
    n = len(z)
    for i in range(1, n):
        qa, ta = z[i]
        _add_factor(den, -qa, -ta)  # (1 - z_i^-1)
        qp, tp = z[i - 1]
        _add_factor(den, qp - qa + 1, tp - ta + 1)  # (1 - qt z_{i-1}/z_i)
    for i in range(n):
        for j in range(i + 1, n):
            a = z[i][0] - z[j][0]
            b = z[i][1] - z[j][1]
            _add_factor(num, a, b)
            _add_factor(num, a + 1, b + 1)
            _add_factor(den, a + 1, b)
            _add_factor(den, a, b + 1)
    if reduced:
        _add_factor(num, -1, 1)  # multiply by (1 - t/q)
    common = num & den
    return num - common, den - common


def _weight_from_factors(num: Counter, den: Counter) -> FactoredRational:
    num_poly = ONE
    for f, k in num.items():
        for _ in range(k):
            num_poly = num_poly * f.to_poly()
    return FactoredRational(num_poly, den.elements())


def tableau_weight(tab: StandardTableau) -> FactoredRational:
    """wt(T), with common binomial factors cancelled exactly."""
    num, den = _weight_factors(tab.contents(), reduced=False)
    return _weight_from_factors(num, den)


def reduced_tableau_weight(tab: StandardTableau) -> FactoredRational:
    """(1 - t/q) * wt(T), the head-like reduced weight."""
    num, den = _weight_factors(tab.contents(), reduced=True)
    return _weight_from_factors(num, den)


@lru_cache(maxsize=None)
def _tableau_data(n: int, head_like_only: bool) -> tuple[tuple[tuple[ExponentPair, ...], FactoredRational], ...]:
    data = []
    for tab in enumerate_syt(n):
        if head_like_only and not tab.is_head_like():
            continue
        z = tab.contents()
        num, den = _weight_factors(z, reduced=head_like_only)
        data.append((z, _weight_from_factors(num, den)))
    return tuple(data)


def _weighted_sum(a: tuple[int, ...], head_like_only: bool) -> LaurentPoly:
    n = len(a) + 1
    if n > MAX_TABLEAU_SIZE:
        raise DomainError(
            f"tableau sums are limited to vectors of length <= {MAX_TABLEAU_SIZE - 1}, got {len(a)}"
        )
    total = FactoredRational.zero()
    for z, weight in _tableau_data(n, head_like_only):
        qe = sum(ai * z[i + 1][0] for i, ai in enumerate(a))
        te = sum(ai * z[i + 1][1] for i, ai in enumerate(a))
        total = total + FactoredRational(
            LaurentPoly.monomial(qe, te) * weight.numerator, weight.denominator
        )
    return total.to_poly()


def f_tableaux(a: Sequence[int]) -> LaurentPoly:
    """F(a_2, ..., a_n) as the exact sum over all standard tableaux of
    size n = len(a) + 1.  Defined for arbitrary integer entries; the sum
    always reduces to a Laurent polynomial."""
    a = tuple(int(x) for x in a)
    if not a:
        return ONE  # n = 1: a single one-box tableau with empty products
    return _weighted_sum(a, head_like_only=False)


def h_tableaux(a: Sequence[int]) -> LaurentPoly:
    """H(a_2, ..., a_n): the reduced-weight sum over head-like tableaux."""
    a = tuple(int(x) for x in a)
    if not a:
        raise DomainError("h_tableaux requires at least one entry (tableaux of size >= 2)")
    return _weighted_sum(a, head_like_only=True)


def combine_h_to_f(h: Callable[[tuple[int, ...]], LaurentPoly], a: Sequence[int]) -> LaurentPoly:
    """Rebuild F from H via F = H(q,t)/(1 - t/q) + H(t,q)/(1 - q/t).

    Swapping the variables of a polynomial transposes every exponent pair.
    """
    a = tuple(int(x) for x in a)
    hp = h(a)
    total = FactoredRational(hp, (BinomialFactor(-1, 1),)) + FactoredRational(
        hp.swap_qt(), (BinomialFactor(1, -1),)
    )
    return total.to_poly()


def positivity_premise_check(h: LaurentPoly) -> bool:
    """True iff every term has a nonnegative coefficient and q-degree >=
    t-degree.  When this holds for H, the combined F is coefficientwise
    nonnegative."""
    return all(c >= 0 and qe >= te for (qe, te), c in h.terms().items())
