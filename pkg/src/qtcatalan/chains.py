"""Symmetric chain decomposition of the subpartition lattice for n = 4.

For parameters (a, b, c) in the validated region, the partitions contained
in the staircase (a+b+c, b+c, c) split into symmetric chains.  Four
equinumerous index families describe the chains:

  * tails      T^{EF} = (a+b+c-E, b+c-F, c), the largest member of a chain;
  * pseudoheads P_ij  = (i, i, j);
  * heads: negative pseudoheads together with pairs (k, l, 0) with
    a < l <= k < b+c, the smallest member of a chain;
  * quasiheads Q_st  = (s, s, t), the cleanest bookkeeping form.

Area-range preserving bijections connect them:

    psi:   tails       -> pseudoheads    (E,F) -> (E+F-eps, F+eps)
    theta: pseudoheads -> heads          (i,j) -> (i+j-delta, i+eps)
    phi / omega: heads -> quasiheads

A chain is the string of its pseudohead (three legs of partitions running
up to the tail) plus, for a positive pseudohead, the appendage hanging
below its head.  Within a chain the member areas fill the chain's area
range exactly once each, which yields two formulas:

    F(a,b,c) = sum over quasiheads of the symmetric chain
               [s + eps_st, A - 2s - t]
             = sum over subpartitions of q^area t^stat,

where area(lam) = A - |lam| and stat is the case-defined statistic below
(equivalently r + R - area within a chain with area range [r, R]).

All ceilings here are mathematical ceilings: ceil(-1/2) = 0.  Truncating
division toward zero would corrupt every bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .closed_forms import ABCParams, h3
from .errors import DomainError
from .poly import LaurentPoly, ZERO, sym_chain

Partition3 = tuple[int, int, int]


def _ceil_half(x: int) -> int:
    """Ceiling of x/2, rounding toward +infinity for negative x."""
    return (x + 1) // 2


# ---------------------------------------------------------------------------
# Index families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TailIndex:
    params: ABCParams
    E: int
    F: int

    @property
    def eps(self) -> int:
        p = self.params
        return max(0, self.E + 2 * self.F - (p.b + p.c))

    @property
    def delta(self) -> int:
        return _ceil_half(self.E + self.F - self.params.a)

    def partition(self) -> Partition3:
        p = self.params
        return (p.leg - self.E, p.b + p.c - self.F, p.c)

    def area_range(self) -> tuple[int, int]:
        p = self.params
        return (
            self.E + self.F,
            p.total_weight - 2 * self.E - 3 * self.F + max(self.eps, self.delta),
        )

    def is_valid(self) -> bool:
        p, E, F, eps = self.params, self.E, self.F, self.eps
        return (
            0 <= F <= p.c - eps
            and 2 * eps <= E <= F + p.a
            and 4 * E + 5 * F - 3 * eps <= p.a + 3 * p.b + 3 * p.c
        )


@dataclass(frozen=True)
class PseudoheadIndex:
    params: ABCParams
    i: int
    j: int

    @property
    def eps(self) -> int:
        p = self.params
        return max(0, self.i + self.j - (p.b + p.c))

    @property
    def delta(self) -> int:
        return _ceil_half(self.i + self.eps - self.params.a)

    @property
    def is_negative(self) -> bool:
        return self.delta <= self.eps

    def partition(self) -> Partition3:
        return (self.i, self.i, self.j)

    def area_range(self) -> tuple[int, int]:
        p = self.params
        return (
            self.i + self.eps,
            p.total_weight - 2 * self.i - self.j + max(0, self.delta - self.eps),
        )

    def is_valid(self) -> bool:
        p, i, j = self.params, self.i, self.j
        return (
            0 <= j <= p.c
            and j <= i <= p.b + p.c
            and 4 * i + j <= p.a + 3 * p.b + 3 * p.c
            and i - 2 * j <= p.a
        )


@dataclass(frozen=True)
class PositiveHeadIndex:
    params: ABCParams
    k: int
    l: int

    @property
    def delta(self) -> int:
        return _ceil_half(self.l - self.params.a)

    @property
    def eps(self) -> int:
        p = self.params
        return max(self.k + self.delta - (p.b + p.c), 0)

    def partition(self) -> Partition3:
        return (self.k, self.l, 0)

    def area_range(self) -> tuple[int, int]:
        p = self.params
        return (self.l, p.total_weight - self.k - self.l)

    def is_valid(self) -> bool:
        p = self.params
        return p.a < self.l <= self.k < p.b + p.c


HeadIndex = PseudoheadIndex | PositiveHeadIndex


@dataclass(frozen=True)
class QuasiheadIndex:
    params: ABCParams
    s: int
    t: int

    @property
    def eps(self) -> int:
        p = self.params
        return max(0, self.s + self.t - (p.b + p.c))

    @property
    def parity_gap(self) -> int:
        """(c - t) mod 2, the parity correction in the quasihead bound."""
        return (self.params.c - self.t) % 2

    def partition(self) -> Partition3:
        return (self.s, self.s, self.t)

    def area_range(self) -> tuple[int, int]:
        p = self.params
        return (self.s + self.eps, p.total_weight - 2 * self.s - self.t)

    def is_valid(self) -> bool:
        p, s, t = self.params, self.s, self.t
        return (
            0 <= t <= p.c
            and t <= s <= p.b + p.c
            and 2 * s + 2 * t <= p.a + p.b + 2 * p.c - self.parity_gap
        )


@dataclass(frozen=True)
class ChainRecord:
    """One chain: its four index forms, the members ordered by increasing
    area, and the common area range."""

    tail: TailIndex
    pseudohead: PseudoheadIndex
    head: HeadIndex
    quasihead: QuasiheadIndex
    members: tuple[Partition3, ...]
    area_range: tuple[int, int]


class CaseLabel(Enum):
    CASE_1A = "1a"
    CASE_1BI = "1bi"
    CASE_1BII = "1bii"
    CASE_2 = "2"


# ---------------------------------------------------------------------------
# Enumeration of the index sets
# ---------------------------------------------------------------------------


def enumerate_tails(p: ABCParams) -> list[TailIndex]:
    out = []
    for F in range(p.c + 1):
        for E in range(F + p.a + 1):
            cand = TailIndex(p, E, F)
            if cand.is_valid():
                out.append(cand)
    out.sort(key=lambda x: (x.E, x.F))
    return out


def enumerate_pseudoheads(p: ABCParams) -> list[PseudoheadIndex]:
    out = []
    for j in range(p.c + 1):
        for i in range(j, p.b + p.c + 1):
            cand = PseudoheadIndex(p, i, j)
            if cand.is_valid():
                out.append(cand)
    out.sort(key=lambda x: (x.i, x.j))
    return out


def enumerate_heads(p: ABCParams) -> list[HeadIndex]:
    """Negative pseudoheads followed by the positive (k, l) heads."""
    negatives = [ph for ph in enumerate_pseudoheads(p) if ph.is_negative]
    positives = []
    for l in range(p.a + 1, p.b + p.c):
        for k in range(l, p.b + p.c):
            cand = PositiveHeadIndex(p, k, l)
            if cand.is_valid():
                positives.append(cand)
    positives.sort(key=lambda x: (x.k, x.l))
    return negatives + positives


def enumerate_quasiheads(p: ABCParams) -> list[QuasiheadIndex]:
    out = []
    for t in range(p.c + 1):
        for s in range(t, p.b + p.c + 1):
            cand = QuasiheadIndex(p, s, t)
            if cand.is_valid():
                out.append(cand)
    out.sort(key=lambda x: (x.s, x.t))
    return out


# ---------------------------------------------------------------------------
# Bijections between the index sets
# ---------------------------------------------------------------------------


def psi(p: ABCParams, E: int, F: int) -> tuple[int, int]:
    """Tail index to pseudohead index."""
    eps = max(0, E + 2 * F - (p.b + p.c))
    return (E + F - eps, F + eps)


def psi_inv(p: ABCParams, i: int, j: int) -> tuple[int, int]:
    eps = max(0, i + j - (p.b + p.c))
    return (i - j + 2 * eps, j - eps)


def theta(p: ABCParams, i: int, j: int) -> tuple[int, int]:
    """Pseudohead index to positive-head index (used on positive ones)."""
    eps = max(0, i + j - (p.b + p.c))
    delta = _ceil_half(i + eps - p.a)
    return (i + j - delta, i + eps)


def theta_inv(p: ABCParams, k: int, l: int) -> tuple[int, int]:
    delta = _ceil_half(l - p.a)
    eps = max(k + delta - (p.b + p.c), 0)
    return (l - eps, k - l + eps + delta)


def phi(p: ABCParams, i: int, j: int) -> tuple[int, int]:
    """Negative pseudohead index to quasihead index (identity when
    2i + j <= a + b + c)."""
    w = max(0, _ceil_half(2 * i + j - p.leg))
    return (i + w, j - 2 * w)


def phi_inv(p: ABCParams, s: int, t: int) -> tuple[int, int]:
    w = max(0, _ceil_half(2 * s + t - p.leg))
    return (s - w, t + 2 * w)


def omega_map(k: int, l: int) -> tuple[int, int]:
    """Positive-head index to quasihead index."""
    return (l, k - l)


def omega_inv(s: int, t: int) -> tuple[int, int]:
    return (s + t, s)


def head_of_pseudohead(ph: PseudoheadIndex) -> HeadIndex:
    if ph.is_negative:
        return ph
    return PositiveHeadIndex(ph.params, *theta(ph.params, ph.i, ph.j))


def quasihead_of_head(head: HeadIndex) -> QuasiheadIndex:
    p = head.params
    if isinstance(head, PositiveHeadIndex):
        return QuasiheadIndex(p, *omega_map(head.k, head.l))
    if head.i + head.j > p.b + p.c:
        return QuasiheadIndex(p, *phi(p, head.i, head.j))
    return QuasiheadIndex(p, head.i, head.j)


# ---------------------------------------------------------------------------
# Strings, appendages, chains
# ---------------------------------------------------------------------------


def string_of(ph: PseudoheadIndex) -> list[Partition3]:
    """The three-leg path of partitions from the pseudohead (i, i, j) up to
    its tail (p, q, c), ordered by decreasing area."""
    params = ph.params
    i, j = ph.i, ph.j
    E, F = psi_inv(params, i, j)
    top, mid = params.leg - E, params.b + params.c - F
    leg1 = [(x, i, j) for x in range(i, top)]
    leg2 = [(top, y, j) for y in range(i, mid)]
    leg3 = [(top, mid, z) for z in range(j, params.c + 1)]
    return leg1 + leg2 + leg3


def appendage_of(head: PositiveHeadIndex) -> list[Partition3]:
    """The partitions (k, l, z) hanging below a positive head, for
    z < min(b+c-k, ceil((l-a)/2)); ordered by increasing z."""
    if not isinstance(head, PositiveHeadIndex):
        raise DomainError("appendage_of expects a positive head")
    p = head.params
    bound = min(p.b + p.c - head.k, _ceil_half(head.l - p.a))
    return [(head.k, head.l, z) for z in range(bound)]


def chain_of(tail: TailIndex) -> ChainRecord:
    """The chain of a tail: its string, plus the appendage when the
    pseudohead is positive.  Members are ordered by increasing area."""
    p = tail.params
    ph = PseudoheadIndex(p, *psi(p, tail.E, tail.F))
    head = head_of_pseudohead(ph)
    quasi = quasihead_of_head(head)
    members = list(reversed(string_of(ph)))
    if isinstance(head, PositiveHeadIndex):
        members.extend(reversed(appendage_of(head)))
    return ChainRecord(
        tail=tail,
        pseudohead=ph,
        head=head,
        quasihead=quasi,
        members=tuple(members),
        area_range=tail.area_range(),
    )


def decompose(p: ABCParams) -> list[ChainRecord]:
    """All chains, ordered by area range: start ascending, end descending."""
    chains = [chain_of(t) for t in enumerate_tails(p)]
    chains.sort(key=lambda c: (c.area_range[0], -c.area_range[1], c.tail.E, c.tail.F))
    return chains


# ---------------------------------------------------------------------------
# Statistics and the resulting formulas
# ---------------------------------------------------------------------------


def _check_contained(p: ABCParams, lam: Sequence[int]) -> Partition3:
    lam = tuple(lam)
    if len(lam) > 3:
        raise DomainError(f"expected a partition with at most 3 parts, got {lam}")
    lam = lam + (0,) * (3 - len(lam))
    x, y, z = lam
    if not (x >= y >= z >= 0):
        raise DomainError(f"{lam} is not a partition")
    ax, ay, az = p.ambient()
    if x > ax or y > ay or z > az:
        raise DomainError(f"{lam} is not contained in {p.ambient()}")
    return (x, y, z)


def area(p: ABCParams, lam: Sequence[int]) -> int:
    """area(lam) = |ambient staircase| - |lam|."""
    x, y, z = _check_contained(p, lam)
    return p.total_weight - (x + y + z)


def classify(p: ABCParams, lam: Sequence[int]) -> CaseLabel:
    """The case of the statistic's definition that lam falls into."""
    x, y, z = _check_contained(p, lam)
    if z < min(p.b + p.c - x, _ceil_half(y - p.a)):
        return CaseLabel.CASE_2
    eps_yz = max(0, y + z - (p.b + p.c))
    if x + y - z + 2 * eps_yz < p.leg:
        return CaseLabel.CASE_1A
    if y + z < p.b + p.c:
        return CaseLabel.CASE_1BI
    return CaseLabel.CASE_1BII


def stat(p: ABCParams, lam: Sequence[int]) -> int:
    """The t-statistic making sum(q^area t^stat) equal F(a, b, c).

    Within a chain of area range [r, R] it equals r + R - area(lam).
    """
    x, y, z = _check_contained(p, lam)
    a, b, c, L = p.a, p.b, p.c, p.leg
    case = classify(p, lam)
    if case is CaseLabel.CASE_1A:
        return x + max(
            0,
            _ceil_half(y - a),
            y + z - b - c,
            _ceil_half(2 * y + z - L),
        )
    if case is CaseLabel.CASE_1BI:
        return -L + 2 * x + y - z + max(0, _ceil_half(L + z - x - a))
    if case is CaseLabel.CASE_1BII:
        return (
            2 * x
            + 3 * y
            + z
            - (a + 3 * b + 3 * c)
            + max(0, _ceil_half(2 * b + 2 * c - x - y), a + 2 * b + 2 * c - x - 2 * y)
        )
    return y + z  # CASE_2


def locate(p: ABCParams, lam: Sequence[int]) -> ChainRecord:
    """The chain containing lam, resolved from its case:

        1a   -> chain of pseudohead (y, z)
        1bi  -> chain of pseudohead (L+z-x, z)
        1bii -> chain of tail (L-x, b+c-y)
        2    -> chain of positive head (x, y)
    """
    x, y, z = _check_contained(p, lam)
    case = classify(p, lam)
    if case is CaseLabel.CASE_1BII:
        tail = TailIndex(p, p.leg - x, p.b + p.c - y)
    elif case is CaseLabel.CASE_2:
        i, j = theta_inv(p, x, y)
        tail = TailIndex(p, *psi_inv(p, i, j))
    else:
        i = y if case is CaseLabel.CASE_1A else p.leg + z - x
        tail = TailIndex(p, *psi_inv(p, i, z))
    return chain_of(tail)


def subpartitions3(p: ABCParams) -> list[Partition3]:
    """All triples (x, y, z) contained in the ambient staircase."""
    ax, ay, az = p.ambient()
    return [
        (x, y, z)
        for x in range(ax + 1)
        for y in range(min(x, ay) + 1)
        for z in range(min(y, az) + 1)
    ]


def f_chains(p: ABCParams) -> LaurentPoly:
    """F(a, b, c) as a sum of symmetric chains over the quasiheads."""
    total = ZERO
    for qh in enumerate_quasiheads(p):
        r, R = qh.area_range()
        total = total + sym_chain(r, R)
    return total


def f_stat(p: ABCParams) -> LaurentPoly:
    """F(a, b, c) as sum over subpartitions of q^area t^stat."""
    terms: dict[tuple[int, int], int] = {}
    for lam in subpartitions3(p):
        key = (area(p, lam), stat(p, lam))
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(terms)


def h_comb_poly(a: int, b: int, c: int) -> LaurentPoly:
    """The quasihead monomial sum: q^(A-2s-t) t^(s+eps_st) over the raw
    index set, without region validation.  Empty (zero) when c < 0.

    This is not the head-like tableau sum H in general, but combining it
    with its variable swap reproduces F.
    """
    A = a + 2 * b + 3 * c
    terms: dict[tuple[int, int], int] = {}
    for t in range(c + 1):
        for s in range(t, b + c + 1):
            if 2 * s + 2 * t > a + b + 2 * c - ((c - t) % 2):
                continue
            eps = max(0, s + t - (b + c))
            key = (A - 2 * s - t, s + eps)
            terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(terms)


def h_comb(p: ABCParams) -> LaurentPoly:
    """h_comb on the validated region; h_comb(a, b, 0) equals h3(a, b)."""
    return h_comb_poly(p.a, p.b, p.c)


def hcomb_recursion_residual(p: ABCParams) -> LaurentPoly:
    """Left minus right side of the two-step recursion for h_comb,

        h_comb(a,b,c) = h_comb(a+2,b+2,c-2) + (qt)^c H(a+c, b-c)
            + (qt)^(c-1) H(a+c, b-c+2)
            + sum_{2 <= l <= min(2c, a-b)} q^(a+2c-l) t^(l+b)
            - [a = b-1] q^(a+2c) t^b
            - ([a = b] + [a = b-1]) q^(a+2c-1) t^(b+1),

    which is zero for every valid (a, b, c) with c >= 1.  The two bracket
    corrections are exactly the boundary cases where the plain sums
    overcount.
    """
    a, b, c = p.a, p.b, p.c
    if c < 1:
        raise DomainError(f"the h_comb recursion needs c >= 1, got {p}")
    rhs = (
        h_comb_poly(a + 2, b + 2, c - 2)
        + LaurentPoly.monomial(c, c) * h3(a + c, b - c)
        + LaurentPoly.monomial(c - 1, c - 1) * h3(a + c, b - c + 2)
    )
    for l in range(2, min(2 * c, a - b) + 1):
        rhs = rhs + LaurentPoly.monomial(a + 2 * c - l, l + b)
    if a == b - 1:
        rhs = rhs - LaurentPoly.monomial(a + 2 * c, b)
    if a == b or a == b - 1:
        rhs = rhs - LaurentPoly.monomial(a + 2 * c - 1, b + 1)
    return h_comb_poly(a, b, c) - rhs
