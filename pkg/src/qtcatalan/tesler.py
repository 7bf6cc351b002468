"""Tesler matrices and the division-free evaluation of F.

A Tesler matrix for hook sums (a_1, ..., a_n) is an upper-triangular
matrix of nonnegative integers whose i-th hook sum

    m_ii + sum_{j<i} m_ji - sum_{j>i} m_ij

equals a_i.  Summing the weight prod_i B(m_{i,i+1}) * prod_{j>i+1} A(m_ij)
over all Tesler matrices gives F(a_2, ..., a_n) without a single division,
which also proves F is a polynomial.  At t = 1 only the two-diagonal
matrices survive, and those biject with subdiagrams of the staircase
partition lambda(a) = (a_2+...+a_n, a_3+...+a_n, ..., a_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError
from .poly import LaurentPoly, ONE, ZERO, coeff_A, coeff_B
from .tableaux import canonical_partition


def lambda_partition(a_tail: Sequence[int]) -> tuple[int, ...]:
    """The staircase partition of suffix sums of (a_2, ..., a_n)."""
    tail = list(a_tail)
    if any(x < 0 for x in tail):
        raise DomainError(f"lambda_partition requires nonnegative entries, got {tail}")
    out = []
    total = sum(tail)
    for x in tail:
        out.append(total)
        total -= x
    return canonical_partition(out)


def subpartitions(lam: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All partitions contained in lam, trailing zeros stripped."""
    lam = canonical_partition(lam)

    def rec(i: int, cap: int, prefix: list[int]):
        if i == len(lam):
            yield canonical_partition(prefix)
            return
        for part in range(min(cap, lam[i]) + 1):
            prefix.append(part)
            yield from rec(i + 1, part, prefix)
            prefix.pop()

    yield from rec(0, lam[0] if lam else 0, [])


def subdiagram_area_gf(lam: Sequence[int]) -> LaurentPoly:
    """Sum of q^(|lam| - |mu|) over all subpartitions mu of lam."""
    lam = canonical_partition(lam)
    size = sum(lam)
    total = ZERO
    for mu in subpartitions(lam):
        total = total + LaurentPoly.monomial(size - sum(mu), 0)
    return total


@dataclass(frozen=True)
class TeslerMatrix:
    """An upper-triangular matrix with prescribed hook sums.

    rows[i] holds (m_ii, m_{i,i+1}, ..., m_{i,n-1}); indices are 0-based.
    """

    hook_sums: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.hook_sums)
        if len(self.rows) != n or any(len(row) != n - i for i, row in enumerate(self.rows)):
            raise DomainError("rows must form an upper-triangular array")
        for row in self.rows:
            if any(v < 0 for v in row):
                raise DomainError("Tesler matrix entries must be nonnegative")
        for i in range(n):
            if self.hook_sum(i) != self.hook_sums[i]:
                raise DomainError(
                    f"hook sum {i} is {self.hook_sum(i)}, expected {self.hook_sums[i]}"
                )

    @property
    def n(self) -> int:
        return len(self.hook_sums)

    def entry(self, i: int, j: int) -> int:
        if not 0 <= i <= j < self.n:
            raise IndexError(f"({i}, {j}) is not an upper-triangular index")
        return self.rows[i][j - i]

    def hook_sum(self, i: int) -> int:
        above = sum(self.rows[j][i - j] for j in range(i))
        right = sum(self.rows[i][1:])
        return self.rows[i][0] + above - right

    def off_diagonal_vector(self) -> tuple[int, ...]:
        """Entries m_ij (i < j) flattened column by column."""
        return tuple(
            self.rows[i][j - i] for j in range(1, self.n) for i in range(j)
        )

    def is_two_diagonal(self) -> bool:
        return all(v == 0 for row in self.rows for v in row[2:])

    def weight(self) -> LaurentPoly:
        """prod_i B(m_{i,i+1}) * prod_{j>i+1} A(m_ij)."""
        w = ONE
        for i, row in enumerate(self.rows):
            for off, v in enumerate(row[1:], start=1):
                if v:
                    w = w * (coeff_B(v) if off == 1 else coeff_A(v))
        return w


def _check_hook_vector(a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if not a:
        raise DomainError("hook-sum vector must be nonempty")
    if any(x < 0 for x in a):
        raise DomainError(f"hook sums must be nonnegative, got {a}")
    return a


def _dfs_columns(a: tuple[int, ...]):
    """Depth-first enumeration of the off-diagonal entries, one column at a
    time from the last column down to column 1.

    Yields (offdiag, diag) pairs where offdiag maps (i, j) to the entry and
    diag lists the forced diagonal.  Correctness of the pruning: rewriting
    the hook-sum equations cumulatively shows that the entries crossing the
    cut before row p sum to at most a_p + ... + a_n, and once column j is
    complete the diagonal entry m_jj is forced and must be nonnegative.
    """
    n = len(a)
    suffix = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        suffix[p] = suffix[p + 1] + a[p]
    used = [0] * n  # used[p]: fixed entries crossing the cut before row p
    offdiag: dict[tuple[int, int], int] = {}
    rowsum = [0] * n  # sum of fixed off-diagonal entries in each row
    colsum = [0] * n

    def fill(j: int, i: int):
        if i == j:  # column j complete; its diagonal entry is forced
            diag_j = a[j] - colsum[j] + rowsum[j]
            if diag_j < 0:
                return
            if j == 1:
                diag = [a[0] + rowsum[0]] + [a[k] - colsum[k] + rowsum[k] for k in range(1, n)]
                yield dict(offdiag), diag
            else:
                yield from fill(j - 1, 0)
            return
        cap = min(suffix[p] - used[p] for p in range(i + 1, j + 1))
        for v in range(cap + 1):
            offdiag[(i, j)] = v
            rowsum[i] += v
            colsum[j] += v
            for p in range(i + 1, j + 1):
                used[p] += v
            yield from fill(j, i + 1)
            for p in range(i + 1, j + 1):
                used[p] -= v
            rowsum[i] -= v
            colsum[j] -= v
            del offdiag[(i, j)]

    if n == 1:
        yield {}, [a[0]]
    else:
        yield from fill(n - 1, 0)


def _matrix_from_assignment(a: tuple[int, ...], offdiag, diag) -> TeslerMatrix:
    n = len(a)
    rows = tuple(
        tuple([diag[i]] + [offdiag.get((i, j), 0) for j in range(i + 1, n)])
        for i in range(n)
    )
    return TeslerMatrix(a, rows)


def enumerate_tesler(a: Sequence[int]) -> list[TeslerMatrix]:
    """Every Tesler matrix with hook sums a, ordered lexicographically by
    the flattened off-diagonal vector."""
    a = _check_hook_vector(a)
    matrices = [_matrix_from_assignment(a, off, diag) for off, diag in _dfs_columns(a)]
    matrices.sort(key=TeslerMatrix.off_diagonal_vector)
    return matrices


def f_tesler(a: Sequence[int]) -> LaurentPoly:
    """F(a_2, ..., a_n) as the weight sum over Tesler matrices with hook
    sums (a_1, ..., a_n).  The first entry changes the matrix set but not
    the value.  No division occurs."""
    a = _check_hook_vector(a)
    n = len(a)
    if n == 1:
        return ONE
    suffix = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        suffix[p] = suffix[p + 1] + a[p]
    used = [0] * n
    rowsum = [0] * n
    colsum = [0] * n

    def fill(j: int, i: int) -> LaurentPoly:
        """Sum over completions of the weight product of remaining entries."""
        if i == j:
            if a[j] - colsum[j] + rowsum[j] < 0:
                return ZERO
            return fill(j - 1, 0) if j > 1 else ONE
        cap = min(suffix[p] - used[p] for p in range(i + 1, j + 1))
        total = ZERO
        for v in range(cap + 1):
            rowsum[i] += v
            colsum[j] += v
            for p in range(i + 1, j + 1):
                used[p] += v
            sub = fill(j, i + 1)
            for p in range(i + 1, j + 1):
                used[p] -= v
            rowsum[i] -= v
            colsum[j] -= v
            if not sub.is_zero() and v:
                sub = sub * (coeff_B(v) if j == i + 1 else coeff_A(v))
            total = total + sub
        return total

    return fill(n - 1, 0)


def two_diagonal_subdiagrams(a: Sequence[int]) -> list[tuple[TeslerMatrix, tuple[int, ...]]]:
    """Each two-diagonal Tesler matrix paired with its subdiagram of
    lambda(a_2, ..., a_n): the partition of diagonal suffix sums
    (m_22+...+m_nn, m_33+...+m_nn, ...).  The pairing is a bijection onto
    all subdiagrams."""
    a = _check_hook_vector(a)
    out = []
    for m in enumerate_tesler(a):
        if not m.is_two_diagonal():
            continue
        diag = [row[0] for row in m.rows]
        suffix = []
        total = sum(diag[1:])
        for i in range(1, m.n):
            suffix.append(total)
            total -= diag[i]
        out.append((m, canonical_partition(suffix)))
    return out
