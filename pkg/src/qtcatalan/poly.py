"""Exact sparse Laurent polynomials in q and t over the integers.

A polynomial is a finite map from exponent pairs ``(q_exp, t_exp)`` (either
may be negative) to nonzero integer coefficients.  Python integers are
arbitrary precision, so all arithmetic here is exact.  Values are immutable
after construction and safe to share freely.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import DomainError

# An exponent pair (power of q, power of t).
ExponentPair = tuple[int, int]


def _term_sort_key(item: tuple[ExponentPair, int]) -> tuple[int, int]:
    # q-degree descending, then t-degree ascending
    (qe, te), _ = item
    return (-qe, te)


class LaurentPoly:
    """An element of Z[q, q^-1, t, t^-1] in canonical sparse form.

    Invariants: no stored coefficient is zero and each exponent pair appears
    at most once.  Instances are immutable; all operations return new values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExponentPair, int] | Iterable[tuple[ExponentPair, int]] = ()):
        data: dict[ExponentPair, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (qe, te), coeff in items:
            if coeff == 0:
                continue
            key = (qe, te)
            new = data.get(key, 0) + coeff
            if new:
                data[key] = new
            else:
                data.pop(key, None)
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls({(0, 0): n})

    @classmethod
    def monomial(cls, q_exp: int, t_exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({(q_exp, t_exp): coeff})

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[ExponentPair, int]:
        """A copy of the underlying exponent-to-coefficient map."""
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[ExponentPair, int]]:
        """Terms sorted by q-degree descending, then t-degree ascending."""
        return sorted(self._terms.items(), key=_term_sort_key)

    def coefficient(self, q_exp: int, t_exp: int) -> int:
        return self._terms.get((q_exp, t_exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def has_negative_coefficient(self) -> bool:
        return any(c < 0 for c in self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[ExponentPair, int]]:
        return iter(self.sorted_terms())

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        data = dict(self._terms)
        for key, coeff in other._terms.items():
            new = data.get(key, 0) + coeff
            if new:
                data[key] = new
            else:
                del data[key]
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", data)
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", {k: -c for k, c in self._terms.items()})
        return out

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            out = LaurentPoly.__new__(LaurentPoly)
            object.__setattr__(out, "_terms", {k: c * other for k, c in self._terms.items()})
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        data: dict[ExponentPair, int] = {}
        for (qa, ta), ca in a.items():
            for (qb, tb), cb in b.items():
                key = (qa + qb, ta + tb)
                new = data.get(key, 0) + ca * cb
                if new:
                    data[key] = new
                else:
                    del data[key]
        out = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(out, "_terms", data)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- substitutions -----------------------------------------------------

    def swap_qt(self) -> "LaurentPoly":
        """Exchange q and t (transpose every exponent pair)."""
        return LaurentPoly({(te, qe): c for (qe, te), c in self._terms.items()})

    def specialize_t_one(self) -> "LaurentPoly":
        """Substitute t = 1.  The result is univariate in q (t-degree 0)."""
        return LaurentPoly(((qe, 0), c) for (qe, te), c in self._terms.items())

    def specialize_t_qinv(self) -> "LaurentPoly":
        """Substitute t = q^-1, giving a univariate Laurent polynomial in q."""
        return LaurentPoly(((qe - te, 0), c) for (qe, te), c in self._terms.items())

    # -- rendering ---------------------------------------------------------

    def to_text(self) -> str:
        """Plain-text form, q-degree descending then t-degree ascending."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (qe, te), coeff in self.sorted_terms():
            mono = _monomial_text(qe, te)
            mag = abs(coeff)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append((" + " if coeff > 0 else " - ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"


def _monomial_text(qe: int, te: int) -> str:
    parts = []
    for name, e in (("q", qe), ("t", te)):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def _coerce(value) -> "LaurentPoly":
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.from_int(value)
    return NotImplemented


_ZERO = LaurentPoly()
_ONE = LaurentPoly({(0, 0): 1})

#: Convenient generators for building expressions in tests and callers.
Q = LaurentPoly.monomial(1, 0)
T = LaurentPoly.monomial(0, 1)
ONE = _ONE
ZERO = _ZERO


def qt_power(k: int) -> LaurentPoly:
    """The monomial (qt)^k; k may be negative."""
    return LaurentPoly.monomial(k, k)


@lru_cache(maxsize=None)
def bracket(m: int) -> LaurentPoly:
    """The homogeneous q,t-integer of degree m-1.

    bracket(m) = q^(m-1) + q^(m-2) t + ... + t^(m-1), with bracket(0) = 0.
    """
    if m < 0:
        raise DomainError(f"bracket requires m >= 0, got {m}")
    return LaurentPoly({(m - 1 - i, i): 1 for i in range(m)})


def sym_chain(k: int, l: int) -> LaurentPoly:
    """The symmetric chain q^l t^k + q^(l-1) t^(k+1) + ... + q^k t^l.

    Homogeneous of degree k + l with l - k + 1 unit coefficients, invariant
    under exchanging q and t.  Requires k <= l.
    """
    if k > l:
        raise DomainError(f"sym_chain requires k <= l, got ({k}, {l})")
    return LaurentPoly({(l - i, k + i): 1 for i in range(l - k + 1)})


@lru_cache(maxsize=None)
def coeff_A(m: int) -> LaurentPoly:
    """Coefficient of z^m in (1-z)(1-qtz) / ((1-qz)(1-tz)).

    A(0) = 1 and A(m) = -(1-q)(1-t) * bracket(m) for m >= 1.
    """
    if m < 0:
        raise DomainError(f"coeff_A requires m >= 0, got {m}")
    if m == 0:
        return ONE
    one_minus_q = ONE - Q
    one_minus_t = ONE - T
    return -(one_minus_q * one_minus_t * bracket(m))


@lru_cache(maxsize=None)
def coeff_B(m: int) -> LaurentPoly:
    """Coefficient of z^m in (1-z) / ((1-qz)(1-tz)): bracket(m+1) - bracket(m)."""
    if m < 0:
        raise DomainError(f"coeff_B requires m >= 0, got {m}")
    return bracket(m + 1) - bracket(m)


def _is_unimodal(seq: list[int]) -> bool:
    falling = False
    for prev, cur in zip(seq, seq[1:]):
        if cur < prev:
            falling = True
        elif cur > prev and falling:
            return False
    return True


def unimodality_check(p: LaurentPoly) -> bool:
    """True iff the even-degree and odd-degree coefficient sequences of a
    univariate polynomial in q are each unimodal.

    Missing exponents inside the support range count as zero coefficients.
    """
    if any(te != 0 for (_, te) in p.terms()):
        raise DomainError("unimodality_check expects a univariate polynomial in q")
    if p.is_zero():
        return True
    coeffs = {qe: c for (qe, _), c in p.terms().items()}
    lo, hi = min(coeffs), max(coeffs)
    for parity in (0, 1):
        seq = [coeffs.get(e, 0) for e in range(lo, hi + 1) if e % 2 == parity]
        if not _is_unimodal(seq):
            return False
    return True
