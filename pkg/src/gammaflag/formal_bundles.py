"""Formal splitting-principle oracle for gamma operations on line bundles.

Virtual bundles are integer combinations of Laurent monomials in n line
bundles L_1..L_n, written as exponent vectors; Chern classes land in a
polynomial ring Z[t_1..t_n] truncated at a total degree, with t_j playing
c_1(L_j).  Everything is exact integer arithmetic, so identities between
gamma operations and Chern classes can be checked literally, coefficient
by coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "FormalBundle",
    "TruncatedChowPoly",
    "gamma1",
    "gamma_of_sum",
    "total_chern",
    "chern_component",
    "check_gamma1_product_chern",
    "check_gamma_chern_scaling",
    "binomial_gamma_expansion",
    "CheckOutcome",
]


class FormalBundle:
    """Z-linear combination of line-bundle monomials [L^a], a in Z^n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[tuple[int, ...], int] | None = None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls, n: int) -> "FormalBundle":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "FormalBundle":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def line(cls, n: int, a) -> "FormalBundle":
        a = tuple(a)
        if len(a) != n:
            raise ValueError("exponent vector has the wrong arity")
        return cls(n, {a: 1})

    @classmethod
    def variable(cls, n: int, j: int) -> "FormalBundle":
        """[L_j] itself (1-based j)."""
        return cls.line(n, tuple(1 if k == j - 1 else 0 for k in range(n)))

    def _check(self, other: "FormalBundle") -> None:
        if self.n != other.n:
            raise ValueError("mixed arities")

    def __add__(self, other: "FormalBundle") -> "FormalBundle":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FormalBundle(self.n, out)

    def __neg__(self) -> "FormalBundle":
        return FormalBundle(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "FormalBundle") -> "FormalBundle":
        return self + (-other)

    def __mul__(self, other: "FormalBundle") -> "FormalBundle":
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = tuple(p + q for p, q in zip(a, b))
                out[k] = out.get(k, 0) + x * y
        return FormalBundle(self.n, out)

    def scaled(self, c: int) -> "FormalBundle":
        return FormalBundle(self.n, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FormalBundle)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    @property
    def rank(self) -> int:
        return sum(self.terms.values())

    def __repr__(self) -> str:
        return f"FormalBundle(n={self.n}, {self.terms})"


class TruncatedChowPoly:
    """Z[t_1..t_n] truncated above a fixed total degree."""

    __slots__ = ("n", "cap", "terms")

    def __init__(self, n: int, cap: int,
                 terms: dict[tuple[int, ...], int] | None = None):
        self.n = n
        self.cap = cap
        self.terms = {
            k: v for k, v in (terms or {}).items() if v and sum(k) <= cap
        }

    @classmethod
    def one(cls, n: int, cap: int) -> "TruncatedChowPoly":
        return cls(n, cap, {(0,) * n: 1})

    @classmethod
    def linear(cls, n: int, cap: int, a) -> "TruncatedChowPoly":
        """sum_j a_j t_j for an exponent vector a."""
        terms = {}
        for j, c in enumerate(a):
            if c:
                terms[tuple(1 if k == j else 0 for k in range(n))] = c
        return cls(n, cap, terms)

    def _check(self, other: "TruncatedChowPoly") -> None:
        if (self.n, self.cap) != (other.n, other.cap):
            raise ValueError("mixed polynomial rings")

    def __add__(self, other: "TruncatedChowPoly") -> "TruncatedChowPoly":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TruncatedChowPoly(self.n, self.cap, out)

    def __neg__(self) -> "TruncatedChowPoly":
        return TruncatedChowPoly(
            self.n, self.cap, {k: -v for k, v in self.terms.items()}
        )

    def __sub__(self, other: "TruncatedChowPoly") -> "TruncatedChowPoly":
        return self + (-other)

    def __mul__(self, other: "TruncatedChowPoly") -> "TruncatedChowPoly":
        self._check(other)
        cap = self.cap
        out: dict[tuple[int, ...], int] = {}
        for a, x in self.terms.items():
            da = sum(a)
            for b, y in other.terms.items():
                if da + sum(b) > cap:
                    continue
                k = tuple(p + q for p, q in zip(a, b))
                out[k] = out.get(k, 0) + x * y
        return TruncatedChowPoly(self.n, cap, out)

    def scaled(self, c: int) -> "TruncatedChowPoly":
        return TruncatedChowPoly(
            self.n, self.cap, {k: c * v for k, v in self.terms.items()}
        )

    def power(self, m: int) -> "TruncatedChowPoly":
        if m < 0:
            raise ValueError("negative power: invert first")
        out = TruncatedChowPoly.one(self.n, self.cap)
        for _ in range(m):
            out = out * self
        return out

    def inverse_of_one_plus(self) -> "TruncatedChowPoly":
        """Inverse of self = 1 + u with u of positive degree (geometric series)."""
        one = TruncatedChowPoly.one(self.n, self.cap)
        u = self - one
        if u.terms.get((0,) * self.n):
            raise ValueError("expected constant term exactly 1")
        out = one
        upow = one
        for _ in range(self.cap):
            upow = upow * (-u)
            if not upow.terms:
                break
            out = out + upow
        return out

    def component(self, i: int) -> dict[tuple[int, ...], int]:
        return {k: v for k, v in self.terms.items() if sum(k) == i}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedChowPoly)
            and (self.n, self.cap) == (other.n, other.cap)
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"TruncatedChowPoly(n={self.n}, cap={self.cap}, {self.terms})"


# -- gamma operations ------------------------------------------------------


def gamma1(n: int, a) -> FormalBundle:
    """gamma_1 of a line class: 1 - [L^-a]."""
    a = tuple(a)
    return FormalBundle.one(n) - FormalBundle.line(n, tuple(-x for x in a))


def gamma_of_sum(n: int, lines, i: int) -> FormalBundle:
    """gamma_i of a sum of line classes: the i-th elementary symmetric
    function of their gamma_1's (zero when i exceeds the number of lines)."""
    if i < 0:
        raise ValueError("gamma degree must be >= 0")
    items = [gamma1(n, a) for a in lines]
    e = [FormalBundle.one(n)] + [FormalBundle.zero(n) for _ in range(i)]
    for item in items:
        for k in range(min(i, len(items)), 0, -1):
            e[k] = e[k] + e[k - 1] * item
    return e[i]


def total_chern(x: FormalBundle, cap: int) -> TruncatedChowPoly:
    """Multiplicative total Chern class of a virtual bundle.

    c([L^a]) = 1 + sum_j a_j t_j; negative multiplicities go through the
    truncated geometric-series inverse.
    """
    n = x.n
    out = TruncatedChowPoly.one(n, cap)
    for a, m in sorted(x.terms.items()):
        base = TruncatedChowPoly.one(n, cap) + TruncatedChowPoly.linear(n, cap, a)
        if m < 0:
            base = base.inverse_of_one_plus()
            m = -m
        out = out * base.power(m)
    return out


def chern_component(x: FormalBundle, i: int) -> dict[tuple[int, ...], int]:
    return total_chern(x, i).component(i)


# -- identity checks -------------------------------------------------------


@dataclass(frozen=True)
class CheckOutcome:
    label: str
    ok: bool
    detail: str


def check_gamma1_product_chern(i: int, n: int | None = None) -> CheckOutcome:
    """c_i of gamma_1(L_1)...gamma_1(L_i) against (-1)^(i-1) (i-1)! t_1...t_i."""
    if i < 1:
        raise ValueError("need i >= 1")
    n = i if n is None else n
    if n < i:
        raise ValueError("need at least i line bundles")
    x = FormalBundle.one(n)
    for j in range(1, i + 1):
        x = x * gamma1(n, tuple(1 if k == j - 1 else 0 for k in range(n)))
    lhs = chern_component(x, i)
    mono = tuple(1 if k < i else 0 for k in range(n))
    sign = (-1) ** (i - 1) * math.factorial(i - 1)
    rhs = {mono: sign}
    ok = lhs == rhs
    return CheckOutcome(
        label=f"c_{i}(gamma1 x {i}) over {n} lines",
        ok=ok,
        detail=f"lhs={lhs} rhs={rhs}",
    )


def check_gamma_chern_scaling(n: int, lines, i: int) -> CheckOutcome:
    """c_i(gamma_i(x)) against (-1)^(i-1) (i-1)! c_i(x) for an honest sum x.

    ``lines`` is a list of exponent vectors, repeats encoding multiplicity.
    """
    if i < 1:
        raise ValueError("need i >= 1")
    lines = [tuple(a) for a in lines]
    g = gamma_of_sum(n, lines, i)
    lhs = chern_component(g, i)
    x = FormalBundle.zero(n)
    for a in lines:
        x = x + FormalBundle.line(n, a)
    sign = (-1) ** (i - 1) * math.factorial(i - 1)
    rhs = {k: sign * v for k, v in chern_component(x, i).items()}
    ok = lhs == rhs
    return CheckOutcome(
        label=f"c_{i}(gamma_{i}) on {len(lines)} lines",
        ok=ok,
        detail=f"lhs={lhs} rhs={rhs}",
    )


def binomial_gamma_expansion(mult: int, cap: int | None = None) -> list[int]:
    """Total gamma class of the mult-fold sum of one line bundle.

    gamma_k of L + ... + L (mult copies) equals binom(mult, k) gamma_1(L)^k;
    both sides are computed in the formal ring and compared before the
    binomial coefficients are returned (k = 0..min(mult, cap)).
    """
    if mult < 0:
        raise ValueError("multiplicity must be >= 0")
    top = mult if cap is None else min(mult, cap)
    lines = [(1,)] * mult
    g1 = gamma1(1, (1,))
    out = []
    for k in range(top + 1):
        e_k = gamma_of_sum(1, lines, k)
        b = math.comb(mult, k)
        if e_k != _power(g1, k).scaled(b):
            raise AssertionError(
                f"gamma expansion mismatch at k={k} for multiplicity {mult}"
            )
        out.append(b)
    return out


def _power(x: FormalBundle, k: int) -> FormalBundle:
    out = FormalBundle.one(x.n)
    for _ in range(k):
        out = out * x
    return out
